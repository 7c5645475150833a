#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rubbertaut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on usage errors, 2 when a
// checked identity fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckOutcome {
  std::string name;
  std::string provenance;
  bool pass = false;
  std::string detail;
};

// The checks behind `verify-all`, in fixed order.
std::vector<CheckOutcome> verify_all(int g_max, int d_max);

}  // namespace rubbertaut::cli
