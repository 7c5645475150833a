#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rubbertaut/rational.hpp"

namespace rubbertaut {

// Integral over M_{g,1} of psi_1^i lambda_j lambda_g lambda_{g-1}, i + j = g - 1.
struct HodgeUnknown {
  int g = 1;
  int i = 0;
  int j = 0;

  static HodgeUnknown of(int g, int j);  // i = g - 1 - j
  std::string str() const;               // "<psi^1 lambda_0 | 2>"

  friend auto operator<=>(const HodgeUnknown&, const HodgeUnknown&) = default;
};

using HodgeValues = std::map<HodgeUnknown, Rational>;

// Linear form in HodgeUnknowns for lambda_g lambda_{g-1} P_{g,2}(d; d).
struct LengthTwoExpression {
  int g = 1;
  int d = 1;
  std::map<HodgeUnknown, Rational> coeffs;  // zero coefficients omitted

  Rational evaluate(const HodgeValues& values) const;
  std::string str() const;
  friend bool operator==(const LengthTwoExpression&, const LengthTwoExpression&) = default;
};

enum class LengthTwoRoute {
  Resummed,      // sum over e then l with C(x^{d-e}, tau^l)
  Raw,           // partition sum over nu |- d, l(nu) <= 2g+1
  Localization,  // 1/t coefficients of the assembled fixed-locus contributions
};

inline constexpr int kMaxLengthTwoDegree = 8;

// Throws InvalidArgument for g < 1 or d < 1, ResourceLimit for d > 8.
LengthTwoExpression build_length_two(int g, int d, LengthTwoRoute route = LengthTwoRoute::Resummed);

// Coefficient of y^{2g} in log((y/2)/sin(y/2)).
Rational log_sine_coefficient(int g);

struct HodgeSolution {
  int g = 1;
  std::vector<int> degrees;
  int rank = 0;
  HodgeValues values;                   // particular solution (free unknowns at 0)
  std::vector<HodgeValues> nullspace;   // empty when the solution is unique
  bool unique() const { return nullspace.empty(); }
};

// Solves build_length_two(g, d) = d^{2g} c_g over all d in `degrees`. The system is
// overdetermined when |degrees| > g; inconsistency throws TheoremViolation.
HodgeSolution solve_hodge(int g, const std::vector<int>& degrees);

struct ScalingRow {
  int d = 1;
  Rational value;     // N_g(d)
  Rational expected;  // d^{2g} c_g
  Rational ratio;     // N_g(d) / N_g(1)
  bool match = false;
};

struct ScalingReport {
  int g = 1;
  HodgeSolution solution;
  std::vector<ScalingRow> rows;
  bool ok = false;
};

// Solves, then checks N_g(d) / N_g(1) = d^{2g} for every d in `degrees`
// (degrees 1..g are always included). Throws TheoremViolation on mismatch.
ScalingReport verify_scaling(int g, const std::vector<int>& degrees);

}  // namespace rubbertaut
