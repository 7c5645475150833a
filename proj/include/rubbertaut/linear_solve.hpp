#pragma once

#include <vector>

#include "rubbertaut/rational.hpp"

namespace rubbertaut {

struct LinearSolution {
  bool consistent = false;
  int rank = 0;
  std::vector<Rational> particular;               // free variables set to 0
  std::vector<std::vector<Rational>> nullspace;  // basis of solutions of A x = 0

  bool unique() const { return consistent && nullspace.empty(); }
};

// Exact Gauss-Jordan elimination for A x = b; A is rows x cols.
LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b, int cols);

}  // namespace rubbertaut
