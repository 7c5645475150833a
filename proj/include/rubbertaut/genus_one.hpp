#pragma once

#include <string>
#include <vector>

#include "rubbertaut/locgraphs.hpp"
#include "rubbertaut/tautring.hpp"

namespace rubbertaut {

// coeff * P_{1,3}(d; a2, a3): genus-one rubber with marks 2, 3 on parts of
// sizes a2, a3, pushed to M^rt_{1,3}.
struct PTerm {
  std::string graph;
  Rational coeff;
  int a2 = 0;
  int a3 = 0;
};

// coeff * S(m, b): genus-one rubber with a part of size m carrying a rational
// vertex with marks 2, 3 and a bare part of size b, i.e.
// (pi_3*(A_2) m^2 + pi_3*(A_3) b^2 + b' m b) D(1|23).
struct STerm {
  std::string graph;
  Rational coeff;
  int m = 0;
  int b = 0;
};

// The lambda_1-stripped 1/t relation on M^rt_{1,3}:
// known + sum P-terms + sum S-terms = 0.
struct EvaluatedRelation {
  int degree = 0;
  TautClass known;  // left-graph terms after substituting rubber values
  std::vector<PTerm> p_terms;
  std::vector<STerm> s_terms;
};

// Evaluates the left graphs (Hurwitz values, rational-tails strata) and
// classifies the right graphs. Nonzero terms outside the supported shapes
// throw UnsupportedGraph.
EvaluatedRelation evaluate_relation(const SymbolicRelation& rel, int degree);

// Coefficients of P_{1,3}: A2, A3 from the length-two class by pullback,
// B and b' = pi_3*(B) from the localization relations.
struct GenusOneSolution {
  Rational c1_ratio;  // lambda_1 P_{1,2}(1;1) / integral of lambda_1 over M_{1,1}
  TautClass a2;
  TautClass a3;
  TautClass b;
  Rational b_prime;
  int rank = 0;
  std::vector<std::string> equations;  // human-readable equations that were solved
};

// pi_3^*(c D(-|12)) and pi_2^*(c D(-|13)) on M^rt_{1,3} with c from the
// genus-one length-two solve.
TautClass length_two_pullback(int kept_mark, const Rational& c);

// Value of the relation with all unknowns substituted; zero iff consistent.
TautClass relation_residual(const EvaluatedRelation& rel, const GenusOneSolution& sol);

// The same relation pushed along sigma_2* pi_3* (mark 3 forgotten, then
// glued back colliding with 2); a multiple of D(1|23).
TautClass pushpush_residual(const EvaluatedRelation& rel, const GenusOneSolution& sol);

// Builds the localization relation for degree d, then solves the relation
// together with its push-push for (B, b'). Non-unique or inconsistent
// systems throw Inconsistency.
GenusOneSolution evaluate_and_solve(int degree);

// Full degree-d relation after substituting a solution, in normal form.
TautClass check_relation(int degree, const GenusOneSolution& sol);

EvaluatedRelation genus_one_relation(int degree);

}  // namespace rubbertaut
