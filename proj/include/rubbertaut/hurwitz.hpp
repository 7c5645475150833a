#pragma once

#include <optional>
#include <string>

#include "rubbertaut/partitions.hpp"
#include "rubbertaut/rational.hpp"

namespace rubbertaut {

// How the raw factorization count / d! is scaled by part automorphisms.
enum class HurwitzConvention {
  Labeled,    // multiply by |Aut alpha| |Aut beta| (default)
  Unlabeled,  // no scaling
  DivideAut,  // divide by |Aut alpha| |Aut beta|
};

struct HurwitzInput {
  Partition alpha;
  Partition beta;
};

struct HurwitzValue {
  Rational value;
  std::string method;  // "oracle" or "one_part"
};

struct HurwitzOptions {
  HurwitzConvention convention = HurwitzConvention::Labeled;
  bool require_transitive = true;  // false only for negative controls
  std::optional<int> branch_points;  // overrides l(alpha)+l(beta)-2; negative controls only
  int threads = 0;                 // 0: take RUBBER_TAUT_THREADS or hardware concurrency
};

inline constexpr int kHurwitzMaxDegree = 7;
inline constexpr int kHurwitzMaxBranchPoints = 8;

// Number of simple branch points r = l(alpha) + l(beta) - 2.
int hurwitz_branch_points(const HurwitzInput& in);

// Raw count of tuples (sigma0, tau_1..tau_r) in S_d with the product of
// cycle type beta, before any normalization.
mpz_class hurwitz_tuple_count(const HurwitzInput& in, const HurwitzOptions& opts = {});

// Genus-zero double Hurwitz number by monodromy enumeration.
HurwitzValue hurwitz_oracle(const HurwitzInput& in, const HurwitzOptions& opts = {});

// (l-1)! d^(l-2) for nu |- d against the one-part profile (d).
HurwitzValue hurwitz_one_part(const Partition& nu, int d);

// Integral of psi^(r-1) over genus-zero rubber: H_{alpha,beta} / r!.
Rational rubber_psi_integral(const Partition& alpha, const Partition& beta);

// Thread cap from RUBBER_TAUT_THREADS (>= 1).
int configured_threads();

}  // namespace rubbertaut
