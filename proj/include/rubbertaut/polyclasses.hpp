#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rubbertaut/errors.hpp"
#include "rubbertaut/rational.hpp"
#include "rubbertaut/tautring.hpp"

namespace rubbertaut {

// Polynomial in `vars` variables with coefficients in a Q-vector space V
// (Rational, TautClass, ...). V needs +=, Rational * V and is_zero().
template <class V>
struct MultiPoly {
  int vars = 0;
  std::map<std::vector<int>, V> terms;  // exponent vector -> nonzero coefficient

  void add(const std::vector<int>& e, const V& c) {
    if (static_cast<int>(e.size()) != vars) throw InvalidArgument("exponent vector has wrong length");
    V& slot = terms[e];
    slot += c;
    if (slot.is_zero()) terms.erase(e);
  }

  V coeff(const std::vector<int>& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? V() : it->second;
  }

  V evaluate(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != vars) throw InvalidArgument("point has wrong dimension");
    V out{};
    for (const auto& [e, c] : terms) {
      Rational m(1);
      for (int i = 0; i < vars; ++i) m *= x[static_cast<size_t>(i)].pow(e[static_cast<size_t>(i)]);
      out += m * c;
    }
    return out;
  }

  int max_degree_per_variable() const {
    int out = 0;
    for (const auto& [e, c] : terms)
      for (int k : e) out = std::max(out, k);
    return out;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;
};

namespace detail {

// Signed Stirling numbers of the first kind s(n, k), 0 <= k <= n <= N.
std::vector<std::vector<Rational>> stirling_first(int n_max);

}  // namespace detail

// Reconstructs the unique polynomial of per-variable degree <= N from its
// values on {0..N}^t: tensor forward differences give the binomial basis,
// Stirling numbers convert it to monomials.
template <class V>
MultiPoly<V> interpolate(const std::function<V(const std::vector<int>&)>& oracle, int t_vars, int n) {
  if (t_vars < 0 || n < 0) throw InvalidArgument("interpolate: negative size");
  const int side = n + 1;
  size_t total = 1;
  for (int i = 0; i < t_vars; ++i) total *= static_cast<size_t>(side);

  auto unpack = [&](size_t idx) {
    std::vector<int> p(static_cast<size_t>(t_vars));
    for (int i = 0; i < t_vars; ++i) {
      p[static_cast<size_t>(i)] = static_cast<int>(idx % static_cast<size_t>(side));
      idx /= static_cast<size_t>(side);
    }
    return p;
  };

  std::vector<V> f(total);
  for (size_t idx = 0; idx < total; ++idx) f[idx] = oracle(unpack(idx));

  // Forward differences along each axis: f[i] becomes Delta^i f(0).
  size_t stride = 1;
  for (int axis = 0; axis < t_vars; ++axis) {
    for (size_t base = 0; base < total; ++base) {
      if ((base / stride) % static_cast<size_t>(side) != 0) continue;
      for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i) {
          V diff = f[base + static_cast<size_t>(i - 1) * stride];
          f[base + static_cast<size_t>(i) * stride] += Rational(-1) * diff;
        }
    }
    stride *= static_cast<size_t>(side);
  }

  // C(x, i) = sum_j s(i, j) x^j / i!.
  const auto s = detail::stirling_first(n);
  MultiPoly<V> out;
  out.vars = t_vars;
  for (size_t idx = 0; idx < total; ++idx) {
    if (f[idx].is_zero()) continue;
    const std::vector<int> i = unpack(idx);
    // Distribute over all exponent vectors e <= i.
    std::vector<int> e(static_cast<size_t>(t_vars), 0);
    while (true) {
      Rational w(1);
      for (int a = 0; a < t_vars; ++a) {
        const auto ia = static_cast<size_t>(i[static_cast<size_t>(a)]);
        w *= s[ia][static_cast<size_t>(e[static_cast<size_t>(a)])] / Rational(factorial(static_cast<unsigned>(ia)));
      }
      if (!w.is_zero()) out.add(e, w * f[idx]);
      int a = 0;
      for (; a < t_vars; ++a) {
        if (e[static_cast<size_t>(a)] < i[static_cast<size_t>(a)]) {
          ++e[static_cast<size_t>(a)];
          break;
        }
        e[static_cast<size_t>(a)] = 0;
      }
      if (a == t_vars) break;
    }
  }
  return out;
}

// "a2^2", "a2*a3", "1" for an exponent vector over alpha_2..alpha_T.
std::string alpha_monomial_str(const std::vector<int>& e);

// P_{1,T}(d; alpha_2, ..., alpha_T): variable k stands for alpha_{k+2};
// coefficients are reduced classes in RingContext::standard(T).
struct ClassPolynomial {
  int T = 3;
  MultiPoly<TautClass> poly;

  TautClass a(int i) const;          // coefficient of alpha_i^2
  TautClass b(int i, int j) const;   // coefficient of alpha_i alpha_j, i != j
  TautClass evaluate(const std::vector<Rational>& alpha) const;  // alpha_2..alpha_T
  std::string str() const;
  friend bool operator==(const ClassPolynomial&, const ClassPolynomial&) = default;
};

// Literal J-sums: A_i = psi_1 - sum_{1 in J, i notin J} D([T]-J | J) and
// B_{i,j} = psi_1 - sum_{1 in J, i,j notin J} D - sum_{1 notin J, i,j in J} D,
// over J subset [T], |J| >= 2. Throws InvalidArgument for T < 3.
ClassPolynomial p1t_generate(int T);

struct CheckResult {
  bool ok = false;
  std::string diff;  // empty when ok
};

// P_T restricted to alpha_T = 0 equals the pullback of P_{T-1} forgetting T.
CheckResult check_pullback_stability(int T);

// Relabelling marks by `perm` (fixing 1, permuting 2..T) and permuting the
// alpha variables accordingly leaves P_T unchanged.
CheckResult check_equivariance(int T, const std::map<int, int>& perm);

// Every permutation of {2..T}.
CheckResult check_full_symmetry(int T);

// P(c alpha) = c^2 P(alpha) at the given point.
bool check_homogeneity(const ClassPolynomial& p, const std::vector<Rational>& alpha, const Rational& c);

// Symbols of Hain's formula, taken formally with no relations.
struct HainSymbol {
  enum class Kind { PsiDagger, Delta0, DeltaH } kind = Kind::PsiDagger;
  int h = 0;              // DeltaH genus
  std::vector<int> marks; // PsiDagger: {j}; Delta: J (sorted)
  std::string str() const;  // "psi1+", "d0{1,2}", "d1{1}"
  friend auto operator<=>(const HainSymbol&, const HainSymbol&) = default;
};

// "psi1+^2*d0{1,2}" for a sorted symbol multiset.
std::string hain_monomial_str(const std::vector<HainSymbol>& m);

// Formal polynomial: sorted symbol multisets -> coefficient.
struct FormalHainClass {
  int g = 2;
  int T = 2;
  std::map<std::vector<HainSymbol>, Rational> terms;

  Rational coeff(const std::vector<HainSymbol>& monomial) const;
  bool is_zero() const { return terms.empty(); }
  std::string str() const;
  friend bool operator==(const FormalHainClass&, const FormalHainClass&) = default;
};

// (1/g!) L^g with L = sum_j k_j^2/2 psi_j+ - sum_{|J|>=2} sum_{i<j in J} k_i k_j d0^J
//                  - 1/2 sum_J sum_{h=1}^{g-1} ((2h-1)/(2g-2) sum_{j in J} k_j)^2 dh^J.
// Requires g >= 2, T >= 2, |k| = T, sum k = 0.
FormalHainClass hain_expand(int g, int T, const std::vector<Rational>& k);

// The linear form L itself (g-th power not taken).
FormalHainClass hain_linear_part(int g, int T, const std::vector<Rational>& k);

}  // namespace rubbertaut
