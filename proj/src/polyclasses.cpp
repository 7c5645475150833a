#include "rubbertaut/polyclasses.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rubbertaut {
namespace detail {

std::vector<std::vector<Rational>> stirling_first(int n_max) {
  std::vector<std::vector<Rational>> s(static_cast<size_t>(n_max + 1),
                                       std::vector<Rational>(static_cast<size_t>(n_max + 1)));
  s[0][0] = 1;
  for (int n = 0; n < n_max; ++n)
    for (int k = 0; k <= n + 1; ++k) {
      const auto un = static_cast<size_t>(n), uk = static_cast<size_t>(k);
      Rational v = k <= n ? Rational(-n) * s[un][uk] : Rational(0);
      if (k >= 1) v += s[un][uk - 1];
      s[un + 1][uk] = v;
    }
  return s;
}

}  // namespace detail

namespace {

std::vector<int> complement(const std::vector<int>& labels, const std::vector<int>& j) {
  std::vector<int> out;
  for (int m : labels)
    if (!std::binary_search(j.begin(), j.end(), m)) out.push_back(m);
  return out;
}

bool has(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

// Subsets J of [T] with |J| >= 2, sorted.
std::vector<std::vector<int>> rational_sides(int T) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << T); ++mask) {
    std::vector<int> j;
    for (int i = 0; i < T; ++i)
      if (mask & (1u << i)) j.push_back(i + 1);
    if (j.size() >= 2) out.push_back(std::move(j));
  }
  return out;
}

std::vector<int> square_exp(int T, int i) {
  std::vector<int> e(static_cast<size_t>(T - 1), 0);
  e[static_cast<size_t>(i - 2)] = 2;
  return e;
}

std::vector<int> mixed_exp(int T, int i, int j) {
  std::vector<int> e(static_cast<size_t>(T - 1), 0);
  e[static_cast<size_t>(i - 2)] = 1;
  e[static_cast<size_t>(j - 2)] = 1;
  return e;
}

using HainPoly = std::map<std::vector<HainSymbol>, Rational>;

HainPoly multiply(const HainPoly& a, const HainPoly& b) {
  HainPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<HainSymbol> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

std::string alpha_monomial_str(const std::vector<int>& e) {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!first) os << "*";
    os << "a" << k + 2;
    if (e[k] > 1) os << "^" << e[k];
    first = false;
  }
  return first ? "1" : os.str();
}

std::string hain_monomial_str(const std::vector<HainSymbol>& m) {
  std::ostringstream os;
  for (size_t i = 0; i < m.size();) {
    size_t k = i;
    while (k < m.size() && m[k] == m[i]) ++k;
    if (i) os << "*";
    os << m[i].str();
    if (k - i > 1) os << "^" << k - i;
    i = k;
  }
  return os.str();
}

TautClass ClassPolynomial::a(int i) const { return poly.coeff(square_exp(T, i)); }

TautClass ClassPolynomial::b(int i, int j) const {
  if (i == j) throw InvalidArgument("B needs distinct indices");
  return poly.coeff(mixed_exp(T, i, j));
}

TautClass ClassPolynomial::evaluate(const std::vector<Rational>& alpha) const {
  return reduce(poly.evaluate(alpha), RingContext::standard(T));
}

std::string ClassPolynomial::str() const {
  std::ostringstream os;
  for (const auto& [e, c] : poly.terms) os << alpha_monomial_str(e) << ": " << c.str() << "\n";
  return os.str();
}

ClassPolynomial p1t_generate(int T) {
  if (T < 3) throw InvalidArgument("p1t_generate needs T >= 3");
  const RingContext ctx = RingContext::standard(T);
  const auto sides = rational_sides(T);
  ClassPolynomial out;
  out.T = T;
  out.poly.vars = T - 1;
  auto divisor = [&](const std::vector<int>& j) { return TautClass(Generator::boundary(complement(ctx.labels(), j), j)); };
  for (int i = 2; i <= T; ++i) {
    TautClass a(Generator::psi1());
    for (const auto& j : sides)
      if (has(j, 1) && !has(j, i)) a -= divisor(j);
    out.poly.add(square_exp(T, i), reduce(a, ctx));
  }
  for (int i = 2; i <= T; ++i)
    for (int k = 2; k < i; ++k) {
      TautClass b(Generator::psi1());
      for (const auto& j : sides) {
        if (has(j, 1) && !has(j, i) && !has(j, k)) b -= divisor(j);
        if (!has(j, 1) && has(j, i) && has(j, k)) b -= divisor(j);
      }
      out.poly.add(mixed_exp(T, i, k), reduce(b, ctx));
    }
  return out;
}

CheckResult check_pullback_stability(int T) {
  if (T < 4) throw InvalidArgument("pullback stability needs T >= 4");
  const ClassPolynomial p = p1t_generate(T);
  const ClassPolynomial q = p1t_generate(T - 1);
  const RingContext src = RingContext::standard(T - 1);
  const RingContext dst = RingContext::standard(T);
  MultiPoly<TautClass> restricted, pulled;
  restricted.vars = pulled.vars = T - 1;
  for (const auto& [e, c] : p.poly.terms)
    if (e.back() == 0) restricted.add(e, c);
  for (const auto& [e, c] : q.poly.terms) {
    std::vector<int> e2 = e;
    e2.push_back(0);
    pulled.add(e2, reduce(pullback_forget(c, T, src, dst), dst));
  }
  CheckResult r;
  r.ok = restricted == pulled;
  if (!r.ok) {
    std::ostringstream os;
    std::set<std::vector<int>> keys;
    for (const auto& [e, c] : restricted.terms) keys.insert(e);
    for (const auto& [e, c] : pulled.terms) keys.insert(e);
    for (const auto& e : keys) {
      const TautClass a = restricted.coeff(e), b = pulled.coeff(e);
      if (!(a == b)) os << alpha_monomial_str(e) << ": restricted " << a.str() << " vs pullback " << b.str() << "; ";
    }
    r.diff = os.str();
  }
  return r;
}

CheckResult check_equivariance(int T, const std::map<int, int>& perm) {
  std::map<int, int> sigma;
  for (int m = 1; m <= T; ++m) sigma[m] = m;
  for (const auto& [from, to] : perm) {
    if (from < 1 || from > T || to < 1 || to > T) throw InvalidArgument("permutation entry out of range");
    sigma[from] = to;
  }
  if (sigma[1] != 1) throw InvalidArgument("permutation must fix mark 1");
  std::set<int> image;
  for (const auto& [from, to] : sigma) image.insert(to);
  if (static_cast<int>(image.size()) != T) throw InvalidArgument("not a permutation");

  const ClassPolynomial p = p1t_generate(T);
  const RingContext ctx = RingContext::standard(T);
  MultiPoly<TautClass> moved;
  moved.vars = T - 1;
  for (const auto& [e, c] : p.poly.terms) {
    std::vector<int> e2(e.size(), 0);
    for (int i = 2; i <= T; ++i) e2[static_cast<size_t>(sigma[i] - 2)] = e[static_cast<size_t>(i - 2)];
    moved.add(e2, reduce(relabel(c, sigma), ctx));
  }
  CheckResult r;
  r.ok = moved == p.poly;
  if (!r.ok) {
    std::ostringstream os;
    for (const auto& [e, c] : p.poly.terms)
      if (!(moved.coeff(e) == c)) os << alpha_monomial_str(e) << ": " << c.str() << " vs " << moved.coeff(e).str() << "; ";
    r.diff = os.str();
  }
  return r;
}

CheckResult check_full_symmetry(int T) {
  std::vector<int> img(static_cast<size_t>(T - 1));
  std::iota(img.begin(), img.end(), 2);
  CheckResult all{true, ""};
  do {
    std::map<int, int> perm;
    for (int i = 2; i <= T; ++i) perm[i] = img[static_cast<size_t>(i - 2)];
    const CheckResult r = check_equivariance(T, perm);
    if (!r.ok) {
      all.ok = false;
      all.diff += r.diff;
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return all;
}

bool check_homogeneity(const ClassPolynomial& p, const std::vector<Rational>& alpha, const Rational& c) {
  std::vector<Rational> scaled;
  for (const auto& a : alpha) scaled.push_back(c * a);
  return p.evaluate(scaled) == reduce(c * c * p.evaluate(alpha), RingContext::standard(p.T));
}

std::string HainSymbol::str() const {
  std::ostringstream os;
  if (kind == Kind::PsiDagger) return "psi" + std::to_string(marks.at(0)) + "+";
  os << (kind == Kind::Delta0 ? "d0" : "d" + std::to_string(h)) << "{";
  for (size_t i = 0; i < marks.size(); ++i) os << (i ? "," : "") << marks[i];
  os << "}";
  return os.str();
}

Rational FormalHainClass::coeff(const std::vector<HainSymbol>& monomial) const {
  std::vector<HainSymbol> m = monomial;
  std::sort(m.begin(), m.end());
  auto it = terms.find(m);
  return it == terms.end() ? Rational(0) : it->second;
}

std::string FormalHainClass::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational a = c.abs();
    if (!(a == Rational(1))) os << a << "*";
    os << hain_monomial_str(m);
    first = false;
  }
  return os.str();
}

FormalHainClass hain_linear_part(int g, int T, const std::vector<Rational>& k) {
  if (g < 2) throw InvalidArgument("Hain expansion needs g >= 2");
  if (T < 2) throw InvalidArgument("Hain expansion needs T >= 2");
  if (static_cast<int>(k.size()) != T) throw InvalidArgument("need one k per mark");
  Rational sum(0);
  for (const auto& x : k) sum += x;
  if (!sum.is_zero()) throw InvalidArgument("k must sum to zero");

  FormalHainClass out;
  out.g = g;
  out.T = T;
  auto add = [&](HainSymbol s, const Rational& c) {
    if (!c.is_zero()) out.terms[{std::move(s)}] += c;
  };
  for (int j = 1; j <= T; ++j) {
    const Rational kj = k[static_cast<size_t>(j - 1)];
    add({HainSymbol::Kind::PsiDagger, 0, {j}}, kj * kj / Rational(2));
  }
  for (unsigned mask = 0; mask < (1u << T); ++mask) {
    std::vector<int> J;
    Rational kj(0);
    for (int i = 0; i < T; ++i)
      if (mask & (1u << i)) {
        J.push_back(i + 1);
        kj += k[static_cast<size_t>(i)];
      }
    if (J.size() >= 2) {
      Rational pairs(0);
      for (size_t a = 0; a < J.size(); ++a)
        for (size_t b = a + 1; b < J.size(); ++b)
          pairs += k[static_cast<size_t>(J[a] - 1)] * k[static_cast<size_t>(J[b] - 1)];
      add({HainSymbol::Kind::Delta0, 0, J}, -pairs);
    }
    for (int h = 1; h <= g - 1; ++h) {
      const Rational w = Rational(2 * h - 1, 2 * g - 2) * kj;
      add({HainSymbol::Kind::DeltaH, h, J}, Rational(-1, 2) * w * w);
    }
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

FormalHainClass hain_expand(int g, int T, const std::vector<Rational>& k) {
  const FormalHainClass lin = hain_linear_part(g, T, k);
  HainPoly acc{{{}, Rational(1)}};
  for (int i = 0; i < g; ++i) acc = multiply(acc, lin.terms);
  FormalHainClass out;
  out.g = g;
  out.T = T;
  const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(g)));
  for (auto& [m, c] : acc) out.terms[m] = c * inv;
  return out;
}

}  // namespace rubbertaut
