#include "rubbertaut/genus_one.hpp"

#include <algorithm>
#include <sstream>

#include "rubbertaut/errors.hpp"
#include "rubbertaut/hurwitz.hpp"
#include "rubbertaut/linear_solve.hpp"
#include "rubbertaut/series_identities.hpp"

namespace rubbertaut {
namespace {

const RingContext& ring3() {
  static const RingContext ctx = RingContext::standard(3);
  return ctx;
}

const RingContext& ring12() {
  static const RingContext ctx({1, 2});
  return ctx;
}

bool has_atom(const ClassMonomial& m, AtomKind kind) {
  return std::any_of(m.powers().begin(), m.powers().end(), [&](const auto& kv) { return kv.first.kind == kind; });
}

// One left-graph monomial pushed to M^rt_{1,3}.
TautClass evaluate_left(const LocGraph& g, const ClassMonomial& m, const Rational& v, int degree) {
  const MarkedPart* gp = g.genus_part();
  const Partition nu = g.nu.base();
  const int l = nu.length();
  const int a = m.power(psi_n());
  const int c = m.power(target_psi());
  const std::string where = g.label() + " " + m.str();

  std::vector<int> tail{1};
  int marked_parts = 0;
  int bare_parts = 0;
  bool rational_vertex = false;
  for (const auto& p : g.nu.parts()) {
    if (&p == gp) continue;
    if (p.marks.empty()) ++bare_parts;
    else ++marked_parts;
    if (p.marks.size() >= 2) rational_vertex = true;
    tail.insert(tail.end(), p.marks.begin(), p.marks.end());
  }
  std::sort(tail.begin(), tail.end());

  Rational tail_value(1);
  if (l == 1) {
    if (c != 0) throw UnsupportedGraph("target psi without rubber: " + where);
  } else {
    const int r = hurwitz_branch_points({Partition({degree}), nu});
    const int special = 2 + marked_parts;
    const int cycle_dim = r - 1 - c;
    const int target_dim = std::max(special - 3, 0);
    if (cycle_dim > target_dim) return {};  // pushforward vanishes for dimension reasons
    if (rational_vertex || has_atom(m, AtomKind::NodePsiPrime)) throw UnsupportedGraph("rational vertex: " + where);
    if (cycle_dim < target_dim) throw UnsupportedGraph("rubber class of positive codimension: " + where);
    if (cycle_dim == 0) {
      tail_value = rubber_psi_integral(Partition({degree}), nu);
    } else if (c != 0 || bare_parts != 0) {
      throw UnsupportedGraph("rubber not birational onto its image: " + where);
    }
    // Otherwise the rubber map is a polynomial with prescribed root
    // multiplicities at marked points: degree one onto M_{0,special}.
  }
  if (has_atom(m, AtomKind::Lambda)) throw UnsupportedGraph("lambda on curve factor: " + where);

  if (tail.size() == 1) {
    if (a != 1) throw UnsupportedGraph("class of degree " + std::to_string(a) + " on M_{1,3}: " + where);
    return TautClass(Generator::psi1(), v * tail_value);
  }
  if (a != 0) throw UnsupportedGraph("node psi on a boundary stratum: " + where);
  return TautClass(Generator::boundary(gp->marks, tail), v * tail_value);
}

TautClass p_value(const GenusOneSolution& sol, int a2, int a3) {
  return Rational(a2 * a2) * sol.a2 + Rational(a3 * a3) * sol.a3 + Rational(a2 * a3) * sol.b;
}

Rational s_scalar(const GenusOneSolution& sol, int m, int b) {
  const RingContext& src = ring3();
  const Rational pa2 = pushforward_forget(sol.a2, 3, src, ring12());
  const Rational pa3 = pushforward_forget(sol.a3, 3, src, ring12());
  return Rational(m * m) * pa2 + Rational(b * b) * pa3 + Rational(m * b) * sol.b_prime;
}

GenusOneSolution base_solution() {
  GenusOneSolution sol;
  const HodgeSolution h = solve_hodge(1, {1});
  const Rational n1 = build_length_two(1, 1).evaluate(h.values);
  sol.c1_ratio = n1 / Rational(1, 24);
  sol.a2 = length_two_pullback(2, sol.c1_ratio);
  sol.a3 = length_two_pullback(3, sol.c1_ratio);
  return sol;
}

std::string unknown_name(size_t k, const std::vector<Generator>& basis) {
  return k < basis.size() ? "B[" + basis[k].str() + "]" : "b'";
}

}  // namespace

EvaluatedRelation evaluate_relation(const SymbolicRelation& rel, int degree) {
  EvaluatedRelation out;
  out.degree = degree;
  for (const auto& term : rel.terms) {
    const LocGraph& g = term.graph;
    if (g.side == Side::L) {
      for (const auto& [m, v] : term.coeff.terms()) out.known += evaluate_left(g, m, v, degree);
      continue;
    }
    Rational v(0);
    for (const auto& [m, c] : term.coeff.terms()) {
      if (!m.is_one()) throw UnsupportedGraph("class-valued coefficient on " + g.label() + ": " + term.coeff.str());
      v += c;
    }
    if (v.is_zero()) continue;
    const auto& parts = g.nu.parts();
    int a2 = 0, a3 = 0, pair = 0, bare = 0, bare_size = 0;
    for (const auto& p : parts) {
      if (p.marks == std::vector<int>{2}) a2 = p.size;
      else if (p.marks == std::vector<int>{3}) a3 = p.size;
      else if (p.marks == std::vector<int>{2, 3}) pair = p.size;
      else if (p.marks.empty()) { ++bare; bare_size = p.size; }
    }
    if (parts.size() == 2 && a2 > 0 && a3 > 0) {
      out.p_terms.push_back({g.label(), v, a2, a3});
    } else if (parts.size() == 2 && pair > 0 && bare == 1) {
      out.s_terms.push_back({g.label(), v, pair, bare_size});
    } else {
      throw UnsupportedGraph("right graph shape " + g.label());
    }
  }
  out.known = reduce(out.known, ring3());
  return out;
}

TautClass length_two_pullback(int kept_mark, const Rational& c) {
  if (kept_mark != 2 && kept_mark != 3) throw InvalidArgument("kept mark must be 2 or 3");
  const int forgotten = kept_mark == 2 ? 3 : 2;
  const RingContext src({1, kept_mark});
  const TautClass base(Generator::boundary({}, {1, kept_mark}), c);
  return reduce(pullback_forget(base, forgotten, src, ring3()), ring3());
}

TautClass relation_residual(const EvaluatedRelation& rel, const GenusOneSolution& sol) {
  TautClass out = rel.known;
  for (const auto& p : rel.p_terms) out += p.coeff * p_value(sol, p.a2, p.a3);
  for (const auto& s : rel.s_terms)
    out += section_pushforward(s.coeff * s_scalar(sol, s.m, s.b), 2, 3, ring3());
  return reduce(out, ring3());
}

TautClass pushpush_residual(const EvaluatedRelation& rel, const GenusOneSolution& sol) {
  // sigma_2* pi_3* sends P(a2, a3) to S(a2, a3) and fixes S(m, b), since
  // pi_3* D(1|23) = 1.
  Rational scalar = pushforward_forget(rel.known, 3, ring3(), ring12());
  for (const auto& p : rel.p_terms) scalar += p.coeff * s_scalar(sol, p.a2, p.a3);
  for (const auto& s : rel.s_terms) scalar += s.coeff * s_scalar(sol, s.m, s.b);
  return section_pushforward(scalar, 2, 3, ring3());
}

EvaluatedRelation genus_one_relation(int degree) {
  if (degree < 2) throw InvalidArgument("genus-one three-point relation needs degree >= 2");
  return evaluate_relation(relation_extract(localize(LocalizationSetup::genus_one_three_point(degree))), degree);
}

GenusOneSolution evaluate_and_solve(int degree) {
  const EvaluatedRelation rel = genus_one_relation(degree);
  GenusOneSolution sol = base_solution();
  const RingContext& ctx = ring3();
  const std::vector<Generator> basis = ctx.basis();
  const size_t n = basis.size() + 1;

  auto with = [&](const std::vector<Rational>& x) {
    GenusOneSolution s = sol;
    s.b = from_coordinates(std::vector<Rational>(x.begin(), x.begin() + static_cast<long>(basis.size())), ctx);
    s.b_prime = x.back();
    std::vector<Rational> eq = coordinates(relation_residual(rel, s), ctx);
    const std::vector<Rational> pp = coordinates(pushpush_residual(rel, s), ctx);
    eq.insert(eq.end(), pp.begin(), pp.end());
    return eq;
  };

  const std::vector<Rational> zero(n, Rational(0));
  const std::vector<Rational> r0 = with(zero);
  std::vector<std::vector<Rational>> a(r0.size(), std::vector<Rational>(n));
  for (size_t k = 0; k < n; ++k) {
    std::vector<Rational> unit = zero;
    unit[k] = 1;
    const std::vector<Rational> rk = with(unit);
    for (size_t i = 0; i < r0.size(); ++i) a[i][k] = rk[i] - r0[i];
  }
  std::vector<Rational> b;
  for (const auto& v : r0) b.push_back(-v);

  for (size_t i = 0; i < a.size(); ++i) {
    std::ostringstream os;
    bool any = false;
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      os << (any ? " + " : "") << a[i][k] << "*" << unknown_name(k, basis);
      any = true;
    }
    if (!any) os << "0";
    os << " = " << b[i];
    sol.equations.push_back(os.str());
  }

  const LinearSolution ls = solve_linear(a, b, static_cast<int>(n));
  if (!ls.consistent) throw Inconsistency("degree-" + std::to_string(degree) + " relation system is inconsistent");
  if (!ls.unique()) throw Inconsistency("degree-" + std::to_string(degree) + " relation system is underdetermined");
  sol.rank = ls.rank;
  sol.b = from_coordinates(std::vector<Rational>(ls.particular.begin(), ls.particular.begin() + static_cast<long>(basis.size())), ctx);
  sol.b_prime = ls.particular.back();
  return sol;
}

TautClass check_relation(int degree, const GenusOneSolution& sol) {
  return relation_residual(genus_one_relation(degree), sol);
}

}  // namespace rubbertaut
