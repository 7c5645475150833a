#include "rubbertaut/series_identities.hpp"

#include <sstream>

#include "rubbertaut/errors.hpp"
#include "rubbertaut/hurwitz.hpp"
#include "rubbertaut/linear_solve.hpp"
#include "rubbertaut/locgraphs.hpp"
#include "rubbertaut/partitions.hpp"
#include "rubbertaut/power_series.hpp"

namespace rubbertaut {
namespace {

Rational fact(int n) { return Rational(factorial(static_cast<unsigned>(n))); }

void check_bounds(int g, int d) {
  if (g < 1) throw InvalidArgument("genus must be >= 1");
  if (d < 1) throw InvalidArgument("degree must be >= 1");
  if (d > kMaxLengthTwoDegree) throw ResourceLimit("degree above " + std::to_string(kMaxLengthTwoDegree));
}

// Q_g^e = sum_j (-1)^j e^{g-1-j} <psi^{g-1-j} lambda_j>.
void add_q(LengthTwoExpression& out, int e, const Rational& weight) {
  for (int j = 0; j <= out.g - 1; ++j) {
    const Rational c = weight * Rational(e).pow(out.g - 1 - j) * Rational(j % 2 ? -1 : 1);
    out.coeffs[HodgeUnknown::of(out.g, j)] += c;
  }
}

void drop_zeros(LengthTwoExpression& out) {
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
}

LengthTwoExpression build_resummed(int g, int d) {
  LengthTwoExpression out{g, d, {}};
  const PowerSeries tau = series_tau(d);
  const Rational outer = Rational(1) / Rational(d).pow(d - 1);
  for (int e = 1; e <= d; ++e) {
    Rational inner(0);
    for (int l = 0; l <= 2 * g; ++l) {
      const Rational c = l == 0 ? Rational(d == e ? 1 : 0) : tau.pow(l).coeff(d - e);
      if (c.is_zero()) continue;
      inner += fact(2 * g + d - l - 1) / fact(2 * g - l) * Rational(-d).pow(l) / fact(l) * c;
    }
    add_q(out, e, outer * Rational(e).pow(e + 1) / fact(e) * inner);
  }
  drop_zeros(out);
  return out;
}

LengthTwoExpression build_raw(int g, int d) {
  LengthTwoExpression out{g, d, {}};
  for (const Partition& nu : enumerate_partitions(d, 2 * g + 1)) {
    const int l = nu.length();
    Rational prod(1);
    for (int p : nu.parts()) prod *= Rational(p).pow(p - 1) / fact(p);
    const Rational base = Rational((l - 1) % 2 ? -1 : 1) * fact(d) / Rational(d).pow(d - 1) *
                          Rational(binomial(2 * g + d - l, d - 1)) * Rational(d).pow(l - 2) /
                          Rational(aut(nu)) * prod;
    for (int p : nu.parts()) add_q(out, p, base * Rational(p * p));
  }
  drop_zeros(out);
  return out;
}

// Evaluates one L-graph 1/t coefficient: psi_N^i lambda_j on the curve factor
// becomes <psi^i lambda_j>; psi^{l-2} on the genus-zero rubber is H/(l-1)!.
LengthTwoExpression build_localization(int g, int d) {
  LengthTwoExpression out{g, d, {}};
  const auto contribs = localize(LocalizationSetup::length_two(g, d));
  Rational right(0);
  for (const auto& c : contribs) {
    const SymbolicPoly coeff = c.laurent.coeff(-1);
    if (c.graph.side == Side::R) {
      for (const auto& [m, v] : coeff.terms()) {
        if (!m.is_one()) throw UnsupportedGraph("class-valued right-graph coefficient " + coeff.str());
        right += v;
      }
      continue;
    }
    const Partition nu = c.graph.nu.base();
    const int l = nu.length();
    for (const auto& [m, v] : coeff.terms()) {
      const int rubber_deg = m.power(target_psi());
      const int psi_deg = m.power(psi_n());
      int lambda_index = 0;
      for (const auto& [atom, power] : m.powers()) {
        if (atom.kind == AtomKind::Lambda) {
          if (power != 1 || lambda_index != 0) throw UnsupportedGraph("lambda monomial " + m.str());
          lambda_index = atom.index;
        } else if (atom.kind == AtomKind::NodePsiPrime) {
          throw UnsupportedGraph("rational vertex class " + m.str());
        }
      }
      if (psi_deg + lambda_index != g - 1 || rubber_deg != std::max(l - 2, 0))
        throw Inconsistency("degree mismatch in " + c.graph.label() + ": " + m.str());
      const Rational rubber = l == 1 ? Rational(1) : rubber_psi_integral(Partition({d}), nu);
      out.coeffs[HodgeUnknown{g, psi_deg, lambda_index}] += v * rubber;
    }
  }
  if (right.is_zero()) throw Inconsistency("vanishing right-graph coefficient");
  // right * N + sum(left) = 0.
  for (auto& [u, c] : out.coeffs) c = -c / right;
  drop_zeros(out);
  return out;
}

}  // namespace

HodgeUnknown HodgeUnknown::of(int g, int j) { return {g, g - 1 - j, j}; }

std::string HodgeUnknown::str() const {
  return "<psi^" + std::to_string(i) + " lambda_" + std::to_string(j) + " | " + std::to_string(g) + ">";
}

Rational LengthTwoExpression::evaluate(const HodgeValues& values) const {
  Rational out(0);
  for (const auto& [u, c] : coeffs) {
    auto it = values.find(u);
    if (it == values.end()) throw InvalidArgument("no value for " + u.str());
    out += c * it->second;
  }
  return out;
}

std::string LengthTwoExpression::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : coeffs) {
    if (!first) os << " + ";
    os << c << "*" << u.str();
    first = false;
  }
  return os.str();
}

LengthTwoExpression build_length_two(int g, int d, LengthTwoRoute route) {
  check_bounds(g, d);
  switch (route) {
    case LengthTwoRoute::Resummed: return build_resummed(g, d);
    case LengthTwoRoute::Raw: return build_raw(g, d);
    case LengthTwoRoute::Localization: return build_localization(g, d);
  }
  throw InvalidArgument("unknown route");
}

Rational log_sine_coefficient(int g) {
  if (g < 1) throw InvalidArgument("genus must be >= 1");
  return series_log_sine(1, 2 * g).coeff(2 * g);
}

HodgeSolution solve_hodge(int g, const std::vector<int>& degrees) {
  if (g < 1) throw InvalidArgument("genus must be >= 1");
  if (static_cast<int>(degrees.size()) < g) throw InvalidArgument("need at least g degrees");
  std::vector<HodgeUnknown> unknowns;
  for (int j = 0; j < g; ++j) unknowns.push_back(HodgeUnknown::of(g, j));
  const Rational cg = log_sine_coefficient(g);

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int d : degrees) {
    const LengthTwoExpression e = build_length_two(g, d);
    std::vector<Rational> row;
    for (const auto& u : unknowns) {
      auto it = e.coeffs.find(u);
      row.push_back(it == e.coeffs.end() ? Rational(0) : it->second);
    }
    a.push_back(std::move(row));
    b.push_back(Rational(d).pow(2 * g) * cg);
  }
  const LinearSolution sol = solve_linear(a, b, g);
  if (!sol.consistent)
    throw TheoremViolation("length-two system inconsistent in genus " + std::to_string(g));

  HodgeSolution out;
  out.g = g;
  out.degrees = degrees;
  out.rank = sol.rank;
  for (int k = 0; k < g; ++k) out.values[unknowns[static_cast<size_t>(k)]] = sol.particular[static_cast<size_t>(k)];
  for (const auto& v : sol.nullspace) {
    HodgeValues n;
    for (int k = 0; k < g; ++k) n[unknowns[static_cast<size_t>(k)]] = v[static_cast<size_t>(k)];
    out.nullspace.push_back(std::move(n));
  }
  return out;
}

ScalingReport verify_scaling(int g, const std::vector<int>& degrees) {
  std::vector<int> ds;
  for (int d = 1; d <= g; ++d) ds.push_back(d);
  for (int d : degrees)
    if (d > g) ds.push_back(d);
  ScalingReport rep;
  rep.g = g;
  rep.solution = solve_hodge(g, ds);
  const Rational cg = log_sine_coefficient(g);
  const Rational n1 = build_length_two(g, 1).evaluate(rep.solution.values);
  if (n1.is_zero()) throw TheoremViolation("N_g(1) vanishes");
  rep.ok = true;
  for (int d : ds) {
    ScalingRow row;
    row.d = d;
    row.value = build_length_two(g, d).evaluate(rep.solution.values);
    row.expected = Rational(d).pow(2 * g) * cg;
    row.ratio = row.value / n1;
    row.match = row.value == row.expected && row.ratio == Rational(d).pow(2 * g);
    rep.ok = rep.ok && row.match;
    rep.rows.push_back(row);
  }
  if (!rep.ok) throw TheoremViolation("d^{2g} scaling fails in genus " + std::to_string(g));
  return rep;
}

}  // namespace rubbertaut
