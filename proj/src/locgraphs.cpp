#include "rubbertaut/locgraphs.hpp"

#include <algorithm>
#include <set>

#include "rubbertaut/errors.hpp"

namespace rubbertaut {
namespace {

std::string part_label(const MarkedPart& p, int genus) {
  std::string s = std::to_string(p.size);
  if (p.genus) s += "^" + std::to_string(genus);
  if (p.marks.size() == 1) {
    s += "_" + std::to_string(p.marks[0]);
  } else if (p.marks.size() > 1) {
    s += "_{";
    for (size_t i = 0; i < p.marks.size(); ++i) s += (i ? "," : "") + std::to_string(p.marks[i]);
    s += "}";
  }
  return s;
}

bool is_rational_vertex(const MarkedPart& p) { return !p.genus && p.marks.size() >= 2; }

bool has_rubber(const LocGraph& g) { return g.side == Side::R || g.nu.length() >= 2; }

std::string rubber_profile(const LocGraph& g) {
  std::string s;
  for (const auto& p : g.nu.parts()) {
    if (!s.empty()) s += '+';
    MarkedPart shown = p;
    shown.genus = false;
    if (g.side == Side::L || shown.marks.size() != 1) shown.marks.clear();
    s += part_label(shown, 0);
  }
  return s;
}

}  // namespace

const MarkedPart* LocGraph::genus_part() const {
  for (const auto& p : nu.parts())
    if (p.genus) return &p;
  return nullptr;
}

std::string LocGraph::label() const {
  std::string s = side == Side::L ? "L(" : "R(";
  for (size_t i = 0; i < nu.parts().size(); ++i) s += (i ? "+" : "") + part_label(nu.parts()[i], genus);
  return s + ")";
}

std::string FactorSpace::str() const {
  if (kind == Kind::Curve) return "M_{" + std::to_string(genus) + "," + std::to_string(marks) + "}";
  return "rubber(" + std::to_string(genus) + ";" + std::to_string(degree) + ";" + beta + ")";
}

std::string FixedLocus::str() const {
  std::string s;
  for (const auto& f : spaces) s += (s.empty() ? "" : " x ") + f.str();
  return s;
}

LocalizationSetup LocalizationSetup::genus_one_three_point(int d) {
  if (d < 2) throw InvalidArgument("the three-point genus-one class needs d >= 2");
  return {1, d, {2, 3}, d - 2, Decoration::Lambda1};
}

LocalizationSetup LocalizationSetup::length_two(int g, int d) {
  if (g < 1 || d < 1) throw InvalidArgument("length-two localization needs g >= 1, d >= 1");
  return {g, d, {}, d - 1, Decoration::LambdaTopPair};
}

int branching_over_zero(const LocGraph& g) {
  int a = 0;
  for (const auto& p : g.nu.parts()) a += p.genus ? 2 * g.genus - 1 + p.size : p.size - 1;
  return a;
}

FixedLocus fixed_locus(const LocalizationSetup& setup, const LocGraph& g) {
  FixedLocus locus;
  for (const auto& p : g.nu.parts())
    if (is_rational_vertex(p))
      locus.spaces.push_back({FactorSpace::Kind::Curve, 0, static_cast<int>(p.marks.size()) + 1, 0, ""});
  if (const MarkedPart* gp = g.genus_part())
    locus.spaces.push_back({FactorSpace::Kind::Curve, g.genus, static_cast<int>(gp->marks.size()) + 1, 0, ""});
  if (has_rubber(g))
    locus.spaces.push_back(
        {FactorSpace::Kind::Rubber, g.side == Side::R ? g.genus : 0, 0, setup.degree, rubber_profile(g)});
  // Gluing to a rubber component contributes prod nu_i node orientations;
  // every edge carries its Z/nu_i automorphisms.
  mpz_class edges = 1;
  const Partition nu_base = g.nu.base();
  for (int p : nu_base.parts()) edges *= p;
  locus.multiplicity = has_rubber(g) ? edges : mpz_class(1);
  locus.aut_order = aut(g.nu) * edges;
  return locus;
}

std::vector<GraphEntry> enumerate_graphs(const LocalizationSetup& setup) {
  if (setup.genus < 1) throw InvalidArgument("localization graphs need genus >= 1");
  if (setup.degree < 1 || setup.degree > 7) throw ResourceLimit("localization graphs support 1 <= d <= 7");
  std::vector<GraphEntry> out;
  for (const auto& nu : enumerate_partitions(setup.degree)) {
    std::vector<LocGraph> graphs;
    for (const auto& mu : enumerate_marked(nu, setup.marks)) {
      std::set<std::string> seen;
      for (size_t j = 0; j < mu.parts().size(); ++j) {
        std::vector<MarkedPart> parts = mu.parts();
        parts[j].genus = true;
        LocGraph g{Side::L, setup.genus, MarkedPartition(parts)};
        if (seen.insert(g.label()).second) graphs.push_back(g);
      }
    }
    for (const auto& mu : enumerate_marked(nu, setup.marks)) graphs.push_back({Side::R, setup.genus, mu});
    for (auto& g : graphs)
      if (branching_over_zero(g) >= setup.lift) out.push_back({g, fixed_locus(setup, g)});
  }
  return out;
}

ExpansionContext expansion_context(const LocalizationSetup& setup, const LocGraph& g) {
  ExpansionContext ctx;
  ctx.kill_top_lambda = true;
  const int l = g.nu.length();
  int rational_vertex_cap = 0;
  for (const auto& p : g.nu.parts())
    if (is_rational_vertex(p)) rational_vertex_cap = std::max(rational_vertex_cap, static_cast<int>(p.marks.size()) - 2);
  ctx.caps[static_cast<int>(Slot::RationalVertex)] = rational_vertex_cap;

  const MarkedPart* gp = g.genus_part();
  const int curve_marks = gp ? static_cast<int>(gp->marks.size()) + 1 : 0;
  if (setup.decoration == Decoration::LambdaTopPair) {
    // dim M_{g,1} minus deg lambda_g lambda_{g-1}; rubber of genus g minus the same.
    ctx.caps[static_cast<int>(Slot::Curve)] = gp ? setup.genus - 1 : 0;
    ctx.caps[static_cast<int>(Slot::Rubber)] = g.side == Side::L ? std::max(0, l - 2) : l - 1;
  } else {
    if (setup.genus != 1) throw UnsupportedGraph("lambda_1 decoration is implemented in genus one only");
    // After removing lambda_1, classes above degree n-2 on M_{1,n} cannot
    // survive the pushforward into R^1.
    ctx.caps[static_cast<int>(Slot::Curve)] = gp ? std::max(0, curve_marks - 2) : 0;
    ctx.caps[static_cast<int>(Slot::Rubber)] = g.side == Side::L ? std::max(0, l - 2) : l - 1;
  }
  return ctx;
}

std::vector<Factor> rule_factors(const LocalizationSetup& setup, const LocGraph& g) {
  const int d = setup.degree;
  const int a = branching_over_zero(g);
  std::vector<Factor> nodes;
  Rational scalar(1);
  int scalar_t = 0;
  int rational_vertices = 0;

  for (const auto& p : g.nu.parts()) {
    if (p.genus) {
      nodes.push_back(NodeAtZero{p.size, psi_n()});
    } else if (p.marks.size() >= 2) {
      nodes.push_back(NodeAtZero{p.size, psi_n_prime()});
      ++rational_vertices;
    } else if (p.marks.empty()) {
      scalar /= Rational(p.size);  // free point t/nu_i
      scalar_t += 1;
    }
    // A single mark on the edge end contributes no vertex factor.
  }
  if (rational_vertices > 1) throw UnsupportedGraph("more than one genus-zero vertex over 0 in " + g.label());

  std::vector<Factor> out = nodes;
  if (has_rubber(g)) out.push_back(NodeAtInfinity{});

  Rational edge(1);
  const Partition nu_base = g.nu.base();
  for (int p : nu_base.parts()) edge *= Rational(p).pow(p) / Rational(factorial(static_cast<unsigned>(p)));
  out.push_back(ScalarFactor{edge, -d});

  if (g.side == Side::L)
    out.push_back(HodgeFactor{g.genus, 1 + rational_vertices});
  else if (rational_vertices > 0)
    out.push_back(HodgeFactor{0, rational_vertices});

  // ev^*(pt) for each mark forced to 0, then br^*(H^lift).
  scalar_t += static_cast<int>(setup.marks.size());
  scalar *= Rational(falling_factorial(a, static_cast<unsigned>(setup.lift)));
  scalar_t += setup.lift;
  out.push_back(ScalarFactor{scalar, scalar_t});
  return out;
}

Contribution assemble_contribution(const LocalizationSetup& setup, const GraphEntry& entry) {
  Contribution c{setup.decoration, entry.graph, entry.locus, rule_factors(setup, entry.graph), expansion_context(setup, entry.graph), {}};
  c.laurent = expand_product(entry.locus.prefactor(), c.factors, c.context);
  return c;
}

std::vector<Contribution> localize(const LocalizationSetup& setup) {
  std::vector<Contribution> out;
  for (const auto& e : enumerate_graphs(setup)) out.push_back(assemble_contribution(setup, e));
  return out;
}

SymbolicRelation relation_extract(const std::vector<Contribution>& contribs) {
  SymbolicRelation rel;
  if (!contribs.empty()) rel.decoration = contribs.front().decoration;
  for (const auto& c : contribs) {
    SymbolicPoly coeff = c.laurent.coeff(-1);
    if (!coeff.is_zero()) rel.terms.push_back({c.graph, c.locus, std::move(coeff)});
  }
  return rel;
}

Laurent deeper_poles(const std::vector<Contribution>& contribs) {
  Laurent out;
  for (const auto& c : contribs)
    for (const auto& [e, coeff] : c.laurent.terms())
      if (e < -1) out.add_term(e, coeff);
  return out;
}

}  // namespace rubbertaut
