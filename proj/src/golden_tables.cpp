#include "rubbertaut/golden_tables.hpp"

#include "rubbertaut/errors.hpp"

namespace rubbertaut {
namespace {

Factor node(int e) { return NodeAtZero{e, psi_n()}; }
Factor node_prime(int e) { return NodeAtZero{e, psi_n_prime()}; }
Factor inf() { return NodeAtInfinity{}; }
Factor sc(Rational c, int e) { return ScalarFactor{std::move(c), e}; }
Factor hodge(int den) { return HodgeFactor{1, den}; }

GoldenTable build_degree2() {
  GoldenTable t;
  t.degree = 2;
  t.rows = {
      {1, {"L(2^1_{2,3})"}, Rational(1, 2), "M_{1,3}", {node(2), sc(2, -2), hodge(1), sc(1, 2)}, {}, ""},
      {2, {"R(2_{2,3})"}, 1, "M_{0,3} x rubber(1;2;2)",
       {node_prime(2), inf(), sc(2, -2), sc(1, -1), sc(1, 2)}, {}, ""},
      {3, {"L(1^1_{2,3}+1)"}, 1, "M_{1,3} x rubber(0;2;1+1)",
       {node(1), inf(), sc(1, -2), hodge(1), sc(1, 3)}, {}, ""},
      {4, {"L(1^1_2+1_3)", "L(1^1_3+1_2)"}, 1, "2(M_{1,2} x rubber(0;2;1+1))",
       {node(1), inf(), sc(1, -2), hodge(1), sc(1, 2)}, {}, ""},
      {5, {"L(1^1+1_{2,3})"}, 1, "M_{0,3} x M_{1,1} x rubber(0;2;1+1)",
       {node_prime(1), node(1), inf(), sc(1, -2), hodge(2), sc(1, 2)}, {}, ""},
      {6, {"R(1_{2,3}+1)"}, 1, "M_{0,3} x rubber(1;2;1+1)",
       {node_prime(1), inf(), sc(1, -2), sc(1, -1), sc(1, 3)}, {}, ""},
      {7, {"R(1_2+1_3)"}, 1, "rubber(1;2;1+1)", {inf(), sc(1, -2), sc(1, 2)}, {}, ""},
  };
  // The accompanying text names rows 2 and 6; the displayed relation uses
  // rows 1,3,4,6,7, so the vanishing rows are 2 and 5.
  t.declared_noncontributing = {2, 6};
  t.noncontributing = {2, 5};
  return t;
}

GoldenTable build_degree3() {
  GoldenTable t;
  t.degree = 3;
  const Rational e3(9, 2);
  t.rows = {
      {1, {"L(3^1_{2,3})"}, Rational(1, 3), "M_{1,3}", {node(3), sc(e3, -3), hodge(1), sc(4, 3)}, {}, ""},
      {2, {"R(3_{2,3})"}, 1, "M_{0,3} x rubber(1;3;3)",
       {node_prime(3), inf(), sc(e3, -3), sc(1, -1), sc(2, 3)}, {}, ""},
      {3, {"L(2^1_{2,3}+1)"}, 1, "M_{1,3} x rubber(0;3;2+1)",
       {node(2), inf(), sc(2, -3), hodge(1), sc(3, 4)}, {}, ""},
      {4, {"L(2^1_2+1_3)", "L(2^1_3+1_2)"}, 1, "2(M_{1,2} x rubber(0;3;2+1))",
       {node(2), inf(), sc(2, -3), hodge(1), sc(3, 3)}, {}, ""},
      {5, {"L(2^1+1_{2,3})"}, 1, "M_{0,3} x M_{1,1} x rubber(0;3;2+1)",
       {node(2), node_prime(1), inf(), sc(2, -3), hodge(2), sc(3, 3)}, {}, ""},
      {6, {"L(2_{2,3}+1^1)"}, 1, "M_{0,3} x M_{1,1} x rubber(0;3;2+1)",
       {node_prime(2), node(1), inf(), sc(2, -3), hodge(2), sc(3, 3)}, {}, ""},
      {7, {"L(2_2+1^1_3)", "L(2_3+1^1_2)"}, 1, "2(M_{1,2} x rubber(0;3;2+1))",
       {node(1), inf(), sc(2, -3), hodge(1), sc(3, 3)}, {}, ""},
      {8, {"L(2+1^1_{2,3})"}, 1, "M_{1,3} x rubber(0;3;2+1)",
       {node(1), inf(), sc(2, -3), hodge(1), sc(Rational(3, 2), 4)}, {}, ""},
      {9, {"R(2_{2,3}+1)"}, 1, "M_{0,3} x rubber(1;3;2+1)",
       {node_prime(2), inf(), sc(2, -3), sc(1, -1), sc(1, 3)},
       std::vector<Factor>{node_prime(2), inf(), sc(2, -3), sc(1, -1), sc(1, 4)},
       "printed t^3; free point t, two marks t^2 and br t give t^4, which the degree-3 relation's "
       "coefficient -4 on this locus requires"},
      {10, {"R(2_2+1_3)"}, 1, "rubber(1;3;2_2+1_3)", {inf(), sc(2, -3), sc(1, 3)}, {}, ""},
      {11, {"R(2_3+1_2)"}, 1, "rubber(1;3;2_3+1_2)", {inf(), sc(2, -3), sc(1, 3)}, {}, ""},
      {12, {"R(2+1_{2,3})"}, 1, "M_{0,3} x rubber(1;3;2+1)",
       {node_prime(1), inf(), sc(2, -3), sc(1, -1), sc(Rational(1, 2), 4)}, {}, ""},
      {13, {"L(1^1_{2,3}+1+1)"}, Rational(1, 2), "M_{1,3} x rubber(0;3;1+1+1)",
       {node(1), inf(), sc(1, -3), hodge(1), sc(2, 5)}, {}, ""},
      {14, {"L(1^1_2+1_3+1)", "L(1^1_3+1_2+1)"}, 1, "2(M_{1,2} x rubber(0;3;1+1+1))",
       {node(1), inf(), sc(1, -3), hodge(1), sc(2, 4)}, {}, ""},
      {15, {"L(1^1+1_{2,3}+1)"}, 1, "M_{0,3} x M_{1,1} x rubber(0;3;1+1+1)",
       {node_prime(1), node(1), inf(), sc(1, -3), hodge(2), sc(2, 4)}, {}, ""},
      {16, {"L(1^1+1_2+1_3)"}, 1, "M_{1,1} x rubber(0;3;1+1+1)",
       {node(1), inf(), sc(1, -3), hodge(1), sc(2, 3)}, {}, ""},
  };
  t.declared_noncontributing = {2, 5, 6};
  t.noncontributing = {2, 5, 6};
  return t;
}

bool same_expansion(const Rational& pa, const std::vector<Factor>& a, const Rational& pb,
                    const std::vector<Factor>& b, const ExpansionContext& ctx) {
  return expand_product(pa, a, ctx) == expand_product(pb, b, ctx);
}

ExpansionContext free_context() {
  ExpansionContext ctx;
  ctx.caps = {6, 6, 6};
  ctx.kill_top_lambda = false;
  return ctx;
}

}  // namespace

const GoldenTable& golden_table_degree2() {
  static const GoldenTable t = build_degree2();
  return t;
}

const GoldenTable& golden_table_degree3() {
  static const GoldenTable t = build_degree3();
  return t;
}

const GoldenTable& golden_table(int degree) {
  if (degree == 2) return golden_table_degree2();
  if (degree == 3) return golden_table_degree3();
  throw InvalidArgument("golden tables exist for degrees 2 and 3");
}

const GoldenRow* golden_row_for(const GoldenTable& table, const std::string& label) {
  for (const auto& r : table.rows)
    for (const auto& g : r.graphs)
      if (g == label) return &r;
  return nullptr;
}

GoldenFormula table1_right_graph(int d) {
  return {Rational(d, d),
          {sc(Rational(1, d), 1), inf(), sc(Rational(d).pow(d) / Rational(factorial(static_cast<unsigned>(d))), -d),
           sc(Rational(factorial(static_cast<unsigned>(d - 1))), d - 1)}};
}

GoldenFormula table1_left_graph(int g, const Partition& nu, int nu_j) {
  const int d = nu.size();
  const int l = nu.length();
  Rational pow_prod(1), edge(1);
  mpz_class m_fact = 1;
  int m_j = 0;
  size_t i = 0;
  while (i < nu.parts().size()) {
    size_t k = i;
    while (k < nu.parts().size() && nu.parts()[k] == nu.parts()[i]) ++k;
    const int v = nu.parts()[i];
    const int m = static_cast<int>(k - i);
    pow_prod *= Rational(v).pow(m);
    edge *= (Rational(v).pow(v) / Rational(factorial(static_cast<unsigned>(v)))).pow(m);
    m_fact *= factorial(static_cast<unsigned>(m));
    if (v == nu_j) m_j = m;
    i = k;
  }
  if (m_j == 0) throw InvalidArgument("nu_j is not a part of nu");
  const Rational prefactor = pow_prod * Rational(m_j) / (pow_prod * Rational(m_fact));
  const Rational br = l <= 2 * g + 1 ? Rational(factorial(static_cast<unsigned>(2 * g + d - l))) /
                                           Rational(factorial(static_cast<unsigned>(2 * g - l + 1)))
                                     : Rational(0);
  return {prefactor,
          {sc(Rational(nu_j) / pow_prod, l - 1), node(nu_j), inf(), sc(edge, -d), HodgeFactor{g, 1}, sc(br, d - 1)}};
}

GoldenCheck check_against_formula(const LocalizationSetup& setup, const LocGraph& graph, const Rational& prefactor,
                                  const std::vector<Factor>& factors) {
  GoldenCheck out;
  const FixedLocus locus = fixed_locus(setup, graph);
  const auto rules = rule_factors(setup, graph);
  out.prefactor_match = locus.prefactor() == prefactor;
  out.product_match = same_expansion(locus.prefactor(), rules, prefactor, factors, free_context()) &&
                      same_expansion(locus.prefactor(), rules, prefactor, factors, expansion_context(setup, graph));
  out.printed_product_match = out.product_match;
  if (!out.prefactor_match)
    out.detail += "prefactor " + locus.prefactor().str() + " vs " + prefactor.str() + "; ";
  if (!out.product_match) out.detail += "factor product differs; ";
  return out;
}

GoldenCheck check_golden_row(const LocalizationSetup& setup, const GoldenRow& row, const LocGraph& graph) {
  GoldenCheck out = check_against_formula(setup, graph, row.prefactor, row.effective());
  if (row.corrected) {
    const auto printed = check_against_formula(setup, graph, row.prefactor, row.printed);
    out.printed_product_match = printed.product_match;
  }
  return out;
}

}  // namespace rubbertaut
