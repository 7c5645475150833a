#include "rubbertaut/factors.hpp"

namespace rubbertaut {
namespace {

std::string t_power(int e) {
  if (e == 0) return "";
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

std::string hodge_numerator(int g) {
  std::string s;
  for (int i = 0; i <= g; ++i) {
    const std::string tp = t_power(g - i);
    const std::string lam = i == 0 ? "" : "lambda_" + std::to_string(i);
    std::string term = tp.empty() ? lam : (lam.empty() ? tp : tp + "*" + lam);
    if (i == 0)
      s += term;
    else
      s += (i % 2 ? "-" : "+") + term;
  }
  return s;
}

struct Printer {
  std::string operator()(const ScalarFactor& f) const {
    if (f.t_exp == 0) return f.coeff.str();
    if (f.t_exp > 0) return (f.coeff == Rational(1) ? "" : f.coeff.str() + "*") + t_power(f.t_exp);
    return f.coeff.str() + "/" + t_power(-f.t_exp);
  }
  std::string operator()(const NodeAtZero& f) const {
    const std::string denom = f.edge_degree == 1 ? "t" : "t/" + std::to_string(f.edge_degree);
    return "t/(" + denom + "-" + f.psi.name() + ")";
  }
  std::string operator()(const NodeAtInfinity&) const { return "1/(-t-psi)"; }
  std::string operator()(const HodgeFactor& f) const {
    const std::string num = f.genus == 0 ? "1" : "(" + hodge_numerator(f.genus) + ")";
    return num + "/" + t_power(f.t_den);
  }
};

struct Expander {
  const ExpansionContext& ctx;

  Laurent operator()(const ScalarFactor& f) const { return Laurent::monomial(SymbolicPoly(f.coeff), f.t_exp); }

  // t/(t/e - X) = e * sum_k (e X / t)^k
  Laurent operator()(const NodeAtZero& f) const {
    Laurent out;
    const int cap = ctx.caps[static_cast<int>(f.psi.slot())];
    const Rational e(f.edge_degree);
    for (int k = 0; k <= cap; ++k) out.add_term(-k, SymbolicPoly(ClassMonomial(f.psi, k), e.pow(k + 1)));
    return out;
  }

  // 1/(-t - psi) = -(1/t) sum_k (-psi/t)^k
  Laurent operator()(const NodeAtInfinity&) const {
    Laurent out;
    const int cap = ctx.caps[static_cast<int>(Slot::Rubber)];
    for (int k = 0; k <= cap; ++k)
      out.add_term(-1 - k, SymbolicPoly(ClassMonomial(target_psi(), k), Rational(k % 2 ? 1 : -1)));
    return out;
  }

  Laurent operator()(const HodgeFactor& f) const {
    Laurent out;
    const int top = ctx.kill_top_lambda && f.genus > 0 ? f.genus - 1 : f.genus;
    for (int i = 0; i <= top; ++i)
      out.add_term(f.genus - i - f.t_den, SymbolicPoly(ClassMonomial(lambda(i), 1), Rational(i % 2 ? -1 : 1)));
    return truncate(out, ctx.caps);
  }
};

}  // namespace

std::string factor_str(const Factor& f) { return std::visit(Printer{}, f); }

Laurent expand(const Factor& f, const ExpansionContext& ctx) { return std::visit(Expander{ctx}, f); }

Laurent truncate(const Laurent& p, const SlotCaps& caps) {
  return p.transformed([&](const SymbolicPoly& c) { return c.truncated(caps); });
}

Laurent expand_product(const Rational& prefactor, const std::vector<Factor>& factors, const ExpansionContext& ctx) {
  Laurent out = Laurent::monomial(SymbolicPoly(prefactor), 0);
  for (const auto& f : factors) out = truncate(out * expand(f, ctx), ctx.caps);
  return out;
}

}  // namespace rubbertaut
