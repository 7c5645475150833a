#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rubbertaut/laurent_poly.hpp"
#include "rubbertaut/symbolic.hpp"

namespace rubbertaut {

using Laurent = LaurentPoly<SymbolicPoly>;

// c * t^e
struct ScalarFactor {
  Rational coeff;
  int t_exp = 0;
  friend bool operator==(const ScalarFactor&, const ScalarFactor&) = default;
};

// t / (t/e - psi): smoothing a node over 0 on an edge of degree e.
struct NodeAtZero {
  int edge_degree = 1;
  Atom psi;
  friend bool operator==(const NodeAtZero&, const NodeAtZero&) = default;
};

// 1 / (-t - psi): smoothing the node to the rubber over infinity.
struct NodeAtInfinity {
  friend bool operator==(const NodeAtInfinity&, const NodeAtInfinity&) = default;
};

// (t^g - t^(g-1) lambda_1 + ... + (-1)^g lambda_g) / t^den.
struct HodgeFactor {
  int genus = 0;
  int t_den = 1;
  friend bool operator==(const HodgeFactor&, const HodgeFactor&) = default;
};

using Factor = std::variant<ScalarFactor, NodeAtZero, NodeAtInfinity, HodgeFactor>;

struct ExpansionContext {
  SlotCaps caps{};
  // Drop lambda_g from Hodge factors (the decoration already holds lambda_g).
  bool kill_top_lambda = false;
};

std::string factor_str(const Factor& f);
Laurent expand(const Factor& f, const ExpansionContext& ctx);

// prefactor * product of expansions, truncated to the caps after every step.
Laurent expand_product(const Rational& prefactor, const std::vector<Factor>& factors, const ExpansionContext& ctx);

Laurent truncate(const Laurent& p, const SlotCaps& caps);

}  // namespace rubbertaut
