#pragma once

#include <string>
#include <vector>

#include "rubbertaut/factors.hpp"
#include "rubbertaut/partitions.hpp"

namespace rubbertaut {

enum class Side { L, R };

// Fixed-locus graph: edge degrees nu with marks on parts. For side L one part
// carries the genus flag (the contracted genus-g vertex sits over 0 on it);
// for side R the genus-g component is the rubber over infinity.
struct LocGraph {
  Side side = Side::L;
  int genus = 1;
  MarkedPartition nu;

  int degree() const { return nu.base().size(); }
  const MarkedPart* genus_part() const;
  std::string label() const;  // "L(2^1_{2,3})", "R(1_2+1_3)"
};

struct FactorSpace {
  enum class Kind { Curve, Rubber } kind = Kind::Curve;
  int genus = 0;
  int marks = 0;      // Curve: number of special points
  int degree = 0;     // Rubber
  std::string beta;   // Rubber: profile over 0, e.g. "2_2+1_3"
  std::string str() const;
};

struct FixedLocus {
  std::vector<FactorSpace> spaces;
  mpz_class multiplicity;  // m(Gamma)
  mpz_class aut_order;     // |A_Gamma|
  Rational prefactor() const { return Rational(multiplicity, aut_order); }
  std::string str() const;
};

// Which class is localized.
enum class Decoration {
  Lambda1,        // lambda_1 * prod ev_i^*(pt) * br^*(H^k) on M_{1,marks}(P^1, d)
  LambdaTopPair,  // lambda_g lambda_{g-1} * br^*(H^{d-1}) with no marks
};

struct LocalizationSetup {
  int genus = 1;
  int degree = 1;
  std::vector<int> marks;  // forced to 0
  int lift = 0;            // required ramification over 0: br^*(H^lift)
  Decoration decoration = Decoration::Lambda1;

  // lambda_1 ev_2^*(pt) ev_3^*(pt) br^*(H^{d-2}) in genus one.
  static LocalizationSetup genus_one_three_point(int d);
  // lambda_g lambda_{g-1} br^*(H^{d-1}).
  static LocalizationSetup length_two(int g, int d);
};

struct GraphEntry {
  LocGraph graph;
  FixedLocus locus;
};

struct Contribution {
  Decoration decoration = Decoration::Lambda1;
  LocGraph graph;
  FixedLocus locus;
  std::vector<Factor> factors;
  ExpansionContext context;
  Laurent laurent;  // prefactor * product of factors
};

// Total branching over 0 of the graph's fixed maps.
int branching_over_zero(const LocGraph& g);

std::vector<GraphEntry> enumerate_graphs(const LocalizationSetup& setup);
FixedLocus fixed_locus(const LocalizationSetup& setup, const LocGraph& g);

// Per-slot degree caps and nilpotency rule for a graph under a setup.
ExpansionContext expansion_context(const LocalizationSetup& setup, const LocGraph& g);

// Normal-bundle factors from the per-feature rules, grouped like the tables:
// nodes over 0, node over infinity, edges, Hodge/vertex, marks+free points+br.
std::vector<Factor> rule_factors(const LocalizationSetup& setup, const LocGraph& g);

Contribution assemble_contribution(const LocalizationSetup& setup, const GraphEntry& entry);
std::vector<Contribution> localize(const LocalizationSetup& setup);

struct RelationTerm {
  LocGraph graph;
  FixedLocus locus;
  SymbolicPoly coeff;  // 1/t coefficient on this locus
};

// Sum over graphs of 1/t coefficients, asserted to vanish after pushforward.
struct SymbolicRelation {
  std::vector<RelationTerm> terms;
  Decoration decoration = Decoration::Lambda1;
};

SymbolicRelation relation_extract(const std::vector<Contribution>& contribs);

// Coefficients of t^k for k < -1 summed over all contributions.
Laurent deeper_poles(const std::vector<Contribution>& contribs);

}  // namespace rubbertaut
