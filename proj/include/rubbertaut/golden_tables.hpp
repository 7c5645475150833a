#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rubbertaut/locgraphs.hpp"

namespace rubbertaut {

// One printed row of the degree-2 / degree-3 localization tables.
struct GoldenRow {
  int row = 0;
  std::vector<std::string> graphs;  // labels as produced by LocGraph::label()
  Rational prefactor;
  std::string locus;
  std::vector<Factor> printed;
  std::optional<std::vector<Factor>> corrected;  // set when the printed cell is an erratum
  std::string note;

  const std::vector<Factor>& effective() const { return corrected ? *corrected : printed; }
};

struct GoldenTable {
  int degree = 0;
  std::vector<GoldenRow> rows;
  std::vector<int> declared_noncontributing;  // as stated alongside the table
  std::vector<int> noncontributing;           // rows whose 1/t coefficient vanishes
};

const GoldenTable& golden_table_degree2();
const GoldenTable& golden_table_degree3();
const GoldenTable& golden_table(int degree);  // 2 or 3

// Row containing the graph label, or nullptr.
const GoldenRow* golden_row_for(const GoldenTable& table, const std::string& label);

// First table: the single R-graph column and the L-graph column as formulas.
struct GoldenFormula {
  Rational prefactor;
  std::vector<Factor> factors;
};
GoldenFormula table1_right_graph(int d);
// nu |- d with the genus vertex on a part of size nu_j; l(nu) >= 1.
GoldenFormula table1_left_graph(int g, const Partition& nu, int nu_j);

struct GoldenCheck {
  bool prefactor_match = false;
  bool product_match = false;        // against the effective (possibly corrected) factors
  bool printed_product_match = false;
  std::string detail;
};

// Compare rule assembly for `label` against a golden row: exact products both
// with free expansion (generous caps, no nilpotency) and in the pipeline context.
GoldenCheck check_against_formula(const LocalizationSetup& setup, const LocGraph& graph, const Rational& prefactor,
                                  const std::vector<Factor>& factors);
GoldenCheck check_golden_row(const LocalizationSetup& setup, const GoldenRow& row, const LocGraph& graph);

}  // namespace rubbertaut
