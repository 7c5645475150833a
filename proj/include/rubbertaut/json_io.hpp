#pragma once

#include <json.hpp>

#include "rubbertaut/hurwitz.hpp"
#include "rubbertaut/locgraphs.hpp"
#include "rubbertaut/partitions.hpp"
#include "rubbertaut/polyclasses.hpp"
#include "rubbertaut/power_series.hpp"
#include "rubbertaut/series_identities.hpp"
#include "rubbertaut/tautring.hpp"

namespace rubbertaut {

// Insertion-ordered so that reports are byte-stable.
using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings, never as floats.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Partition& p);  // [3, 1, 1]
Partition partition_from_json(const Json& j);

Json to_json(const PowerSeries& f);  // {"order": N, "coeffs": ["0", "0", "1/24", ...]}
PowerSeries series_from_json(const Json& j);

// {"psi1": "p/q", "D": [{"genus1_side": [..], "genus0_side": [..], "coeff": "p/q"}]}
Json to_json(const TautClass& c);
TautClass taut_class_from_json(const Json& j);

Json to_json(const HurwitzInput& in, const HurwitzValue& v);
Json to_json(const HodgeValues& values);

// {graph, prefactor, factors[], one_over_t_coeff}
Json contribution_row(const Contribution& c);

Json to_json(const ClassPolynomial& p);
Json to_json(const FormalHainClass& c);

}  // namespace rubbertaut
