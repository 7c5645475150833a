#include "rubbertaut/json_io.hpp"

#include "rubbertaut/errors.hpp"

namespace rubbertaut {

namespace {

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a JSON array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidArgument("expected an integer");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidArgument("rationals are encoded as \"p/q\" strings or integers");
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(int_list(j)); }

Json to_json(const PowerSeries& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  Json out;
  out["order"] = f.order();
  out["coeffs"] = coeffs;
  return out;
}

PowerSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw InvalidArgument("a series is {\"order\": N, \"coeffs\": [...]}");
  const Json& a = j.at("coeffs");
  if (!a.is_array() || a.empty()) throw InvalidArgument("series coefficients must be a non-empty array");
  std::vector<Rational> c;
  for (const auto& x : a) c.push_back(rational_from_json(x));
  if (j.contains("order") && j.at("order") != static_cast<int>(c.size()) - 1)
    throw InvalidArgument("series order does not match its coefficients");
  return PowerSeries(std::move(c));
}

Json to_json(const TautClass& c) {
  Json out;
  out["psi1"] = to_json(c.coeff(Generator::psi1()));
  Json d = Json::array();
  for (const auto& [g, v] : c.terms()) {
    if (g.psi) continue;
    Json t;
    t["genus1_side"] = g.genus1_side;
    t["genus0_side"] = g.genus0_side;
    t["coeff"] = to_json(v);
    d.push_back(t);
  }
  out["D"] = d;
  out["text"] = c.str();
  return out;
}

TautClass taut_class_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("a class is a JSON object");
  TautClass out;
  if (j.contains("psi1")) out.add(Generator::psi1(), rational_from_json(j.at("psi1")));
  if (j.contains("D"))
    for (const auto& t : j.at("D"))
      out.add(Generator::boundary(int_list(t.at("genus1_side")), int_list(t.at("genus0_side"))),
              rational_from_json(t.at("coeff")));
  return out;
}

Json to_json(const HurwitzInput& in, const HurwitzValue& v) {
  Json out;
  out["alpha"] = to_json(in.alpha);
  out["beta"] = to_json(in.beta);
  out["value"] = to_json(v.value);
  out["method"] = v.method;
  return out;
}

Json to_json(const HodgeValues& values) {
  Json out = Json::array();
  for (const auto& [u, v] : values) {
    Json t;
    t["integral"] = u.str();
    t["g"] = u.g;
    t["psi_power"] = u.i;
    t["lambda_index"] = u.j;
    t["value"] = to_json(v);
    out.push_back(t);
  }
  return out;
}

Json contribution_row(const Contribution& c) {
  Json out;
  out["graph"] = c.graph.label();
  out["locus"] = c.locus.str();
  out["prefactor"] = to_json(c.locus.prefactor());
  Json f = Json::array();
  for (const auto& x : c.factors) f.push_back(factor_str(x));
  out["factors"] = f;
  out["one_over_t_coeff"] = c.laurent.coeff(-1).str();
  return out;
}

Json to_json(const ClassPolynomial& p) {
  Json out;
  out["T"] = p.T;
  Json terms = Json::array();
  for (const auto& [e, c] : p.poly.terms) {
    Json t;
    t["monomial"] = alpha_monomial_str(e);
    t["exponents"] = e;
    t["class"] = to_json(c);
    terms.push_back(t);
  }
  out["coefficients"] = terms;
  return out;
}

Json to_json(const FormalHainClass& c) {
  Json out;
  out["g"] = c.g;
  out["T"] = c.T;
  Json terms = Json::array();
  for (const auto& [m, v] : c.terms) {
    Json t;
    t["monomial"] = hain_monomial_str(m);
    t["coeff"] = to_json(v);
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

}  // namespace rubbertaut
