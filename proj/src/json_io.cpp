#include "bjlb/json_io.hpp"

#include <stdexcept>

namespace bjlb::io {

json to_json(const DiscreteMeasure& mu) {
  json atoms = json::array();
  bool any_coord = false;
  for (std::size_t s = 0; s < mu.size(); ++s) {
    const Atom& a = mu.atom(s);
    if (a.label.size() == 1)
      atoms.push_back(a.label[0]);
    else
      atoms.push_back(a.label);
    any_coord = any_coord || a.coord.has_value();
  }
  json j{{"atoms", std::move(atoms)}, {"weights", mu.weights()}};
  if (any_coord) {
    json coords = json::array();
    for (std::size_t s = 0; s < mu.size(); ++s) {
      const Atom& a = mu.atom(s);
      if (a.coord)
        coords.push_back(*a.coord);
      else
        coords.push_back(nullptr);
    }
    j["coords"] = std::move(coords);
  }
  return j;
}

DiscreteMeasure measure_from_json(const json& j) {
  const json& ja = j.at("atoms");
  const json& jw = j.at("weights");
  std::vector<Atom> atoms;
  atoms.reserve(ja.size());
  for (const json& e : ja) {
    Atom a;
    if (e.is_array())
      a.label = e.get<std::vector<std::int64_t>>();
    else
      a.label = {e.get<std::int64_t>()};
    atoms.push_back(std::move(a));
  }
  if (j.contains("coords")) {
    const json& jc = j.at("coords");
    if (jc.size() != atoms.size())
      throw std::invalid_argument("coords length must match atom count");
    for (std::size_t s = 0; s < atoms.size(); ++s)
      if (!jc[s].is_null()) atoms[s].coord = jc[s].get<double>();
  }
  return DiscreteMeasure(std::move(atoms), jw.get<std::vector<double>>());
}

json to_json(const SmoothSpace& sp) {
  json kind;
  switch (sp.kind()) {
    case SpaceKind::lp: kind = json{{"lp", sp.exponent()}}; break;
    case SpaceKind::hilbert: kind = "hilbert"; break;
    case SpaceKind::scalar: kind = "scalar"; break;
  }
  return json{{"field", field_name(sp.field())}, {"dim", sp.dim()}, {"kind", std::move(kind)}};
}

SmoothSpace space_from_json(const json& j, double max_exponent) {
  std::string fs = j.at("field").get<std::string>();
  Field field;
  if (fs == "real")
    field = Field::real;
  else if (fs == "complex")
    field = Field::complex;
  else
    throw std::invalid_argument("field must be \"real\" or \"complex\"");
  const json& kind = j.at("kind");
  if (kind.is_string()) {
    std::string ks = kind.get<std::string>();
    if (ks == "hilbert") return SmoothSpace::hilbert(field, j.at("dim").get<int>());
    if (ks == "scalar") return SmoothSpace::scalar(field);
    throw std::invalid_argument("unknown space kind " + ks);
  }
  if (kind.is_object() && kind.contains("lp"))
    return SmoothSpace::lp(field, j.at("dim").get<int>(), kind.at("lp").get<double>(),
                           max_exponent);
  throw std::invalid_argument("space kind must be \"hilbert\", \"scalar\", or {\"lp\": p}");
}

json vec_to_json(const Vec& v, Field field) {
  json out = json::array();
  for (const cplx& c : v) {
    if (field == Field::real)
      out.push_back(c.real());
    else
      out.push_back(json::array({c.real(), c.imag()}));
  }
  return out;
}

Vec vec_from_json(const json& j, Field field) {
  Vec v;
  v.reserve(j.size());
  for (const json& e : j) {
    if (field == Field::real) {
      v.emplace_back(e.get<double>(), 0.0);
    } else {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("complex entries are [re, im] pairs");
      v.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
  }
  return v;
}

json to_json(const BochnerFunction& f) {
  json values = json::array();
  for (std::size_t s = 0; s < f.size(); ++s)
    values.push_back(vec_to_json(f.value(s), f.space().field()));
  return json{{"measure", to_json(f.measure())},
              {"space", to_json(f.space())},
              {"values", std::move(values)}};
}

BochnerFunction bochner_from_json(const json& j, double max_exponent) {
  DiscreteMeasure mu = measure_from_json(j.at("measure"));
  SmoothSpace sp = space_from_json(j.at("space"), max_exponent);
  std::vector<Vec> values;
  values.reserve(j.at("values").size());
  for (const json& e : j.at("values")) values.push_back(vec_from_json(e, sp.field()));
  return BochnerFunction(std::move(mu), std::move(sp), std::move(values));
}

json to_json(const OrthoCertificate& c) {
  json j{{"criterion", c.criterion}, {"verdict", verdict_name(c.verdict)},
         {"implied", verdict_name(c.implied)}, {"lhs", c.lhs},
         {"rhs", c.rhs},                       {"tolerance", c.tolerance}};
  if (c.witness) j["witness"] = json::array({c.witness->real(), c.witness->imag()});
  return j;
}

json to_json(const ApproxResult& r) {
  Field field = r.g0.space().field();
  json coeffs = json::array();
  for (const cplx& c : r.coefficients) {
    if (field == Field::real)
      coeffs.push_back(c.real());
    else
      coeffs.push_back(json::array({c.real(), c.imag()}));
  }
  return json{{"coefficients", std::move(coeffs)},
              {"g0", to_json(r.g0)},
              {"residual_norm", r.residual_norm},
              {"optimality_residuals", r.optimality_residuals},
              {"f_in_span", r.f_in_span}};
}

json to_json(const LightReport& r) {
  json j{{"subspace_verdict", verdict_name(r.subspace_verdict)},
         {"pointwise_failures", r.pointwise_failures},
         {"borderline", r.borderline}};
  if (r.violation) {
    j["violation"] = json::array({r.violation->first, r.violation->second});
    j["violation_certificate"] = to_json(*r.violation_certificate);
  }
  return j;
}

}  // namespace bjlb::io
