#include "report.hpp"

#include <stdexcept>
#include <string>

#include "word_text.hpp"

namespace fibrekit::workbench {

Json to_json(const SurfaceSignature& surface) {
  return Json{{"genus", surface.genus()}, {"boundary", surface.boundary()}, {"b1", surface.b1()}};
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const IntegerPolynomial& p) {
  Json coefficients = Json::array();
  for (long k = p.degree(); k >= 0; --k) coefficients.push_back(p.coefficient(k).get_str());
  return Json{{"text", p.to_string()}, {"degree", p.degree()}, {"coefficients", std::move(coefficients)}};
}

Json to_json(const AlexanderReport& report) {
  return Json{{"poly", report.poly.to_string()},
              {"coefficients", to_json(report.poly)["coefficients"]},
              {"delta_one", report.delta_one.get_str()},
              {"classification", to_string(report.classification)},
              {"normalized_poly", report.normalized().to_string()}};
}

Json to_json(const ObstructionCertificate& cert) {
  Json classes = Json::array();
  Json vectors = Json::array();
  Json pairings = Json::array();
  const HomologyClass witness = cert.witness_class();
  for (const auto& c : cert.classes) {
    classes.push_back(format_class(c));
    vectors.push_back(to_json(c.coords()));
    pairings.push_back(pair(witness, c).get_str());
  }
  Json basis = Json::array();
  for (const auto& v : cert.complement_basis) basis.push_back(to_json(v));
  const auto n = static_cast<long>(cert.classes.size());
  return Json{{"genus", cert.genus},
              {"classes", std::move(classes)},
              {"class_vectors", std::move(vectors)},
              {"complement_basis", std::move(basis)},
              {"witness", to_json(cert.witness)},
              {"checks",
               {{"witness_nonzero", !is_zero(cert.witness)},
                {"witness_pairings", std::move(pairings)},
                {"complement_dimension", cert.complement_basis.size()},
                {"required_dimension", 2L * cert.genus - n}}}};
}

Json to_json(const RationalBound& bound) {
  return Json{{"kind", to_string(bound.kind)}, {"value", to_string(bound.value)}, {"subject", bound.subject}};
}

Json to_json(const Derivation& derivation) {
  Json parameters = Json::array();
  for (const auto& p : derivation.parameters) parameters.push_back(to_string(p));
  Json premises = Json::array();
  for (const auto& premise : derivation.premises) {
    if (const auto* leaf = std::get_if<RationalBound>(&premise)) {
      premises.push_back(Json{{"given", to_json(*leaf)}});
    } else {
      premises.push_back(to_json(*std::get<DerivationPtr>(premise)));
    }
  }
  return Json{{"rule", to_string(derivation.rule)},
              {"parameters", std::move(parameters)},
              {"premises", std::move(premises)},
              {"raw", to_string(derivation.raw)},
              {"result", to_json(derivation.result)}};
}

Json to_json(const HeightStep& step) {
  return Json{{"k", step.k},
              {"contradiction", step.contradiction},
              {"lower", to_json(*step.lower)},
              {"upper", to_json(*step.upper)}};
}

Json to_json(const pants::CutReport& report) {
  Json out = Json::array();
  for (const auto& arc : report.arcs) {
    out.push_back(Json{{"arc", pants::to_string(arc.arc)}, {"full_twists", arc.full_twists}, {"is_hopf", arc.is_hopf}});
  }
  return out;
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw std::invalid_argument("document does not match the schema: " + what);
}

Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) schema_error(std::string("missing rational '") + key + "'");
  return parse_rational(j.at(key).get<std::string>());
}

Rule rule_from_string(const std::string& text) {
  for (Rule r : {Rule::Korkmaz, Rule::Product, Rule::Power, Rule::Chain, Rule::Cap, Rule::Model}) {
    if (text == to_string(r)) return r;
  }
  schema_error("unknown rule '" + text + "'");
}

}  // namespace

SurfaceSignature surface_from_json(const Json& j) {
  return SurfaceSignature(j.at("genus").get<int>(), j.at("boundary").get<int>());
}

RationalBound bound_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "lower" && kind != "upper") schema_error("bound kind '" + kind + "'");
  // Values are taken verbatim; replay decides whether they are right.
  return RationalBound{rational_field(j, "value"), kind == "lower" ? BoundKind::Lower : BoundKind::Upper,
                       j.at("subject").get<std::string>()};
}

DerivationPtr derivation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rule")) schema_error("derivation without a rule");
  Derivation d{rule_from_string(j.at("rule").get<std::string>()), {}, {}, rational_field(j, "raw"),
               bound_from_json(j.at("result"))};
  for (const auto& p : j.at("parameters")) d.parameters.push_back(parse_rational(p.get<std::string>()));
  for (const auto& premise : j.at("premises")) {
    if (premise.contains("given")) {
      d.premises.emplace_back(bound_from_json(premise.at("given")));
    } else {
      d.premises.emplace_back(derivation_from_json(premise));
    }
  }
  return std::make_shared<const Derivation>(std::move(d));
}

HeightStep height_step_from_json(const Json& j) {
  return HeightStep{j.at("k").get<std::int64_t>(), derivation_from_json(j.at("lower")),
                    derivation_from_json(j.at("upper")), j.at("contradiction").get<bool>()};
}

ObstructionCertificate certificate_from_json(const Json& j, const SurfaceSignature& surface) {
  ObstructionCertificate cert{surface, j.at("genus").get<int>(), {}, {}, {}};
  for (const auto& v : j.at("class_vectors")) {
    IntVector coords;
    for (const auto& x : v) coords.emplace_back(x.get<std::string>());
    cert.classes.emplace_back(surface, std::move(coords));
  }
  for (const auto& v : j.at("complement_basis")) {
    RatVector coords;
    for (const auto& x : v) coords.push_back(parse_rational(x.get<std::string>()));
    cert.complement_basis.push_back(std::move(coords));
  }
  for (const auto& x : j.at("witness")) cert.witness.emplace_back(x.get<std::string>());
  return cert;
}

}  // namespace fibrekit::workbench
