#include "tlrc/serialize.hpp"

#include <string>

#include "tlrc/errors.hpp"

namespace tlrc {

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : p.terms()) coeffs.push_back(Json::array({e, c.get_str()}));
  return Json{{"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw ParseError("polynomial document needs a \"coeffs\" array");
  }
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j["coeffs"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      throw ParseError("polynomial term must be [exponent, \"coefficient\"]");
    }
    mpz_class c;
    if (c.set_str(t[1].get<std::string>(), 10) != 0) throw ParseError("bad coefficient " + t[1].dump());
    terms.emplace_back(t[0].get<int>(), c);
  }
  return LaurentPoly::from_terms(terms);
}

Json to_json(const RationalFunction& f) {
  return Json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

RationalFunction rational_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("rational document must be an object");
  if (j.contains("coeffs")) return {laurent_from_json(j)};
  if (!j.contains("num") || !j.contains("den")) throw ParseError("rational document needs \"num\" and \"den\"");
  try {
    return {laurent_from_json(j["num"]), laurent_from_json(j["den"])};
  } catch (const DivisionByZero&) {
    throw ParseError("rational document has a zero denominator");
  }
}

Json exact_value_json(const RationalFunction& f) {
  return f.is_polynomial() ? to_json(f.numerator()) : to_json(f);
}

Json to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const TLElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) {
    terms.push_back(Json{{"pairing", m.pairing()}, {"coeff", to_json(c)}});
  }
  return Json{{"n", x.bottom_count()}, {"m", x.top_count()}, {"terms", terms}};
}

Json to_json(const RecouplingMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) row.push_back(m.entries(i, j));
    rows.push_back(row);
  }
  return Json{{"a", m.outer[0]}, {"b", m.outer[1]}, {"c", m.outer[2]}, {"d", m.outer[3]},
              {"r", m.r},        {"rows", m.rows}, {"cols", m.cols},   {"entries", rows}};
}

namespace {

Json basis_header(const FusionBasis& basis) {
  Json paths = Json::array();
  for (const auto& p : basis.paths) paths.push_back(p);
  return Json{{"n", basis.n},
              {"ell", basis.ell},
              {"t", basis.t},
              {"r", basis.params ? Json(basis.params->r()) : Json(nullptr)},
              {"basis", paths}};
}

}  // namespace

Json to_json(const FusionBasis& basis, const Eigen::MatrixXcd& u) {
  Json doc = basis_header(basis);
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < u.cols(); ++j) row.push_back(to_json(u(i, j)));
    rows.push_back(row);
  }
  doc["matrix"] = rows;
  return doc;
}

Json to_json(const FusionBasis& basis, const ExactMatrix& u) {
  Json doc = basis_header(basis);
  Json rows = Json::array();
  for (int i = 0; i < u.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < u.cols(); ++j) row.push_back(to_json(u(i, j)));
    rows.push_back(row);
  }
  doc["matrix"] = rows;
  return doc;
}

Json to_json(const CheckEntry& e) {
  return Json{{"check", e.check}, {"labels", e.labels}, {"deviation", e.deviation}};
}

Json to_json(const std::vector<CheckEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(to_json(e));
  return out;
}

}  // namespace tlrc
