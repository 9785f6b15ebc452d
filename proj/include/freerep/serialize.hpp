#pragma once

// JSON forms of groups, reports, certificates, representations and census
// rows. Certificates and representations read back into verified objects.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "freerep/classifier.hpp"
#include "freerep/error.hpp"
#include "freerep/group.hpp"
#include "freerep/group_spec.hpp"
#include "freerep/norm_relations.hpp"
#include "freerep/representations.hpp"
#include "freerep/sl2_census.hpp"
#include "freerep/survey.hpp"

namespace freerep {

using json = nlohmann::json;

inline std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::None: return "None";
    case WitnessKind::NoncyclicSemiprime: return "NoncyclicSemiprime";
    case WitnessKind::FermatSl2: return "FermatSl2";
  }
  return "Unknown";
}

/// Always "num/den", so that the shape is uniform.
inline std::string rational_to_string(Rational q) {
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline json to_json(const Group& g) {
  json table = json::array();
  for (Element a = 0; a < g.order(); ++a) {
    auto row = g.row(a);
    table.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  std::vector<std::string> labels;
  for (Element a = 0; a < g.order(); ++a) labels.push_back(g.name(a));
  return {{"order", g.order()}, {"table", std::move(table)}, {"labels", labels}, {"origin", g.origin()}};
}

inline Group group_from_json(const json& j, const Limits& limits = {}) {
  const auto n = j.at("order").get<std::size_t>();
  const auto& rows = j.at("table");
  if (rows.size() != n) throw Error(ErrorKind::BadSize, "table has " + std::to_string(rows.size()) + " rows");
  std::vector<Element> table;
  table.reserve(n * n);
  for (auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::BadSize, "ragged table row");
    for (auto& x : row) table.push_back(x.get<Element>());
  }
  auto labels = j.value("labels", std::vector<std::string>{});
  return group_from_table(std::move(table), n, std::move(labels), j.value("origin", std::string{}), limits);
}

inline json to_json(const Subgroup& h) {
  return {{"order", h.order()}, {"elements", std::vector<Element>(h.elements().begin(), h.elements().end())}};
}

inline json to_json(const ClassificationReport& r) {
  json sylow = json::array();
  for (auto& e : r.sylow_profile)
    sylow.push_back({{"p", e.p}, {"order", e.order}, {"type", to_string(e.type)}});
  auto opt_sub = [](const std::optional<Subgroup>& h) { return h ? to_json(*h) : json(nullptr); };
  json fr = {{"answer", r.fr.answer},
             {"witness_kind", to_string(r.fr.witness_kind)},
             {"witness", opt_sub(r.fr.witness)},
             {"fermat_prime", r.fr.fermat_prime},
             {"criterion", r.fr.criterion}};
  json supporting = json::array();
  for (auto& h : r.fr.supporting) supporting.push_back(to_json(h));
  fr["supporting"] = std::move(supporting);
  return {{"order", r.order},
          {"sylow_profile", std::move(sylow)},
          {"is_sylow_cyclic", r.is_sylow_cyclic},
          {"is_sylow_cycloidal", r.is_sylow_cycloidal},
          {"solvable", r.solvable},
          {"odd_core", to_json(r.odd_core)},
          {"cycloidal_type", to_string(r.cycloidal_type)},
          {"mcc", opt_sub(r.mcc)},
          {"unique_involution", r.unique_involution ? json(*r.unique_involution) : json(nullptr)},
          {"semiprime_cyclic", r.semiprime.semiprime_cyclic},
          {"semiprime_witness", opt_sub(r.semiprime.witness)},
          {"freely_representable", std::move(fr)}};
}

inline json to_json(const NormRelationCertificate& c, const std::string& group_spec) {
  json terms = json::array();
  for (auto& t : c.terms) {
    json coeff = json::array();
    for (auto x : t.coefficient.support()) coeff.push_back({x, rational_to_string(t.coefficient[x])});
    terms.push_back({{"subgroup_elements", std::vector<Element>(t.subgroup.elements().begin(), t.subgroup.elements().end())},
                     {"coefficient", std::move(coeff)}});
  }
  return {{"group_spec", group_spec}, {"terms", std::move(terms)}, {"verified", c.verified}};
}

/// Rebuilds the group from its spec and re-verifies the identity.
inline NormRelationCertificate certificate_from_json(const json& j, const Limits& limits = {}) {
  auto g = build_group_from_spec(j.at("group_spec").get<std::string>(), limits);
  NormRelationCertificate c{g, {}, false};
  for (auto& t : j.at("terms")) {
    auto h = Subgroup::verified(g, t.at("subgroup_elements").get<std::vector<Element>>());
    auto a = GroupAlgebraElement::zero(g);
    for (auto& pair : t.at("coefficient")) {
      auto x = pair.at(0).get<Element>();
      if (x >= g.order()) throw Error(ErrorKind::BadParams, "coefficient element out of range");
      a[x] += rational_from_string(pair.at(1).get<std::string>());
    }
    c.terms.push_back({std::move(h), std::move(a)});
  }
  c.verified = verify_certificate(c);
  return c;
}

inline json to_json(const Cyclotomic& z) {
  json v = json::array();
  for (auto& q : z.coeffs()) v.push_back(rational_to_string(q));
  return v;
}

/// Entries in the power basis 1, zeta, ..., zeta^(phi(n)-1).
inline Cyclotomic cyclotomic_from_json(const json& v, std::size_t conductor) {
  std::vector<Rational> c;
  for (auto& s : v) c.push_back(rational_from_string(s.get<std::string>()));
  auto z = Cyclotomic::from_powers(conductor, c);
  if (z.coeffs().size() != c.size()) throw Error(ErrorKind::BadConductor, "coefficient vector has the wrong length");
  return z;
}

inline json to_json(const Representation& rep, const std::string& group_spec) {
  json images = json::array();
  for (Element x = 0; x < rep.images.size(); ++x) {
    const auto& m = rep.images[x];
    json entries = json::array();
    for (std::size_t r = 0; r < rep.degree; ++r)
      for (std::size_t c = 0; c < rep.degree; ++c)
        if (!m.at(r, c).is_zero()) entries.push_back({{"row", r}, {"col", c}, {"value", to_json(m.at(r, c))}});
    images.push_back({{"element", x}, {"label", rep.group.name(x)}, {"entries", std::move(entries)}});
  }
  return {{"group_spec", group_spec},
          {"degree", rep.degree},
          {"conductor", rep.conductor},
          {"construction", rep.construction},
          {"images", std::move(images)}};
}

inline Representation representation_from_json(const json& j, const Limits& limits = {}) {
  auto g = build_group_from_spec(j.at("group_spec").get<std::string>(), limits);
  const auto d = j.at("degree").get<std::size_t>();
  const auto n = j.at("conductor").get<std::size_t>();
  if (n == 0) throw Error(ErrorKind::BadConductor, "conductor 0");
  std::vector<RepMatrix> images(g.order(), RepMatrix(d, n));
  const auto& list = j.at("images");
  if (list.size() != g.order()) throw Error(ErrorKind::BadSize, "one image per element expected");
  for (auto& img : list) {
    auto x = img.at("element").get<Element>();
    if (x >= g.order()) throw Error(ErrorKind::BadParams, "image element out of range");
    for (auto& e : img.at("entries")) {
      auto r = e.at("row").get<std::size_t>(), c = e.at("col").get<std::size_t>();
      if (r >= d || c >= d) throw Error(ErrorKind::BadSize, "entry outside the matrix");
      images[x].at(r, c) = cyclotomic_from_json(e.at("value"), n);
    }
  }
  return detail::finish(g, std::move(images), j.value("construction", std::string{}));
}

inline json to_json(const CensusRow& r) {
  return {{"m", r.m}, {"predicted", r.predicted}, {"observed", r.observed}, {"match", r.match}};
}

inline json to_json(const SurveyEntry& e) {
  return {{"m", e.m},
          {"n", e.n},
          {"r", e.r},
          {"spec", e.spec},
          {"mu_order", e.mu_order},
          {"freely_representable", e.freely_representable},
          {"iso_class", e.iso_class}};
}

inline json error_json(const Error& e, const std::string& offending_input) {
  return {{"kind", to_string(e.kind())}, {"detail", e.detail()}, {"offending_input", offending_input}};
}

}  // namespace freerep
