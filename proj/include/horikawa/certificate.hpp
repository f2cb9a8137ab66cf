#pragma once

// Certificates: the serialized, self-contained result of one construction,
// plus the scan/verify drivers behind the command-line front end. A
// certificate is held as its JSON document, so parsing and re-emitting is
// the identity and unknown fields survive round trips.

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "horikawa/construct.hpp"
#include "horikawa/serialize.hpp"

namespace horikawa {

inline const char* schema_version() { return "1"; }

namespace detail {

inline Json image_to_json(const MapImageKind& k) {
  using K = MapImageKind::Kind;
  Json j;
  switch (k.kind) {
    case K::ProjectivePlaneImage: j["kind"] = "p2"; break;
    case K::QuadricImage: j["kind"] = "quadric"; break;
    case K::HirzebruchImage: j["kind"] = "hirzebruch"; break;
    case K::ConeImage: j["kind"] = "cone"; break;
    case K::Unsupported: j["kind"] = "unsupported"; break;
  }
  j["m"] = k.m;
  return j;
}

inline Json annotation_to_json(const Annotation& a) {
  Json j;
  switch (a.note) {
    case DivisorNote::Smooth: j["note"] = "smooth"; break;
    case DivisorNote::ContainsNegativeSection:
      j["note"] = "contains_negative_section";
      break;
    case DivisorNote::Zero: j["note"] = "zero"; break;
    case DivisorNote::TriplePoint: j["note"] = "triple_point"; break;
    case DivisorNote::Tangency: j["note"] = "tangency"; break;
  }
  if (a.at) j["at"] = point_spec_to_json(*a.at);
  if (a.note == DivisorNote::Tangency) j["order"] = a.order;
  return j;
}

inline Json invariants_to_json(const CoverInvariants& inv) {
  Json j;
  j["K2"] = inv.K2;
  j["chi"] = inv.chi;
  j["pg"] = inv.pg ? Json(*inv.pg) : Json(nullptr);
  j["q"] = inv.q;
  return j;
}

inline Json building_data_to_json(const BuildingData& bd) {
  Json j;
  j["base"] = surface_to_json(*bd.base);
  j["basis"] = bd.base->basis_names();
  Json branch = Json::array(), bundles = Json::array(), ann = Json::array();
  for (int i = 0; i < 3; ++i) {
    branch.push_back(coeffs_to_json(bd.branch[i]));
    bundles.push_back(coeffs_to_json(bd.bundles[i]));
    Json notes = Json::array();
    for (const Annotation& a : bd.annotations[i])
      notes.push_back(annotation_to_json(a));
    ann.push_back(notes);
  }
  j["branch"] = branch;
  j["bundles"] = bundles;
  j["annotations"] = ann;
  return j;
}

inline Json canonical_to_json(const CanonicalReport& r) {
  Json j;
  j["half_2k"] = coeffs_to_json(r.half_2k);
  j["positivity"] = to_string(r.positivity.verdict);
  j["witness"] = r.positivity.witness ? coeffs_to_json(*r.positivity.witness)
                                      : Json(nullptr);
  j["is_canonical_model"] = r.is_canonical_model;
  Json contracted = Json::array();
  for (const auto& c : r.contracted) contracted.push_back(coeffs_to_json(c));
  j["contracted"] = contracted;
  j["contraction_note"] =
      r.contracted.empty()
          ? Json(nullptr)
          : Json("canonical model contracts the reduced preimages of the "
                 "listed classes; it covers the singular contraction of the "
                 "base (recorded symbolically, never constructed)");
  j["image"] = image_to_json(r.image);
  if (r.image_check) {
    Json c;
    c["expected_pg"] = r.image_check->expected_pg;
    c["computed_h0"] = r.image_check->computed_h0;
    c["match"] = r.image_check->match;
    j["image_h0_check"] = c;
  } else {
    j["image_h0_check"] = nullptr;
  }
  if (r.genus2) {
    Json g;
    g["fiber_class"] = coeffs_to_json(r.genus2->fiber_base_class);
    g["contribution_sum"] = r.genus2->contribution_sum;
    j["genus2"] = g;
  } else {
    j["genus2"] = nullptr;
  }
  return j;
}

}  // namespace detail

struct Certificate {
  Json doc;

  Int chi() const { return doc.at("chi").get<Int>(); }
  Int k2() const { return doc.at("K2").get<Int>(); }
  std::string line() const { return doc.at("line").get<std::string>(); }
  std::string component() const {
    return doc.at("component").get<std::string>();
  }
  std::string dump() const { return doc.dump(); }
};

inline Certificate make_certificate(const ConstructionRecord& rec,
                                    bool oracle_on = true) {
  Json j;
  j["schema_version"] = schema_version();
  j["line"] = to_string(rec.line);
  j["chi"] = rec.chi;
  j["K2"] = rec.K2;
  j["component"] = to_string(rec.component);
  Json recipe;
  recipe["name"] = to_string(rec.recipe.kind);
  recipe["param"] = rec.recipe.param;
  recipe["intermediate"] = to_string(rec.recipe.provenance);
  j["recipe"] = recipe;
  Json data = detail::building_data_to_json(rec.building_data);
  j["base"] = data["base"];
  j["basis"] = data["basis"];
  j["branch"] = data["branch"];
  j["bundles"] = data["bundles"];
  j["annotations"] = data["annotations"];
  j["invariants"] = detail::invariants_to_json(rec.invariants);
  j["canonical"] = detail::canonical_to_json(rec.canonical);
  if (oracle_on) {
    Json o;
    if (rec.recipe.oracle_index > 0) {
      const BuildingData& target = oracle_target(rec);
      CoverInvariants direct = cover_invariants(target);
      CoverInvariants stacked =
          stacked_double_cover_oracle(target, rec.recipe.oracle_index);
      o["applicable"] = true;
      o["index"] = rec.recipe.oracle_index;
      o["stacked_chi"] = stacked.chi;
      o["stacked_K2"] = stacked.K2;
      o["match"] = stacked.chi == direct.chi && stacked.K2 == direct.K2;
    } else {
      o["applicable"] = false;
    }
    j["oracle"] = o;
  } else {
    j["oracle"] = nullptr;
  }
  if (rec.singular) {
    Json s = detail::building_data_to_json(rec.singular->data);
    s["invariants"] = detail::invariants_to_json(rec.singular->invariants);
    Json drop;
    drop["dchi"] = rec.invariants.chi - rec.singular->invariants.chi;
    drop["dK2"] = rec.invariants.K2 - rec.singular->invariants.K2;
    s["resolution_drop"] = drop;
    s["resolution_rule"] =
        "triple-point divisor -3E, order-3 tangent divisor -E, remaining "
        "divisor +E";
    s["ksba_note"] =
        "contracting the exceptional elliptic curve gives a non-canonical "
        "singular model on K2 = 2chi-6; recorded only, never constructed";
    j["singular"] = s;
  } else {
    j["singular"] = nullptr;
  }
  j["z22_action"] = rec.z22_action;
  return Certificate{std::move(j)};
}

// Parsing keeps the full document, so unknown fields are preserved and
// emit(parse(x)) == x byte-for-byte.
inline Certificate certificate_from_json(const Json& j) {
  if (!j.contains("schema_version"))
    throw std::invalid_argument("certificate: missing schema_version");
  return Certificate{j};
}

inline Certificate certificate_from_string(const std::string& s) {
  return certificate_from_json(Json::parse(s));
}

namespace detail {

inline std::string join_ints(const Json& arr) {
  std::ostringstream os;
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) os << ' ';
    os << arr[i].get<Int>();
  }
  return os.str();
}

inline std::string base_label(const Json& base) {
  const std::string kind = base.at("kind").get<std::string>();
  if (kind == "p2") return "P2";
  if (kind == "quadric") return "quadric";
  if (kind == "hirzebruch")
    return "F" + std::to_string(base.at("e").get<Int>());
  return "blowup(" + base_label(base.at("parent")) + ")";
}

inline std::string image_label(const Json& img) {
  const std::string kind = img.at("kind").get<std::string>();
  if (kind == "hirzebruch")
    return "F" + std::to_string(img.at("m").get<Int>());
  if (kind == "cone") return "cone" + std::to_string(img.at("m").get<Int>());
  if (kind == "p2") return "P2";
  return kind;
}

}  // namespace detail

inline std::string csv_header() {
  return "line,chi,K2,component,recipe,param,base,branch1,branch2,branch3,"
         "bundle1,bundle2,bundle3,pg,positivity,canonical_model,image,"
         "genus2_sum,oracle";
}

inline std::string csv_row(const Certificate& c) {
  const Json& j = c.doc;
  std::ostringstream os;
  os << j.at("line").get<std::string>() << ',' << j.at("chi").get<Int>() << ','
     << j.at("K2").get<Int>() << ',' << j.at("component").get<std::string>()
     << ',' << j.at("recipe").at("name").get<std::string>() << ','
     << j.at("recipe").at("param").get<Int>() << ','
     << detail::base_label(j.at("base"));
  for (const auto& b : j.at("branch")) os << ',' << detail::join_ints(b);
  for (const auto& b : j.at("bundles")) os << ',' << detail::join_ints(b);
  os << ',';
  if (!j.at("invariants").at("pg").is_null())
    os << j.at("invariants").at("pg").get<Int>();
  os << ',' << j.at("canonical").at("positivity").get<std::string>() << ','
     << (j.at("canonical").at("is_canonical_model").get<bool>() ? "yes" : "no")
     << ',' << detail::image_label(j.at("canonical").at("image")) << ',';
  if (!j.at("canonical").at("genus2").is_null())
    os << j.at("canonical").at("genus2").at("contribution_sum").get<Int>();
  os << ',';
  const Json& o = j.at("oracle");
  if (o.is_null())
    os << "off";
  else if (!o.at("applicable").get<bool>())
    os << "n/a";
  else
    os << (o.at("match").get<bool>() ? "pass" : "FAIL");
  return os.str();
}

inline std::string text_table(const std::vector<Certificate>& certs) {
  std::ostringstream os;
  os << "line     chi  K2   comp  recipe     base         positivity            "
        "model  image        g2  oracle\n";
  for (const Certificate& c : certs) {
    const Json& j = c.doc;
    std::ostringstream row;
    auto pad = [&row](const std::string& s, size_t w) {
      row << s;
      for (size_t i = s.size(); i < w; ++i) row << ' ';
    };
    pad(j.at("line").get<std::string>(), 9);
    pad(std::to_string(j.at("chi").get<Int>()), 5);
    pad(std::to_string(j.at("K2").get<Int>()), 5);
    pad(j.at("component").get<std::string>(), 6);
    pad(j.at("recipe").at("name").get<std::string>(), 11);
    pad(detail::base_label(j.at("base")), 13);
    pad(j.at("canonical").at("positivity").get<std::string>(), 22);
    pad(j.at("canonical").at("is_canonical_model").get<bool>() ? "yes" : "no",
        7);
    pad(detail::image_label(j.at("canonical").at("image")), 13);
    const Json& g = j.at("canonical").at("genus2");
    pad(g.is_null() ? "-" : std::to_string(g.at("contribution_sum").get<Int>()),
        4);
    const Json& o = j.at("oracle");
    if (o.is_null())
      row << "off";
    else if (!o.at("applicable").get<bool>())
      row << "n/a";
    else
      row << (o.at("match").get<bool>() ? "pass" : "FAIL");
    os << row.str() << "\n";
  }
  return os.str();
}

struct ScanResult {
  std::vector<Certificate> certificates;
  std::vector<std::string> failures;
};

// One certificate per (pair, component), ordered by (chi, component).
// Per-pair failures are collected, not thrown.
inline ScanResult scan_line(LineTag line, Int chi_min, Int chi_max,
                            bool oracle_on = true) {
  if (chi_min < line_chi_min(line) || chi_max < chi_min)
    throw std::invalid_argument("scan_line: invalid chi range");
  ScanResult result;
  for (Int chi = chi_min; chi <= chi_max; ++chi) {
    for (ComponentTag c : components_of(line, chi)) {
      try {
        result.certificates.push_back(
            make_certificate(construct(line, chi, c), oracle_on));
      } catch (const std::exception& e) {
        result.failures.push_back("chi=" + std::to_string(chi) +
                                  " component=" + to_string(c) + ": " +
                                  e.what());
      }
    }
  }
  return result;
}

inline Json report_to_json(const VerificationReport& report) {
  Json j;
  j["chi_max"] = report.chi_max;
  j["failures"] = report.failures;
  j["ok"] = report.ok;
  Json pairs = Json::array();
  for (const PairOutcome& p : report.pairs) {
    Json pj;
    pj["line"] = to_string(p.line);
    pj["chi"] = p.chi;
    pj["K2"] = p.K2;
    pj["component_count"] = p.count;
    pj["ok"] = p.ok;
    Json comps = Json::array();
    for (const ComponentOutcome& c : p.components) {
      Json cj;
      cj["component"] = to_string(c.component);
      cj["ok"] = c.ok;
      cj["failures"] = c.failures;
      comps.push_back(cj);
    }
    pj["components"] = comps;
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  return j;
}

}  // namespace horikawa
