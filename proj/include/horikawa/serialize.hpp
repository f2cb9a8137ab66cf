#pragma once

// Canonical JSON forms for surfaces, point specs and divisor classes.
// Serialization is bit-exact under round trips: emitted documents use sorted
// keys and integer coefficient arrays only.

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "horikawa/picard.hpp"

namespace horikawa {

using Json = nlohmann::json;

inline Json coeffs_to_json(const DivisorClass& d) { return Json(d.coeffs); }

inline std::vector<Int> coeffs_from_json(const Json& j) {
  return j.get<std::vector<Int>>();
}

Json point_spec_to_json(const PointSpec& p);
PointSpec point_spec_from_json(const Json& j, const SurfacePtr& on);

inline Json surface_to_json(const Surface& s) {
  Json j;
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane:
      j["kind"] = "p2";
      break;
    case SurfaceKind::Quadric:
      j["kind"] = "quadric";
      break;
    case SurfaceKind::Hirzebruch:
      j["kind"] = "hirzebruch";
      j["e"] = s.hirzebruch_e();
      break;
    case SurfaceKind::BlowUp:
      j["kind"] = "blow_up";
      j["parent"] = surface_to_json(*s.parent());
      j["center"] = point_spec_to_json(s.center());
      break;
  }
  return j;
}

inline SurfacePtr surface_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "p2") return Surface::projective_plane();
  if (kind == "quadric") return Surface::quadric();
  if (kind == "hirzebruch") return Surface::hirzebruch(j.at("e").get<Int>());
  if (kind == "blow_up") {
    SurfacePtr parent = surface_from_json(j.at("parent"));
    PointSpec center = point_spec_from_json(j.at("center"), parent);
    return Surface::blow_up_of(std::move(parent), std::move(center));
  }
  throw std::invalid_argument("surface_from_json: unknown kind '" + kind + "'");
}

inline Json point_spec_to_json(const PointSpec& p) {
  Json j;
  switch (p.location) {
    case PointSpec::Location::General:
      j["location"] = "general";
      break;
    case PointSpec::Location::OnDivisor:
      j["location"] = "on_divisor";
      break;
    case PointSpec::Location::IntersectionOf:
      j["location"] = "intersection_of";
      break;
    case PointSpec::Location::InfinitelyNear:
      j["location"] = "infinitely_near";
      break;
  }
  if (!p.classes.empty()) {
    Json cs = Json::array();
    for (const auto& c : p.classes) cs.push_back(coeffs_to_json(c));
    j["classes"] = cs;
  }
  if (p.branch_indices)
    j["indices"] = {p.branch_indices->first, p.branch_indices->second};
  if (p.previous) j["previous"] = point_spec_to_json(*p.previous);
  if (!p.multiplicities.empty()) {
    Json ms = Json::array();
    for (const auto& [i, m] : p.multiplicities) ms.push_back({i, m});
    j["multiplicities"] = ms;
  }
  return j;
}

inline PointSpec point_spec_from_json(const Json& j, const SurfacePtr& on) {
  PointSpec p;
  const std::string loc = j.at("location").get<std::string>();
  if (loc == "general")
    p.location = PointSpec::Location::General;
  else if (loc == "on_divisor")
    p.location = PointSpec::Location::OnDivisor;
  else if (loc == "intersection_of")
    p.location = PointSpec::Location::IntersectionOf;
  else if (loc == "infinitely_near")
    p.location = PointSpec::Location::InfinitelyNear;
  else
    throw std::invalid_argument("point_spec_from_json: unknown location '" +
                                loc + "'");
  if (j.contains("classes"))
    for (const auto& c : j.at("classes"))
      p.classes.push_back(divisor(on, coeffs_from_json(c)));
  if (j.contains("indices"))
    p.branch_indices = {j.at("indices").at(0).get<int>(),
                        j.at("indices").at(1).get<int>()};
  if (j.contains("previous")) {
    if (on->kind() != SurfaceKind::BlowUp)
      throw std::invalid_argument(
          "point_spec_from_json: infinitely-near point without a previous "
          "blow-up");
    p.previous = std::make_shared<const PointSpec>(
        point_spec_from_json(j.at("previous"), on->parent()));
  }
  if (j.contains("multiplicities"))
    for (const auto& m : j.at("multiplicities")) {
      Int mult = m.at(1).get<Int>();
      if (mult < 0)
        throw std::invalid_argument(
            "point_spec_from_json: negative multiplicity");
      p.multiplicities.emplace_back(m.at(0).get<int>(), mult);
    }
  return p;
}

inline Json divisor_to_json(const DivisorClass& d) {
  Json j;
  j["surface"] = surface_to_json(*d.surface);
  j["coeffs"] = coeffs_to_json(d);
  return j;
}

inline DivisorClass divisor_from_json(const Json& j) {
  SurfacePtr s = surface_from_json(j.at("surface"));
  return divisor(std::move(s), coeffs_from_json(j.at("coeffs")));
}

}  // namespace horikawa
