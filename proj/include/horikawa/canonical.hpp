#pragma once

// Canonical-class analysis of a constructed cover: ampleness of K (canonical
// model detection), the canonical image with its h^0 certificate, and the
// genus-2 fibration bookkeeping.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "horikawa/cover.hpp"
#include "horikawa/linsys.hpp"
#include "horikawa/picard.hpp"

namespace horikawa {

struct Genus2Data {
  DivisorClass fiber_base_class;  // ruling fiber class on the cover's base
  Int contribution_sum = 0;       // K^2 - (2 chi - 6), summed over the fibers
};

struct ImageCheck {
  Int expected_pg = 0;
  Int computed_h0 = 0;
  bool match = false;
};

struct CanonicalReport {
  DivisorClass half_2k;  // base divisor with 2K_X = pullback of it
  PositivityClass positivity;
  bool is_canonical_model = false;
  std::vector<DivisorClass> contracted;  // base classes under (-2)-curves
  MapImageKind image;
  std::optional<ImageCheck> image_check;
  std::optional<Genus2Data> genus2;
};

// How a record's canonical image is obtained:
//  - RuleTable: through the intermediate double cover of the given index,
//    whose adjoint class realizes the canonical map downstairs.
//  - DeclaredPair: a tabulated minimal surface and class on it, accepted only
//    when h^0 equals p_g.
struct ImageDeclaration {
  enum class Kind { None, RuleTable, DeclaredPair };
  Kind kind = Kind::None;
  int rule_index = 0;
  SurfacePtr image_surface;
  std::vector<Int> image_coeffs;

  static ImageDeclaration none() { return {}; }
  static ImageDeclaration rule_table(int index) {
    ImageDeclaration d;
    d.kind = Kind::RuleTable;
    d.rule_index = index;
    return d;
  }
  static ImageDeclaration declared(SurfacePtr surface, std::vector<Int> coeffs) {
    ImageDeclaration d;
    d.kind = Kind::DeclaredPair;
    d.image_surface = std::move(surface);
    d.image_coeffs = std::move(coeffs);
    return d;
  }
};

struct CanonicalPositivity {
  PositivityClass positivity;
  bool is_canonical_model = false;
  std::vector<DivisorClass> contracted;
};

// K_X is ample iff 2K_Y + B is ample on the base (finite surjective
// pullback). On the nef boundary the witness curves are exactly the base
// classes whose reduced preimages are the (-2)-curves of the cover.
inline CanonicalPositivity canonical_positivity(const BuildingData& bd) {
  CanonicalPositivity out;
  out.positivity = positivity(half_canonical_base_divisor(bd));
  out.is_canonical_model = out.positivity.is_ample();
  if (out.positivity.verdict == Positivity::NefNotAmple &&
      out.positivity.witness)
    out.contracted.push_back(*out.positivity.witness);
  return out;
}

// Canonical image with its h^0 = p_g certificate. Fails the record on an h^0
// mismatch; reports Unsupported when the recipe declares nothing.
inline std::pair<MapImageKind, std::optional<ImageCheck>> canonical_image(
    const BuildingData& bd, const ImageDeclaration& decl, Int expected_pg) {
  DivisorClass cls = zero_class(bd.base);
  switch (decl.kind) {
    case ImageDeclaration::Kind::None:
      return {MapImageKind{MapImageKind::Kind::Unsupported, 0}, std::nullopt};
    case ImageDeclaration::Kind::RuleTable: {
      IntermediateCover ic = intermediate_double_cover(bd, decl.rule_index);
      cls = ic.adjoint;
      break;
    }
    case ImageDeclaration::Kind::DeclaredPair:
      cls = divisor(decl.image_surface, decl.image_coeffs);
      break;
  }
  ImageCheck check;
  check.expected_pg = expected_pg;
  check.computed_h0 = h0(cls);
  check.match = check.expected_pg == check.computed_h0;
  if (!check.match)
    throw std::domain_error(
        "canonical_image: h0 of the image class is " +
        std::to_string(check.computed_h0) + ", expected p_g = " +
        std::to_string(check.expected_pg));
  return {map_image(cls), check};
}

// Genus-2 fibration data. Every record whose base tower starts from a ruled
// surface carries the fibration; the P^2-based records do not. The
// contribution sum is the exact defect K^2 - (2 chi - 6).
inline std::optional<Genus2Data> genus2_report(const BuildingData& bd,
                                               const CoverInvariants& inv) {
  if (bd.base->minimal_ancestor().kind() == SurfaceKind::ProjectivePlane)
    return std::nullopt;
  Genus2Data g;
  g.fiber_base_class = generator(bd.base, 1);
  g.contribution_sum = inv.K2 - (2 * inv.chi - 6);
  return g;
}

inline CanonicalReport build_canonical_report(const BuildingData& bd,
                                              const ImageDeclaration& decl,
                                              const CoverInvariants& inv) {
  CanonicalReport r{zero_class(bd.base), PositivityClass{}, false, {},
                    MapImageKind{},      std::nullopt,      std::nullopt};
  r.half_2k = half_canonical_base_divisor(bd);
  CanonicalPositivity cp = canonical_positivity(bd);
  r.positivity = cp.positivity;
  r.is_canonical_model = cp.is_canonical_model;
  r.contracted = std::move(cp.contracted);
  // q = 0 throughout, so p_g = chi - 1 even where the branched-cover p_g
  // formula is unavailable (blow-up bases).
  Int expected_pg = inv.pg ? *inv.pg : inv.chi - 1;
  auto [image, check] = canonical_image(bd, decl, expected_pg);
  r.image = image;
  r.image_check = check;
  r.genus2 = genus2_report(bd, inv);
  return r;
}

}  // namespace horikawa
