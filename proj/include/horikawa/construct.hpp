#pragma once

// Geography and moduli logic for the two Horikawa lines K^2 = 2chi - 6 and
// K^2 = 2chi - 5: admissible pairs, the number of deformation classes per
// pair, a construction recipe for every (pair, component), classification of
// a constructed cover against the deformation-class tables, and a whole-line
// verification driver.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "horikawa/canonical.hpp"
#include "horikawa/cover.hpp"
#include "horikawa/picard.hpp"

namespace horikawa {

enum class LineTag { L6, L5 };  // K^2 = 2chi-6 / K^2 = 2chi-5

inline Int line_k2(LineTag line, Int chi) {
  return line == LineTag::L6 ? 2 * chi - 6 : 2 * chi - 5;
}

inline Int line_chi_min(LineTag line) { return line == LineTag::L6 ? 4 : 3; }

inline const char* to_string(LineTag line) {
  return line == LineTag::L6 ? "2chi-6" : "2chi-5";
}

enum class ComponentTag { Only, I, II };

inline const char* to_string(ComponentTag c) {
  switch (c) {
    case ComponentTag::Only: return "only";
    case ComponentTag::I: return "I";
    case ComponentTag::II: return "II";
  }
  return "?";
}

enum class RecipeKind {
  L6_F2,       // chi even: F2 base, D1 = D0, D2 = D0+2F, D3 = 3D0+(chi+4)F
  L6_Quadric,  // chi odd: quadric base, D1 = D2 = D0, D3 = 3D0+(chi+1)F
  L6_Fe,       // class II: F_e base, fibers + D3 = 6D0+5eF (D0 a component)
  L5_F3,       // chi odd >= 5: F3 base, D1 = D0, D2 = D0+4F, D3 = 3D0+(chi+5)F
  L5_P2,       // (3,1): P2 base, D1 = D2 = H, D3 = 5H
  L5_F1,       // chi even: F1 base, D1 = D0, D2 = D0+2F, D3 = 3D0+(chi+2)F
  L5_Fk,       // class II: F_{k+1} base built with a triple point, then resolved
  L5_79_F3,    // (7,9) class I: the F3 recipe at chi = 7
  L5_79_P2     // (7,9) class II: P2 base, D1 = D2 = H, D3 = 7H
};

inline const char* to_string(RecipeKind k) {
  switch (k) {
    case RecipeKind::L6_F2: return "l6_f2";
    case RecipeKind::L6_Quadric: return "l6_quadric";
    case RecipeKind::L6_Fe: return "l6_fe";
    case RecipeKind::L5_F3: return "l5_f3";
    case RecipeKind::L5_P2: return "l5_p2";
    case RecipeKind::L5_F1: return "l5_f1";
    case RecipeKind::L5_Fk: return "l5_fk";
    case RecipeKind::L5_79_F3: return "l5_79_f3";
    case RecipeKind::L5_79_P2: return "l5_79_p2";
  }
  return "?";
}

// Which intermediate surface sits under the canonical map; a recipe-level
// declaration used by the classification of the (6,7) and (7,9) pairs.
enum class IntermediateKind {
  None,
  TwoPointsOfAFiber,      // double cover of a blow-up of F_e at two fiber points
  NegativeSectionBlowUp,  // double cover of F_1 blown up on the negative section
  F2Intermediate          // double cover of F_2 itself
};

inline const char* to_string(IntermediateKind k) {
  switch (k) {
    case IntermediateKind::None: return "none";
    case IntermediateKind::TwoPointsOfAFiber: return "two_points_of_a_fiber";
    case IntermediateKind::NegativeSectionBlowUp:
      return "negative_section_blow_up";
    case IntermediateKind::F2Intermediate: return "f2_intermediate";
  }
  return "?";
}

struct Recipe {
  RecipeKind kind;
  Int param = 0;  // e for L6_Fe, k for L5_Fk
  ImageDeclaration image;
  IntermediateKind provenance = IntermediateKind::None;
  int oracle_index = 0;  // stacked-double-cover index; 0 when not applicable
};

// The pre-resolution cover of the L5 class-II recipe: same branch classes as
// the L6 F_e family, lying on the line K^2 = 2chi - 6, with the triple-point
// geometry recorded in the annotations.
struct SingularStage {
  BuildingData data;
  CoverInvariants invariants;
};

struct ConstructionRecord {
  LineTag line;
  Int chi = 0;
  Int K2 = 0;
  Recipe recipe;
  BuildingData building_data;
  CoverInvariants invariants;
  CanonicalReport canonical;
  ComponentTag component = ComponentTag::Only;
  std::optional<SingularStage> singular;
  bool z22_action = true;
};

// Minimal-surface-of-general-type inequalities.
inline bool admissible(Int chi, Int K2) {
  return chi >= 1 && K2 >= 1 && 2 * chi - 6 <= K2 && K2 <= 9 * chi;
}

// Number of deformation classes of the pair on its line: two exactly when
// K^2 is a multiple of 8 (L6), respectively when K^2 + 1 is a multiple of 8
// or the pair is (7,9) (L5).
inline int component_count(LineTag line, Int chi) {
  if (chi < line_chi_min(line))
    throw std::invalid_argument("component_count: chi out of range for line");
  Int k2 = line_k2(line, chi);
  if (line == LineTag::L6) return k2 % 8 == 0 ? 2 : 1;
  return ((k2 + 1) % 8 == 0 || (chi == 7 && k2 == 9)) ? 2 : 1;
}

inline std::vector<ComponentTag> components_of(LineTag line, Int chi) {
  return component_count(line, chi) == 1
             ? std::vector<ComponentTag>{ComponentTag::Only}
             : std::vector<ComponentTag>{ComponentTag::I, ComponentTag::II};
}

ConstructionRecord construct(LineTag line, Int chi, ComponentTag component);

// Deformation class of a constructed record, decided from the canonical
// image (and, for (6,7) and (7,9), the declared intermediate surface).
inline ComponentTag classify(const ConstructionRecord& rec) {
  if (component_count(rec.line, rec.chi) == 1) return ComponentTag::Only;
  using K = MapImageKind::Kind;
  const MapImageKind& img = rec.canonical.image;
  if (img.kind == K::Unsupported)
    throw std::domain_error("classify: canonical image unresolved");
  if (rec.line == LineTag::L6) {
    // K^2 in 8Z: class I images are F_e, e even <= K^2/4 (the quadric is
    // F_0); class II is F_{K^2/4+2}, degenerating at K^2 = 8 to P^2 or the
    // cone over a degree-4 rational curve.
    if (img.kind == K::QuadricImage ||
        (img.kind == K::HirzebruchImage && img.m % 2 == 0 &&
         img.m <= rec.K2 / 4))
      return ComponentTag::I;
    if ((img.kind == K::HirzebruchImage && img.m == rec.K2 / 4 + 2) ||
        (rec.K2 == 8 && (img.kind == K::ProjectivePlaneImage ||
                         img == MapImageKind{K::ConeImage, 4})))
      return ComponentTag::II;
    throw std::domain_error("classify: image incompatible with the L6 tables");
  }
  const IntermediateKind prov = rec.recipe.provenance;
  if (rec.chi == 6 && rec.K2 == 7) {
    if (img == MapImageKind{K::ConeImage, 3} ||
        prov == IntermediateKind::NegativeSectionBlowUp)
      return ComponentTag::II;
    if (img == MapImageKind{K::HirzebruchImage, 1} &&
        prov == IntermediateKind::TwoPointsOfAFiber)
      return ComponentTag::I;
    throw std::domain_error("classify: unresolved (6,7) record");
  }
  if (rec.chi == 7 && rec.K2 == 9) {
    if (prov == IntermediateKind::F2Intermediate &&
        img == MapImageKind{K::HirzebruchImage, 2})
      return ComponentTag::II;
    if (prov == IntermediateKind::TwoPointsOfAFiber &&
        (img.kind == K::QuadricImage ||
         img == MapImageKind{K::HirzebruchImage, 0} ||
         img == MapImageKind{K::HirzebruchImage, 2}))
      return ComponentTag::I;
    throw std::domain_error("classify: unresolved (7,9) record");
  }
  // K^2 + 1 in 8Z, K^2 != 7: class I images are F_e with e odd below
  // (K^2+1)/4; class II is F_{(K^2+1)/4+1}.
  if (img.kind == K::HirzebruchImage && img.m % 2 == 1 &&
      img.m <= (rec.K2 + 1) / 4 - 1)
    return ComponentTag::I;
  if (img.kind == K::HirzebruchImage && img.m == (rec.K2 + 1) / 4 + 1)
    return ComponentTag::II;
  throw std::domain_error("classify: image incompatible with the L5 tables");
}

namespace detail {

inline std::vector<Annotation> notes(std::initializer_list<DivisorNote> ns) {
  std::vector<Annotation> v;
  for (DivisorNote n : ns) v.push_back(Annotation{n, std::nullopt, 0});
  return v;
}

struct RecipeData {
  Recipe recipe;
  BuildingData data;
  std::optional<SingularStage> singular;
};

inline RecipeData build_l6_f2(Int chi) {
  SurfacePtr s = Surface::hirzebruch(2);
  BuildingData bd = make_building_data(
      s, divisor(s, {1, 0}), divisor(s, {1, 2}), divisor(s, {3, chi + 4}),
      {notes({DivisorNote::Smooth, DivisorNote::ContainsNegativeSection}),
       notes({DivisorNote::Smooth}), notes({DivisorNote::Smooth})});
  return {Recipe{RecipeKind::L6_F2, 0, ImageDeclaration::none(),
                 IntermediateKind::None, 0},
          std::move(bd), std::nullopt};
}

inline RecipeData build_l6_quadric(Int chi) {
  SurfacePtr s = Surface::quadric();
  BuildingData bd = make_building_data(
      s, divisor(s, {1, 0}), divisor(s, {1, 0}), divisor(s, {3, chi + 1}),
      {notes({DivisorNote::Smooth}), notes({DivisorNote::Smooth}),
       notes({DivisorNote::Smooth})});
  return {Recipe{RecipeKind::L6_Quadric, 0, ImageDeclaration::rule_table(3),
                 IntermediateKind::None, 3},
          std::move(bd), std::nullopt};
}

inline RecipeData build_l6_fe(Int e) {
  SurfacePtr s = Surface::hirzebruch(e);
  DivisorClass d1 = e % 2 == 1 ? divisor(s, {0, 1}) : zero_class(s);
  DivisorClass d2 = e % 2 == 1 ? divisor(s, {0, 1}) : divisor(s, {0, 2});
  BuildingData bd = make_building_data(
      s, d1, d2, divisor(s, {6, 5 * e}),
      {notes({e % 2 == 1 ? DivisorNote::Smooth : DivisorNote::Zero}),
       notes({DivisorNote::Smooth}),
       notes({DivisorNote::ContainsNegativeSection})});
  return {Recipe{RecipeKind::L6_Fe, e, ImageDeclaration::rule_table(3),
                 IntermediateKind::None, 3},
          std::move(bd), std::nullopt};
}

inline RecipeData build_l5_f3(Int chi, bool seventy_nine) {
  SurfacePtr s = Surface::hirzebruch(3);
  BuildingData bd = make_building_data(
      s, divisor(s, {1, 0}), divisor(s, {1, 4}), divisor(s, {3, chi + 5}),
      {notes({DivisorNote::Smooth, DivisorNote::ContainsNegativeSection}),
       notes({DivisorNote::Smooth}), notes({DivisorNote::Smooth})});
  if (!seventy_nine)
    return {Recipe{RecipeKind::L5_F3, 0, ImageDeclaration::none(),
                   IntermediateKind::None, 0},
            std::move(bd), std::nullopt};
  return {Recipe{RecipeKind::L5_79_F3, 0,
                 ImageDeclaration::declared(Surface::hirzebruch(2), {1, 3}),
                 IntermediateKind::TwoPointsOfAFiber, 0},
          std::move(bd), std::nullopt};
}

inline RecipeData build_l5_p2(Int deg3, RecipeKind kind,
                              IntermediateKind prov, ImageDeclaration image) {
  SurfacePtr s = Surface::projective_plane();
  BuildingData bd = make_building_data(
      s, divisor(s, {1}), divisor(s, {1}), divisor(s, {deg3}),
      {notes({DivisorNote::Smooth}), notes({DivisorNote::Smooth}),
       notes({DivisorNote::Smooth})});
  return {Recipe{kind, 0, std::move(image), prov, 0}, std::move(bd),
          std::nullopt};
}

inline RecipeData build_l5_f1(Int chi) {
  SurfacePtr s = Surface::hirzebruch(1);
  BuildingData bd = make_building_data(
      s, divisor(s, {1, 0}), divisor(s, {1, 2}), divisor(s, {3, chi + 2}),
      {notes({DivisorNote::Smooth, DivisorNote::ContainsNegativeSection}),
       notes({DivisorNote::Smooth}), notes({DivisorNote::Smooth})});
  return {Recipe{RecipeKind::L5_F1, 0,
                 ImageDeclaration::declared(Surface::hirzebruch(1),
                                            {1, (chi - 2) / 2}),
                 IntermediateKind::TwoPointsOfAFiber, 0},
          std::move(bd), std::nullopt};
}

inline RecipeData build_l5_fk(Int k) {
  SurfacePtr s = Surface::hirzebruch(k + 1);
  DivisorClass d1 = k % 2 == 0 ? divisor(s, {0, 1}) : zero_class(s);
  DivisorClass d2 = k % 2 == 0 ? divisor(s, {0, 1}) : divisor(s, {0, 2});
  DivisorClass d3 = divisor(s, {6, 5 * (k + 1)});
  PointSpec p = point_on({d2, d3});
  p.multiplicities = {{2, 1}, {3, 3}};
  std::array<std::vector<Annotation>, 3> ann = {
      notes({k % 2 == 0 ? DivisorNote::Smooth : DivisorNote::Zero}),
      notes({DivisorNote::Smooth}),
      notes({DivisorNote::ContainsNegativeSection})};
  ann[1].push_back(Annotation{DivisorNote::Tangency, p, 3});
  ann[2].push_back(Annotation{DivisorNote::TriplePoint, p, 0});
  BuildingData sing = make_building_data(s, d1, d2, d3, ann);
  SingularStage stage{sing, cover_invariants(sing)};
  BuildingData resolved = resolve_triple_point(sing, 3, 2, 1);
  ImageDeclaration image =
      k >= 2 ? ImageDeclaration::declared(Surface::hirzebruch(2 * k + 1),
                                          {1, 3 * k})
             : ImageDeclaration::declared(Surface::hirzebruch(3), {1, 3});
  return {Recipe{RecipeKind::L5_Fk, k, std::move(image),
                 IntermediateKind::TwoPointsOfAFiber, 3},
          std::move(resolved), std::move(stage)};
}

inline RecipeData dispatch(LineTag line, Int chi, ComponentTag component) {
  if (line == LineTag::L6) {
    if (chi % 2 == 0) return build_l6_f2(chi);
    if (component == ComponentTag::II)
      return build_l6_fe((line_k2(line, chi) + 8) / 8);
    return build_l6_quadric(chi);
  }
  if (chi == 3)
    return build_l5_p2(5, RecipeKind::L5_P2, IntermediateKind::None,
                       ImageDeclaration::none());
  if (chi == 7) {
    if (component == ComponentTag::II)
      return build_l5_p2(7, RecipeKind::L5_79_P2, IntermediateKind::F2Intermediate,
                         ImageDeclaration::declared(Surface::hirzebruch(2), {1, 3}));
    return build_l5_f3(chi, /*seventy_nine=*/true);
  }
  if (chi % 2 == 1) return build_l5_f3(chi, /*seventy_nine=*/false);
  if (component == ComponentTag::II)
    return build_l5_fk((line_k2(line, chi) + 1) / 8);
  return build_l5_f1(chi);
}

}  // namespace detail

inline ConstructionRecord construct(LineTag line, Int chi,
                                    ComponentTag component) {
  if (chi < line_chi_min(line))
    throw std::invalid_argument("construct: chi below the admissible range of "
                                "the line");
  Int K2 = line_k2(line, chi);
  if (!admissible(chi, K2))
    throw std::invalid_argument("construct: pair not admissible");
  int count = component_count(line, chi);
  if (count == 1 && component != ComponentTag::Only)
    throw std::invalid_argument(
        "construct: single component at (chi,K2) = (" + std::to_string(chi) +
        "," + std::to_string(K2) + ")");
  if (count == 2 && component == ComponentTag::Only)
    throw std::invalid_argument(
        "construct: two components at (chi,K2) = (" + std::to_string(chi) +
        "," + std::to_string(K2) + "); request I or II");

  detail::RecipeData rd = detail::dispatch(line, chi, component);
  ConstructionRecord rec;
  rec.line = line;
  rec.chi = chi;
  rec.K2 = K2;
  rec.recipe = std::move(rd.recipe);
  rec.building_data = std::move(rd.data);
  rec.singular = std::move(rd.singular);
  rec.invariants = cover_invariants(rec.building_data);
  if (rec.invariants.chi != chi || rec.invariants.K2 != K2)
    throw std::logic_error("construct: recipe invariants (" +
                           std::to_string(rec.invariants.chi) + "," +
                           std::to_string(rec.invariants.K2) +
                           ") do not match the requested pair");
  rec.canonical =
      build_canonical_report(rec.building_data, rec.recipe.image, rec.invariants);
  rec.component = classify(rec);
  if (rec.component != component)
    throw std::logic_error("construct: record classifies as a different "
                           "component than requested");
  return rec;
}

// The building data the stacked-double-cover oracle applies to: the
// pre-resolution stage for the L5 class-II recipe, the record data otherwise.
inline const BuildingData& oracle_target(const ConstructionRecord& rec) {
  return rec.singular ? rec.singular->data : rec.building_data;
}

struct ComponentOutcome {
  ComponentTag component;
  bool ok = false;
  std::vector<std::string> failures;
  Int chi = 0, K2 = 0;
};

struct PairOutcome {
  LineTag line;
  Int chi = 0, K2 = 0;
  int count = 0;
  std::vector<ComponentOutcome> components;
  bool ok = true;
};

struct VerificationReport {
  Int chi_max = 0;
  std::vector<PairOutcome> pairs;
  int failures = 0;
  bool ok = true;
};

namespace detail {

inline ComponentOutcome verify_one(LineTag line, Int chi,
                                   ComponentTag component) {
  ComponentOutcome out;
  out.component = component;
  auto fail = [&](const std::string& m) { out.failures.push_back(m); };
  try {
    ConstructionRecord rec = construct(line, chi, component);
    out.chi = rec.invariants.chi;
    out.K2 = rec.invariants.K2;
    if (rec.invariants.chi != chi || rec.invariants.K2 != line_k2(line, chi))
      fail("invariants do not match the pair");
    if (!validate_building_data(rec.building_data).valid)
      fail("building data fails validation");
    if (classify(rec) != component) fail("classification mismatch");
    if (rec.recipe.oracle_index > 0) {
      const BuildingData& target = oracle_target(rec);
      CoverInvariants direct = cover_invariants(target);
      CoverInvariants stacked =
          stacked_double_cover_oracle(target, rec.recipe.oracle_index);
      if (stacked.chi != direct.chi || stacked.K2 != direct.K2)
        fail("stacked double-cover oracle disagrees with the direct formulas");
    }
    if (rec.canonical.image_check && !rec.canonical.image_check->match)
      fail("canonical image h0 check failed");
    if (rec.canonical.genus2) {
      Int want = line == LineTag::L6 ? 0 : 1;
      if (rec.canonical.genus2->contribution_sum !=
          rec.K2 - (2 * rec.chi - 6))
        fail("genus-2 contribution identity failed");
      if (rec.canonical.genus2->contribution_sum != want)
        fail("genus-2 contribution differs from the line value");
    }
    if (rec.singular) {
      if (rec.singular->invariants.chi != rec.chi + 1 ||
          rec.singular->invariants.K2 != rec.K2 + 1)
        fail("triple-point resolution does not drop (chi,K2) by one");
      if (rec.singular->invariants.K2 !=
          2 * rec.singular->invariants.chi - 6)
        fail("singular stage misses the K2 = 2chi-6 line");
    }
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  out.ok = out.failures.empty();
  return out;
}

}  // namespace detail

// Construct and cross-check every (pair, component) with chi up to chi_max
// on both lines. Failures are collected in the report, never thrown.
inline VerificationReport verify_theorem(Int chi_max) {
  if (chi_max < 7)
    throw std::invalid_argument("verify_theorem: chi_max must be at least 7");
  VerificationReport report;
  report.chi_max = chi_max;
  for (LineTag line : {LineTag::L6, LineTag::L5}) {
    for (Int chi = line_chi_min(line); chi <= chi_max; ++chi) {
      PairOutcome pair;
      pair.line = line;
      pair.chi = chi;
      pair.K2 = line_k2(line, chi);
      pair.count = component_count(line, chi);
      for (ComponentTag c : components_of(line, chi)) {
        pair.components.push_back(detail::verify_one(line, chi, c));
        if (!pair.components.back().ok) {
          pair.ok = false;
          ++report.failures;
        }
      }
      report.ok = report.ok && pair.ok;
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

}  // namespace horikawa
