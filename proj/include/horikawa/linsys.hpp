#pragma once

// Cohomology and positivity on the minimal rational bases: h^0 by lattice
// point counts, nef/ample tests against the extremal curves, and the image
// of the map given by a complete linear system.

#include <optional>
#include <stdexcept>
#include <string>

#include "horikawa/picard.hpp"

namespace horikawa {

enum class Positivity { VeryAmple, AmpleNotVeryAmple, NefNotAmple, NotNef };

inline const char* to_string(Positivity p) {
  switch (p) {
    case Positivity::VeryAmple: return "very_ample";
    case Positivity::AmpleNotVeryAmple: return "ample_not_very_ample";
    case Positivity::NefNotAmple: return "nef_not_ample";
    case Positivity::NotNef: return "not_nef";
  }
  return "?";
}

struct PositivityClass {
  Positivity verdict;
  // A curve class achieving equality (nef-not-ample) or negativity (not nef).
  std::optional<DivisorClass> witness;

  bool is_ample() const {
    return verdict == Positivity::VeryAmple ||
           verdict == Positivity::AmpleNotVeryAmple;
  }
  bool is_nef() const { return verdict != Positivity::NotNef; }
};

struct MapImageKind {
  enum class Kind {
    ProjectivePlaneImage,
    QuadricImage,
    HirzebruchImage,
    ConeImage,  // cone over a rational normal curve of degree m, m >= 2
    Unsupported
  };
  Kind kind = Kind::Unsupported;
  Int m = 0;  // HirzebruchImage / ConeImage parameter

  friend bool operator==(const MapImageKind& a, const MapImageKind& b) {
    return a.kind == b.kind && a.m == b.m;
  }
  friend bool operator!=(const MapImageKind& a, const MapImageKind& b) {
    return !(a == b);
  }
};

inline std::string to_string(const MapImageKind& k) {
  using K = MapImageKind::Kind;
  switch (k.kind) {
    case K::ProjectivePlaneImage: return "P2";
    case K::QuadricImage: return "quadric";
    case K::HirzebruchImage: return "F" + std::to_string(k.m);
    case K::ConeImage: return "cone" + std::to_string(k.m);
    case K::Unsupported: return "unsupported";
  }
  return "?";
}

// h^0 of a divisor class on a minimal rational base.
//   P^2, dH:            (d+1)(d+2)/2 for d >= 0
//   quadric, aD0+bF:    (a+1)(b+1)   for a,b >= 0
//   F_e, aD0+bF, a>=0:  sum_{j=0..a} h^0(P^1, b-je)
// Blow-up bases are refused: section counts there depend on position data
// this engine does not model.
inline Int h0(const DivisorClass& d) {
  const Surface& s = *d.surface;
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: {
      Int deg = d.coeffs[0];
      return deg >= 0 ? (deg + 1) * (deg + 2) / 2 : 0;
    }
    case SurfaceKind::Quadric: {
      Int a = d.coeffs[0], b = d.coeffs[1];
      return (a >= 0 && b >= 0) ? (a + 1) * (b + 1) : 0;
    }
    case SurfaceKind::Hirzebruch: {
      Int a = d.coeffs[0], b = d.coeffs[1], e = s.hirzebruch_e();
      if (a < 0) return 0;
      Int acc = 0;
      for (Int j = 0; j <= a; ++j) {
        Int t = b - j * e + 1;
        if (t > 0) acc += t;
      }
      return acc;
    }
    case SurfaceKind::BlowUp:
      throw std::invalid_argument("h0: unsupported base (blow-up surface)");
  }
  return 0;
}

namespace detail {

inline PositivityClass positivity_minimal(const DivisorClass& d) {
  const Surface& s = *d.surface;
  if (s.kind() == SurfaceKind::ProjectivePlane) {
    Int deg = d.coeffs[0];
    DivisorClass line = generator(d.surface, 0);
    if (deg < 0) return {Positivity::NotNef, line};
    if (deg == 0) return {Positivity::NefNotAmple, line};
    return {Positivity::VeryAmple, std::nullopt};
  }
  // Quadric behaves as Hirzebruch(0).
  Int e = s.kind() == SurfaceKind::Hirzebruch ? s.hirzebruch_e() : 0;
  Int a = d.coeffs[0], b = d.coeffs[1];
  DivisorClass d0 = generator(d.surface, 0);
  DivisorClass f = generator(d.surface, 1);
  // D.F = a, D.D0 = b - ae; the nef cone is spanned against {D0, F}.
  if (a < 0) return {Positivity::NotNef, f};
  if (b - a * e < 0) return {Positivity::NotNef, d0};
  if (b - a * e == 0) return {Positivity::NefNotAmple, d0};
  if (a == 0) return {Positivity::NefNotAmple, f};
  // Ample classes on these surfaces are very ample.
  return {Positivity::VeryAmple, std::nullopt};
}

inline PositivityClass positivity_blow_up(const DivisorClass& d) {
  const Surface& s = *d.surface;
  const SurfacePtr& parent = s.parent();
  if (parent->kind() != SurfaceKind::Hirzebruch)
    throw std::invalid_argument(
        "positivity: only one-point blow-ups of Hirzebruch surfaces are "
        "supported");
  BlowUpMap q{parent, d.surface};
  DivisorClass e_cls = q.exceptional_class();
  DivisorClass neg_section = generator(parent, 0);
  bool center_on_d0 = lies_on(s.center(), neg_section);
  // Extremal candidates: E, the strict transform of the fiber through the
  // center, and the (possibly strict-transformed) negative section.
  DivisorClass fiber_st = q.pullback(generator(parent, 1)) - e_cls;
  DivisorClass section = q.pullback(neg_section);
  if (center_on_d0) section = section - e_cls;
  const DivisorClass extremal[3] = {e_cls, fiber_st, section};

  for (const auto& c : extremal)
    if (intersect(d, c) < 0) return {Positivity::NotNef, c};
  DivisorClass push = divisor(parent, {d.coeffs[0], d.coeffs[1]});
  PositivityClass down = positivity_minimal(push);
  if (!down.is_nef()) return {Positivity::NotNef, q.pullback(*down.witness)};

  for (const auto& c : extremal)
    if (intersect(d, c) == 0) return {Positivity::NefNotAmple, c};
  if (self_intersection(d) <= 0) return {Positivity::NefNotAmple, d};
  // Nakai-Moishezon against the candidate list; very-ampleness is not
  // decided on blow-ups, so the verdict is capped.
  return {Positivity::AmpleNotVeryAmple, std::nullopt};
}

}  // namespace detail

// Nef/ample classification with a witness curve for the boundary cases.
// Supported bases: the minimal ones, plus one-point blow-ups of Hirzebruch
// surfaces (the center may or may not lie on the negative section).
inline PositivityClass positivity(const DivisorClass& d) {
  const Surface& s = *d.surface;
  if (s.kind() != SurfaceKind::BlowUp) return detail::positivity_minimal(d);
  if (s.parent()->kind() == SurfaceKind::BlowUp)
    throw std::invalid_argument(
        "positivity: blow-up chains deeper than one point are not supported");
  return detail::positivity_blow_up(d);
}

// Image of the map defined by |D| for a nef class with h^0 >= 3.
//   P^2, H                -> P^2
//   quadric, a,b >= 1     -> quadric
//   F_m, a>0, b>am        -> F_m embedded
//   F_m, a=1, b=m, m>=2   -> cone over a degree-m rational curve (D0 is
//                            contracted); for m=1 the contraction is the
//                            blow-down to P^2
inline MapImageKind map_image(const DivisorClass& d) {
  using K = MapImageKind::Kind;
  if (!positivity(d).is_nef() || h0(d) < 3)
    throw std::invalid_argument("map_image: class must be nef with h0 >= 3");
  const Surface& s = *d.surface;
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane:
      if (d.coeffs[0] == 1) return {K::ProjectivePlaneImage, 0};
      return {K::Unsupported, 0};
    case SurfaceKind::Quadric:
      if (d.coeffs[0] >= 1 && d.coeffs[1] >= 1) return {K::QuadricImage, 0};
      return {K::Unsupported, 0};
    case SurfaceKind::Hirzebruch: {
      Int a = d.coeffs[0], b = d.coeffs[1], m = s.hirzebruch_e();
      if (a > 0 && b > a * m) return {K::HirzebruchImage, m};
      if (a == 1 && b == m) {
        if (m >= 2) return {K::ConeImage, m};
        if (m == 1) return {K::ProjectivePlaneImage, 0};
      }
      return {K::Unsupported, 0};
    }
    case SurfaceKind::BlowUp:
      return {K::Unsupported, 0};
  }
  return {K::Unsupported, 0};
}

}  // namespace horikawa
