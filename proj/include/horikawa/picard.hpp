#pragma once

// Exact Picard-lattice arithmetic for the rational surfaces used as cover
// bases: P^2, P^1 x P^1, the Hirzebruch surfaces F_e and their iterated
// one-point blow-ups. Everything is integer arithmetic over a fixed basis;
// surfaces and divisor classes are immutable values.

#include <cassert>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace horikawa {

using Int = long long;

class Surface;
using SurfacePtr = std::shared_ptr<const Surface>;

enum class SurfaceKind { ProjectivePlane, Quadric, Hirzebruch, BlowUp };

// An element of the Picard lattice of a fixed surface, written as an integer
// coefficient vector over the surface's basis.
struct DivisorClass {
  SurfacePtr surface;
  std::vector<Int> coeffs;
};

// Symbolic description of a blow-up center. No coordinates are kept: a point
// is located through the divisor classes it lies on, pairwise-intersection
// provenance, or an infinitely-near reference to the previous center.
// Multiplicity assumptions are declared, never verified against equations.
struct PointSpec {
  enum class Location { General, OnDivisor, IntersectionOf, InfinitelyNear };

  Location location = Location::General;
  std::vector<DivisorClass> classes;  // classes through the point (resolved)
  std::optional<std::pair<int, int>> branch_indices;  // IntersectionOf, 1-based
  std::shared_ptr<const PointSpec> previous;          // InfinitelyNear chain
  std::vector<std::pair<int, Int>> multiplicities;    // (divisor index, mult)
};

class Surface : public std::enable_shared_from_this<Surface> {
 public:
  static SurfacePtr projective_plane() {
    auto s = std::shared_ptr<Surface>(new Surface());
    s->kind_ = SurfaceKind::ProjectivePlane;
    s->basis_ = {"H"};
    s->gram_ = {{1}};
    s->canonical_ = {-3};
    return s;
  }

  static SurfacePtr quadric() {
    auto s = std::shared_ptr<Surface>(new Surface());
    s->kind_ = SurfaceKind::Quadric;
    s->basis_ = {"D0", "F"};
    s->gram_ = {{0, 1}, {1, 0}};
    s->canonical_ = {-2, -2};
    return s;
  }

  static SurfacePtr hirzebruch(Int e) {
    if (e < 0) throw std::invalid_argument("hirzebruch: e must be nonnegative");
    auto s = std::shared_ptr<Surface>(new Surface());
    s->kind_ = SurfaceKind::Hirzebruch;
    s->e_ = e;
    s->basis_ = {"D0", "F"};
    s->gram_ = {{-e, 1}, {1, 0}};
    s->canonical_ = {-2, -(e + 2)};
    return s;
  }

  static SurfacePtr blow_up_of(SurfacePtr parent, PointSpec center) {
    auto s = std::shared_ptr<Surface>(new Surface());
    s->kind_ = SurfaceKind::BlowUp;
    s->parent_ = std::move(parent);
    s->center_ = std::move(center);
    const Surface& p = *s->parent_;
    s->basis_ = p.basis_;
    s->basis_.push_back("E" + std::to_string(s->exceptional_count()));
    const int n = static_cast<int>(p.basis_.size());
    s->gram_.assign(n + 1, std::vector<Int>(n + 1, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s->gram_[i][j] = p.gram_[i][j];
    s->gram_[n][n] = -1;
    s->canonical_ = p.canonical_;  // K' = q*K + E
    s->canonical_.push_back(1);
    return s;
  }

  SurfaceKind kind() const { return kind_; }
  Int hirzebruch_e() const {
    if (kind_ != SurfaceKind::Hirzebruch)
      throw std::logic_error("hirzebruch_e: not a Hirzebruch surface");
    return e_;
  }
  const SurfacePtr& parent() const {
    if (kind_ != SurfaceKind::BlowUp)
      throw std::logic_error("parent: not a blow-up");
    return parent_;
  }
  const PointSpec& center() const {
    if (kind_ != SurfaceKind::BlowUp)
      throw std::logic_error("center: not a blow-up");
    return center_;
  }

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis_names() const { return basis_; }
  Int gram(int i, int j) const { return gram_[i][j]; }

  Int chi_structure_sheaf() const { return 1; }
  Int irregularity() const { return 0; }

  DivisorClass canonical_class() const {
    return DivisorClass{shared_from_this(), canonical_};
  }

  // Number of blow-ups between this surface and its minimal ancestor.
  int exceptional_count() const {
    int n = 0;
    for (const Surface* s = this; s->kind_ == SurfaceKind::BlowUp;
         s = s->parent_.get())
      ++n;
    return n;
  }

  // The minimal surface at the bottom of the blow-up chain.
  const Surface& minimal_ancestor() const {
    const Surface* s = this;
    while (s->kind_ == SurfaceKind::BlowUp) s = s->parent_.get();
    return *s;
  }

 private:
  Surface() = default;

  SurfaceKind kind_ = SurfaceKind::ProjectivePlane;
  Int e_ = 0;
  SurfacePtr parent_;
  PointSpec center_;
  std::vector<std::string> basis_;
  std::vector<std::vector<Int>> gram_;
  std::vector<Int> canonical_;
};

bool operator==(const Surface& a, const Surface& b);
bool operator==(const PointSpec& a, const PointSpec& b);

inline bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return *a.surface == *b.surface && a.coeffs == b.coeffs;
}
inline bool operator!=(const DivisorClass& a, const DivisorClass& b) {
  return !(a == b);
}

// Structural equality: blow-up chains compare recursively. Quadric and
// Hirzebruch(0) have identical lattices but compare unequal by kind.
inline bool operator==(const Surface& a, const Surface& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SurfaceKind::ProjectivePlane:
    case SurfaceKind::Quadric:
      return true;
    case SurfaceKind::Hirzebruch:
      return a.hirzebruch_e() == b.hirzebruch_e();
    case SurfaceKind::BlowUp:
      return *a.parent() == *b.parent() && a.center() == b.center();
  }
  return false;
}
inline bool operator!=(const Surface& a, const Surface& b) { return !(a == b); }

inline bool operator==(const PointSpec& a, const PointSpec& b) {
  if (a.location != b.location || a.branch_indices != b.branch_indices ||
      a.multiplicities != b.multiplicities)
    return false;
  if (a.classes.size() != b.classes.size()) return false;
  for (size_t i = 0; i < a.classes.size(); ++i)
    if (a.classes[i] != b.classes[i]) return false;
  if (static_cast<bool>(a.previous) != static_cast<bool>(b.previous))
    return false;
  return !a.previous || *a.previous == *b.previous;
}

inline DivisorClass divisor(SurfacePtr s, std::vector<Int> coeffs) {
  if (static_cast<int>(coeffs.size()) != s->rank())
    throw std::invalid_argument("divisor: coefficient vector length mismatch");
  return DivisorClass{std::move(s), std::move(coeffs)};
}

inline DivisorClass zero_class(SurfacePtr s) {
  std::vector<Int> c(s->rank(), 0);
  return DivisorClass{std::move(s), std::move(c)};
}

inline DivisorClass generator(SurfacePtr s, int i) {
  std::vector<Int> c(s->rank(), 0);
  c.at(i) = 1;
  return DivisorClass{std::move(s), std::move(c)};
}

inline void require_same_surface(const DivisorClass& a, const DivisorClass& b,
                                 const char* op) {
  if (*a.surface != *b.surface)
    throw std::invalid_argument(std::string(op) + ": surface mismatch");
}

inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_surface(a, b, "operator+");
  DivisorClass r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  require_same_surface(a, b, "operator-");
  DivisorClass r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

inline DivisorClass operator-(const DivisorClass& a) {
  DivisorClass r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

inline DivisorClass operator*(Int k, const DivisorClass& a) {
  DivisorClass r = a;
  for (auto& c : r.coeffs) c *= k;
  return r;
}

// The intersection pairing, extended bilinearly from the gram matrix.
inline Int intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_surface(a, b, "intersect");
  const Surface& s = *a.surface;
  Int acc = 0;
  for (int i = 0; i < s.rank(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < s.rank(); ++j)
      acc += a.coeffs[i] * b.coeffs[j] * s.gram(i, j);
  }
  return acc;
}

inline Int self_intersection(const DivisorClass& a) { return intersect(a, a); }

inline bool all_even(const DivisorClass& a) {
  for (Int c : a.coeffs)
    if (c % 2 != 0) return false;
  return true;
}

inline DivisorClass half(const DivisorClass& a) {
  DivisorClass r = a;
  for (auto& c : r.coeffs) {
    assert(c % 2 == 0);
    c /= 2;
  }
  return r;
}

inline std::string to_string(const DivisorClass& d) {
  const auto& names = d.surface->basis_names();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < d.coeffs.size(); ++i) {
    Int c = d.coeffs[i];
    if (c == 0) continue;
    if (!first && c > 0) os << "+";
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c << "*";
    os << names[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// A single blow-up, supporting pullback onto the E-orthogonal complement
// and the exceptional class itself.
struct BlowUpMap {
  SurfacePtr parent;
  SurfacePtr total;

  DivisorClass pullback(const DivisorClass& d) const {
    if (*d.surface != *parent)
      throw std::invalid_argument("pullback: surface mismatch");
    std::vector<Int> c = d.coeffs;
    c.push_back(0);
    return DivisorClass{total, std::move(c)};
  }

  DivisorClass exceptional_class() const {
    return generator(total, total->rank() - 1);
  }
};

inline BlowUpMap blow_up(SurfacePtr s, PointSpec center = {}) {
  SurfacePtr total = Surface::blow_up_of(s, std::move(center));
  return BlowUpMap{std::move(s), std::move(total)};
}

// Point-spec helpers.
inline PointSpec general_point() { return PointSpec{}; }

inline PointSpec point_on(std::vector<DivisorClass> classes) {
  PointSpec p;
  p.location = PointSpec::Location::OnDivisor;
  p.classes = std::move(classes);
  return p;
}

inline PointSpec intersection_point(int i, int j, DivisorClass di,
                                    DivisorClass dj) {
  PointSpec p;
  p.location = PointSpec::Location::IntersectionOf;
  p.branch_indices = {i, j};
  p.classes = {std::move(di), std::move(dj)};
  return p;
}

inline PointSpec infinitely_near(PointSpec previous,
                                 std::vector<DivisorClass> classes) {
  PointSpec p;
  p.location = PointSpec::Location::InfinitelyNear;
  p.previous = std::make_shared<const PointSpec>(std::move(previous));
  p.classes = std::move(classes);
  return p;
}

// Whether the point is declared to lie on the given class.
inline bool lies_on(const PointSpec& p, const DivisorClass& c) {
  for (const auto& q : p.classes)
    if (q == c) return true;
  return false;
}

}  // namespace horikawa
