#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace houghton {

using Coord = long long;

// A vertex of the ray space: 1-based ray index and position along the ray.
struct RayPoint {
  int ray = 1;
  Coord coord = 0;

  friend bool operator==(const RayPoint&, const RayPoint&) = default;
  friend bool operator<(const RayPoint& a, const RayPoint& b) {
    return a.ray != b.ray ? a.ray < b.ray : a.coord < b.coord;
  }
};

// Identification of R_1 ∪ R_2 with Z: (1,i) <-> -i-1, (2,i) <-> i.
inline RayPoint z_to_point(long long z) {
  return z >= 0 ? RayPoint{2, z} : RayPoint{1, -z - 1};
}
inline std::optional<long long> point_to_z(RayPoint p) {
  if (p.ray == 1) return -p.coord - 1;
  if (p.ray == 2) return p.coord;
  return std::nullopt;
}

// An eventually-translational bijection of n rays.
//
// Canonical form: per-ray tail thresholds are minimal, the exception table
// lists exactly the below-threshold points whose image differs from the
// point itself, sorted by source. Equality of elements is equality of the
// canonical data. Values are immutable once built.
class Element {
 public:
  Element() : Element(identity(1)) {}

  static Element identity(int arity);
  // The translation moving ray `from` onto ray `to`, raised to `power`.
  static Element translation(int arity, int from, int to, long long power = 1);
  // Finitely supported permutation given as cycles; rejects repeated points.
  static Element from_cycles(int arity, const std::vector<std::vector<RayPoint>>& cycles);
  static Element from_z_cycles(int arity, const std::vector<std::vector<long long>>& zs);
  // General constructor: `overrides` gives every point whose image differs
  // from the derived tail-or-fixed default. Validates bijectivity.
  static Element from_map(int arity, std::vector<long long> translation,
                          std::vector<std::pair<RayPoint, RayPoint>> overrides);

  int arity() const { return n_; }
  const std::vector<long long>& lambda_vec() const { return shift_; }
  long long lambda(int ray) const;
  const std::vector<std::pair<RayPoint, RayPoint>>& exceptions() const { return exc_; }
  Coord threshold(int ray) const { return threshold_[static_cast<size_t>(ray - 1)]; }

  RayPoint apply(RayPoint p) const;
  RayPoint apply_inverse(RayPoint p) const;
  long long z_apply(long long z) const;          // image must stay on R_1 ∪ R_2
  long long z_apply_inverse(long long z) const;

  bool is_identity() const { return exc_.empty() && !translates(); }
  bool translates() const;
  bool finitely_supported() const { return !translates(); }
  // Moved points of a finitely supported element, sorted.
  std::vector<RayPoint> support() const;

  // Embed into a larger arity; the extra rays are fixed pointwise.
  Element lift(int arity) const;

  void validate() const;  // full bijectivity check, throws usage_error

  friend Element compose(const Element& a, const Element& b);  // a ∘ b, b first
  friend Element inverse(const Element& a);

  friend bool operator==(const Element& a, const Element& b) {
    return a.n_ == b.n_ && a.shift_ == b.shift_ && a.exc_ == b.exc_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  // Canonical total order (arity, translation, exception table).
  friend bool operator<(const Element& a, const Element& b);

  size_t hash() const;

 private:
  Element(int n, std::vector<long long> shift) : n_(n), shift_(std::move(shift)) {}
  static Element from_window_map(int n, std::vector<long long> shift,
                                 const std::function<RayPoint(RayPoint)>& image,
                                 const std::vector<Coord>& window);
  void finish();  // sort exceptions, build image index, derive thresholds

  int n_ = 1;
  std::vector<long long> shift_;                        // translation vector, sums to 0
  std::vector<std::pair<RayPoint, RayPoint>> exc_;      // sorted by source
  std::vector<int> by_image_;                           // exc_ indices sorted by image
  std::vector<Coord> threshold_;
};

Element compose(const Element& a, const Element& b);
Element inverse(const Element& a);
inline Element operator*(const Element& a, const Element& b) { return compose(a, b); }

Element power(const Element& g, long long e);
// a g a^-1
Element conjugate(const Element& a, const Element& g);
// t^s g t^-s with t = t_{1,2}; shifts the z-support of permutations by +s.
Element conj_by_t(const Element& g, long long s);

struct ElementHash {
  size_t operator()(const Element& g) const { return g.hash(); }
};

}  // namespace houghton
