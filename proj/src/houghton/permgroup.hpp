#pragma once

#include <string>
#include <vector>

namespace houghton {

// Permutation of {1..n} stored as 0-based image vector.
using Perm = std::vector<int>;

// Subgroup of Sym(n) given by generators; closure is computed on demand
// with a degree <= 12 guard and an element-count budget.
class PermGroup {
 public:
  explicit PermGroup(int degree) : degree_(degree) {}
  static PermGroup trivial(int degree) { return PermGroup(degree); }
  // "(4 5)(1 2 3)" — one permutation as disjoint cycles, 1-based points.
  static Perm parse_perm(int degree, const std::string& text);
  static std::string perm_str(const Perm& p);

  void add_generator(Perm p);
  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool is_trivial() const { return gens_.empty(); }

  std::vector<Perm> elements(size_t cap = 200000) const;  // full closure
  // 1-based points fixed by every generator, sorted.
  std::vector<int> fixed_points() const;
  std::string str() const;

 private:
  int degree_;
  std::vector<Perm> gens_;
};

// Pointwise fixator of {1..k} inside Sym(n); requires n > k+1 so the fixed
// points of the result are exactly {1..k}.
PermGroup fixator(int n, int k);

// Ray indices whose focal structure survives the extension by G: the
// G-fixed points (all of {1..n} for trivial G).
std::vector<int> focal_set(int n, const PermGroup& g);

}  // namespace houghton
