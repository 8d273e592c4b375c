#pragma once

#include <string>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/rational.hpp"

namespace houghton {

// phi = sum a_i lambda_i, up to adding a constant vector (the lambda_i sum
// to zero) and nonzero scaling. Canonical representative: mean zero, first
// nonzero entry +1. The zero class is rejected.
class Character {
 public:
  Character(int arity, std::vector<Rational> coeffs);
  static Character lambda(int arity, int ray);  // the class of lambda_ray

  int arity() const { return n_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // phi(lambda-vector of g), exact.
  Rational eval(const Element& g) const;
  // class of phi ∘ permutation^{-1}, for a coordinate permutation (0-based images).
  Character permuted(const std::vector<int>& perm_images) const;

  std::string str() const;
  // Short stable id fragment derived from the canonical coefficients.
  std::string hash_tag() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }
  friend bool operator<(const Character& a, const Character& b);

 private:
  int n_;
  std::vector<Rational> coeffs_;  // canonical
};

inline bool char_equiv(const Character& a, const Character& b) { return a == b; }

}  // namespace houghton
