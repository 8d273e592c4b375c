#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "houghton/element.hpp"

namespace houghton {

// Least k >= 1 with sigma^k(x) = x; x in z-coordinates.
long long ord_at(const Element& sigma, long long x);

// Product of tau-shifted copies of gamma:
//   tau^{(2^p-1)(m-k)}(gamma) ∘ ... ∘ tau^{m-k}(gamma) ∘ gamma,
// for gamma fixing (-inf,-m) pointwise with gamma(-m) = -k, 1 <= k < m.
// Sends -m to (2^p-1)(m-k) - k.
Element pi_product(const Element& gamma, long long m, long long k, int p);

// Mirror of pi_product on the inverse side:
//   pi ∘ tau^{m-k}(pi) ∘ ... ∘ tau^{(2^p-1)(m-k)}(pi),
// for pi fixing (-inf,-m) with pi^{-1}(-m) = -k, 1 <= k < m. Keeps the
// image of -m and pushes the preimage of -m up to at least 2^p - m.
Element omega_product(const Element& pi, long long m, long long k, int p);

struct CollapseResult {
  Element theta;      // supported inside the eps-cycle of -n
  Element collapsed;  // eps ∘ theta
};

// Shortens the cycle of -n by reversing each maximal run of consecutive
// off-R_1 entries, leaving only entries that are in R_1 or adjacent to one;
// afterwards ord(collapsed, -n) <= 3n while the image and preimage of -n
// are unchanged.
CollapseResult collapse_runs(const Element& eps, long long n);

// Splices a fresh cycle (sigma(x), M+1, ..., M') past the support so that
// ord_at(result, x) = target without touching the image or preimage of x.
Element pad_order(const Element& sigma, long long x, long long target);

struct MuNuResult {
  Element mu, nu;
};

// From commuting-at--n data (alpha∘beta(-n) = beta∘alpha(-n) = -n, both
// fixing (-inf,-n), alpha(-n) and alpha^{-1}(-n) >= 0) builds, at level
// n' = n - 2 n0, a pair with mu(-n') = -n'+1, mu^{-1}(-n') >= 0,
// mu∘nu(-n') = nu∘mu(-n') = -n', both fixing (-inf,-n').
MuNuResult mu_nu(const Element& alpha, const Element& beta, long long n, long long n0);

// From a mu_nu pair at level n, a permutation that swaps -n' and -n'+1
// (n' = n - 2 n0) and is the identity on (-inf,-n').
Element sigma_swap(const Element& mu, const Element& nu, long long n, long long n0);

// Level-indexed source of swaps: provider(m) must swap -m,-m+1 and be the
// identity on (-inf,-m) ∪ [-m+2, -m+1+i]; its image of -m+2+i must stay on
// rays 1,2. Levels m <= 0 are synthesised internally as the transposition
// (-m, -m+1) of R_2 points.
using SwapProvider = std::function<Element(long long m)>;

// Builds the next member of the swap family: swaps -n,-n+1 and is the
// identity on (-inf,-n) ∪ [-n+2, -n+2+i]. i = -1 delegates to the provider
// (the plain swap); otherwise the fixed case shifts and the moving case
// composes with a conjugated chain of lower-level swaps.
Element sigma_swap_fixing(const SwapProvider& provider, long long n, long long i, long long n0);

struct TwoRayDecomposition {
  Element f1, s, f2;  // xi = f1 ∘ s ∘ f2
};

// Factors a finitely supported xi as f1 ∘ s ∘ f2 with f1, f2 finitely
// supported and fixing ray i pointwise, and s supported on rays i, j.
// Boundary crossings are routed through staging points on ray j, chosen as
// the least unused coordinates in increasing order.
TwoRayDecomposition decompose_two_rays(const Element& xi, int i, int j);

// h ↦ h · ∏_{k≠i,j} t_{k,j}^{λ_k(h)}: lands in H_n({i,j}) and is the
// identity there.
Element retract_to_partial(const Element& h, int i, int j);

struct FixRayFactorisation {
  Element sigma;                                     // finitely supported, fixes ray i
  std::vector<std::tuple<int, int, long long>> word; // (r, s, exponent) factors
  Element word_element(int arity) const;
  std::string word_dsl() const;
};

// g ∈ Fix(R_i) as sigma · a with a an explicit word in the t_{r,s}, r,s ≠ i,
// matching the lambda-profile of g; correction factors in increasing ray
// order.
FixRayFactorisation fix_ray_factor(const Element& g, int i);

}  // namespace houghton
