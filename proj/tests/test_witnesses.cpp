#include <random>

#include "doctest.h"
#include "houghton/element.hpp"
#include "houghton/errors.hpp"
#include "houghton/norm.hpp"
#include "houghton/subsets.hpp"
#include "houghton/witness_ops.hpp"

using namespace houghton;

namespace {

Element zc(std::initializer_list<long long> pts, int arity = 2) {
  return Element::from_z_cycles(arity, {std::vector<long long>(pts)});
}

// gamma fixing (-inf,-m) with gamma(-m) = -k, plus unrelated noise that
// stays above -m and avoids the pinned image -k
Element random_gamma(std::mt19937_64& rng, long long m, long long k) {
  Element base = zc({-m, -k});
  Sampler s(rng());
  for (int attempt = 0; attempt < 32; ++attempt) {
    Element noise = s.finite_perm(2, 8);
    if (noise.is_identity()) continue;
    bool ok = true;
    for (const auto& e : noise.exceptions()) {
      auto z = point_to_z(e.first);
      if (!z || *z < -m || *z == -k) {
        ok = false;
        break;
      }
    }
    if (ok) return compose(noise, base);
  }
  return base;
}

// direct composition oracle for the shifted products
Element pi_oracle(const Element& gamma, long long m, long long k, int p) {
  Element acc = Element::identity(gamma.arity());
  for (long long i = 0; i < (1ll << p); ++i)
    acc = compose(conj_by_t(gamma, i * (m - k)), acc);
  return acc;
}

}  // namespace

TEST_CASE("ord_at") {
  CHECK(ord_at(Element::identity(2), 5) == 1);
  CHECK(ord_at(zc({0, 1, 2}), 0) == 3);
  CHECK(ord_at(zc({0, 1, 2}), 7) == 1);
  CHECK(ord_at(zc({-3, 0, 4, 9}), -3) == 4);
}

TEST_CASE("pi_product examples") {
  Element gamma = zc({-2, -1});
  Element pi1 = pi_product(gamma, 2, 1, 1);
  CHECK(pi1.z_apply(-2) == 0);  // (2^1-1)(2-1) - 1
  CHECK(pi1 == compose(zc({-1, 0}), zc({-2, -1})));
  CHECK(pi_product(gamma, 2, 1, 0) == gamma);
  CHECK(pi_product(gamma, 2, 1, 2).z_apply(-2) == 2);
  CHECK_THROWS_AS(pi_product(gamma, 2, 2, 1), violation_error);   // k = m
  CHECK_THROWS_AS(pi_product(zc({-5, -1}), 2, 1, 1), violation_error);  // moves below -2
}

TEST_CASE("pi_product recursion, image formula, tail fixing") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    long long m = 2 + static_cast<long long>(rng() % 6);
    long long k = 1 + static_cast<long long>(rng() % (m - 1));
    Element gamma = random_gamma(rng, m, k);
    int p = static_cast<int>(rng() % 4);
    Element cur = pi_product(gamma, m, k, p);
    CHECK(cur == pi_oracle(gamma, m, k, p));
    // (i) recursion
    Element next = pi_product(gamma, m, k, p + 1);
    CHECK(next == compose(conj_by_t(cur, (1ll << p) * (m - k)), cur));
    // (ii) image formula
    CHECK(cur.z_apply(-m) == ((1ll << p) - 1) * (m - k) - k);
    // (iv) fixes (-inf,-m)
    for (long long z = -m - 6; z < -m; ++z) CHECK(cur.z_apply(z) == z);
  }
}

TEST_CASE("omega duality and stability") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    long long m = 2 + static_cast<long long>(rng() % 6);
    long long k = 1 + static_cast<long long>(rng() % (m - 1));
    Element pre = random_gamma(rng, m, k);  // pre(-m) = -k
    Element pi = inverse(pre);              // pi^{-1}(-m) = -k
    int p = static_cast<int>(rng() % 4);
    Element om = omega_product(pi, m, k, p);
    // duality with the pi side
    CHECK(om == inverse(pi_product(inverse(pi), m, k, p)));
    // (v) stability of the image of -m
    CHECK(om.z_apply(-m) == pi.z_apply(-m));
    // (ii) preimage pushed up
    CHECK(om.z_apply_inverse(-m) >= (1ll << p) - m);
    // (iv)
    for (long long z = -m - 5; z < -m; ++z) CHECK(om.z_apply(z) == z);
  }
  CHECK(omega_product(zc({-1, -2}), 2, 1, 0) == zc({-1, -2}));
}

TEST_CASE("collapse_runs") {
  // all-retained cycle: theta is trivial
  Element eps = zc({-1, 4, 5});
  auto r = collapse_runs(eps, 1);
  CHECK(r.theta.is_identity());
  CHECK(r.collapsed == eps);

  // off-ray run gets reversed out of the cycle of -n
  Element run = Element::from_cycles(
      3, {{z_to_point(-1), z_to_point(4), {3, 0}, {3, 1}, z_to_point(5)}});
  r = collapse_runs(run, 1);
  CHECK(r.collapsed.apply(z_to_point(-1)) == z_to_point(4));
  CHECK(r.collapsed.apply(z_to_point(4)) == z_to_point(5));
  CHECK(r.collapsed.apply(z_to_point(5)) == z_to_point(-1));
  CHECK(r.collapsed.apply({3, 0}) == RayPoint{3, 0});
  CHECK(ord_at(r.collapsed, -1) == 3);
  // recomposition: collapsed ∘ theta^{-1} = eps
  CHECK(compose(r.collapsed, inverse(r.theta)) == run);

  // long z-line example with two runs
  Element two = zc({-2, 3, 4, 5, -1, 7, 8, 9, 6});
  r = collapse_runs(two, 2);
  CHECK(compose(r.collapsed, inverse(r.theta)) == two);
  CHECK(r.collapsed.apply(z_to_point(-2)) == two.apply(z_to_point(-2)));
  CHECK(r.collapsed.apply_inverse(z_to_point(-2)) == two.apply_inverse(z_to_point(-2)));
  CHECK(ord_at(r.collapsed, -2) <= 6);

  CHECK_THROWS_AS(collapse_runs(zc({-1, -3, 4}), 1), violation_error);  // moves below -1
}

TEST_CASE("pad_order") {
  Element sigma = zc({-1, 2});
  Element padded = pad_order(sigma, -1, 5);
  CHECK(padded == zc({-1, 2, 4, 5, 6}));
  CHECK(ord_at(padded, -1) == 5);
  CHECK(padded.z_apply(-1) == sigma.z_apply(-1));
  CHECK(padded.z_apply_inverse(-1) == sigma.z_apply_inverse(-1));

  CHECK(pad_order(sigma, -1, 2) == sigma);  // empty padding block
  CHECK_THROWS_AS(pad_order(zc({-1, 2, 3}), -1, 2), violation_error);

  // the claim's order profile 1 + 2^kappa
  for (long long kappa = 1; kappa <= 4; ++kappa) {
    Element eta = pad_order(zc({-2, 0, 1}), -2, 1 + (1ll << kappa));
    CHECK(ord_at(eta, -2) == 1 + (1ll << kappa));
    CHECK(eta.z_apply(-2) == 0);
  }
  // points below x that sigma fixes stay fixed
  Element p2 = pad_order(zc({-1, 2}), -1, 7);
  for (long long z = -8; z < -1; ++z) CHECK(p2.z_apply(z) == z);
}

TEST_CASE("mu_nu and sigma_swap worked example") {
  Element alpha = zc({-2, 0, 3});
  Element beta = compose(alpha, alpha);
  auto mn = mu_nu(alpha, beta, 2, 0);
  CHECK(mn.mu.z_apply(-2) == -1);
  CHECK(mn.mu.z_apply_inverse(-2) >= 0);
  CHECK(compose(mn.mu, mn.nu).z_apply(-2) == -2);
  CHECK(compose(mn.nu, mn.mu).z_apply(-2) == -2);
  for (long long z = -8; z < -2; ++z) {
    CHECK(mn.mu.z_apply(z) == z);
    CHECK(mn.nu.z_apply(z) == z);
  }
  Element sw = sigma_swap(mn.mu, mn.nu, 2, 0);
  CHECK(sw.z_apply(-2) == -1);
  CHECK(sw.z_apply(-1) == -2);
  for (long long z = -10; z < -2; ++z) CHECK(sw.z_apply(z) == z);
  Element sq = compose(sw, sw);
  CHECK(sq.z_apply(-2) == -2);
  CHECK(sq.z_apply(-1) == -1);
}

TEST_CASE("swap pipeline from three-cycles across levels") {
  std::mt19937_64 rng(43);
  for (long long n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      long long a = static_cast<long long>(rng() % 12);
      long long b = static_cast<long long>(rng() % 12);
      if (a == b) continue;
      Element eta = zc({-n, a, b});
      auto mn = mu_nu(eta, compose(eta, eta), n, 0);
      Element sw = sigma_swap(mn.mu, mn.nu, n, 0);
      CHECK(sw.z_apply(-n) == -n + 1);
      CHECK(sw.z_apply(-n + 1) == -n);
      for (long long z = -n - 64; z < -n; ++z) CHECK(sw.z_apply(z) == z);
    }
  }
  // nonzero n0 shifts the level
  Element eta = zc({-6, 0, 2});
  auto mn = mu_nu(eta, compose(eta, eta), 6, 1);
  Element sw = sigma_swap(mn.mu, mn.nu, 4, 1);
  CHECK(sw.z_apply(-2) == -1);
  CHECK(sw.z_apply(-1) == -2);
}

TEST_CASE("mu_nu rejects bad input") {
  Element alpha = zc({-2, 0, 3});
  CHECK_THROWS_AS(mu_nu(alpha, alpha, 2, 0), violation_error);  // alpha^2(-2) != -2
  CHECK_THROWS_AS(mu_nu(zc({-2, -1, 0}), compose(zc({-2, -1, 0}), zc({-2, -1, 0})), 2, 0),
                  violation_error);  // alpha(-2) < 0
}

TEST_CASE("sigma_swap_fixing base and fixed branch") {
  SwapProvider plain = [](long long m) { return zc({-m, -m + 1}); };
  // i = -1 delegates
  CHECK(sigma_swap_fixing(plain, 5, -1, 0) == zc({-5, -4}));
  // i = 0 with exact swaps: -n+2 already fixed, shift branch
  for (long long n = 2; n <= 7; ++n) {
    Element out = sigma_swap_fixing(plain, n, 0, 0);
    CHECK(out.z_apply(-n) == -n + 1);
    CHECK(out.z_apply(-n + 1) == -n);
    CHECK(out.z_apply(-n + 2) == -n + 2);
  }
}

TEST_CASE("sigma_swap_fixing moving branch, R_1 and R_2 images") {
  for (long long n = 5; n <= 8; ++n) {
    for (long long i = 0; i <= 3; ++i) {
      if (n - 3 - i < 1) continue;
      // provider whose level-m output moves the next protected point into R_1
      SwapProvider moving_r1 = [&](long long m) {
        long long probe = -m + 2 + i;
        long long kk = std::min(m - 3 - i, 2ll);
        if (kk < 1 || probe >= -kk) return zc({-m, -m + 1});
        return compose(zc({probe, -kk}), zc({-m, -m + 1}));
      };
      Element out = sigma_swap_fixing(moving_r1, n, i, 0);
      CHECK(out.z_apply(-n) == -n + 1);
      CHECK(out.z_apply(-n + 1) == -n);
      for (long long z = -n + 2; z <= -n + 2 + i; ++z) CHECK(out.z_apply(z) == z);
      for (long long z = -n - 32; z < -n; ++z) CHECK(out.z_apply(z) == z);

      // provider sending the protected point into R_2 (normalized image)
      SwapProvider moving_r2 = [&](long long m) {
        long long probe = -m + 2 + i;
        if (probe >= 4) return zc({-m, -m + 1});
        return compose(zc({probe, 5}), zc({-m, -m + 1}));
      };
      out = sigma_swap_fixing(moving_r2, n, i, 0);
      CHECK(out.z_apply(-n) == -n + 1);
      CHECK(out.z_apply(-n + 1) == -n);
      for (long long z = -n + 2; z <= -n + 2 + i; ++z) CHECK(out.z_apply(z) == z);
    }
  }
}

TEST_CASE("sigma_swap_fixing full pipeline provider") {
  SwapProvider pipeline = [](long long m) {
    Element eta = zc({-m, 0, 1});
    auto mn = mu_nu(eta, compose(eta, eta), m, 0);
    return sigma_swap(mn.mu, mn.nu, m, 0);
  };
  for (long long n = 3; n <= 6; ++n)
    for (long long i = 0; i <= 2; ++i) {
      Element out = sigma_swap_fixing(pipeline, n, i, 0);
      CHECK(out.z_apply(-n) == -n + 1);
      CHECK(out.z_apply(-n + 1) == -n);
      for (long long z = -n + 2; z <= -n + 2 + i; ++z) CHECK(out.z_apply(z) == z);
      for (long long z = -n - 16; z < -n; ++z) CHECK(out.z_apply(z) == z);
    }
}

TEST_CASE("sigma_swap_fixing rejects contract violations") {
  SwapProvider broken = [](long long m) { return zc({-m, -m + 2}); };  // not the swap
  CHECK_THROWS_AS(sigma_swap_fixing(broken, 4, 0, 0), violation_error);
  // image of the protected point leaving rays 1,2 means the provider skipped
  // the normalization step
  SwapProvider offray = [](long long m) {
    if (m < 4) return zc({-m, -m + 1}, 3);
    return compose(Element::from_cycles(3, {{z_to_point(-m + 2), {3, 2}}}),
                   zc({-m, -m + 1}, 3));
  };
  CHECK_THROWS_AS(sigma_swap_fixing(offray, 4, 0, 0), violation_error);
}

TEST_CASE("decompose_two_rays") {
  // already supported on the two rays
  Element inside = zc({-1, 0, 3});
  auto d = decompose_two_rays(inside, 1, 2);
  CHECK(d.f1.is_identity());
  CHECK(d.f2.is_identity());
  CHECK(d.s == inside);

  // single crossing transposition
  Element cross = Element::from_cycles(3, {{{1, 0}, {3, 0}}});
  d = decompose_two_rays(cross, 1, 2);
  CHECK(compose(compose(d.f1, d.s), d.f2) == cross);
  CHECK(member(d.f1, SubsetTag::fix_ray(1)));
  CHECK(member(d.f2, SubsetTag::fix_ray(1)));
  CHECK(member(d.s, SubsetTag::sym_two_rays(1, 2)));

  Sampler s(44);
  for (int k = 0; k < 100; ++k) {
    Element xi = s.finite_perm(3);
    auto dec = decompose_two_rays(xi, 1, 2);
    CHECK(compose(compose(dec.f1, dec.s), dec.f2) == xi);
    CHECK(member(dec.f1, SubsetTag::fix_ray(1)));
    CHECK(member(dec.f2, SubsetTag::fix_ray(1)));
    CHECK(member(dec.s, SubsetTag::sym_two_rays(1, 2)));
    CHECK(dec.f1.finitely_supported());
    CHECK(dec.f2.finitely_supported());
  }
  // other ray pairs work the same way
  for (int k = 0; k < 20; ++k) {
    Element xi = s.finite_perm(4);
    auto dec = decompose_two_rays(xi, 2, 3);
    CHECK(compose(compose(dec.f1, dec.s), dec.f2) == xi);
    CHECK(member(dec.f1, SubsetTag::fix_ray(2)));
    CHECK(member(dec.s, SubsetTag::sym_two_rays(2, 3)));
  }
}

TEST_CASE("retract_to_partial") {
  // already partial: unchanged
  Element h = zc({-1, 0, 4}, 3);
  CHECK(retract_to_partial(h, 1, 2) == h);
  // worked example: t_{3,2} retracts to the identity
  CHECK(retract_to_partial(Element::translation(3, 3, 2), 1, 2).is_identity());

  Sampler s(45);
  for (int k = 0; k < 100; ++k) {
    Element g = s.element(4);
    Element r = retract_to_partial(g, 1, 2);
    for (int ray = 3; ray <= 4; ++ray) CHECK(r.lambda(ray) == 0);
    CHECK(retract_to_partial(r, 1, 2) == r);  // idempotent
  }
}

TEST_CASE("fix_ray_factor") {
  // finitely supported input factors trivially
  Element fin = Element::from_cycles(3, {{{2, 0}, {3, 1}}});
  auto f = fix_ray_factor(fin, 1);
  CHECK(f.sigma == fin);
  CHECK(f.word.empty());
  CHECK(f.word_dsl() == "id");

  // worked example: t_{2,3} has no permutation part
  auto f2 = fix_ray_factor(Element::translation(3, 2, 3), 1);
  CHECK(f2.sigma.is_identity());
  CHECK(f2.word_dsl() == "t[2,3]");

  SubsetSpec fix1 = SubsetSpec::of(3, SubsetTag::syminf(), SubsetTag::fix_ray(1));
  fix1.ambient_whole_group = true;
  std::mt19937_64 rng(46);
  for (int k = 0; k < 100; ++k) {
    Element g = fix1.sample(rng);
    auto fac = fix_ray_factor(g, 1);
    Element word = fac.word_element(3);
    CHECK(compose(fac.sigma, word) == g);
    for (int ray = 2; ray <= 3; ++ray) CHECK(word.lambda(ray) == g.lambda(ray));
    CHECK(member(fac.sigma, SubsetTag::fix_ray(1)));
    CHECK(fac.sigma.finitely_supported());
  }
  CHECK_THROWS_AS(fix_ray_factor(Element::translation(3, 1, 2), 1), violation_error);
}
