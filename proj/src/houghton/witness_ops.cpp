#include "houghton/witness_ops.hpp"

#include <algorithm>
#include <set>

#include "houghton/errors.hpp"
#include "houghton/subsets.hpp"

namespace houghton {

namespace {

[[noreturn]] void violation(const std::string& what) { throw violation_error(what); }

void require_perm(const Element& g, const std::string& who) {
  if (!g.finitely_supported()) violation(who + ": element is not finitely supported");
}

// "fixes (-inf,-m) pointwise" as a z-line condition; support away from rays
// 1,2 is unconstrained.
void require_fixes_below(const Element& g, long long m, const std::string& who) {
  for (const auto& e : g.exceptions()) {
    auto z = point_to_z(e.first);
    if (z && *z < -m)
      violation(who + ": moves z-point " + std::to_string(*z) + " below -" + std::to_string(m));
  }
}

long long z_image(const Element& g, long long z, const std::string& who) {
  auto out = point_to_z(g.apply(z_to_point(z)));
  if (!out) violation(who + ": image of " + std::to_string(z) + " left rays 1,2");
  return *out;
}

long long z_preimage(const Element& g, long long z, const std::string& who) {
  auto out = point_to_z(g.apply_inverse(z_to_point(z)));
  if (!out) violation(who + ": preimage of " + std::to_string(z) + " left rays 1,2");
  return *out;
}

Element z_swap(int arity, long long a) { return Element::from_z_cycles(arity, {{a, a + 1}}); }

std::vector<RayPoint> cycle_of(const Element& g, RayPoint start) {
  std::vector<RayPoint> cyc{start};
  for (RayPoint p = g.apply(start); p != start; p = g.apply(p)) {
    cyc.push_back(p);
    if (cyc.size() > 1u << 20) violation("cycle tracing runaway");
  }
  return cyc;
}

}  // namespace

long long ord_at(const Element& sigma, long long x) {
  require_perm(sigma, "ord_at");
  RayPoint start = z_to_point(x);
  long long k = 1;
  for (RayPoint p = sigma.apply(start); p != start; p = sigma.apply(p)) ++k;
  return k;
}

Element pi_product(const Element& gamma, long long m, long long k, int p) {
  require_perm(gamma, "pi_product");
  require_fixes_below(gamma, m, "pi_product");
  if (!(1 <= k && k < m)) violation("pi_product: need 1 <= k < m");
  if (z_image(gamma, -m, "pi_product") != -k)
    violation("pi_product: gamma(-m) != -k");
  Element acc = gamma;
  long long step = m - k;
  for (long long i = 1; i < (1ll << p); ++i) acc = compose(conj_by_t(gamma, i * step), acc);
  return acc;
}

Element omega_product(const Element& pi, long long m, long long k, int p) {
  require_perm(pi, "omega_product");
  require_fixes_below(pi, m, "omega_product");
  if (!(1 <= k && k < m)) violation("omega_product: need 1 <= k < m");
  if (z_preimage(pi, -m, "omega_product") != -k)
    violation("omega_product: pi^{-1}(-m) != -k");
  Element acc = pi;
  long long step = m - k;
  for (long long i = 1; i < (1ll << p); ++i) acc = compose(acc, conj_by_t(pi, i * step));
  return acc;
}

CollapseResult collapse_runs(const Element& eps, long long n) {
  require_perm(eps, "collapse_runs");
  require_fixes_below(eps, n, "collapse_runs");
  RayPoint minus_n = z_to_point(-n);
  RayPoint img = eps.apply(minus_n);
  RayPoint pre = eps.apply_inverse(minus_n);
  if (img.ray != 2) violation("collapse_runs: eps(-n) not in R_2");
  if (pre.ray != 2) violation("collapse_runs: eps^{-1}(-n) not in R_2");

  std::vector<RayPoint> cyc = cycle_of(eps, minus_n);
  size_t N = cyc.size();
  std::vector<std::vector<RayPoint>> theta_cycles;
  size_t s = 1;
  while (s < N) {
    if (cyc[s].ray == 1) {
      ++s;
      continue;
    }
    size_t i = s;
    while (s < N && cyc[s].ray != 1) ++s;
    size_t j = s - 1;  // run cyc[i..j] off R_1, bounded by R_1 on the left
    if (j > i) {
      std::vector<RayPoint> c;
      for (size_t t = j - 1; t + 1 > i; --t) c.push_back(cyc[t]);
      theta_cycles.push_back(std::move(c));
    }
  }
  CollapseResult out;
  out.theta = Element::from_cycles(eps.arity(), theta_cycles);
  out.collapsed = compose(eps, out.theta);

  if (out.collapsed.apply(minus_n) != img || out.collapsed.apply_inverse(minus_n) != pre)
    violation("collapse_runs: endpoints of -n changed");
  std::vector<RayPoint> short_cyc = cycle_of(out.collapsed, minus_n);
  if (static_cast<long long>(short_cyc.size()) > 3 * n)
    violation("collapse_runs: collapsed cycle longer than 3n");
  for (size_t t = 0; t < short_cyc.size(); ++t) {
    if (short_cyc[t].ray == 1) continue;
    bool near_r1 = short_cyc[(t + 1) % short_cyc.size()].ray == 1 ||
                   short_cyc[(t + short_cyc.size() - 1) % short_cyc.size()].ray == 1;
    if (!near_r1) violation("collapse_runs: retained entry not adjacent to R_1");
  }
  return out;
}

Element pad_order(const Element& sigma, long long x, long long target) {
  require_perm(sigma, "pad_order");
  long long cur = ord_at(sigma, x);
  if (target < cur) violation("pad_order: target below current order");
  if (target == cur) return sigma;
  RayPoint img = sigma.apply(z_to_point(x));
  auto imgz = point_to_z(img);
  if (!imgz || *imgz < 0) violation("pad_order: sigma(x) is not on R_2");
  long long m = 0;
  for (const auto& e : sigma.exceptions()) {
    auto z = point_to_z(e.first);
    if (z) m = std::max(m, *z);
  }
  ++m;  // first fresh point past the z-support
  std::vector<long long> cyc{*imgz};
  for (long long c = 1; c <= target - cur; ++c) cyc.push_back(m + c);
  Element padded = compose(sigma, Element::from_z_cycles(sigma.arity(), {cyc}));
  if (ord_at(padded, x) != target) violation("pad_order: order check failed");
  return padded;
}

MuNuResult mu_nu(const Element& alpha, const Element& beta, long long n, long long n0) {
  require_perm(alpha, "mu_nu");
  require_perm(beta, "mu_nu");
  if (alpha.arity() != beta.arity()) throw usage_error("mu_nu: arity mismatch");
  if (n0 < 0 || n <= 2 * n0) violation("mu_nu: need n > 2*n0 >= 0");
  require_fixes_below(alpha, n, "mu_nu(alpha)");
  require_fixes_below(beta, n, "mu_nu(beta)");
  if (z_image(compose(alpha, beta), -n, "mu_nu") != -n ||
      z_image(compose(beta, alpha), -n, "mu_nu") != -n)
    violation("mu_nu: alpha and beta do not commute at -n");
  long long a_img = z_image(alpha, -n, "mu_nu");
  long long a_pre = z_preimage(alpha, -n, "mu_nu");
  if (a_img < 0 || a_pre < 0) violation("mu_nu: alpha(-n) or alpha^{-1}(-n) below 0");

  Element swap = z_swap(alpha.arity(), a_img);
  MuNuResult out;
  out.mu = conj_by_t(compose(conj_by_t(beta, 1), compose(swap, alpha)), 2 * n0);
  out.nu = conj_by_t(compose(beta, compose(swap, conj_by_t(alpha, 1))), 2 * n0);

  long long np = n - 2 * n0;
  if (z_image(out.mu, -np, "mu_nu") != -np + 1) violation("mu_nu: mu(-n') != -n'+1");
  if (z_preimage(out.mu, -np, "mu_nu") < 0) violation("mu_nu: mu^{-1}(-n') < 0");
  if (z_image(compose(out.mu, out.nu), -np, "mu_nu") != -np ||
      z_image(compose(out.nu, out.mu), -np, "mu_nu") != -np)
    violation("mu_nu: mu and nu do not commute at -n'");
  require_fixes_below(out.mu, np, "mu_nu(mu)");
  require_fixes_below(out.nu, np, "mu_nu(nu)");
  return out;
}

Element sigma_swap(const Element& mu, const Element& nu, long long n, long long n0) {
  require_perm(mu, "sigma_swap");
  require_perm(nu, "sigma_swap");
  if (mu.arity() != nu.arity()) throw usage_error("sigma_swap: arity mismatch");
  if (n0 < 0 || n <= 2 * n0) violation("sigma_swap: need n > 2*n0 >= 0");
  require_fixes_below(mu, n, "sigma_swap(mu)");
  require_fixes_below(nu, n, "sigma_swap(nu)");
  if (z_image(mu, -n, "sigma_swap") != -n + 1) violation("sigma_swap: mu(-n) != -n+1");
  long long mu_pre = z_preimage(mu, -n, "sigma_swap");
  if (mu_pre < 0) violation("sigma_swap: mu^{-1}(-n) < 0");
  if (z_image(compose(mu, nu), -n, "sigma_swap") != -n ||
      z_image(compose(nu, mu), -n, "sigma_swap") != -n)
    violation("sigma_swap: mu and nu do not commute at -n");

  Element swap = z_swap(mu.arity(), mu_pre);
  Element out = conj_by_t(compose(conj_by_t(mu, 1), compose(swap, nu)), 2 * n0);

  long long np = n - 2 * n0;
  if (z_image(out, -np, "sigma_swap") != -np + 1 || z_image(out, -np + 1, "sigma_swap") != -np)
    violation("sigma_swap: result does not switch -n' and -n'+1");
  require_fixes_below(out, np, "sigma_swap(result)");
  return out;
}

namespace {

void check_swap_contract(const Element& s, long long m, long long region_hi_offset,
                         const std::string& who) {
  require_perm(s, who);
  require_fixes_below(s, m, who);
  if (z_image(s, -m, who) != -m + 1 || z_image(s, -m + 1, who) != -m)
    violation(who + ": does not switch -" + std::to_string(m) + " and -" + std::to_string(m) +
              "+1");
  for (long long z = -m + 2; z <= -m + 1 + region_hi_offset; ++z)
    if (z_image(s, z, who) != z)
      violation(who + ": moves protected point " + std::to_string(z));
}

}  // namespace

Element sigma_swap_fixing(const SwapProvider& provider, long long n, long long i, long long n0) {
  if (n < 1) throw usage_error("sigma_swap_fixing: level must be >= 1");
  if (n0 < 0) throw usage_error("sigma_swap_fixing: n0 must be >= 0");
  if (i < -1) throw usage_error("sigma_swap_fixing: i must be >= -1");
  if (i == -1) {
    Element base = provider(n);
    check_swap_contract(base, n, -1, "provider level " + std::to_string(n));
    return base;
  }

  long long N = n + n0;
  auto fetch = [&](long long m) -> Element {
    if (m <= 0) {
      Element t = z_swap(2, -m);
      return t;
    }
    Element s = provider(m);
    check_swap_contract(s, m, i, "provider level " + std::to_string(m));
    return s;
  };

  Element sigma = fetch(N);
  int arity = sigma.arity();
  auto fetch_at = [&](long long m) -> Element {
    if (m <= 0) return z_swap(arity, -m);
    return fetch(m);
  };

  long long probe = -N + 2 + i;
  RayPoint img = sigma.apply(z_to_point(probe));
  auto imgz = point_to_z(img);
  if (!imgz)
    violation("sigma_swap_fixing: provider image of " + std::to_string(probe) +
              " left rays 1,2 (missing normalization)");

  Element out;
  if (*imgz == probe) {
    out = conj_by_t(sigma, n0);
  } else {
    long long k = -*imgz;
    long long a = N - k - 3 - i;
    if (a < 0) violation("sigma_swap_fixing: image of protected point too low");
    Element chain = Element::identity(arity);
    for (long long x = k + 1; x <= N - 2 - i; ++x)
      chain = compose(fetch_at(a * n0 + x), chain);
    out = conj_by_t(compose(conj_by_t(chain, a * n0), sigma), n0);
  }

  check_swap_contract(out, n, i + 1, "sigma_swap_fixing result");
  return out;
}

TwoRayDecomposition decompose_two_rays(const Element& xi, int i, int j) {
  require_perm(xi, "decompose_two_rays");
  int n = xi.arity();
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw usage_error("decompose_two_rays: bad ray pair");

  TwoRayDecomposition out{Element::identity(n), xi, Element::identity(n)};
  bool inside = true;
  for (const auto& e : xi.exceptions())
    if (e.first.ray != i && e.first.ray != j) {
      inside = false;
      break;
    }
  if (inside) return out;

  std::vector<RayPoint> A, B;  // crossings out of and into ray i
  for (const auto& e : xi.exceptions()) {
    if (e.first.ray == i && e.second.ray != i) A.push_back(e.first);
    if (e.first.ray != i && e.second.ray == i) B.push_back(e.first);
  }
  size_t N = A.size();

  // staging points: least unused coordinates on ray j
  std::set<Coord> used;
  for (const auto& e : xi.exceptions())
    if (e.first.ray == j) used.insert(e.first.coord);
  std::vector<RayPoint> stage;
  for (Coord c = 0; stage.size() < 2 * N; ++c)
    if (!used.count(c)) stage.push_back({j, c});
  std::vector<RayPoint> ya(stage.begin(), stage.begin() + static_cast<long>(N));
  std::vector<RayPoint> yb(stage.begin() + static_cast<long>(N), stage.end());

  std::vector<std::vector<RayPoint>> f2_cycles;
  for (size_t l = 0; l < N; ++l) f2_cycles.push_back({B[l], yb[l]});
  Element f2 = Element::from_cycles(n, f2_cycles);

  std::vector<std::pair<RayPoint, RayPoint>> s_map;
  for (const auto& e : xi.exceptions())
    if (e.first.ray == i && e.second.ray == i) s_map.push_back(e);
  for (size_t l = 0; l < N; ++l) {
    s_map.push_back({A[l], ya[l]});
    s_map.push_back({yb[l], xi.apply(B[l])});
    s_map.push_back({ya[l], yb[l]});
  }
  Element s = Element::from_map(n, std::vector<long long>(static_cast<size_t>(n), 0),
                                std::move(s_map));
  Element f1 = compose(compose(xi, inverse(f2)), inverse(s));

  auto in_fix = [&](const Element& f) {
    return f.finitely_supported() && member(f, SubsetTag::fix_ray(i));
  };
  if (!in_fix(f1) || !in_fix(f2)) violation("decompose_two_rays: factor leaves Fix(R_i)");
  if (!member(s, SubsetTag::sym_two_rays(i, j)))
    violation("decompose_two_rays: middle factor leaves Sym(R_i ∪ R_j)");
  if (compose(compose(f1, s), f2) != xi) violation("decompose_two_rays: recomposition failed");
  out.f1 = std::move(f1);
  out.s = std::move(s);
  out.f2 = std::move(f2);
  return out;
}

Element retract_to_partial(const Element& h, int i, int j) {
  int n = h.arity();
  if (n < 3) throw usage_error("retract_to_partial needs arity >= 3");
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw usage_error("retract_to_partial: bad ray pair");
  Element correction = Element::identity(n);
  for (int k = 1; k <= n; ++k) {
    if (k == i || k == j) continue;
    if (h.lambda(k) == 0) continue;
    correction = compose(correction, Element::translation(n, k, j, h.lambda(k)));
  }
  Element out = compose(h, correction);
  for (int k = 1; k <= n; ++k)
    if (k != i && k != j && out.lambda(k) != 0)
      violation("retract_to_partial: correction missed ray " + std::to_string(k));
  return out;
}

Element FixRayFactorisation::word_element(int arity) const {
  Element a = Element::identity(arity);
  for (const auto& [r, s, e] : word) a = compose(a, Element::translation(arity, r, s, e));
  return a;
}

std::string FixRayFactorisation::word_dsl() const {
  if (word.empty()) return "id";
  std::string out;
  for (const auto& [r, s, e] : word) {
    if (!out.empty()) out += " ";
    out += "t[" + std::to_string(r) + "," + std::to_string(s) + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

FixRayFactorisation fix_ray_factor(const Element& g, int i) {
  int n = g.arity();
  if (n < 3) throw usage_error("fix_ray_factor needs arity >= 3");
  if (i < 1 || i > n) throw usage_error("fix_ray_factor: bad ray");
  if (g.lambda(i) != 0 || !member(g, SubsetTag::fix_ray(i)))
    violation("fix_ray_factor: element does not fix ray " + std::to_string(i));

  int pivot = (i == 1) ? 2 : 1;
  FixRayFactorisation out;
  for (int k = 1; k <= n; ++k) {
    if (k == i || k == pivot || g.lambda(k) == 0) continue;
    out.word.emplace_back(pivot, k, g.lambda(k));
  }
  Element a = out.word_element(n);
  out.sigma = compose(g, inverse(a));
  if (!out.sigma.finitely_supported() || !member(out.sigma, SubsetTag::fix_ray(i)))
    violation("fix_ray_factor: permutation part invalid");
  if (compose(out.sigma, a) != g) violation("fix_ray_factor: recomposition failed");
  return out;
}

}  // namespace houghton
