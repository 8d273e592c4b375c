#include "doctest.h"
#include "houghton/certificate.hpp"
#include "houghton/confining.hpp"
#include "houghton/errors.hpp"
#include "houghton/norm.hpp"
#include "houghton/subsets.hpp"

using namespace houghton;

namespace {
Element zc(std::initializer_list<long long> pts, int arity = 2) {
  return Element::from_z_cycles(arity, {std::vector<long long>(pts)});
}
SubsetSpec fix1_syminf() {
  return SubsetSpec::of(2, SubsetTag::syminf(), SubsetTag::fix_ray(1));
}
Conjugation tau() { return Conjugation(Element::translation(2, 1, 2)); }
}  // namespace

TEST_CASE("escape time equals k on Fix(R_1)") {
  SubsetSpec q = fix1_syminf();
  Conjugation a = tau();
  CHECK(escape_time(q, a, zc({0, 1}), 16) == 0);
  CHECK(escape_time(q, a, zc({-3, -2}), 16) == 3);
  CHECK(escape_time(q, a, zc({-1, 5}), 16) == 1);
  Sampler s(31);
  for (int k = 0; k < 200; ++k) {
    Element sigma = s.finite_perm(2);
    CHECK(escape_time(q, a, sigma, 64) == k_of(sigma));
  }
}

TEST_CASE("tau strictly confines the symmetric group into Fix(R_1)") {
  ConfiningOptions opts;
  opts.samples = 200;
  opts.seed = 7;
  ConfiningReport rep = check_confining(fix1_syminf(), tau(), opts);
  CHECK(rep.invariance_ok);
  CHECK(rep.n0_found == 0);
  CHECK(rep.exhaustion_ok);
  REQUIRE(rep.strict_witness.has_value());
  CHECK(*rep.strict_witness == zc({0, 1}));
  CHECK(rep.confining());
  CHECK(rep.strictly_confining());
  auto j = rep.to_json();
  CHECK(j["strict_witness"] == "(0 1)");
}

TEST_CASE("whole symmetric group is confining but not strictly") {
  SubsetSpec q = SubsetSpec::whole(2, SubsetTag::syminf());
  ConfiningReport rep = check_confining(q, tau(), {});
  CHECK(rep.confining());
  CHECK(rep.n0_found == 0);
  CHECK_FALSE(rep.strict_witness.has_value());
}

TEST_CASE("Fix(R_2) fails invariance under tau with a checkable witness") {
  SubsetSpec q = SubsetSpec::of(2, SubsetTag::syminf(), SubsetTag::fix_ray(2));
  Conjugation a = tau();
  ConfiningReport rep = check_confining(q, a, {});
  CHECK_FALSE(rep.invariance_ok);
  REQUIRE(rep.invariance_counterexample.has_value());
  Element w = *rep.invariance_counterexample;
  CHECK(w == zc({-2, -1}));
  CHECK(q.contains(w));
  CHECK_FALSE(q.contains(a.apply(w)));
  CHECK_FALSE(rep.confining());
}

TEST_CASE("alpha-invariance with arbitrary nonnegative shift") {
  SubsetSpec q = fix1_syminf();
  Conjugation a = tau();
  Sampler s(32);
  for (int k = 0; k < 60; ++k) {
    Element g = q.sample(s.rng());
    for (long long sh = 0; sh <= 10; ++sh) CHECK(q.contains(a.apply(g, sh)));
  }
  // product closure at n0 = 0
  for (int k = 0; k < 60; ++k)
    CHECK(q.contains(compose(q.sample(s.rng()), q.sample(s.rng()))));
}

TEST_CASE("confining_union verifies bounded subsets and refutes unbounded ones") {
  SubsetSpec q = fix1_syminf();
  Conjugation a = tau();

  SubsetSpec s_contained = SubsetSpec::window_family(2, SubsetTag::syminf(),
                                                     Window{}.add(2, 0, 3));
  auto u = confining_union(q, s_contained, a, 4, {});
  REQUIRE(u.merged.has_value());
  CHECK(u.diameter == 1);
  CHECK(u.merged->contains(zc({0, 3})));
  CHECK(u.merged->diameter == 1);

  auto same = confining_union(SubsetSpec::whole(2, SubsetTag::syminf()),
                              SubsetSpec::whole(2, SubsetTag::syminf()), a, 4, {});
  REQUIRE(same.merged.has_value());
  CHECK(same.diameter == 1);

  // (-1 0) moves a ray-1 point; no product of R_1-fixing letters reaches it
  SubsetSpec s_bad = SubsetSpec::singleton(2, SubsetTag::syminf(), zc({-1, 0}));
  auto refuted = confining_union(q, s_bad, a, 4, {});
  CHECK_FALSE(refuted.merged.has_value());
  REQUIRE(refuted.refutation.has_value());
  CHECK(*refuted.refutation == zc({-1, 0}));
}

TEST_CASE("closure certificates: search then verify") {
  SubsetSpec q = fix1_syminf();
  Conjugation a = tau();
  SeedFamily seeds{{zc({-2, -1}), zc({-1, 3})}, 2};
  CertifyOptions opts;
  opts.seed = 5;

  // leaf in Q
  auto c = closure_certify(zc({0, 4}), q, seeds, 0, a, opts);
  REQUIRE(c.has_value());
  CHECK(c->kind == ClosureCertificate::Kind::LeafQ);
  CHECK(verify_certificate(*c, q, seeds, 0, a) == zc({0, 4}));

  // seed power leaf
  Element target = a.apply(seeds.seeds[0], 2);
  c = closure_certify(target, q, seeds, 0, a, opts);
  REQUIRE(c.has_value());
  CHECK(c->kind == ClosureCertificate::Kind::LeafSeed);
  CHECK(verify_certificate(*c, q, seeds, 0, a) == target);

  // one product step: alpha^{n0}(q1 q2) with sampled members
  long long n0 = 1;
  std::mt19937_64 rng(opts.seed);
  Element q1 = q.sample(rng), q2 = q.sample(rng);
  Element prod = a.apply(compose(q1, q2), n0);
  c = closure_certify(prod, q, seeds, n0, a, opts);
  REQUIRE(c.has_value());
  CHECK(verify_certificate(*c, q, seeds, n0, a) == prod);
}

TEST_CASE("certificate round trip on random right combs") {
  SubsetSpec q = fix1_syminf();
  Conjugation a = tau();
  SeedFamily seeds{{zc({-2, -1})}, 2};
  CertifyOptions opts;
  opts.seed = 9;
  std::mt19937_64 rng(99);
  int done = 0;
  for (int k = 0; k < 100; ++k) {
    // random element built the way the closure builds them
    std::mt19937_64 pool_rng(opts.seed);
    Element g = q.sample(rng);
    int depth = static_cast<int>(rng() % 3);
    for (int d = 0; d < depth; ++d) g = a.apply(compose(q.sample(rng), g), 0);
    auto c = closure_certify(g, q, seeds, 0, a, opts);
    REQUIRE(c.has_value());
    CHECK(verify_certificate(*c, q, seeds, 0, a) == g);
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("K-collapse: certified elements land in Q after alpha^K at n0=0") {
  SubsetSpec q = fix1_syminf();
  Conjugation a = tau();
  SeedFamily seeds{{zc({-2, -1}), zc({-2, 0, 1})}, 2};
  std::mt19937_64 rng(123);
  for (int k = 0; k < 60; ++k) {
    Element g = seeds.seeds[rng() % 2];
    g = a.apply(g, static_cast<long long>(rng() % 3));
    if (rng() % 2) g = compose(q.sample(rng), g);
    auto c = closure_certify(g, q, seeds, 0, a, {});
    if (!c) continue;
    Element certified = verify_certificate(*c, q, seeds, 0, a);
    CHECK(q.contains(a.apply(certified, seeds.K)));
  }
}

TEST_CASE("certificate verification rejects mutations") {
  SubsetSpec q = fix1_syminf();
  Conjugation a = tau();
  SeedFamily seeds{{zc({-2, -1})}, 2};

  ClosureCertificate good =
      ClosureCertificate::node(ClosureCertificate::leaf_q(zc({0, 1})),
                               ClosureCertificate::leaf_q(zc({1, 2})));
  Element val = verify_certificate(good, q, seeds, 1, a);
  CHECK(val == a.apply(compose(zc({0, 1}), zc({1, 2})), 1));

  ClosureCertificate bad_leaf = good;
  bad_leaf.children[0].value = zc({-1, 0});  // not in Q
  CHECK_THROWS_AS(verify_certificate(bad_leaf, q, seeds, 1, a), violation_error);

  ClosureCertificate bad_seed = good;
  bad_seed.children[1] = ClosureCertificate::leaf_seed(1, 7);  // index invalid
  CHECK_THROWS_AS(verify_certificate(bad_seed, q, seeds, 1, a), violation_error);

  ClosureCertificate bad_level = good;
  bad_level.level = 0;  // children no longer below the node
  CHECK_THROWS_AS(verify_certificate(bad_level, q, seeds, 1, a), violation_error);

  // fuzz: flip random leaves of random certificates to non-members
  std::mt19937_64 rng(7);
  for (int k = 0; k < 40; ++k) {
    ClosureCertificate c = ClosureCertificate::node(
        ClosureCertificate::leaf_q(q.sample(rng)),
        ClosureCertificate::node(ClosureCertificate::leaf_q(q.sample(rng)),
                                 ClosureCertificate::leaf_seed(rng() % 4, 0)));
    (void)verify_certificate(c, q, seeds, 0, a);
    ClosureCertificate& leaf = rng() % 2 ? c.children[0] : c.children[1].children[0];
    leaf.value = zc({-1, static_cast<long long>(rng() % 4)});
    CHECK_THROWS_AS(verify_certificate(c, q, seeds, 0, a), violation_error);
  }
}

TEST_CASE("closure_certify rejects bad seed families") {
  SubsetSpec q = fix1_syminf();
  Conjugation a = tau();
  SeedFamily seeds{{zc({-2, -1})}, 1};  // alpha^1 still moves -1: not in Q
  CHECK_THROWS_AS(closure_certify(zc({0, 1}), q, seeds, 0, a, {}), violation_error);
}
