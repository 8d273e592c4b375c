#include <set>

#include "doctest.h"
#include "houghton/dsl.hpp"
#include "houghton/element.hpp"
#include "houghton/errors.hpp"
#include "houghton/json_io.hpp"
#include "houghton/subsets.hpp"

using namespace houghton;

namespace {
Element zc(std::initializer_list<long long> pts, int arity = 2) {
  return Element::from_z_cycles(arity, {std::vector<long long>(pts)});
}
}  // namespace

TEST_CASE("translation generators") {
  Element t = Element::translation(3, 1, 2);
  CHECK(t.lambda_vec() == std::vector<long long>{-1, 1, 0});
  CHECK(t.apply({1, 0}) == RayPoint{2, 0});
  CHECK(t.apply({1, 5}) == RayPoint{1, 4});
  CHECK(t.apply({2, 5}) == RayPoint{2, 6});
  CHECK(t.apply({3, 7}) == RayPoint{3, 7});
  CHECK(inverse(t) == Element::translation(3, 2, 1));
  CHECK(compose(t, inverse(t)).is_identity());

  // t acts on the z-line as z -> z+1
  Element t2 = Element::translation(2, 1, 2);
  for (long long z = -6; z <= 6; ++z) CHECK(t2.z_apply(z) == z + 1);
}

TEST_CASE("compose tails and exceptions") {
  Element t = Element::translation(3, 1, 2);
  Element tt = compose(t, t);
  CHECK(tt.lambda_vec() == std::vector<long long>{-2, 2, 0});
  CHECK(tt.apply({1, 0}) == RayPoint{2, 1});
  CHECK(compose(t, Element::translation(3, 2, 3)).lambda_vec() ==
        std::vector<long long>{-1, 0, 1});

  Element cyc = zc({2, 0}, 3);
  CHECK(inverse(zc({0, 1, 2}, 3)) == zc({2, 1, 0}, 3));
  CHECK(compose(cyc, cyc).is_identity());
}

TEST_CASE("apply identity") {
  Element id = Element::identity(3);
  CHECK(id.apply({3, 7}) == RayPoint{3, 7});
  CHECK(inverse(id) == id);
}

TEST_CASE("group laws on random triples") {
  Sampler s(11);
  for (int k = 0; k < 200; ++k) {
    Element a = s.element(3), b = s.element(3), c = s.element(3);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(inverse(a), a).is_identity());
    CHECK(compose(a, Element::identity(3)) == a);
  }
}

TEST_CASE("lambda is a homomorphism with zero sum") {
  Sampler s(12);
  for (int k = 0; k < 100; ++k) {
    Element a = s.element(4), b = s.element(4);
    Element ab = compose(a, b);
    long long sum = 0;
    for (int r = 1; r <= 4; ++r) {
      CHECK(ab.lambda(r) == a.lambda(r) + b.lambda(r));
      sum += ab.lambda(r);
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("finite support iff lambda vanishes") {
  Sampler s(13);
  for (int k = 0; k < 100; ++k) {
    Element a = s.element(3);
    bool lambda_zero = true;
    for (int r = 1; r <= 3; ++r) lambda_zero = lambda_zero && a.lambda(r) == 0;
    CHECK(a.finitely_supported() == lambda_zero);
  }
  // commutators are finitely supported
  for (int k = 0; k < 50; ++k) {
    Element a = s.element(3), b = s.element(3);
    Element comm = compose(compose(a, b), compose(inverse(a), inverse(b)));
    CHECK(comm.finitely_supported());
  }
}

TEST_CASE("apply_inverse matches apply") {
  Sampler s(14);
  for (int k = 0; k < 50; ++k) {
    Element a = s.element(3);
    for (int ray = 1; ray <= 3; ++ray)
      for (Coord c = 0; c < 12; ++c) {
        RayPoint p{ray, c};
        CHECK(a.apply_inverse(a.apply(p)) == p);
        CHECK(a.apply(a.apply_inverse(p)) == p);
      }
  }
}

TEST_CASE("z encode/decode bijection on a window") {
  std::set<long long> seen;
  for (long long z = -5000; z < 5000; ++z) {
    RayPoint p = z_to_point(z);
    CHECK(point_to_z(p) == z);
    seen.insert(z);
  }
  CHECK(seen.size() == 10000);
  for (int ray = 1; ray <= 2; ++ray)
    for (Coord c = 0; c < 5000; ++c) {
      auto z = point_to_z({ray, c});
      REQUIRE(z.has_value());
      CHECK(z_to_point(*z) == RayPoint{ray, c});
    }
}

TEST_CASE("membership tags") {
  Element t = Element::translation(3, 1, 2);
  CHECK(member(t, SubsetTag::partial({1, 2})));
  CHECK_FALSE(member(t, SubsetTag::fix_ray(1)));
  CHECK(member(zc({3, 7}, 3) /* z >= 0: ray 2 */, SubsetTag::fix_ray(1)));
  CHECK(member(Element::from_cycles(3, {{{3, 0}, {3, 4}}}), SubsetTag::fix_ray(1)));
  CHECK(member(t, SubsetTag::ker_lambda(3)));
  CHECK_FALSE(member(t, SubsetTag::ker_lambda(1)));
  CHECK(member(zc({-1, 0}), SubsetTag::syminf()));
  CHECK(member(Element::from_cycles(3, {{{1, 0}, {2, 0}}}), SubsetTag::sym_two_rays(1, 2)));
  CHECK_FALSE(member(Element::from_cycles(3, {{{1, 0}, {3, 0}}}), SubsetTag::sym_two_rays(1, 2)));
}

TEST_CASE("conj_by_t shifts z-support") {
  CHECK(conj_by_t(zc({0, 1}), 1) == zc({1, 2}));
  Sampler s(15);
  for (int k = 0; k < 40; ++k) {
    Element sigma = s.finite_perm(2);
    CHECK(conj_by_t(sigma, 0) == sigma);
    long long sh = static_cast<long long>(k % 5);
    Element moved = conj_by_t(sigma, sh);
    for (const auto& e : sigma.exceptions()) {
      auto z = point_to_z(e.first);
      REQUIRE(z.has_value());
      CHECK(moved.z_apply(*z + sh) == sigma.z_apply(*z) + sh);
    }
  }
}

TEST_CASE("element DSL") {
  Element g = parse_element("t[1,2]^3", 3);
  CHECK(g.lambda_vec() == std::vector<long long>{-3, 3, 0});
  CHECK(parse_element("(2:0 2:1)", 3) == Element::from_cycles(3, {{{2, 0}, {2, 1}}}));
  CHECK(parse_element("(-1 0)", 2) == Element::from_cycles(2, {{{1, 0}, {2, 0}}}));
  CHECK(parse_element("t[1,2] * t[2,1]", 2).is_identity());
  CHECK(parse_element("t[1,2] t[2,1]", 2).is_identity());
  CHECK(parse_element("id", 1).is_identity());
  CHECK(parse_element("((0 1))^2", 2).is_identity());
  CHECK(parse_element("(0 1 2)^-1", 2) == zc({2, 1, 0}));

  CHECK_THROWS_AS(parse_element("(0 0)", 2), usage_error);      // repeated point
  CHECK_THROWS_AS(parse_element("t[1,1]", 2), usage_error);     // equal rays
  CHECK_THROWS_AS(parse_element("t[1,2", 2), usage_error);      // syntax
  CHECK_THROWS_AS(parse_element("(1:0 3:0)", 2), usage_error);  // ray out of range
  CHECK_THROWS_AS(parse_element("", 2), usage_error);

  Sampler s(16);
  for (int k = 0; k < 100; ++k) {
    Element a = s.element(3);
    CHECK(parse_element(format_element(a), 3) == a);
    Element b = s.element(2);
    CHECK(parse_element(format_element(b), 2) == b);
  }
}

TEST_CASE("json round trip and golden form") {
  Element t = Element::translation(2, 1, 2);
  CHECK(element_to_json(t).dump() == R"({"n":2,"v":[-1,1],"exc":[[[1,0],[2,0]]]})");
  CHECK(element_to_json(Element::identity(1)).dump() == R"({"n":1,"v":[0],"exc":[]})");
  Sampler s(17);
  for (int k = 0; k < 60; ++k) {
    Element a = s.element(3);
    CHECK(element_from_json_text(element_to_json(a).dump()) == a);
  }
  CHECK_THROWS_AS(element_from_json_text(R"({"n":2,"v":[1,-1],"exc":[]})"), usage_error);
  CHECK_THROWS_AS(element_from_json_text("not json"), usage_error);
}

TEST_CASE("lift embeds with fixed extra rays") {
  Element t = Element::translation(2, 1, 2);
  Element lifted = t.lift(4);
  CHECK(lifted.arity() == 4);
  CHECK(lifted.lambda_vec() == std::vector<long long>{-1, 1, 0, 0});
  CHECK(lifted.apply({3, 2}) == RayPoint{3, 2});
  CHECK_THROWS_AS(Element::identity(3).lift(2), usage_error);
}

TEST_CASE("canonical form drops forced data only") {
  // below-threshold fixed points are omitted from the table
  Element g = parse_element("(1:0 1:2)", 2);
  CHECK(g.exceptions().size() == 2);  // (1,1) stays implicit
  CHECK(g.apply({1, 1}) == RayPoint{1, 1});
  CHECK(g.threshold(1) == 3);
  // mixing with a translation keeps thresholds minimal
  Element h = compose(Element::translation(2, 2, 1), Element::translation(2, 1, 2));
  CHECK(h.is_identity());
  CHECK(h.threshold(1) == 0);
  CHECK(h.threshold(2) == 0);
}

TEST_CASE("compose arity mismatch is an error") {
  CHECK_THROWS_AS(compose(Element::identity(2), Element::identity(3)), usage_error);
}
