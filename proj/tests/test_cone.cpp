#include <doctest.h>

#include <random>

#include "pretrop/cone.hpp"
#include "test_util.hpp"

using namespace pretrop;
using namespace pretrop::test;

namespace {

Cone quadrant(std::initializer_list<long> a, std::initializer_list<long> b) {
  return cone_from_rays({iv(a), iv(b)}, {}, 2);
}

// Random cone in the given dimension from a few random rays, sometimes
// with a lineality direction.
Cone random_cone(std::mt19937_64& rng, int dim, int max_rays) {
  std::vector<IntVec> rays;
  const int count = 1 + static_cast<int>(rng() % max_rays);
  for (int i = 0; i < count; ++i) {
    IntVec r(dim);
    bool zero = true;
    for (auto& x : r) {
      x = Int(static_cast<long>(rng() % 11)) - 5;
      if (sign_of(x) != 0) zero = false;
    }
    if (zero) r[rng() % dim] = 1;
    rays.push_back(std::move(r));
  }
  std::vector<IntVec> lin;
  if (rng() % 4 == 0) {
    IntVec l(dim, Int(0));
    l[rng() % dim] = 1;
    lin.push_back(std::move(l));
  }
  return cone_from_rays(rays, lin, dim);
}

}  // namespace

TEST_CASE("cone_from_rays computes the dual description") {
  SUBCASE("first quadrant") {
    Cone c = quadrant({1, 0}, {0, 1});
    CHECK(c.dim() == 2);
    CHECK(c.canonical_rays().size() == 2);
    CHECK(c.lineality().empty());
    // inequalities are x >= 0 and y >= 0 in some order
    auto keys = c.inequalities();
    std::sort(keys.begin(), keys.end(), lex_less);
    CHECK(keys == ivs({{0, 1}, {1, 0}}));
  }
  SUBCASE("a line from lineality input") {
    Cone c = cone_from_rays({}, {iv({1, 1})}, 2);
    CHECK(c.dim() == 1);
    CHECK(c.canonical_rays().empty());
    REQUIRE(c.equations().size() == 1);
    CHECK(sign_of(dot(c.equations()[0], iv({1, 1}))) == 0);
  }
  SUBCASE("redundant middle ray is dropped") {
    Cone c = cone_from_rays(ivs({{1, 0}, {1, 1}, {1, 2}}), {}, 2);
    CHECK(c.canonical_rays() == ivs({{1, 0}, {1, 2}}));
  }
  SUBCASE("opposite rays become lineality") {
    Cone c = cone_from_rays(ivs({{1, 0}, {-1, 0}}), {}, 2);
    CHECK(c.dim() == 1);
    CHECK(c.canonical_rays().empty());
    CHECK(c.canonical_lineality() == ivs({{1, 0}}));
  }
}

TEST_CASE("intersect on the stated examples") {
  LevelStats stats;
  SUBCASE("adjacent quadrants share an axis") {
    Cone c = intersect(quadrant({1, 0}, {0, 1}), quadrant({0, 1}, {-1, 0}),
                       &stats);
    CHECK(stats.intersections == 1);
    CHECK(c.dim() == 1);
    CHECK(c.canonical_rays() == ivs({{0, 1}}));
  }
  SUBCASE("self intersection is identity on keys") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
      Cone c = random_cone(rng, 3, 4);
      CHECK(intersect(c, c, &stats).key() == c.key());
    }
  }
  SUBCASE("opposite quadrants meet only at zero") {
    Cone c = intersect(quadrant({1, 0}, {0, 1}), quadrant({-1, 0}, {0, -1}),
                       &stats);
    CHECK(c.dim() == 0);
    CHECK(is_trivial(c));
  }
}

TEST_CASE("contains on the stated examples") {
  LevelStats stats;
  Cone quad = quadrant({1, 0}, {0, 1});
  Cone diag = cone_from_rays({iv({1, 1})}, {}, 2);
  Cone zero = cone_from_rays({}, {}, 2);
  CHECK(contains(quad, diag, &stats));
  CHECK_FALSE(contains(diag, quad, &stats));
  CHECK(contains(diag, zero, &stats));
  CHECK(contains(zero, zero, &stats));
  CHECK(stats.containment_checks == 4);
  CHECK(stats.containment_hits == 3);
}

TEST_CASE("is_trivial distinguishes dimension zero") {
  CHECK(is_trivial(cone_from_rays({}, {}, 3)));
  CHECK_FALSE(is_trivial(cone_from_rays({iv({1, 2})}, {}, 2)));
  CHECK_FALSE(is_trivial(cone_from_rays({}, {iv({1, 0})}, 2)));
}

TEST_CASE("interior_ray on the stated examples") {
  CHECK(interior_ray(quadrant({1, 0}, {0, 1})) == iv({1, 1}));
  CHECK(interior_ray(cone_from_rays({iv({2, 4})}, {}, 2)) == iv({1, 2}));
  CHECK(interior_ray(cone_from_rays({}, {iv({1, 0, 0})}, 3)) ==
        iv({1, 0, 0}));
  CHECK_THROWS_AS(interior_ray(cone_from_rays({}, {}, 2)),
                  std::invalid_argument);
}

TEST_CASE("interior_ray satisfies non-implicit inequalities strictly") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    Cone c = random_cone(rng, 2 + static_cast<int>(rng() % 3), 4);
    if (is_trivial(c)) continue;
    const IntVec r = interior_ray(c, t);
    for (const IntVec& eq : c.equations()) CHECK(sign_of(dot(eq, r)) == 0);
    for (const IntVec& a : c.inequalities()) {
      bool implicit = true;
      for (const IntVec& g : c.rays())
        if (sign_of(dot(a, g)) != 0) implicit = false;
      for (const IntVec& g : c.lineality())
        if (sign_of(dot(a, g)) != 0) implicit = false;
      if (implicit)
        CHECK(sign_of(dot(a, r)) == 0);
      else
        CHECK(sign_of(dot(a, r)) > 0);
    }
  }
}

TEST_CASE("canonical_key identifies equal sets") {
  SUBCASE("same quadrant from different generator lists") {
    Cone a = quadrant({1, 0}, {0, 1});
    Cone b = cone_from_rays(ivs({{0, 1}, {1, 0}, {1, 1}}), {}, 2);
    CHECK(canonical_key(a) == canonical_key(b));
  }
  SUBCASE("zero cone has the key of empty lists") {
    Cone z = cone_from_rays({}, {}, 2);
    CHECK(z.canonical_rays().empty());
    CHECK(z.canonical_lineality().empty());
  }
  SUBCASE("a line has one canonical form regardless of sign") {
    Cone a = cone_from_rays({}, {iv({1, 1})}, 2);
    Cone b = cone_from_rays({}, {iv({-1, -1})}, 2);
    CHECK(canonical_key(a) == canonical_key(b));
  }
}

TEST_CASE("cone algebra invariants on random cones") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 200) {
    const int dim = 2 + static_cast<int>(rng() % 4);  // ambient dim <= 5
    Cone a = random_cone(rng, dim, 6);
    Cone b = random_cone(rng, dim, 6);
    Cone c = random_cone(rng, dim, 6);
    ++done;

    // commutativity and associativity at the key level
    CHECK(intersect(a, b).key() == intersect(b, a).key());
    CHECK(intersect(intersect(a, b), c).key() ==
          intersect(a, intersect(b, c)).key());

    // intersection is inside both operands
    Cone ab = intersect(a, b);
    CHECK(contains(a, ab));
    CHECK(contains(b, ab));

    // contains <-> intersect consistency
    CHECK(contains(a, b) == (intersect(a, b).key() == b.key()));

    // V -> H -> V round trip: rebuild from the halfspaces
    Cone rebuilt = cone_from_halfspaces(a.inequalities(), a.equations(),
                                        dim);
    CHECK(rebuilt.key() == a.key());

    // rebuild from canonical generators
    Cone regen = cone_from_rays(a.canonical_rays(), a.canonical_lineality(),
                                dim);
    CHECK(regen.key() == a.key());
  }
}
