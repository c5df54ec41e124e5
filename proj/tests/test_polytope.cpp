#include <doctest.h>

#include <random>

#include "pretrop/polytope.hpp"
#include "test_util.hpp"

using namespace pretrop;
using namespace pretrop::test;

namespace {

Polytope unit_square() {
  return build_polytope(ivs({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

int find_edge(const Polytope& p, const IntVec& u, const IntVec& v) {
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    const auto& e = p.edges()[i];
    const IntVec& a = p.vertices()[e.endpoints.first];
    const IntVec& b = p.vertices()[e.endpoints.second];
    if ((a == u && b == v) || (a == v && b == u)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TEST_CASE("unit square hull") {
  Polytope p = unit_square();
  CHECK(p.vertices().size() == 4);
  CHECK(p.edges().size() == 4);
  CHECK(p.facets().size() == 4);
  CHECK(p.intrinsic_dim() == 2);
  CHECK(p.lineality_basis().empty());

  const int bottom = find_edge(p, iv({0, 0}), iv({1, 0}));
  REQUIRE(bottom >= 0);
  const Cone& nc = p.edges()[bottom].normal_cone;
  CHECK(nc.canonical_rays() == ivs({{0, 1}}));
  CHECK(nc.dim() == 1);
}

TEST_CASE("a segment in the plane keeps its lineality") {
  Polytope p = build_polytope(ivs({{0, 0}, {2, 0}}));
  CHECK(p.vertices().size() == 2);
  REQUIRE(p.edges().size() == 1);
  CHECK(p.intrinsic_dim() == 1);
  REQUIRE(p.lineality_basis().size() == 1);
  const Cone& nc = p.edges()[0].normal_cone;
  CHECK(nc.canonical_rays().empty());
  CHECK(nc.canonical_lineality() == ivs({{0, 1}}));
  CHECK(nc.dim() == 1);
}

TEST_CASE("dilated simplex keeps only corner vertices") {
  std::vector<IntVec> points;
  for (long i = 0; i <= 2; ++i)
    for (long j = 0; j + i <= 2; ++j) points.push_back(iv({i, j}));
  REQUIRE(points.size() == 6);  // lattice points of 2*simplex in 2d
  Polytope p = build_polytope(points);
  auto verts = p.vertices();
  std::sort(verts.begin(), verts.end(), lex_less);
  CHECK(verts == ivs({{0, 0}, {0, 2}, {2, 0}}));
}

TEST_CASE("single point polytope is valid and degenerate") {
  Polytope p = build_polytope(ivs({{3, 1, 2}}));
  CHECK(p.vertices().size() == 1);
  CHECK(p.edges().empty());
  CHECK(p.facets().empty());
  CHECK(p.intrinsic_dim() == 0);
  CHECK(p.lineality_basis().size() == 3);
  CHECK(edges_touching(p, initial_face(p, iv({1, 0, 0}))).empty());
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(build_polytope({}), std::invalid_argument);
}

TEST_CASE("initial_face on the unit square") {
  Polytope p = unit_square();
  SUBCASE("unique minimizer") {
    auto f = initial_face(p, iv({1, 1}));
    REQUIRE(f.vertex_indices.size() == 1);
    CHECK(p.vertices()[f.vertex_indices[0]] == iv({0, 0}));
  }
  SUBCASE("tie along the left edge") {
    auto f = initial_face(p, iv({1, 0}));
    REQUIRE(f.vertex_indices.size() == 2);
    std::vector<IntVec> got;
    for (int v : f.vertex_indices) got.push_back(p.vertices()[v]);
    std::sort(got.begin(), got.end(), lex_less);
    CHECK(got == ivs({{0, 0}, {0, 1}}));
  }
  SUBCASE("zero ray rejected") {
    CHECK_THROWS_AS(initial_face(p, iv({0, 0})), std::invalid_argument);
  }
}

TEST_CASE("edges_touching counts incident edges") {
  Polytope p = unit_square();
  auto corner = initial_face(p, iv({1, 1}));
  CHECK(edges_touching(p, corner).size() == 2);
  auto left = initial_face(p, iv({1, 0}));
  CHECK(edges_touching(p, left).size() == 3);
}

TEST_CASE("facet round trip: offsets are attained minima") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const int dim = 2 + static_cast<int>(rng() % 3);
    Polytope p = random_polytope(rng, dim, 9);
    for (const Facet& f : p.facets()) {
      Int best = dot(f.inner_normal, p.vertices()[0]);
      int tight = 0;
      for (const IntVec& v : p.vertices()) {
        Int val = dot(f.inner_normal, v);
        CHECK(val >= f.offset);
        if (val < best) best = val;
      }
      CHECK(best == f.offset);
      for (const IntVec& v : p.vertices())
        if (dot(f.inner_normal, v) == f.offset) ++tight;
      CHECK(tight >= p.intrinsic_dim());
      for (const IntVec& pt : p.points())
        CHECK(dot(f.inner_normal, pt) >= f.offset);
    }
  }
}

TEST_CASE("edge normal cones select exactly their edge") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 25; ++t) {
    const int dim = 2 + static_cast<int>(rng() % 3);
    Polytope p = random_polytope(rng, dim, 8);
    for (const auto& e : p.edges()) {
      const IntVec r = interior_ray(e.normal_cone, 0);
      auto face = initial_face(p, r);
      std::vector<int> expect{e.endpoints.first, e.endpoints.second};
      std::sort(expect.begin(), expect.end());
      CHECK(face.vertex_indices == expect);
    }
  }
}

TEST_CASE("vertex set ignores permutation and duplication of input") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto pts = random_points(rng, 3, 7);
    Polytope a = build_polytope(pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.push_back(pts[rng() % pts.size()]);
    pts.push_back(pts[rng() % pts.size()]);
    Polytope b = build_polytope(pts);
    auto va = a.vertices();
    auto vb = b.vertices();
    std::sort(va.begin(), va.end(), lex_less);
    std::sort(vb.begin(), vb.end(), lex_less);
    CHECK(va == vb);
    CHECK(a.edges().size() == b.edges().size());
  }
}

TEST_CASE("euler formula holds for random 3-dimensional hulls") {
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 30) {
    Polytope p = build_polytope(random_points(rng, 3, 10));
    if (p.intrinsic_dim() != 3) continue;
    ++checked;
    const long v = static_cast<long>(p.vertices().size());
    const long e = static_cast<long>(p.edges().size());
    const long f = static_cast<long>(p.facets().size());
    CHECK(v - e + f == 2);
  }
}

TEST_CASE("edge graph is connected") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const int dim = 2 + static_cast<int>(rng() % 4);
    Polytope p = random_polytope(rng, dim, 10);
    const auto& edges = p.edges();
    std::vector<char> seen(edges.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      for (int nb : edges[e].neighbor_edges)
        if (!seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
    }
    for (char s : seen) CHECK(s == 1);
  }
}
