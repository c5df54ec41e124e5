#ifndef PRETROP_TEST_UTIL_HPP
#define PRETROP_TEST_UTIL_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "pretrop/cone.hpp"
#include "pretrop/linalg.hpp"
#include "pretrop/polytope.hpp"

namespace pretrop::test {

inline IntVec iv(std::initializer_list<long> entries) {
  IntVec v;
  for (long e : entries) v.push_back(Int(e));
  return v;
}

inline std::vector<IntVec> ivs(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) out.push_back(iv(r));
  return out;
}

// Random lattice points in [0,30]^dim.
inline std::vector<IntVec> random_points(std::mt19937_64& rng, int dim,
                                         int count) {
  std::vector<IntVec> pts;
  for (int i = 0; i < count; ++i) {
    IntVec p(dim);
    for (int j = 0; j < dim; ++j)
      p[j] = Int(static_cast<long>(rng() % 31));
    pts.push_back(std::move(p));
  }
  return pts;
}

// A polytope with at least one edge, from random points.
inline Polytope random_polytope(std::mt19937_64& rng, int dim,
                                int max_points) {
  for (;;) {
    const int count = 2 + static_cast<int>(rng() % (max_points - 1));
    Polytope p = build_polytope(random_points(rng, dim, count));
    if (!p.edges().empty()) return p;
  }
}

inline std::vector<ConeKey> key_set(const std::vector<Cone>& cones) {
  std::vector<ConeKey> keys;
  for (const Cone& c : cones) keys.push_back(c.key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace pretrop::test

#endif
