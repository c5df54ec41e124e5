#include "pretrop/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace pretrop {

namespace {

struct Walker {
  const std::vector<const Polytope*>& ordered;
  Stats stats;
  std::vector<std::uint64_t> nodes;  // nonempty nodes per level
  std::map<ConeKey, Cone> leaves;

  explicit Walker(const std::vector<const Polytope*>& o)
      : ordered(o), nodes(o.size(), 0) {}

  void expand(const Cone& cone, std::size_t level) {
    ++nodes[level - 1];
    if (level == ordered.size()) {
      leaves.emplace(cone.key(), cone);
      return;
    }
    LevelStats& lstats = stats.level(level + 1);
    for (const EdgeRecord& e : ordered[level]->edges()) {
      Cone child = intersect(cone, e.normal_cone, &lstats);
      if (child.trivial()) {
        ++lstats.cones_discarded_trivial;
        continue;
      }
      expand(child, level + 1);
    }
  }
};

}  // namespace

PretropismResult definitional_pretropisms(
    const std::vector<Polytope>& polytopes, const Options& options) {
  if (polytopes.size() < 2)
    throw std::invalid_argument(
        "definitional_pretropisms: need at least 2 polytopes");
  const int d = polytopes[0].ambient_dim();
  for (const Polytope& p : polytopes)
    if (p.ambient_dim() != d)
      throw std::invalid_argument(
          "definitional_pretropisms: ambient dimension mismatch");

  PretropismResult result;
  result.order.resize(polytopes.size());
  std::iota(result.order.begin(), result.order.end(), 0);
  if (options.sort) result.order = sort_polytopes(polytopes);

  std::vector<const Polytope*> ordered;
  ordered.reserve(polytopes.size());
  for (int idx : result.order) ordered.push_back(&polytopes[idx]);

  const auto& roots = ordered[0]->edges();
  result.stats.level(1);
  result.levels.push_back({1, roots.size()});
  if (roots.empty()) {
    result.degenerate_warning = true;
    result.nodes_per_level.assign(ordered.size(), 0);
    return result;
  }

  unsigned jobs = options.jobs ? options.jobs
                               : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (roots.size() < jobs) jobs = static_cast<unsigned>(roots.size());

  std::vector<Walker> walkers(jobs, Walker(ordered));
  if (jobs <= 1) {
    for (const EdgeRecord& e : roots) walkers[0].expand(e.normal_cone, 1);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= roots.size()) return;
          walkers[w].expand(roots[i].normal_cone, 1);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  result.nodes_per_level.assign(ordered.size(), 0);
  std::map<ConeKey, Cone> leaves;
  for (Walker& w : walkers) {
    result.stats.merge(w.stats);
    for (std::size_t k = 0; k < w.nodes.size(); ++k)
      result.nodes_per_level[k] += w.nodes[k];
    for (auto& [key, cone] : w.leaves) leaves.emplace(key, std::move(cone));
  }
  result.stats.level(ordered.size());

  // Result extraction shares the engine's rule: maximal distinct cones,
  // then the canonical generators.  These containment tests are not part
  // of the definitional operation counts.
  std::vector<Cone> final_cones;
  final_cones.reserve(leaves.size());
  for (auto& [key, cone] : leaves) final_cones.push_back(std::move(cone));
  result.cones = horizontal_prune(std::move(final_cones), nullptr);
  result.rays = extract_rays(result.cones, options.first_positive);
  for (std::size_t i = 2; i <= ordered.size(); ++i) {
    std::size_t count =
        i == ordered.size() ? result.cones.size()
                            : static_cast<std::size_t>(
                                  result.nodes_per_level[i - 1]);
    result.levels.push_back({static_cast<int>(i), count});
  }
  return result;
}

std::vector<Cone> brute_force_skeleton(const Polytope& p, const Cone& c,
                                       LevelStats* stats) {
  if (c.trivial())
    throw std::invalid_argument("brute_force_skeleton: trivial cone");
  std::map<ConeKey, Cone> found;
  for (const EdgeRecord& e : p.edges()) {
    Cone meet = intersect(c, e.normal_cone, stats);
    if (!meet.trivial()) found.emplace(meet.key(), std::move(meet));
  }
  std::vector<Cone> out;
  out.reserve(found.size());
  for (auto& [key, cone] : found) out.push_back(std::move(cone));
  return out;
}

bool check_pretropism_graph_connected(const Polytope& p, const Cone& c) {
  if (c.trivial())
    throw std::invalid_argument(
        "check_pretropism_graph_connected: trivial cone");
  const auto& edges = p.edges();
  std::vector<int> member;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!intersect(c, edges[i].normal_cone, nullptr).trivial())
      member.push_back(static_cast<int>(i));
  if (member.empty()) return true;

  // union-find over vertices joined by member edges
  std::vector<int> parent(p.vertices().size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : member) {
    int a = find(edges[e].endpoints.first);
    int b = find(edges[e].endpoints.second);
    if (a != b) parent[a] = b;
  }
  const int root = find(edges[member[0]].endpoints.first);
  for (int e : member)
    if (find(edges[e].endpoints.first) != root) return false;
  return true;
}

}  // namespace pretrop
