#ifndef PRETROP_STATS_HPP
#define PRETROP_STATS_HPP

#include <cstdint>
#include <vector>

namespace pretrop {

// Operation counters for one refinement level.
struct LevelStats {
  std::uint64_t intersections = 0;
  std::uint64_t containment_checks = 0;
  std::uint64_t containment_hits = 0;
  std::uint64_t edges_visited = 0;
  std::uint64_t cones_pruned_horizontal = 0;
  std::uint64_t cones_discarded_trivial = 0;

  void add(const LevelStats& o) {
    intersections += o.intersections;
    containment_checks += o.containment_checks;
    containment_hits += o.containment_hits;
    edges_visited += o.edges_visited;
    cones_pruned_horizontal += o.cones_pruned_horizontal;
    cones_discarded_trivial += o.cones_discarded_trivial;
  }

  bool operator==(const LevelStats&) const = default;
};

// Per-level breakdown; totals are the sum of the levels.
struct Stats {
  std::vector<LevelStats> per_level;  // index k holds level k+1

  LevelStats& level(std::size_t level_index) {
    if (per_level.size() < level_index) per_level.resize(level_index);
    return per_level[level_index - 1];
  }

  LevelStats totals() const {
    LevelStats t;
    for (const auto& l : per_level) t.add(l);
    return t;
  }

  void merge(const Stats& o) {
    if (per_level.size() < o.per_level.size())
      per_level.resize(o.per_level.size());
    for (std::size_t i = 0; i < o.per_level.size(); ++i)
      per_level[i].add(o.per_level[i]);
  }

  bool operator==(const Stats&) const = default;
};

}  // namespace pretrop

#endif
