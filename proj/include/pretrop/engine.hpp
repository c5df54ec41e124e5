#ifndef PRETROP_ENGINE_HPP
#define PRETROP_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "pretrop/cone.hpp"
#include "pretrop/polytope.hpp"
#include "pretrop/stats.hpp"

namespace pretrop {

struct Options {
  std::uint64_t seed = 0;
  unsigned jobs = 0;       // 0: use available parallelism
  bool sort = true;        // process polytopes by lineality dimension
  bool first_positive = false;  // keep only rays with positive first entry
  // Stronger form: drop cones during refinement that cannot contain a ray
  // with positive first coordinate. Off by default so results stay
  // comparable with the definitional route.
  bool first_positive_exploration = false;
};

struct LevelSummary {
  int level_index = 0;        // number of polytopes incorporated
  std::size_t cone_count = 0; // surviving cones after pruning
};

struct PretropismResult {
  std::vector<Cone> cones;    // final refinement level, pruned
  std::vector<IntVec> rays;   // deduplicated primitive generators
  Stats stats;
  std::vector<LevelSummary> levels;
  std::vector<int> order;     // processing order of the input polytopes
  std::vector<std::uint64_t> nodes_per_level;  // definitional runs only
  bool degenerate_warning = false;  // first polytope had no edges
};

/// All nontrivial intersections of C with edge normal cones of P, found
/// by breadth-first traversal of the edge skeleton seeded at the face
/// minimizing an interior ray of C. Containment is tested before
/// intersecting; neighbors are expanded only from edges that produced a
/// cone. Result is deduplicated and sorted by canonical key.
std::vector<Cone> explore_edge_skeleton(const Polytope& p, const Cone& c,
                                        std::uint64_t seed,
                                        LevelStats* stats);

/// Level-wise refinement over all polytopes with horizontal pruning.
PretropismResult find_pretropisms(const std::vector<Polytope>& polytopes,
                                  const Options& options = {});

/// Maximal elements under set containment, deduplicated by key first.
std::vector<Cone> horizontal_prune(std::vector<Cone> cones,
                                   LevelStats* stats);

/// Stable permutation ordering the polytopes by lineality dimension
/// ascending; entry i is the input index processed i-th.
std::vector<int> sort_polytopes(const std::vector<Polytope>& polytopes);

/// Pretropism-graph sizes n_e(E_{P_j, e_i}) for every edge e_i of the
/// first polytope and every later polytope P_j, probed directly.
struct PretropismGraphSizes {
  // sizes[i][j] = graph size on polytope j+2 for edge i of polytope 1
  std::vector<std::vector<std::int64_t>> sizes;
};
PretropismGraphSizes probe_pretropism_graph_sizes(
    const std::vector<Polytope>& ordered);

/// Sum over first-polytope edges of the product of recorded graph sizes.
Int cost_bound(const PretropismGraphSizes& recorded);

/// Sum over rays of max_i v_i - min(min_i v_i, 0).
Int degree_sum(const std::vector<IntVec>& rays);

/// Union of canonical extreme rays and both signs of the lineality basis
/// over the given cones, primitive, deduplicated, sorted.
std::vector<IntVec> extract_rays(const std::vector<Cone>& cones,
                                 bool first_positive);

}  // namespace pretrop

#endif
