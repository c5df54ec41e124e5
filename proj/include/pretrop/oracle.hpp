#ifndef PRETROP_ORACLE_HPP
#define PRETROP_ORACLE_HPP

#include "pretrop/engine.hpp"

namespace pretrop {

/// The definitional route: expand the full refinement tree level by
/// level, intersecting every cone with every edge normal cone of the next
/// polytope.  No skeleton traversal, no pruning, no dedup during the
/// expansion; every performed intersection is counted.  The final cone
/// set is reduced to maximal elements so the extracted ray set matches
/// the engine's.
PretropismResult definitional_pretropisms(
    const std::vector<Polytope>& polytopes, const Options& options = {});

/// Intersection of C with every edge normal cone of P, keeping the
/// nontrivial ones; the traversal-free oracle for explore_edge_skeleton.
/// Deduplicated and sorted by canonical key.
std::vector<Cone> brute_force_skeleton(const Polytope& p, const Cone& c,
                                       LevelStats* stats = nullptr);

/// Builds the subgraph of edges whose normal cones meet C nontrivially
/// and reports whether it is connected (vacuously true when empty).
bool check_pretropism_graph_connected(const Polytope& p, const Cone& c);

}  // namespace pretrop

#endif
