#ifndef PRETROP_POLYTOPE_HPP
#define PRETROP_POLYTOPE_HPP

#include <utility>
#include <vector>

#include "pretrop/cone.hpp"
#include "pretrop/linalg.hpp"

namespace pretrop {

struct EdgeRecord {
  std::pair<int, int> endpoints;        // vertex indices, first < second
  std::vector<int> neighbor_edges;      // edges sharing an endpoint
  std::vector<int> tight_facets;        // facets containing this edge
  Cone normal_cone;
};

// Vertices of P minimizing the inner product with defining_ray.
struct SupportFace {
  std::vector<int> vertex_indices;
  IntVec defining_ray;
};

struct Facet {
  IntVec inner_normal;  // <normal, x> >= offset over the polytope
  Int offset;
};

/// Convex hull of a set of lattice points with the data the traversal
/// needs: deduplicated vertices, facet inequalities in the inner-normal
/// convention, the edge skeleton with adjacency, and per-edge normal
/// cones augmented with the lineality space when the polytope is not
/// full dimensional.
class Polytope {
 public:
  int ambient_dim() const { return ambient_dim_; }
  int intrinsic_dim() const {
    return static_cast<int>(affine_span_basis_.size());
  }
  const std::vector<IntVec>& points() const { return points_; }
  const std::vector<IntVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const std::vector<IntVec>& affine_span_basis() const {
    return affine_span_basis_;
  }
  const std::vector<IntVec>& lineality_basis() const {
    return lineality_basis_;
  }

 private:
  friend Polytope build_polytope(const std::vector<IntVec>& points);

  int ambient_dim_ = 0;
  std::vector<IntVec> points_;
  std::vector<IntVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<EdgeRecord> edges_;
  std::vector<IntVec> affine_span_basis_;
  std::vector<IntVec> lineality_basis_;
};

Polytope build_polytope(const std::vector<IntVec>& points);

/// Vertices attaining the minimum of <r, v> over the vertices of P.
SupportFace initial_face(const Polytope& p, const IntVec& r);

/// Indices of all edges with at least one endpoint in the face.
std::vector<int> edges_touching(const Polytope& p, const SupportFace& face);

}  // namespace pretrop

#endif
