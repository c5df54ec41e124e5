#include "pretrop/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "dd.hpp"

namespace pretrop {

namespace {

std::vector<IntVec> dedup_points(const std::vector<IntVec>& points) {
  std::vector<IntVec> out = points;
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Polytope build_polytope(const std::vector<IntVec>& points) {
  if (points.empty())
    throw std::invalid_argument("build_polytope: empty point set");
  const int d = static_cast<int>(points[0].size());
  if (d < 1) throw std::invalid_argument("build_polytope: zero dimension");
  for (const IntVec& p : points)
    if (static_cast<int>(p.size()) != d)
      throw std::invalid_argument("build_polytope: mixed dimensions");

  Polytope poly;
  poly.ambient_dim_ = d;
  poly.points_ = dedup_points(points);

  // Facets and the affine hull come from the dual of the homogenization
  // cone spanned by (1, p).
  std::vector<IntVec> lifted;
  lifted.reserve(poly.points_.size());
  for (const IntVec& p : poly.points_) {
    IntVec row(d + 1);
    row[0] = 1;
    for (int j = 0; j < d; ++j) row[j + 1] = p[j];
    lifted.push_back(std::move(row));
  }
  dd::VRep dual = dd::enumerate(d + 1, {}, lifted);

  // Affine hull equations e·x = c, one per dual lineality row (c0, e).
  std::vector<IntVec> eq_normals;
  std::vector<Int> eq_offsets;
  for (const IntVec& row : dual.lineality) {
    IntVec e(row.begin() + 1, row.end());
    if (is_zero_vec(e)) continue;  // would mean 1 = 0; impossible here
    eq_normals.push_back(std::move(e));
    eq_offsets.push_back(-row[0]);
  }

  // Facet rows (b0, a) give a·x >= -b0; drop rows tight at no point (the
  // zero face of the homogenization cone, present only for a single point).
  std::vector<std::vector<char>> facet_tight;  // facet x point
  for (const IntVec& row : dual.rays) {
    IntVec a(row.begin() + 1, row.end());
    Int b = -row[0];
    std::vector<char> tight(poly.points_.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < poly.points_.size(); ++i) {
      if (dot(a, poly.points_[i]) == b) {
        tight[i] = 1;
        any = true;
      }
    }
    if (!any) continue;
    poly.facets_.push_back(Facet{std::move(a), std::move(b)});
    facet_tight.push_back(std::move(tight));
  }

  // A point is a vertex iff its tight constraints pin it completely.
  std::vector<int> vertex_of_point(poly.points_.size(), -1);
  for (std::size_t i = 0; i < poly.points_.size(); ++i) {
    std::vector<IntVec> rows = eq_normals;
    for (std::size_t f = 0; f < poly.facets_.size(); ++f)
      if (facet_tight[f][i]) rows.push_back(poly.facets_[f].inner_normal);
    if (rank_int_rows(rows, d) == static_cast<std::size_t>(d)) {
      vertex_of_point[i] = static_cast<int>(poly.vertices_.size());
      poly.vertices_.push_back(poly.points_[i]);
    }
  }
  const std::size_t nv = poly.vertices_.size();

  // tight facets per vertex
  std::vector<std::vector<int>> vertex_tight(nv);
  for (std::size_t i = 0; i < poly.points_.size(); ++i) {
    if (vertex_of_point[i] < 0) continue;
    for (std::size_t f = 0; f < poly.facets_.size(); ++f)
      if (facet_tight[f][i])
        vertex_tight[vertex_of_point[i]].push_back(static_cast<int>(f));
  }

  poly.affine_span_basis_ = kernel_basis_int_rows(eq_normals, d);
  poly.lineality_basis_ = kernel_basis_int_rows(poly.affine_span_basis_, d);

  // Edges: vertex pairs whose common tight constraints leave one degree
  // of freedom.
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t v = u + 1; v < nv; ++v) {
      std::vector<int> shared;
      std::set_intersection(vertex_tight[u].begin(), vertex_tight[u].end(),
                            vertex_tight[v].begin(), vertex_tight[v].end(),
                            std::back_inserter(shared));
      std::vector<IntVec> rows = eq_normals;
      for (int f : shared) rows.push_back(poly.facets_[f].inner_normal);
      if (rank_int_rows(rows, d) != static_cast<std::size_t>(d) - 1) continue;

      EdgeRecord e;
      e.endpoints = {static_cast<int>(u), static_cast<int>(v)};
      e.tight_facets = shared;
      std::vector<IntVec> gen;
      gen.reserve(shared.size());
      for (int f : shared) gen.push_back(poly.facets_[f].inner_normal);
      e.normal_cone = cone_from_rays(gen, poly.lineality_basis_, d);
      poly.edges_.push_back(std::move(e));
    }
  }

  // shared-vertex adjacency
  std::vector<std::vector<int>> at_vertex(nv);
  for (std::size_t i = 0; i < poly.edges_.size(); ++i) {
    at_vertex[poly.edges_[i].endpoints.first].push_back(static_cast<int>(i));
    at_vertex[poly.edges_[i].endpoints.second].push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < poly.edges_.size(); ++i) {
    auto& nb = poly.edges_[i].neighbor_edges;
    for (int v : {poly.edges_[i].endpoints.first,
                  poly.edges_[i].endpoints.second})
      for (int j : at_vertex[v])
        if (j != static_cast<int>(i)) nb.push_back(j);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  return poly;
}

SupportFace initial_face(const Polytope& p, const IntVec& r) {
  if (static_cast<int>(r.size()) != p.ambient_dim())
    throw std::invalid_argument("initial_face: dimension mismatch");
  if (is_zero_vec(r))
    throw std::invalid_argument("initial_face: zero ray");
  SupportFace face;
  face.defining_ray = r;
  const auto& verts = p.vertices();
  if (verts.empty()) return face;
  Int best = dot(r, verts[0]);
  for (std::size_t i = 1; i < verts.size(); ++i) {
    Int val = dot(r, verts[i]);
    if (val < best) best = val;
  }
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (dot(r, verts[i]) == best)
      face.vertex_indices.push_back(static_cast<int>(i));
  return face;
}

std::vector<int> edges_touching(const Polytope& p, const SupportFace& face) {
  std::vector<char> in_face(p.vertices().size(), 0);
  for (int v : face.vertex_indices) in_face[v] = 1;
  std::vector<int> out;
  const auto& edges = p.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (in_face[edges[i].endpoints.first] ||
        in_face[edges[i].endpoints.second])
      out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace pretrop
