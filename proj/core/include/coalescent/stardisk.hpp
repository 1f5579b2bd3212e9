#pragma once

#include <cstddef>
#include <vector>

#include "coalescent/complex.hpp"
#include "coalescent/link_graph.hpp"
#include "coalescent/numeric.hpp"

namespace coalescent {

/// Outcome of the star-disk test at one point: a vertex, or the interior
/// points of an edge (`point` is then the edge).
struct StarDiskResult {
  Simplex point;
  bool holds = true;
  /// Simplices of the star of `point` that lie in no embedded disc having
  /// the point in its manifold interior.
  std::vector<Simplex> failing_simplices;

  bool is_vertex() const { return point.size() == 1; }
};

struct StarDiskReport {
  std::vector<StarDiskResult> per_vertex;
  std::vector<StarDiskResult> per_edge;
  bool all_hold = true;

  std::vector<StarDiskResult> failures() const;
};

/// Link-cycle criterion at a vertex: a triangle through v qualifies iff its
/// link edge is not a bridge, an edge through v iff its link node lies on a
/// cycle, and {v} iff the link has a cycle. The discs are cones from v over
/// simple link cycles.
StarDiskResult vertex_star_disk(const SimplicialComplex& c, VertexId v);

/// Interior points of an edge pass iff the edge lies in at least two triangles.
StarDiskResult edge_star_disk(const SimplicialComplex& c, const Simplex& edge);

/// Every vertex and every edge. Interior points of triangles always pass and
/// are not listed. Throws Error(DimensionTooHigh) above dimension 2.
StarDiskReport star_disk_report(const SimplicialComplex& c);

/// Independent check of vertex_star_disk: enumerates the subsets of the
/// triangles through v and tests each for disc-ness directly, skipping only
/// subsets in which some edge through v lies in exactly one or more than two
/// chosen triangles. Throws
/// Error(StarTooLarge) when v lies in more than `max_star_triangles` triangles.
StarDiskResult brute_force_disk_oracle(const SimplicialComplex& c, VertexId v,
                                       std::size_t max_star_triangles = 12);

/// Simplicial self-map of a k-cycle, given by vertex images (positions mod k).
struct CycleMap {
  int cycle_length = 0;
  std::vector<int> images;
};

/// Adjacent positions map to equal or adjacent positions.
bool is_simplicial(const CycleMap& m);

/// Signed winding degree of the piecewise-linear extension that joins
/// consecutive images along the shorter arc. Simplicial maps always qualify;
/// a step between antipodal positions has no shorter arc and throws
/// Error(NotSimplicial).
int circle_degree(const CycleMap& m);

/// Largest circular distance between a point of the cycle and its image under
/// the same piecewise-linear extension, in units of edges. Throws
/// Error(NotSimplicial) as circle_degree does.
Rational max_displacement(const CycleMap& m);

/// Circular distance between vertex positions and their images only.
int max_vertex_displacement(const CycleMap& m);

}  // namespace coalescent
