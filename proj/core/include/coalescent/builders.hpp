#pragma once

#include <map>
#include <string>
#include <vector>

#include "coalescent/complex.hpp"

namespace coalescent {

struct NamedComplex {
  SimplicialComplex complex;
  std::string name;
  std::map<std::string, VertexId> marked_vertices;
  std::map<std::string, std::vector<Simplex>> marked_simplices;
};

/// Closure of one n-simplex on vertices 0..n. Throws Error(DimensionTooHigh)
/// for n > 6 and Error(InvalidParameter) for n < 0.
NamedComplex full_simplex(int n);

/// Boundary of the (n+1)-simplex, 1 <= n <= 3.
NamedComplex boundary_sphere(int n);

/// Cone over a k-cycle: apex 0, rim 1..k. Throws Error(InvalidParameter) for k < 3.
NamedComplex disc_fan(int k);

/// c plus the join of every simplex with `apex`. Throws Error(ApexCollision).
NamedComplex cone(const SimplicialComplex& c, VertexId apex);

enum class DunceHatScheme { Quotient, Minimal8 };

/// The dunce hat; marked vertex "V" is the class of the three corners.
NamedComplex dunce_hat(DunceHatScheme scheme = DunceHatScheme::Quotient);

/// The quotient recipe with an explicit subdivision: `edgewise`-fold edgewise
/// subdivision of the big triangle, then `barycentric_rounds` barycentric
/// subdivisions, then the side identification. Coarse recipes throw
/// Error(NonSimplicialQuotient). The result is not run through the validation
/// battery.
NamedComplex dunce_hat_from_subdivision(int edgewise, int barycentric_rounds);

/// Bing's house with two rooms, from axis-aligned grid rectangles split into
/// two triangles each.
NamedComplex bings_house();

/// The dunce hat with a disc E glued along an arc L through V. Marked
/// simplices: "L" (the four gluing edges), "free-arc" (edges of the boundary
/// of E off L), "E" (the triangles of E).
NamedComplex dunce_hat_with_flap();

}  // namespace coalescent
