#pragma once

#include <optional>
#include <vector>

#include "latpolar/geometry.hpp"

namespace latpolar {

// Exact convex hull. Returns the extreme points and, for full-dimensional
// hulls, the complete canonical facet list. Lower-dimensional hulls are legal
// values (empty facet list, flag cleared).
//
// Dimension 2 runs a monotone chain over exact arithmetic; higher dimensions
// enumerate facet supports over a reduced candidate set with exact
// orientation tests. Inputs of any dimension <= 4 stay comfortably inside
// desk scale.
RationalPolytope convex_hull(const std::vector<RationalPoint>& points, int dim);
RationalPolytope convex_hull(const std::vector<LatticePoint>& points, int dim);

// Extreme points of conv(S), integer coordinates preserved.
std::vector<LatticePoint> vertices(const LatticeSet& s);

// Exact set of integer points inside the polytope. Full-dimensional
// polytopes are scanned over the integer bounding box with per-facet tests;
// lower-dimensional ones additionally require membership in the affine span.
LatticeSet lattice_points_in(const RationalPolytope& p);

// conv(points) intersected with the integer lattice. Idempotent.
LatticeSet saturate(const std::vector<LatticePoint>& points, int dim);

// True iff every facet inequality is strict at the origin.
bool contains_origin_interior(const RationalPolytope& p);

// Exact membership test (boundary counts as inside).
bool polytope_contains(const RationalPolytope& p, const RationalPoint& x);
bool polytope_contains(const RationalPolytope& p, const LatticePoint& x);

// Affine rank of a point set: 0 for a single point, dim for a
// full-dimensional set.
int affine_rank(const std::vector<RationalPoint>& points);
int affine_rank(const std::vector<LatticePoint>& points);

// Bounded intersection of closed halfspaces, as a polytope. Throws Unbounded
// when the intersection has a nonzero recession direction and Empty when no
// point satisfies all constraints.
RationalPolytope halfspace_intersection(const std::vector<Facet>& halfspaces, int dim);

}  // namespace latpolar
