#pragma once

#include <cstddef>
#include <vector>

#include "latpolar/errors.hpp"
#include "latpolar/numeric.hpp"

namespace latpolar {

// Points are fixed-length coordinate vectors; the length always equals the
// ambient dimension of the containing object.
using LatticePoint = std::vector<Int>;
using RationalPoint = std::vector<Rat>;

Int dot(const LatticePoint& a, const LatticePoint& b);
Rat dot(const RationalPoint& a, const RationalPoint& b);
Rat dot(const std::vector<Int>& a, const RationalPoint& b);
Int dot(const std::vector<Int>& a, const LatticePoint& b);

LatticePoint negated(const LatticePoint& p);
RationalPoint to_rational(const LatticePoint& p);
// Exact conversion; every coordinate must have denominator 1.
LatticePoint to_lattice(const RationalPoint& p);

// A finite set of integer points, deduplicated and lexicographically sorted.
// Sets produced by saturate() and lattice_points_in() are saturated, i.e.
// equal to conv(points) intersected with the integer lattice.
class LatticeSet {
 public:
  LatticeSet() = default;
  LatticeSet(int dim, std::vector<LatticePoint> points);

  int dim() const { return dim_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  Int count() const { return Int(points_.size()); }
  bool empty() const { return points_.empty(); }

  bool contains(const LatticePoint& p) const;
  bool subset_of(const LatticeSet& other) const;

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  int dim_ = 0;
  std::vector<LatticePoint> points_;
};

// Closed halfspace normal·x <= offset. Facet normals are primitive integer
// vectors oriented outward; offsets are integral whenever the polytope has
// integer vertices.
struct Facet {
  std::vector<Int> normal;
  Rat offset;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

// V-representation with the extreme points only. The facet list is complete
// exactly when the hull is full-dimensional; lower-dimensional hulls carry an
// empty facet list and full_dimensional == false.
struct RationalPolytope {
  int dim = 0;
  std::vector<RationalPoint> vertices;  // lexicographically sorted
  std::vector<Facet> facets;            // sorted by (normal, offset)
  bool full_dimensional = false;
};

}  // namespace latpolar
