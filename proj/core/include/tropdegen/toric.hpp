#pragma once

#include <span>
#include <vector>

#include "tropdegen/exponent.hpp"
#include "tropdegen/point_cloud.hpp"

namespace tropdegen {

/// Finite set A of lattice points whose convex hull is a full-dimensional
/// lattice polytope, together with the extreme points of conv(A).
///
/// Used as the moment polytope of a polarized projective toric variety;
/// the default for degree-d plane curves is d times the unit triangle with
/// every lattice point included.
class LatticePolytope {
 public:
  /// Throws std::invalid_argument when the points are empty, repeated, of
  /// mixed dimension or not affinely spanning. Vertices are computed for
  /// dimensions 1 and 2; higher dimensions are rejected.
  explicit LatticePolytope(std::vector<ExponentVector> lattice_points);

  /// d * conv{0, e_1, e_2} with all of its lattice points.
  static LatticePolytope dilated_triangle(int degree);

  std::size_t dim() const { return dim_; }
  const std::vector<ExponentVector>& lattice_points() const { return points_; }
  /// Extreme points of conv(A), counter-clockwise in the plane.
  const std::vector<ExponentVector>& vertices() const { return vertices_; }

  /// Membership in conv(A) with absolute slack `tol` on each facet inequality.
  bool contains(std::span<const double> x, double tol = 1e-12) const;

 private:
  std::size_t dim_;
  std::vector<ExponentVector> points_;
  std::vector<ExponentVector> vertices_;
};

/// mu(z) = sum |z^m| m / sum |z^m| over the lattice points, with the weights
/// formed in log space and shifted by their maximum.
/// Throws std::domain_error if some z_i = 0.
std::vector<double> moment_map(const LatticePolytope& polytope, std::span<const Complex> z);

/// nu(w) = sum e^{-<m,w>} m / sum e^{-<m,w>}; equals mu(e^{-w_1}, ..., e^{-w_n}).
std::vector<double> trop_moment(const LatticePolytope& polytope, std::span<const double> w);

/// Applies trop_moment pointwise. The cloud keeps its metadata; any scaling
/// must already have been applied in Log coordinates.
PointCloud compactify_cloud(const PointCloud& cloud, const LatticePolytope& polytope);

}  // namespace tropdegen
