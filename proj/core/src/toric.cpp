#include "tropdegen/toric.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tropdegen {

namespace {

long long cross(const ExponentVector& o, const ExponentVector& a, const ExponentVector& b) {
  return static_cast<long long>(a[0] - o[0]) * (b[1] - o[1]) -
         static_cast<long long>(a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<ExponentVector> planar_hull(std::vector<ExponentVector> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<ExponentVector> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Barycentre of the lattice points under weights proportional to
// exp(log_weight[i]), computed with a max shift.
std::vector<double> weighted_barycentre(const LatticePolytope& polytope,
                                        const std::vector<double>& log_weight) {
  const auto& pts = polytope.lattice_points();
  const double top = *std::max_element(log_weight.begin(), log_weight.end());
  std::vector<double> out(polytope.dim(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double w = std::exp(log_weight[i] - top);
    total += w;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += w * pts[i][k];
  }
  for (double& x : out) x /= total;
  return out;
}

}  // namespace

LatticePolytope::LatticePolytope(std::vector<ExponentVector> lattice_points)
    : points_(std::move(lattice_points)) {
  if (points_.empty()) throw std::invalid_argument("lattice polytope needs at least one point");
  dim_ = points_.front().size();
  for (const auto& p : points_) require_dim(p.size(), dim_, "LatticePolytope");
  if (std::set<ExponentVector>(points_.begin(), points_.end()).size() != points_.size()) {
    throw std::invalid_argument("lattice polytope points must be distinct");
  }
  if (dim_ == 1) {
    const auto [lo, hi] = std::minmax_element(points_.begin(), points_.end());
    if (*lo == *hi) throw std::invalid_argument("lattice points do not span the line");
    vertices_ = {*lo, *hi};
  } else if (dim_ == 2) {
    vertices_ = planar_hull(points_);
    if (vertices_.size() < 3) throw std::invalid_argument("lattice points do not span the plane");
  } else {
    throw std::invalid_argument("lattice polytopes are supported in dimensions 1 and 2");
  }
}

LatticePolytope LatticePolytope::dilated_triangle(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::vector<ExponentVector> pts;
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; i + j <= degree; ++j) pts.push_back({i, j});
  }
  return LatticePolytope(std::move(pts));
}

bool LatticePolytope::contains(std::span<const double> x, double tol) const {
  require_dim(x.size(), dim_, "LatticePolytope::contains");
  if (dim_ == 1) return x[0] >= vertices_[0][0] - tol && x[0] <= vertices_[1][0] + tol;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    const double ex = b[0] - a[0];
    const double ey = b[1] - a[1];
    // Counter-clockwise hull: the interior is on the left of each edge.
    const double side = (ex * (x[1] - a[1]) - ey * (x[0] - a[0])) / std::hypot(ex, ey);
    if (side < -tol) return false;
  }
  return true;
}

std::vector<double> moment_map(const LatticePolytope& polytope, std::span<const Complex> z) {
  require_dim(z.size(), polytope.dim(), "moment_map");
  std::vector<double> log_abs(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == Complex(0.0, 0.0)) throw std::domain_error("moment_map needs a point of the torus");
    log_abs[i] = std::log(std::abs(z[i]));
  }
  std::vector<double> log_weight;
  log_weight.reserve(polytope.lattice_points().size());
  for (const auto& m : polytope.lattice_points()) log_weight.push_back(pairing(m, log_abs));
  return weighted_barycentre(polytope, log_weight);
}

std::vector<double> trop_moment(const LatticePolytope& polytope, std::span<const double> w) {
  require_dim(w.size(), polytope.dim(), "trop_moment");
  std::vector<double> log_weight;
  log_weight.reserve(polytope.lattice_points().size());
  for (const auto& m : polytope.lattice_points()) log_weight.push_back(-pairing(m, w));
  return weighted_barycentre(polytope, log_weight);
}

PointCloud compactify_cloud(const PointCloud& cloud, const LatticePolytope& polytope) {
  require_dim(cloud.dim(), polytope.dim(), "compactify_cloud");
  PointCloud out(cloud.dim(), cloud.meta());
  for (std::size_t i = 0; i < cloud.size(); ++i) out.push_back(trop_moment(polytope, cloud.point(i)));
  return out;
}

}  // namespace tropdegen
