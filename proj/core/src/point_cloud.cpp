#include "tropdegen/point_cloud.hpp"

#include <stdexcept>

namespace tropdegen {

Window::Window(std::vector<double> lo, std::vector<double> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  require_dim(hi_.size(), lo_.size(), "Window");
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (!(lo_[i] < hi_[i])) throw std::invalid_argument("Window requires lo < hi in every coordinate");
  }
}

Window Window::cube(std::size_t dim, double lo, double hi) {
  return Window(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

bool Window::contains(std::span<const double> p) const {
  require_dim(p.size(), dim(), "Window::contains");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  }
  return true;
}

Window Window::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("Window::scaled: factor must be positive");
  std::vector<double> lo = lo_;
  std::vector<double> hi = hi_;
  for (double& x : lo) x *= factor;
  for (double& x : hi) x *= factor;
  return Window(std::move(lo), std::move(hi));
}

Box2 Window::box2() const {
  if (dim() != 2) throw std::invalid_argument("planar window required");
  return {lo_[0], hi_[0], lo_[1], hi_[1]};
}

PointCloud::PointCloud(std::size_t dim, CloudMeta meta) : dim_(dim), meta_(std::move(meta)) {
  if (dim_ < 1) throw std::invalid_argument("point cloud dimension must be at least 1");
  if (!(meta_.scaling > 0.0)) throw std::invalid_argument("point cloud scaling must be positive");
}

void PointCloud::push_back(std::span<const double> p) {
  require_dim(p.size(), dim_, "PointCloud::push_back");
  coords_.insert(coords_.end(), p.begin(), p.end());
}

void PointCloud::append(const PointCloud& other) {
  require_dim(other.dim(), dim_, "PointCloud::append");
  coords_.insert(coords_.end(), other.coords_.begin(), other.coords_.end());
}

PointCloud PointCloud::restricted_to(const Window& window) const {
  PointCloud out(dim_, meta_);
  for (std::size_t i = 0; i < size(); ++i) {
    if (window.contains(point(i))) out.push_back(point(i));
  }
  return out;
}

PointCloud scale_cloud(const PointCloud& cloud, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("scale_cloud: rho must be positive");
  CloudMeta meta = cloud.meta();
  meta.scaling *= rho;
  PointCloud out(cloud.dim(), meta);
  std::vector<double> p(cloud.dim());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto q = cloud.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = rho * q[k];
    out.push_back(p);
  }
  return out;
}

PointCloud complex_cloud(const CornerLocusComplex& complex, const Box2& window, double step,
                         std::string source) {
  PointCloud out(2, {std::move(source), 1.0, 0, 0});
  for (const Point2& p : discretize_complex(complex, window, step)) out.push_back(p);
  return out;
}

}  // namespace tropdegen
