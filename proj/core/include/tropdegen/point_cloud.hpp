#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tropdegen/tropical.hpp"

namespace tropdegen {

/// Axis-aligned box [lo_i, hi_i] in R^n. Tropical sets are unbounded, so every
/// metric comparison in this library happens inside one of these.
class Window {
 public:
  Window() = default;
  /// Throws std::invalid_argument unless lo_i < hi_i for every coordinate.
  Window(std::vector<double> lo, std::vector<double> hi);

  static Window cube(std::size_t dim, double lo, double hi);

  std::size_t dim() const { return lo_.size(); }
  const std::vector<double>& lo() const { return lo_; }
  const std::vector<double>& hi() const { return hi_; }
  bool contains(std::span<const double> p) const;
  Window scaled(double factor) const;

  /// Planar view; throws unless dim() == 2.
  Box2 box2() const;

 private:
  std::vector<double> lo_;
  std::vector<double> hi_;
};

struct CloudMeta {
  std::string source;
  double scaling = 1.0;
  std::uint64_t requested_samples = 0;
  std::uint64_t seed = 0;

  bool operator==(const CloudMeta&) const = default;
};

/// Finite set of points in R^dim stored row-major.
class PointCloud {
 public:
  explicit PointCloud(std::size_t dim, CloudMeta meta = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& coords() const { return coords_; }
  const CloudMeta& meta() const { return meta_; }
  CloudMeta& meta() { return meta_; }

  void push_back(std::span<const double> p);
  void append(const PointCloud& other);

  /// Points that lie inside `window`, same metadata.
  PointCloud restricted_to(const Window& window) const;

  bool operator==(const PointCloud&) const = default;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  CloudMeta meta_;
};

/// Multiplies every point and meta().scaling by `rho`. Throws
/// std::invalid_argument for rho <= 0.
PointCloud scale_cloud(const PointCloud& cloud, double rho);

/// Cloud of points along `complex` clipped to `window`.
PointCloud complex_cloud(const CornerLocusComplex& complex, const Box2& window, double step,
                         std::string source = "complex");

}  // namespace tropdegen
