#include "tropdegen/converge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tropdegen/parallel.hpp"

namespace tropdegen {

namespace {

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double nearest(std::span<const double> p, const PointCloud& cloud) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cloud.size(); ++j) best = std::min(best, distance(p, cloud.point(j)));
  return best;
}

void require_comparable(const PointCloud& a, const PointCloud& b) {
  require_dim(b.dim(), a.dim(), "hausdorff");
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff distance of an empty cloud");
}

}  // namespace

double directed_hausdorff(const PointCloud& from, const PointCloud& to) {
  require_comparable(from, to);
  std::vector<double> per_point(from.size());
  parallel_for(from.size(), [&](std::size_t i) { per_point[i] = nearest(from.point(i), to); });
  return *std::max_element(per_point.begin(), per_point.end());
}

double hausdorff(const PointCloud& a, const PointCloud& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

ComplexDistance hausdorff_to_complex(const PointCloud& cloud, const CornerLocusComplex& complex,
                                     const Window& window, int grid) {
  if (cloud.dim() != 2) throw std::invalid_argument("hausdorff_to_complex requires planar clouds");
  if (grid < 1) throw std::invalid_argument("hausdorff_to_complex: grid must be positive");
  const Box2 box = window.box2();
  const PointCloud reference = complex_cloud(complex, box, box.diagonal() / grid);
  if (reference.empty()) throw std::domain_error("tropical complex does not meet the window");

  const PointCloud inside = cloud.restricted_to(window);
  ComplexDistance out;
  if (inside.empty()) {
    out.forward = out.backward = out.distance = std::numeric_limits<double>::infinity();
    return out;
  }
  std::vector<double> forward(inside.size());
  parallel_for(inside.size(), [&](std::size_t i) {
    const auto p = inside.point(i);
    forward[i] = distance_to_complex(complex, {p[0], p[1]}, box);
  });
  out.forward = *std::max_element(forward.begin(), forward.end());
  out.backward = directed_hausdorff(reference, inside);
  out.distance = std::max(out.forward, out.backward);
  return out;
}

FamilySample::FamilySample(std::vector<Member> members) : members_(std::move(members)) {
  if (members_.size() >= 2) {
    const bool up = members_[1].parameter > members_[0].parameter;
    for (std::size_t i = 1; i < members_.size(); ++i) {
      const bool ok = up ? members_[i].parameter > members_[i - 1].parameter
                         : members_[i].parameter < members_[i - 1].parameter;
      if (!ok) throw std::invalid_argument("family parameters must be strictly monotone");
      require_dim(members_[i].cloud.dim(), members_[0].cloud.dim(), "FamilySample");
    }
  }
}

namespace {

template <class Fn>
void for_each_neighbor(const FamilySample& family, std::size_t b0_index, double delta, Fn&& fn) {
  const double b0 = family[b0_index].parameter;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i != b0_index && std::abs(family[i].parameter - b0) < delta) fn(family[i].cloud);
  }
}

void require_check_args(const FamilySample& family, std::size_t b0_index, double eps, double delta) {
  if (b0_index >= family.size()) throw std::out_of_range("family index out of range");
  if (!(eps > 0.0) || !(delta > 0.0)) throw std::invalid_argument("eps and delta must be positive");
}

}  // namespace

bool kuratowski_usc_check(const FamilySample& family, std::size_t b0_index, double eps, double delta) {
  require_check_args(family, b0_index, eps, delta);
  const PointCloud& center = family[b0_index].cloud;
  const std::size_t dim = center.dim();

  std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
  for (const auto& member : family.members()) {
    for (std::size_t j = 0; j < member.cloud.size(); ++j) {
      const auto p = member.cloud.point(j);
      for (std::size_t k = 0; k < dim; ++k) {
        lo[k] = std::min(lo[k], p[k]);
        hi[k] = std::max(hi[k], p[k]);
      }
    }
  }
  const double step = eps / 4.0;
  std::vector<long> cells(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    lo[k] -= eps;
    hi[k] += eps;
    cells[k] = static_cast<long>(std::floor((hi[k] - lo[k]) / step));
  }

  // Only grid points within eps/2 of some neighbor point can witness a
  // violation, so walk the grid around each neighbor point instead of the
  // whole box.
  bool ok = true;
  for_each_neighbor(family, b0_index, delta, [&](const PointCloud& cloud) {
    std::vector<long> first(dim);
    std::vector<long> last(dim);
    std::vector<long> idx(dim);
    std::vector<double> y(dim);
    for (std::size_t j = 0; j < cloud.size() && ok; ++j) {
      const auto p = cloud.point(j);
      bool any_grid_point = true;
      for (std::size_t k = 0; k < dim; ++k) {
        first[k] = std::max(0L, static_cast<long>(std::ceil((p[k] - eps / 2 - lo[k]) / step)));
        last[k] = std::min(cells[k], static_cast<long>(std::floor((p[k] + eps / 2 - lo[k]) / step)));
        any_grid_point = any_grid_point && first[k] <= last[k];
      }
      if (!any_grid_point) continue;
      idx = first;
      while (ok) {
        for (std::size_t k = 0; k < dim; ++k) y[k] = lo[k] + static_cast<double>(idx[k]) * step;
        if (distance(y, p) < eps / 2 && (center.empty() || nearest(y, center) > eps)) ok = false;
        std::size_t k = 0;
        while (k < dim && ++idx[k] > last[k]) {
          idx[k] = first[k];
          ++k;
        }
        if (k == dim) break;
      }
    }
  });
  return ok;
}

bool kuratowski_lsc_check(const FamilySample& family, std::size_t b0_index, double eps, double delta) {
  require_check_args(family, b0_index, eps, delta);
  const PointCloud& center = family[b0_index].cloud;
  bool ok = true;
  for_each_neighbor(family, b0_index, delta, [&](const PointCloud& cloud) {
    if (!ok || center.empty()) return;
    if (cloud.empty() || directed_hausdorff(center, cloud) > eps) ok = false;
  });
  return ok;
}

RateFit rate_fit(const std::vector<double>& rhos, const std::vector<double>& distances) {
  if (rhos.size() != distances.size()) throw std::invalid_argument("rate_fit: length mismatch");
  if (rhos.size() < 3) throw std::invalid_argument("rate_fit needs at least three points");
  const auto n = static_cast<double>(rhos.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    if (!(rhos[i] > 0.0) || !(distances[i] > 0.0)) {
      throw std::invalid_argument("rate_fit needs strictly positive entries");
    }
    const double x = std::log(rhos[i]);
    const double y = std::log(distances[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("rate_fit needs at least two distinct rho values");
  const double slope = (n * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / n};
}

}  // namespace tropdegen
