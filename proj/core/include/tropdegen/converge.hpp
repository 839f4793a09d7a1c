#pragma once

#include <cstddef>
#include <vector>

#include "tropdegen/point_cloud.hpp"
#include "tropdegen/tropical.hpp"

namespace tropdegen {

/// Complex discretization step as a fraction of the window diagonal.
inline constexpr double kComplexStepFraction = 1.0 / 512.0;

/// max over a in A of min over b in B of |a - b|.
double directed_hausdorff(const PointCloud& from, const PointCloud& to);

/// Symmetric Hausdorff distance. Throws std::invalid_argument on empty clouds
/// or mismatched dimensions.
double hausdorff(const PointCloud& a, const PointCloud& b);

struct ComplexDistance {
  double distance = 0.0;  // max of the two directed distances
  double forward = 0.0;   // cloud points in the window -> complex
  double backward = 0.0;  // discretized complex -> cloud
};

/// Windowed Hausdorff distance between a planar cloud and a corner locus.
///
/// The forward term takes cloud points inside `window`; the backward term
/// samples the clipped complex at arclength spacing diagonal / grid. A cloud
/// with no points in the window is infinitely far. Throws std::domain_error
/// when the complex misses the window.
ComplexDistance hausdorff_to_complex(const PointCloud& cloud, const CornerLocusComplex& complex,
                                     const Window& window, int grid = 512);

/// Finite sample b -> S_b of a set-valued family; parameters strictly monotone.
class FamilySample {
 public:
  struct Member {
    double parameter;
    PointCloud cloud;
  };

  FamilySample() = default;
  /// Throws std::invalid_argument when parameters are not strictly monotone or
  /// dimensions differ.
  explicit FamilySample(std::vector<Member> members);

  std::size_t size() const { return members_.size(); }
  const Member& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Member>& members() const { return members_; }

 private:
  std::vector<Member> members_;
};

/// Discrete upper-semicontinuity check at members()[b0_index].
///
/// Lays a grid of spacing eps/4 over the bounding box of all clouds padded by
/// eps. For every grid point y farther than eps from S_{b0}, each S_b with
/// 0 < |b - b0| < delta must avoid the open eps/2-ball around y.
bool kuratowski_usc_check(const FamilySample& family, std::size_t b0_index, double eps,
                          double delta);

/// Discrete lower-semicontinuity check: d(S_{b0} -> S_b) <= eps for every
/// sampled b with 0 < |b - b0| < delta.
bool kuratowski_lsc_check(const FamilySample& family, std::size_t b0_index, double eps,
                          double delta);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least-squares line through (log rho_i, log d_i). Needs at least three
/// strictly positive pairs.
RateFit rate_fit(const std::vector<double>& rhos, const std::vector<double>& distances);

}  // namespace tropdegen
