#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropdegen/point_cloud.hpp"
#include "tropdegen/poly.hpp"

namespace tropdegen {

/// Residual bound for emitted amoeba points, relative to the sum of term
/// magnitudes at the witnessing torus point.
inline constexpr double kAmoebaResidualTolerance = 1e-8;

inline constexpr int kDefaultPhaseGrid = 256;
inline constexpr double kDefaultSliceTolerance = 1e-3;

struct AmoebaDiagnostics {
  std::uint64_t skipped_samples = 0;   // eigen-solver failed to converge
  std::uint64_t untrusted_roots = 0;   // |z_n| outside the trusted band
  std::uint64_t residual_rejects = 0;  // polished root failed the residual check
};

/// Output of an amoeba sampling run. When requested, `witnesses[i]` is the
/// torus point z whose image under Log is `cloud.point(i)`.
struct AmoebaSample {
  PointCloud cloud;
  std::vector<std::vector<Complex>> witnesses;
  AmoebaDiagnostics diagnostics;
};

/// Samples the amoeba of V(f) by fixing the first n-1 log-moduli and phases
/// and solving the fiber polynomial in z_n.
///
/// Sample i draws (w_1, ..., w_{n-1}) uniformly in `window` and phases
/// uniformly in [0, 2 pi) from its own seeded substream, sets
/// z_i = exp(-w_i + i theta_i), and emits (w_1, ..., w_{n-1}, -log|z_n|) for
/// every trusted root z_n. `window` has dimension n-1 (empty for n = 1).
/// A root is trusted when its modulus lies in the band of roots.hpp, widened
/// to [e^{-R}, e^{R}] where R is the largest |bound| of the window, and it
/// passes the residual test.
///
/// Throws std::domain_error when f has fewer than two distinct
/// z_n-exponents, std::invalid_argument on bad arguments.
AmoebaSample sample_amoeba(const ComplexLaurentPoly& f, std::uint64_t count,
                           const Window& window, std::uint64_t seed,
                           bool keep_witnesses = false);

/// Runs sample_amoeba once per coordinate, solving for that coordinate each
/// time, and concatenates the results in coordinate order. `count` is split
/// evenly over the coordinates f actually depends on; `window` is the full
/// n-dimensional window. This covers tentacles that are thin in the
/// first n-1 coordinates.
AmoebaSample sample_amoeba_all_axes(const ComplexLaurentPoly& f, std::uint64_t count,
                                    const Window& window, std::uint64_t seed,
                                    bool keep_witnesses = false);

/// Approximate planar membership test. True iff for some phase theta on a
/// uniform grid of `phase_grid` values some root z_2 of f(e^{-w_1 + i theta}, .)
/// has |-log|z_2| - w_2| <= tol.
bool membership_slice(const ComplexLaurentPoly& f, const Point2& w,
                      int phase_grid = kDefaultPhaseGrid,
                      double tol = kDefaultSliceTolerance);

/// Sound non-membership certificate: some |a_m| e^{-<m,w>} strictly exceeds
/// the sum of all the others, by a relative margin of kLopsidedMargin to
/// absorb rounding in the exponents. False is inconclusive.
inline constexpr double kLopsidedMargin = 1e-10;

bool lopsided_certificate(const ComplexLaurentPoly& f, std::span<const double> w);

/// Log map (-log|z_1|, ..., -log|z_n|).
std::vector<double> log_map(std::span<const Complex> z);

}  // namespace tropdegen
