#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tropdegen/poly.hpp"

namespace tropdegen {

/// Monomial valuation at a coordinate origin: v(sum a_m z^m) is the minimum
/// of <m, alpha> over the support, with positive weights alpha_i = v(z_i).
///
/// Weights are plain doubles. Rational independence, which makes the minimizing
/// monomial unique, is assumed by callers and not checked.
class MonomialValuation {
 public:
  /// Throws std::invalid_argument unless every weight is finite and positive.
  explicit MonomialValuation(std::vector<double> weights);

  std::size_t dim() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

/// The seminorm f -> |f(eta)|^rho on the fiber of lambda over rho.
class SectionPoint {
 public:
  /// Throws std::invalid_argument unless 0 <= rho <= 1 and every eta_i != 0.
  SectionPoint(std::vector<Complex> eta, double rho);

  const std::vector<Complex>& eta() const { return eta_; }
  double rho() const { return rho_; }

 private:
  std::vector<Complex> eta_;
  double rho_;
};

struct MonomialPoint {
  MonomialValuation valuation;
};

using HybridPoint = std::variant<SectionPoint, MonomialPoint>;

/// min over the support of <m, alpha>; +infinity for f = 0.
/// Throws std::domain_error if some exponent is negative.
double monomial_value(const MonomialValuation& v, const ComplexLaurentPoly& f);

/// |f(eta)|^rho, and for rho = 0 the trivial norm (1 if f(eta) != 0, else 0).
double hybrid_seminorm(const SectionPoint& p, const ComplexLaurentPoly& f);

/// max(|a|, |a|_0): the hybrid norm on C. Zero at a = 0.
double hybrid_base_norm(Complex a);

/// Projection to [0, 1]: rho for a section point, 0 for a monomial point.
double lambda_of(const HybridPoint& p);

inline constexpr int kDefaultPhaseSamples = 64;

/// Largest radius e^{-alpha_i / rho} accepted as representable.
inline constexpr double kPolycircleRadiusFloor = 1e-300;

/// Maximum of |f(eta)|^rho over the polycircle |eta_i| = e^{-alpha_i / rho}.
///
/// Phases run over a full tensor grid of `phase_samples` values per axis plus
/// `phase_samples` seeded random points when n <= 2, and over
/// phase_samples^2 Latin-hypercube points otherwise. The modulus is computed
/// in log space around the dominant monomial, so only the radius guard can
/// underflow: it throws std::domain_error when e^{-alpha_i / rho} < 1e-300.
double polycircle_sup(const ComplexLaurentPoly& f, const MonomialValuation& alpha, double rho,
                      int phase_samples = kDefaultPhaseSamples, std::uint64_t seed = 0);

struct PolycircleRow {
  double rho = 0.0;
  double sup = 0.0;
  double target = 0.0;
  double abs_error = 0.0;
};

struct PolycircleReport {
  std::vector<PolycircleRow> rows;

  /// Consecutive abs_error values, counted from the first row with
  /// rho <= regime_rho, never grow by more than a factor 1 + slack.
  bool errors_non_increasing(double slack = 0.1, double regime_rho = 0.1) const;
};

/// One row per rho with sup = polycircle_sup(f, alpha, rho) and
/// target = e^{-v(f)}. `rhos` must be positive and strictly decreasing.
PolycircleReport polycircle_limit_report(const ComplexLaurentPoly& f,
                                         const MonomialValuation& alpha,
                                         const std::vector<double>& rhos,
                                         int phase_samples = kDefaultPhaseSamples,
                                         std::uint64_t seed = 0);

}  // namespace tropdegen
