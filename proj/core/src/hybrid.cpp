#include "tropdegen/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "tropdegen/parallel.hpp"

namespace tropdegen {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Errors this small are float noise around an exact zero.
constexpr double kErrorNoiseFloor = 1e-14;

void require_power_series(const ComplexLaurentPoly& f) {
  for (const auto& kv : f.terms()) {
    for (int e : kv.first) {
      if (e < 0) {
        throw std::domain_error("monomial valuations need nonnegative exponents, got " +
                                to_string(kv.first));
      }
    }
  }
}

// |f(eta)|^rho on the polycircle, evaluated as e^{-v} |S|^rho with
// S = sum a_m e^{-(<m,alpha> - v)/rho} e^{i<m,theta>}.
class PolycircleEvaluator {
 public:
  PolycircleEvaluator(const ComplexLaurentPoly& f, const MonomialValuation& alpha, double rho)
      : rho_(rho) {
    const double v = monomial_value(alpha, f);
    log_scale_ = -v;
    for (const auto& [m, c] : f.terms()) {
      double height = 0.0;
      for (std::size_t i = 0; i < m.size(); ++i) height += m[i] * alpha.weights()[i];
      terms_.push_back({m, c * std::exp(-(height - v) / rho)});
    }
  }

  double at(std::span<const double> theta) const {
    Complex s = 0.0;
    for (const auto& t : terms_) {
      double phase = 0.0;
      for (std::size_t i = 0; i < theta.size(); ++i) phase += t.exponent[i] * theta[i];
      s += t.weight * std::polar(1.0, phase);
    }
    return std::exp(log_scale_) * std::pow(std::abs(s), rho_);
  }

 private:
  struct Term {
    ExponentVector exponent;
    Complex weight;
  };
  std::vector<Term> terms_;
  double rho_;
  double log_scale_ = 0.0;
};

}  // namespace

MonomialValuation::MonomialValuation(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("monomial valuation needs at least one weight");
  for (double a : weights_) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("monomial valuation weights must be finite and positive");
    }
  }
}

SectionPoint::SectionPoint(std::vector<Complex> eta, double rho) : eta_(std::move(eta)), rho_(rho) {
  if (!(rho_ >= 0.0 && rho_ <= 1.0)) throw std::invalid_argument("section point needs 0 <= rho <= 1");
  for (const Complex& e : eta_) {
    if (e == Complex(0.0, 0.0)) throw std::invalid_argument("section point must lie in the torus");
  }
}

double monomial_value(const MonomialValuation& v, const ComplexLaurentPoly& f) {
  require_dim(v.dim(), static_cast<std::size_t>(f.dim()), "monomial_value");
  require_power_series(f);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& kv : f.terms()) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) s += kv.first[i] * v.weights()[i];
    best = std::min(best, s);
  }
  return best;
}

double hybrid_seminorm(const SectionPoint& p, const ComplexLaurentPoly& f) {
  const double modulus = std::abs(evaluate(f, p.eta()));
  // rho = 0: trivial norm.
  if (p.rho() == 0.0) return modulus > 0.0 ? 1.0 : 0.0;
  return std::pow(modulus, p.rho());
}

double hybrid_base_norm(Complex a) {
  if (a == Complex(0.0, 0.0)) return 0.0;
  return std::max(std::abs(a), 1.0);
}

double lambda_of(const HybridPoint& p) {
  if (const auto* s = std::get_if<SectionPoint>(&p)) return s->rho();
  return 0.0;
}

double polycircle_sup(const ComplexLaurentPoly& f, const MonomialValuation& alpha, double rho,
                      int phase_samples, std::uint64_t seed) {
  if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("polycircle_sup needs 0 < rho <= 1");
  if (phase_samples < 1) throw std::invalid_argument("polycircle_sup needs phase_samples >= 1");
  require_dim(alpha.dim(), static_cast<std::size_t>(f.dim()), "polycircle_sup");
  require_power_series(f);
  for (double a : alpha.weights()) {
    if (std::exp(-a / rho) < kPolycircleRadiusFloor) {
      throw std::domain_error(
          "polycircle radius e^{-alpha/rho} underflows; use a larger rho or rescale alpha");
    }
  }
  if (f.is_zero()) return 0.0;

  const PolycircleEvaluator eval(f, alpha, rho);
  const std::size_t n = alpha.dim();
  const auto per_axis = static_cast<std::size_t>(phase_samples);

  std::vector<double> theta(n);
  double best = 0.0;
  auto rng = substream(seed, 0);
  if (n <= 2) {
    std::size_t grid = 1;
    for (std::size_t i = 0; i < n; ++i) grid *= per_axis;
    for (std::size_t g = 0; g < grid; ++g) {
      std::size_t rest = g;
      for (std::size_t i = 0; i < n; ++i) {
        theta[i] = kTwoPi * static_cast<double>(rest % per_axis) / static_cast<double>(per_axis);
        rest /= per_axis;
      }
      best = std::max(best, eval.at(theta));
    }
    for (std::size_t s = 0; s < per_axis; ++s) {
      for (double& t : theta) t = kTwoPi * unit_uniform(rng);
      best = std::max(best, eval.at(theta));
    }
    return best;
  }

  // Latin hypercube: each coordinate visits every stratum exactly once.
  const std::size_t points = per_axis * per_axis;
  std::vector<std::vector<std::size_t>> strata(n, std::vector<std::size_t>(points));
  for (auto& s : strata) {
    std::iota(s.begin(), s.end(), std::size_t{0});
    for (std::size_t i = points; i > 1; --i) {
      std::swap(s[i - 1], s[static_cast<std::size_t>(unit_uniform(rng) * static_cast<double>(i))]);
    }
  }
  for (std::size_t k = 0; k < points; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      theta[i] = kTwoPi * (static_cast<double>(strata[i][k]) + unit_uniform(rng)) /
                 static_cast<double>(points);
    }
    best = std::max(best, eval.at(theta));
  }
  return best;
}

bool PolycircleReport::errors_non_increasing(double slack, double regime_rho) const {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].rho > regime_rho) continue;
    if (rows[i + 1].abs_error > (1.0 + slack) * rows[i].abs_error + kErrorNoiseFloor) return false;
  }
  return true;
}

PolycircleReport polycircle_limit_report(const ComplexLaurentPoly& f, const MonomialValuation& alpha,
                                         const std::vector<double>& rhos, int phase_samples,
                                         std::uint64_t seed) {
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    if (!(rhos[i] > 0.0)) throw std::invalid_argument("rho values must be positive");
    if (i > 0 && !(rhos[i] < rhos[i - 1])) {
      throw std::invalid_argument("rho values must be strictly decreasing");
    }
  }
  const double target = std::exp(-monomial_value(alpha, f));
  PolycircleReport report;
  for (double rho : rhos) {
    const double sup = polycircle_sup(f, alpha, rho, phase_samples, seed);
    report.rows.push_back({rho, sup, target, std::abs(sup - target)});
  }
  return report;
}

}  // namespace tropdegen
