#include "tropdegen/roots.hpp"

#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>

namespace tropdegen {

namespace {

// Value and derivative of sum_k p[k] x^k.
std::pair<Complex, Complex> horner(std::span<const Complex> p, Complex x) {
  Complex value = 0.0;
  Complex slope = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) {
    slope = slope * x + value;
    value = value * x + p[k];
  }
  return {value, slope};
}

}  // namespace

std::optional<std::vector<Complex>> polynomial_roots(std::span<const Complex> coeffs) {
  const Complex zero(0.0, 0.0);
  std::size_t lo = 0;
  std::size_t hi = coeffs.size();
  while (lo < hi && coeffs[lo] == zero) ++lo;
  while (hi > lo && coeffs[hi - 1] == zero) --hi;
  if (hi - lo < 2) return std::vector<Complex>{};

  const auto p = coeffs.subspan(lo, hi - lo);
  const auto degree = static_cast<Eigen::Index>(p.size() - 1);
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(degree));

  if (degree == 1) {
    roots.push_back(-p[0] / p[1]);
    return roots;
  }

  // Substitute x = s y with s the geometric mean of the root moduli, so the
  // companion matrix has entries of order one even when |x| is huge.
  const double log_lead = std::log(std::abs(p.back()));
  const double log_s = (std::log(std::abs(p.front())) - log_lead) / static_cast<double>(degree);
  const double s = std::exp(log_s);

  // Frobenius companion: ones on the subdiagonal, -q_k in the last column,
  // where q_k = p_k s^(k-d) / p_d.
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < degree; ++i) {
    const Complex pk = p[static_cast<std::size_t>(i)];
    if (pk == zero) continue;
    const double log_q = std::log(std::abs(pk)) - log_lead + static_cast<double>(i - degree) * log_s;
    companion(i, degree - 1) = -std::polar(std::exp(log_q), std::arg(pk) - std::arg(p.back()));
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) return std::nullopt;

  for (Eigen::Index i = 0; i < degree; ++i) {
    Complex x = s * solver.eigenvalues()[i];
    const auto [value, slope] = horner(p, x);
    if (slope != zero) {
      const Complex polished = x - value / slope;
      // Near clustered roots a Newton step can overshoot; keep the better one.
      if (std::isfinite(polished.real()) && std::isfinite(polished.imag()) &&
          std::abs(horner(p, polished).first) <= std::abs(value)) {
        x = polished;
      }
    }
    roots.push_back(x);
  }
  return roots;
}

}  // namespace tropdegen
