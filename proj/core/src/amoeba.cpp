#include "tropdegen/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "tropdegen/parallel.hpp"
#include "tropdegen/roots.hpp"

namespace tropdegen {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// f viewed as a polynomial in its last variable with coefficients in the
// others, after multiplying through by z_n^{-min exponent}.
class FiberPolynomial {
 public:
  explicit FiberPolynomial(const ComplexLaurentPoly& f) : f_(f) {
    std::set<int> last;
    for (const auto& kv : f.terms()) last.insert(kv.first.back());
    if (last.size() < 2) {
      throw std::domain_error("polynomial has a single exponent in its last variable; fibers are not solvable");
    }
    shift_ = *last.begin();
    degree_ = static_cast<std::size_t>(*last.rbegin() - shift_);
    for (const auto& [m, c] : f.terms()) {
      terms_.push_back({static_cast<std::size_t>(m.back() - shift_),
                        ExponentVector(m.begin(), m.end() - 1), c});
    }
  }

  std::vector<Complex> coefficients(std::span<const Complex> head) const {
    std::vector<Complex> coeffs(degree_ + 1, Complex(0.0, 0.0));
    for (const Term& t : terms_) coeffs[t.power] += t.coefficient * eval_monomial(t.head, head);
    return coeffs;
  }

  const ComplexLaurentPoly& polynomial() const { return f_; }

 private:
  struct Term {
    std::size_t power;
    ExponentVector head;
    Complex coefficient;
  };

  const ComplexLaurentPoly& f_;
  std::vector<Term> terms_;
  int shift_ = 0;
  std::size_t degree_ = 0;
};

struct SampleResult {
  std::vector<double> coords;
  std::vector<std::vector<Complex>> witnesses;
  bool skipped = false;
  std::uint64_t untrusted = 0;
  std::uint64_t rejected = 0;
};

// Log-radius of the trusted band for a sampling window: the fixed band,
// widened so that it always covers the log-range the window spans.
double trusted_log_radius(const Window& window) {
  double radius = std::log(kMaxTrustedRootModulus);
  for (std::size_t i = 0; i < window.dim(); ++i) {
    radius = std::max({radius, std::abs(window.lo()[i]), std::abs(window.hi()[i])});
  }
  return radius;
}

SampleResult draw_sample(const FiberPolynomial& fiber, const Window& window, double log_radius,
                         std::uint64_t seed, std::uint64_t index, bool keep_witnesses) {
  const std::size_t head_dim = window.dim();
  auto rng = substream(seed, index);
  std::vector<double> w(head_dim);
  std::vector<Complex> z(head_dim + 1);
  for (std::size_t i = 0; i < head_dim; ++i) w[i] = uniform_in(rng, window.lo()[i], window.hi()[i]);
  for (std::size_t i = 0; i < head_dim; ++i) {
    z[i] = std::polar(std::exp(-w[i]), kTwoPi * unit_uniform(rng));
  }

  SampleResult out;
  const auto roots = polynomial_roots(fiber.coefficients(std::span<const Complex>(z).first(head_dim)));
  if (!roots) {
    out.skipped = true;
    return out;
  }
  for (const Complex& r : *roots) {
    const double modulus = std::abs(r);
    if (!(modulus > 0.0) || !std::isfinite(modulus) || std::abs(std::log(modulus)) > log_radius) {
      ++out.untrusted;
      continue;
    }
    z[head_dim] = r;
    const double residual = std::abs(evaluate(fiber.polynomial(), z));
    if (residual > kAmoebaResidualTolerance * term_magnitude_sum(fiber.polynomial(), z)) {
      ++out.rejected;
      continue;
    }
    out.coords.insert(out.coords.end(), w.begin(), w.end());
    out.coords.push_back(-std::log(modulus));
    if (keep_witnesses) out.witnesses.push_back(z);
  }
  return out;
}

ComplexLaurentPoly move_variable_last(const ComplexLaurentPoly& f, std::size_t axis) {
  std::vector<std::pair<ExponentVector, Complex>> terms;
  for (const auto& [m, c] : f.terms()) {
    ExponentVector p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != axis) p.push_back(m[i]);
    }
    p.push_back(m[axis]);
    terms.emplace_back(std::move(p), c);
  }
  return ComplexLaurentPoly(f.dim(), terms);
}

bool solvable_in(const ComplexLaurentPoly& f, std::size_t axis) {
  std::set<int> exps;
  for (const auto& kv : f.terms()) exps.insert(kv.first[axis]);
  return exps.size() >= 2;
}

}  // namespace

std::vector<double> log_map(std::span<const Complex> z) {
  std::vector<double> w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == Complex(0.0, 0.0)) throw std::domain_error("log map undefined at a zero coordinate");
    w[i] = -std::log(std::abs(z[i]));
  }
  return w;
}

AmoebaSample sample_amoeba(const ComplexLaurentPoly& f, std::uint64_t count, const Window& window,
                           std::uint64_t seed, bool keep_witnesses) {
  if (count < 1) throw std::invalid_argument("sample_amoeba: count must be at least 1");
  require_dim(window.dim() + 1, static_cast<std::size_t>(f.dim()), "sample_amoeba window");
  const FiberPolynomial fiber(f);
  const double log_radius = trusted_log_radius(window);

  std::vector<SampleResult> results(count);
  parallel_for(count, [&](std::size_t i) {
    results[i] = draw_sample(fiber, window, log_radius, seed, i, keep_witnesses);
  });

  AmoebaSample out{PointCloud(static_cast<std::size_t>(f.dim()),
                              {"amoeba", 1.0, count, seed}),
                   {}, {}};
  for (auto& r : results) {
    if (r.skipped) ++out.diagnostics.skipped_samples;
    out.diagnostics.untrusted_roots += r.untrusted;
    out.diagnostics.residual_rejects += r.rejected;
    for (std::size_t k = 0; k < r.coords.size(); k += out.cloud.dim()) {
      out.cloud.push_back(std::span<const double>(r.coords).subspan(k, out.cloud.dim()));
    }
    for (auto& wz : r.witnesses) out.witnesses.push_back(std::move(wz));
  }
  return out;
}

AmoebaSample sample_amoeba_all_axes(const ComplexLaurentPoly& f, std::uint64_t count,
                                    const Window& window, std::uint64_t seed, bool keep_witnesses) {
  const auto n = static_cast<std::size_t>(f.dim());
  require_dim(window.dim(), n, "sample_amoeba_all_axes window");
  std::vector<std::size_t> axes;
  for (std::size_t a = 0; a < n; ++a) {
    if (solvable_in(f, a)) axes.push_back(a);
  }
  if (axes.empty()) {
    throw std::domain_error("polynomial is a monomial up to units; its amoeba is empty");
  }
  if (count < axes.size()) throw std::invalid_argument("sample count smaller than number of axes");

  AmoebaSample out{PointCloud(n, {"amoeba", 1.0, count, seed}), {}, {}};
  for (std::size_t j = 0; j < axes.size(); ++j) {
    const std::size_t axis = axes[j];
    const std::uint64_t share = count / axes.size() + (j < count % axes.size() ? 1 : 0);
    std::vector<double> lo;
    std::vector<double> hi;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == axis) continue;
      lo.push_back(window.lo()[i]);
      hi.push_back(window.hi()[i]);
    }
    const Window head = n == 1 ? Window() : Window(lo, hi);
    const std::uint64_t axis_seed = substream(seed, axis)();
    AmoebaSample part = sample_amoeba(move_variable_last(f, axis), share, head, axis_seed, keep_witnesses);

    std::vector<double> p(n);
    for (std::size_t k = 0; k < part.cloud.size(); ++k) {
      const auto q = part.cloud.point(k);
      std::size_t src = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != axis) p[i] = q[src++];
      }
      p[axis] = q[n - 1];
      out.cloud.push_back(p);
      if (keep_witnesses) {
        const auto& zq = part.witnesses[k];
        std::vector<Complex> z(n);
        src = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i != axis) z[i] = zq[src++];
        }
        z[axis] = zq[n - 1];
        out.witnesses.push_back(std::move(z));
      }
    }
    out.diagnostics.skipped_samples += part.diagnostics.skipped_samples;
    out.diagnostics.untrusted_roots += part.diagnostics.untrusted_roots;
    out.diagnostics.residual_rejects += part.diagnostics.residual_rejects;
  }
  return out;
}

bool membership_slice(const ComplexLaurentPoly& f, const Point2& w, int phase_grid, double tol) {
  if (f.dim() != 2) throw std::invalid_argument("membership_slice requires a bivariate polynomial");
  if (phase_grid < 8) throw std::invalid_argument("membership_slice: phase_grid must be at least 8");
  if (!(tol >= 0.0)) throw std::invalid_argument("membership_slice: tolerance must be nonnegative");
  const FiberPolynomial fiber(f);
  const double log_radius = std::max({std::log(kMaxTrustedRootModulus), std::abs(w[0]), std::abs(w[1]) + tol});
  const double radius = std::exp(-w[0]);
  for (int k = 0; k < phase_grid; ++k) {
    const Complex z1 = std::polar(radius, kTwoPi * k / phase_grid);
    const auto roots = polynomial_roots(fiber.coefficients(std::span<const Complex>(&z1, 1)));
    if (!roots) continue;
    for (const Complex& r : *roots) {
      const double modulus = std::abs(r);
      if (modulus > 0.0 && std::abs(std::log(modulus)) <= log_radius && std::abs(-std::log(modulus) - w[1]) <= tol) {
        return true;
      }
    }
  }
  return false;
}

bool lopsided_certificate(const ComplexLaurentPoly& f, std::span<const double> w) {
  require_dim(w.size(), static_cast<std::size_t>(f.dim()), "lopsided_certificate");
  if (f.is_zero()) throw std::domain_error("lopsided_certificate of the zero polynomial");
  std::vector<double> logs;
  logs.reserve(f.size());
  for (const auto& [m, c] : f.terms()) logs.push_back(std::log(std::abs(c)) - pairing(m, w));
  const auto top = std::max_element(logs.begin(), logs.end());
  double rest = 0.0;
  for (auto it = logs.begin(); it != logs.end(); ++it) {
    if (it != top) rest += std::exp(*it - *top);
  }
  return rest < 1.0 - kLopsidedMargin;
}

}  // namespace tropdegen
