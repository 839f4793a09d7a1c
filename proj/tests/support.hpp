#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "tropdegen/tropdegen.hpp"

namespace tropdegen::testing {

inline ComplexLaurentPoly poly2(std::vector<std::pair<ExponentVector, Complex>> terms) {
  return ComplexLaurentPoly(2, terms);
}

// z1 + z2 + 1
inline ComplexLaurentPoly line_poly() { return poly2({{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{0, 0}, 1.0}}); }

// t z1 + t^-1 z2 + 1
inline TParamLaurentPoly shifted_line_family() {
  return TParamLaurentPoly(2, {{{1, 0}, {{1, 1.0}}}, {{0, 1}, {{-1, 1.0}}}, {{0, 0}, {{0, 1.0}}}});
}

// (z1 + z2 + 1)(t z1 + t^-1 z2 + 1)
inline TParamLaurentPoly two_lines_family() {
  return multiply(TParamLaurentPoly::constant_family(line_poly()), shifted_line_family());
}

inline Complex omega() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

inline PointCloud cloud_of(std::size_t dim, const std::vector<std::vector<double>>& pts) {
  PointCloud c(dim);
  for (const auto& p : pts) c.push_back(p);
  return c;
}

inline PointCloud random_cloud(std::mt19937_64& rng, std::size_t size, double lo = -3.0, double hi = 3.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  PointCloud c(2);
  for (std::size_t i = 0; i < size; ++i) c.push_back(std::vector<double>{u(rng), u(rng)});
  return c;
}

// Random tropical polynomial with integer coefficients, distinct exponents
// in [lo, hi]^2 and at least two terms.
inline TropicalPolynomial random_trop(std::mt19937_64& rng, int max_terms, int lo, int hi, int cmax) {
  std::uniform_int_distribution<int> e(lo, hi);
  std::uniform_int_distribution<int> c(-cmax, cmax);
  std::uniform_int_distribution<int> count(2, max_terms);
  const int k = count(rng);
  std::vector<TropicalPolynomial::Term> terms;
  while (static_cast<int>(terms.size()) < k) {
    ExponentVector m{e(rng), e(rng)};
    bool dup = false;
    for (const auto& t : terms) dup = dup || t.exponent == m;
    if (!dup) terms.push_back({m, static_cast<double>(c(rng))});
  }
  return TropicalPolynomial(2, terms);
}

// Random polynomial with small integer coefficients and exponents in
// [0, emax]^2, at least two terms.
inline ComplexLaurentPoly random_poly(std::mt19937_64& rng, int max_terms, int emax, int cmax = 3) {
  std::uniform_int_distribution<int> e(0, emax);
  std::uniform_int_distribution<int> c(1, cmax);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> count(2, max_terms);
  std::vector<std::pair<ExponentVector, Complex>> terms;
  const int k = count(rng);
  while (static_cast<int>(terms.size()) < k) {
    ExponentVector m{e(rng), e(rng)};
    bool dup = false;
    for (const auto& t : terms) dup = dup || t.first == m;
    if (!dup) terms.emplace_back(m, Complex((sign(rng) ? 1.0 : -1.0) * c(rng), 0.0));
  }
  return ComplexLaurentPoly(2, terms);
}

}  // namespace tropdegen::testing
