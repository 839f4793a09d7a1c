#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tropdegen/exponent.hpp"
#include "tropdegen/tropical.hpp"

namespace tropdegen {

/// Laurent polynomial in n variables with double-precision complex
/// coefficients.
///
/// Canonical form: terms ordered lexicographically by exponent, and no
/// stored coefficient equals zero. Only coefficients that are bit-exact zero
/// after arithmetic are dropped; there is no cancellation threshold.
class ComplexLaurentPoly {
 public:
  using Terms = std::map<ExponentVector, Complex>;

  /// The zero polynomial in `dim` variables.
  explicit ComplexLaurentPoly(int dim);

  /// Sums repeated exponents, then drops exact zeros.
  ComplexLaurentPoly(int dim,
                     const std::vector<std::pair<ExponentVector, Complex>>& terms);

  static ComplexLaurentPoly constant(int dim, Complex value);
  static ComplexLaurentPoly monomial(ExponentVector m, Complex coefficient = 1.0);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Zero when `m` is not in the support.
  Complex coefficient(const ExponentVector& m) const;

  ComplexLaurentPoly scaled(Complex factor) const;

  friend ComplexLaurentPoly operator+(const ComplexLaurentPoly& f,
                                      const ComplexLaurentPoly& g);
  bool operator==(const ComplexLaurentPoly&) const = default;

 private:
  int dim_;
  Terms terms_;
};

/// Sum of a_m z^m using compensated (Neumaier) summation.
/// Throws std::domain_error if any coordinate of `z` is zero.
Complex evaluate(const ComplexLaurentPoly& f, std::span<const Complex> z);

/// Sum of |a_m| |z^m|; the natural magnitude against which a residual
/// |f(z)| is judged.
double term_magnitude_sum(const ComplexLaurentPoly& f, std::span<const Complex> z);

ComplexLaurentPoly multiply(const ComplexLaurentPoly& f, const ComplexLaurentPoly& g);

/// Laurent polynomial in z_1..z_n whose coefficients are Laurent polynomials
/// in a parameter t (finite sums of c_k t^k, k in Z).
class TParamLaurentPoly {
 public:
  using TCoefficient = std::map<int, Complex>;
  using Terms = std::map<ExponentVector, TCoefficient>;

  struct TTerm {
    int t_exponent = 0;
    Complex coefficient;
  };

  explicit TParamLaurentPoly(int dim);

  /// Entries are (z-exponent, t-exponent, coefficient); repeats are summed.
  TParamLaurentPoly(int dim,
                    const std::vector<std::pair<ExponentVector, std::vector<TTerm>>>& terms);

  /// Lifts a t-free polynomial to a constant family.
  static TParamLaurentPoly constant_family(const ComplexLaurentPoly& f);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  friend TParamLaurentPoly operator+(const TParamLaurentPoly& f,
                                     const TParamLaurentPoly& g);
  bool operator==(const TParamLaurentPoly&) const = default;

 private:
  void insert(const ExponentVector& m, int k, Complex c);

  int dim_;
  Terms terms_;
};

TParamLaurentPoly multiply(const TParamLaurentPoly& f, const TParamLaurentPoly& g);

/// Fiber of the family at t = a. Throws std::domain_error for a = 0.
ComplexLaurentPoly specialize(const TParamLaurentPoly& family, Complex a);

/// c_m = ord_t of the coefficient of z^m, i.e. -log|a_m| for |t| = e^{-1}.
/// Throws std::domain_error for the zero polynomial.
TropicalPolynomial t_valuation(const TParamLaurentPoly& family);

/// Tropicalization for the trivial absolute value: same support, c_m = 0.
/// Throws std::domain_error for the zero polynomial.
TropicalPolynomial trivial_tropicalize(const ComplexLaurentPoly& f);

}  // namespace tropdegen
