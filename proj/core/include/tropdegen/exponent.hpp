#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace tropdegen {

using Complex = std::complex<double>;

/// Integer exponent vector m = (m_1, ..., m_n) of a Laurent monomial z^m.
/// Ordered lexicographically, which is the canonical order of every support.
using ExponentVector = std::vector<int>;

/// Sum m_1 + ... + m_n.
int total_degree(const ExponentVector& m);

/// <m, w> for a real point w of the same dimension.
double pairing(const ExponentVector& m, std::span<const double> w);

/// z^m for z in the complex torus; negative entries invert.
Complex eval_monomial(const ExponentVector& m, std::span<const Complex> z);

/// Throws std::invalid_argument unless `got == expected`.
void require_dim(std::size_t got, std::size_t expected, const char* what);

std::string to_string(const ExponentVector& m);

}  // namespace tropdegen
