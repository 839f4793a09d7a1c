#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tropdegen/exponent.hpp"

namespace tropdegen {

/// Roots of sum_k coeffs[k] x^k via eigenvalues of the companion matrix,
/// each polished by one Newton step.
///
/// Leading and trailing exact zeros are stripped first, so x = 0 is never
/// reported. Returns std::nullopt when the eigen-solver does not converge.
std::optional<std::vector<Complex>> polynomial_roots(std::span<const Complex> coeffs);

/// Moduli outside this band are treated as numerically untrusted, unless the
/// sampling window itself reaches further (see sample_amoeba).
inline constexpr double kMinTrustedRootModulus = 1e-12;
inline constexpr double kMaxTrustedRootModulus = 1e12;

}  // namespace tropdegen
