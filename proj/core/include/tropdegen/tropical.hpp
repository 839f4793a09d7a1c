#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tropdegen/exponent.hpp"

namespace tropdegen {

/// Default tie tolerance for the "minimum attained twice" test.
inline constexpr double kTropTieTolerance = 1e-9;

/// A tropical polynomial w -> min_m (c_m + <m, w>) with a finite support.
///
/// Terms are kept in lexicographic order of their exponent vectors; the
/// support is nonempty and exponent vectors are pairwise distinct.
class TropicalPolynomial {
 public:
  struct Term {
    ExponentVector exponent;
    double coefficient = 0.0;

    bool operator==(const Term&) const = default;
  };

  /// Throws std::invalid_argument on an empty support, a repeated exponent,
  /// inconsistent dimensions or a non-finite coefficient.
  TropicalPolynomial(int dim, std::vector<Term> terms);

  int dim() const { return dim_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Coefficient of `m`; throws std::out_of_range if `m` is not in the support.
  double coefficient(const ExponentVector& m) const;

  /// True when every coefficient is an integer (the t-adic case).
  bool has_integer_coefficients() const;

  /// Same support with every coefficient multiplied by `factor`.
  TropicalPolynomial scaled(double factor) const;

  bool operator==(const TropicalPolynomial&) const = default;

 private:
  int dim_;
  std::vector<Term> terms_;
};

/// min_m (c_m + <m, w>).
double eval_trop(const TropicalPolynomial& trop, std::span<const double> w);

/// Exponents whose affine value at `w` is within `tolerance` of the minimum,
/// in support order.
std::vector<ExponentVector> argmin_support(const TropicalPolynomial& trop,
                                           std::span<const double> w,
                                           double tolerance = kTropTieTolerance);

/// Membership in the corner locus: the minimum is attained at least twice.
bool is_member(const TropicalPolynomial& trop, std::span<const double> w,
               double tolerance = kTropTieTolerance);

using Point2 = std::array<double, 2>;
using Direction2 = std::array<int, 2>;

/// Axis-aligned planar box [lo_x, hi_x] x [lo_y, hi_y].
struct Box2 {
  double lo_x = -1.0;
  double hi_x = 1.0;
  double lo_y = -1.0;
  double hi_y = 1.0;

  static Box2 square(double lo, double hi) { return {lo, hi, lo, hi}; }
  bool contains(const Point2& p) const {
    return p[0] >= lo_x && p[0] <= hi_x && p[1] >= lo_y && p[1] <= hi_y;
  }
  double diagonal() const;
};

/// Planar tropical curve: the corner locus of a bivariate tropical
/// polynomial, dual to the regular subdivision of its Newton polygon.
///
/// Every segment and ray records the two support exponents whose affine
/// forms tie (and are minimal) along it. Rays carry primitive integer
/// directions. A curve whose Newton polygon is a segment consists of
/// parallel lines, each stored as one vertex with two opposite rays.
struct CornerLocusComplex {
  using SupportPair = std::pair<ExponentVector, ExponentVector>;

  struct Segment {
    std::size_t from = 0;
    std::size_t to = 0;
    SupportPair tie;
  };
  struct Ray {
    std::size_t vertex = 0;
    Direction2 direction{0, 0};
    SupportPair tie;
  };

  std::vector<Point2> vertices;
  std::vector<Segment> segments;
  std::vector<Ray> rays;

  bool empty() const { return segments.empty() && rays.empty(); }
};

/// A straight piece of a complex after clipping to a window.
struct ClippedPiece {
  Point2 a;
  Point2 b;
};

/// Builds the corner locus of a bivariate tropical polynomial from the lower
/// convex hull of the lifted support {(m_1, m_2, c_m)}.
///
/// Integer coefficients run through exact rational arithmetic; anything else
/// uses doubles with a 1e-12 tie tolerance in the hull predicates.
/// Throws std::invalid_argument when the dimension is not 2 and
/// std::domain_error("tropical hypersurface is empty") for a single term.
CornerLocusComplex corner_locus_2d(const TropicalPolynomial& trop);

/// Cells of `complex` clipped to `window` (pieces outside are dropped).
std::vector<ClippedPiece> clip_to_window(const CornerLocusComplex& complex,
                                         const Box2& window);

/// Euclidean distance from `w` to the union of cells clipped to `window`.
/// Infinite when no cell meets the window; throws on an empty complex.
double distance_to_complex(const CornerLocusComplex& complex, const Point2& w,
                           const Box2& window);

/// Points along the clipped cells at arclength spacing at most `step`,
/// including all piece endpoints.
std::vector<Point2> discretize_complex(const CornerLocusComplex& complex,
                                       const Box2& window, double step);

}  // namespace tropdegen
