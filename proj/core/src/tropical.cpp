#include "tropdegen/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/rational.hpp>

namespace tropdegen {

// TropicalPolynomial ---------------------------------------------------------

TropicalPolynomial::TropicalPolynomial(int dim, std::vector<Term> terms)
    : dim_(dim), terms_(std::move(terms)) {
  if (dim_ < 1) throw std::invalid_argument("tropical polynomial dimension must be at least 1");
  if (terms_.empty()) throw std::invalid_argument("tropical polynomial needs a nonempty support");
  for (const Term& t : terms_) {
    require_dim(t.exponent.size(), static_cast<std::size_t>(dim_), "TropicalPolynomial");
    if (!std::isfinite(t.coefficient)) {
      throw std::invalid_argument("tropical coefficient must be finite");
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  const auto dup = std::adjacent_find(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return a.exponent == b.exponent;
  });
  if (dup != terms_.end()) {
    throw std::invalid_argument("repeated exponent " + to_string(dup->exponent) +
                                " in tropical polynomial");
  }
}

double TropicalPolynomial::coefficient(const ExponentVector& m) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const ExponentVector& e) { return t.exponent < e; });
  if (it == terms_.end() || it->exponent != m) {
    throw std::out_of_range("exponent " + to_string(m) + " not in support");
  }
  return it->coefficient;
}

bool TropicalPolynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coefficient == std::floor(t.coefficient); });
}

TropicalPolynomial TropicalPolynomial::scaled(double factor) const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coefficient *= factor;
  return TropicalPolynomial(dim_, std::move(out));
}

double eval_trop(const TropicalPolynomial& trop, std::span<const double> w) {
  require_dim(w.size(), static_cast<std::size_t>(trop.dim()), "eval_trop");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& t : trop.terms()) best = std::min(best, t.coefficient + pairing(t.exponent, w));
  return best;
}

std::vector<ExponentVector> argmin_support(const TropicalPolynomial& trop,
                                           std::span<const double> w, double tolerance) {
  if (tolerance < 0.0) throw std::invalid_argument("tie tolerance must be nonnegative");
  require_dim(w.size(), static_cast<std::size_t>(trop.dim()), "argmin_support");
  std::vector<double> values;
  values.reserve(trop.size());
  for (const auto& t : trop.terms()) values.push_back(t.coefficient + pairing(t.exponent, w));
  const double best = *std::min_element(values.begin(), values.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] - best <= tolerance) out.push_back(trop.terms()[i].exponent);
  }
  return out;
}

bool is_member(const TropicalPolynomial& trop, std::span<const double> w, double tolerance) {
  return argmin_support(trop, w, tolerance).size() >= 2;
}

double Box2::diagonal() const { return std::hypot(hi_x - lo_x, hi_y - lo_y); }

// Corner locus ---------------------------------------------------------------

namespace {

using Rational = boost::rational<long long>;

constexpr double kHullTolerance = 1e-12;
// Bounds that keep every intermediate of the exact path well inside 64 bits.
constexpr double kExactCoefficientBound = 1 << 20;
constexpr int kExactExponentBound = 1 << 10;

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
int sign_of(double x) { return x > kHullTolerance ? 1 : (x < -kHullTolerance ? -1 : 0); }
double as_double(const Rational& x) { return boost::rational_cast<double>(x); }
double as_double(double x) { return x; }

struct Lattice2 {
  long long x = 0;
  long long y = 0;
};

long long cross(const Lattice2& o, const Lattice2& a, const Lattice2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Direction2 primitive(long long dx, long long dy) {
  const long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
  return {static_cast<int>(dx / g), static_cast<int>(dy / g)};
}

// Strict convex hull (collinear points dropped), counter-clockwise, of a
// subset of lattice points given by index.
std::vector<std::size_t> convex_hull(const std::vector<Lattice2>& pts,
                                     std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
  });
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);
  return hull;
}

template <class Num>
class LowerHullBuilder {
 public:
  LowerHullBuilder(const TropicalPolynomial& trop) : trop_(trop) {
    for (const auto& t : trop.terms()) {
      lattice_.push_back({t.exponent[0], t.exponent[1]});
      if constexpr (std::is_same_v<Num, Rational>) {
        lift_.emplace_back(static_cast<long long>(t.coefficient));
      } else {
        lift_.push_back(t.coefficient);
      }
    }
  }

  CornerLocusComplex build() {
    if (affinely_collinear()) return build_parallel_lines();
    return build_from_facets();
  }

 private:
  struct Facet {
    Num wx;
    Num wy;
    std::vector<std::size_t> hull;  // CCW polygon of the tie set
  };

  bool affinely_collinear() const {
    for (std::size_t k = 2; k < lattice_.size(); ++k) {
      if (cross(lattice_[0], lattice_[1], lattice_[k]) != 0) return false;
    }
    return true;
  }

  Num value_at(std::size_t l, const Num& wx, const Num& wy) const {
    return lift_[l] + Num(lattice_[l].x) * wx + Num(lattice_[l].y) * wy;
  }

  CornerLocusComplex::SupportPair tie_pair(std::size_t p, std::size_t q) const {
    return {trop_.terms()[p].exponent, trop_.terms()[q].exponent};
  }

  // Lower facets of the lifted point set. A facet is identified by the set of
  // lifted points on its supporting plane; its dual vertex w solves
  // c_i + <m_i, w> = c_j + <m_j, w> = c_k + <m_k, w>.
  std::vector<Facet> lower_facets() const {
    const std::size_t n = lattice_.size();
    std::set<std::vector<std::size_t>> seen;
    std::vector<Facet> facets;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          const long long det = cross(lattice_[i], lattice_[j], lattice_[k]);
          if (det == 0) continue;
          const Num ax(lattice_[j].x - lattice_[i].x), ay(lattice_[j].y - lattice_[i].y);
          const Num bx(lattice_[k].x - lattice_[i].x), by(lattice_[k].y - lattice_[i].y);
          const Num r1 = lift_[i] - lift_[j];
          const Num r2 = lift_[i] - lift_[k];
          const Num d(det);
          const Num wx = (r1 * by - r2 * ay) / d;
          const Num wy = (ax * r2 - bx * r1) / d;
          const Num base = value_at(i, wx, wy);
          std::vector<std::size_t> ties;
          bool lower = true;
          for (std::size_t l = 0; l < n && lower; ++l) {
            const int s = sign_of(value_at(l, wx, wy) - base);
            if (s < 0) lower = false;
            if (s == 0) ties.push_back(l);
          }
          if (!lower || !seen.insert(ties).second) continue;
          facets.push_back({wx, wy, convex_hull(lattice_, ties)});
        }
      }
    }
    return facets;
  }

  CornerLocusComplex build_from_facets() const {
    const std::vector<Facet> facets = lower_facets();
    CornerLocusComplex out;
    struct EdgeUse {
      std::size_t facet;
      std::size_t p;
      std::size_t q;
      std::size_t inside;  // a facet vertex off the edge
    };
    std::map<std::pair<std::size_t, std::size_t>, std::vector<EdgeUse>> edges;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      out.vertices.push_back({as_double(facets[f].wx), as_double(facets[f].wy)});
      const auto& hull = facets[f].hull;
      for (std::size_t e = 0; e < hull.size(); ++e) {
        const std::size_t p = hull[e];
        const std::size_t q = hull[(e + 1) % hull.size()];
        const std::size_t r = hull[(e + 2) % hull.size()];
        edges[{std::min(p, q), std::max(p, q)}].push_back({f, p, q, r});
      }
    }
    for (const auto& [key, uses] : edges) {
      if (uses.size() == 2) {
        out.segments.push_back({uses[0].facet, uses[1].facet, tie_pair(key.first, key.second)});
      } else if (uses.size() == 1) {
        const EdgeUse& u = uses.front();
        const Lattice2& p = lattice_[u.p];
        const Lattice2& q = lattice_[u.q];
        const Lattice2& r = lattice_[u.inside];
        Direction2 d = primitive(-(q.y - p.y), q.x - p.x);
        if (d[0] * (r.x - p.x) + d[1] * (r.y - p.y) < 0) d = {-d[0], -d[1]};
        out.rays.push_back({u.facet, d, tie_pair(key.first, key.second)});
      } else {
        throw std::logic_error("subdivision edge shared by more than two cells");
      }
    }
    return out;
  }

  // Newton polygon is a segment: the lower hull lives in the (t, c) plane where
  // m = m_0 + t u, and every hull edge is dual to a full line.
  CornerLocusComplex build_parallel_lines() const {
    std::size_t far = 1;
    for (std::size_t k = 1; k < lattice_.size(); ++k) {
      if (lattice_[k].x != lattice_[0].x || lattice_[k].y != lattice_[0].y) {
        far = k;
        break;
      }
    }
    const Direction2 u = primitive(lattice_[far].x - lattice_[0].x, lattice_[far].y - lattice_[0].y);
    std::vector<std::size_t> order(lattice_.size());
    std::iota(order.begin(), order.end(), 0);
    auto coord = [&](std::size_t k) {
      return (lattice_[k].x - lattice_[0].x) * u[0] + (lattice_[k].y - lattice_[0].y) * u[1];
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return coord(a) < coord(b); });

    std::vector<std::size_t> hull;
    for (std::size_t k : order) {
      while (hull.size() >= 2) {
        const std::size_t a = hull[hull.size() - 2];
        const std::size_t b = hull.back();
        const Num turn = Num(coord(b) - coord(a)) * (lift_[k] - lift_[a]) -
                         (lift_[b] - lift_[a]) * Num(coord(k) - coord(a));
        if (sign_of(turn) > 0) break;
        hull.pop_back();
      }
      hull.push_back(k);
    }

    CornerLocusComplex out;
    const Direction2 normal{-u[1], u[0]};
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
      const std::size_t p = hull[e];
      const std::size_t q = hull[e + 1];
      const long long dx = lattice_[q].x - lattice_[p].x;
      const long long dy = lattice_[q].y - lattice_[p].y;
      // Foot of the perpendicular from the origin onto <m_q - m_p, w> = c_p - c_q.
      const Num scale = (lift_[p] - lift_[q]) / Num(dx * dx + dy * dy);
      out.vertices.push_back({as_double(scale * Num(dx)), as_double(scale * Num(dy))});
      const std::size_t v = out.vertices.size() - 1;
      out.rays.push_back({v, normal, tie_pair(p, q)});
      out.rays.push_back({v, {-normal[0], -normal[1]}, tie_pair(p, q)});
    }
    return out;
  }

  const TropicalPolynomial& trop_;
  std::vector<Lattice2> lattice_;
  std::vector<Num> lift_;
};

bool exact_path_applies(const TropicalPolynomial& trop) {
  if (!trop.has_integer_coefficients()) return false;
  for (const auto& t : trop.terms()) {
    if (std::abs(t.coefficient) > kExactCoefficientBound) return false;
    for (int e : t.exponent) {
      if (std::abs(e) > kExactExponentBound) return false;
    }
  }
  return true;
}

// Liang-Barsky clip of a + s d, s in [s0, s1], against the window.
bool clip_parametric(const Point2& a, const std::array<double, 2>& d, double s0, double s1,
                     const Box2& window, ClippedPiece& piece) {
  const double lo[2] = {window.lo_x, window.lo_y};
  const double hi[2] = {window.hi_x, window.hi_y};
  for (int i = 0; i < 2; ++i) {
    if (d[i] == 0.0) {
      if (a[i] < lo[i] || a[i] > hi[i]) return false;
      continue;
    }
    const double t1 = (lo[i] - a[i]) / d[i];
    const double t2 = (hi[i] - a[i]) / d[i];
    s0 = std::max(s0, std::min(t1, t2));
    s1 = std::min(s1, std::max(t1, t2));
  }
  if (s0 > s1) return false;
  piece.a = {a[0] + s0 * d[0], a[1] + s0 * d[1]};
  piece.b = {a[0] + s1 * d[0], a[1] + s1 * d[1]};
  return true;
}

double distance_to_piece(const ClippedPiece& piece, const Point2& w) {
  const double dx = piece.b[0] - piece.a[0];
  const double dy = piece.b[1] - piece.a[1];
  const double len2 = dx * dx + dy * dy;
  double s = 0.0;
  if (len2 > 0.0) {
    s = ((w[0] - piece.a[0]) * dx + (w[1] - piece.a[1]) * dy) / len2;
    s = std::clamp(s, 0.0, 1.0);
  }
  return std::hypot(w[0] - (piece.a[0] + s * dx), w[1] - (piece.a[1] + s * dy));
}

}  // namespace

CornerLocusComplex corner_locus_2d(const TropicalPolynomial& trop) {
  if (trop.dim() != 2) throw std::invalid_argument("corner_locus_2d requires a bivariate polynomial");
  if (trop.size() < 2) throw std::domain_error("tropical hypersurface is empty");
  if (exact_path_applies(trop)) return LowerHullBuilder<Rational>(trop).build();
  return LowerHullBuilder<double>(trop).build();
}

std::vector<ClippedPiece> clip_to_window(const CornerLocusComplex& complex, const Box2& window) {
  std::vector<ClippedPiece> pieces;
  ClippedPiece piece;
  for (const auto& seg : complex.segments) {
    const Point2& a = complex.vertices[seg.from];
    const Point2& b = complex.vertices[seg.to];
    if (clip_parametric(a, {b[0] - a[0], b[1] - a[1]}, 0.0, 1.0, window, piece)) {
      pieces.push_back(piece);
    }
  }
  for (const auto& ray : complex.rays) {
    const Point2& a = complex.vertices[ray.vertex];
    const std::array<double, 2> d{static_cast<double>(ray.direction[0]),
                                  static_cast<double>(ray.direction[1])};
    if (clip_parametric(a, d, 0.0, std::numeric_limits<double>::infinity(), window, piece)) {
      pieces.push_back(piece);
    }
  }
  return pieces;
}

double distance_to_complex(const CornerLocusComplex& complex, const Point2& w, const Box2& window) {
  if (complex.empty()) throw std::invalid_argument("distance_to_complex: empty complex");
  double best = std::numeric_limits<double>::infinity();
  for (const ClippedPiece& piece : clip_to_window(complex, window)) {
    best = std::min(best, distance_to_piece(piece, w));
  }
  return best;
}

std::vector<Point2> discretize_complex(const CornerLocusComplex& complex, const Box2& window,
                                       double step) {
  if (!(step > 0.0)) throw std::invalid_argument("discretization step must be positive");
  std::vector<Point2> out;
  for (const ClippedPiece& piece : clip_to_window(complex, window)) {
    const double len = std::hypot(piece.b[0] - piece.a[0], piece.b[1] - piece.a[1]);
    const auto n = static_cast<std::size_t>(std::ceil(len / step));
    for (std::size_t i = 0; i <= n; ++i) {
      const double s = n == 0 ? 0.0 : static_cast<double>(i) / static_cast<double>(n);
      out.push_back({piece.a[0] + s * (piece.b[0] - piece.a[0]),
                     piece.a[1] + s * (piece.b[1] - piece.a[1])});
    }
  }
  return out;
}

}  // namespace tropdegen
