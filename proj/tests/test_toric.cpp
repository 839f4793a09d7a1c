#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace tropdegen;
using namespace tropdegen::testing;

namespace {

LatticePolytope unit_triangle() { return LatticePolytope({{0, 0}, {1, 0}, {0, 1}}); }

// Oracle for the limit along t*d: barycenter of the lattice points
// minimizing <m, d>.
std::vector<double> face_barycenter(const LatticePolytope& p, const std::vector<double>& d) {
  double best = 1e300;
  for (const auto& m : p.lattice_points()) best = std::min(best, m[0] * d[0] + m[1] * d[1]);
  std::vector<double> sum(2, 0.0);
  int count = 0;
  for (const auto& m : p.lattice_points()) {
    if (m[0] * d[0] + m[1] * d[1] == best) {
      sum[0] += m[0];
      sum[1] += m[1];
      ++count;
    }
  }
  return {sum[0] / count, sum[1] / count};
}

}  // namespace

TEST(LatticePolytope, TriangleVertices) {
  const auto p = LatticePolytope::dilated_triangle(3);
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_EQ(p.lattice_points().size(), 10u);
  EXPECT_EQ(p.vertices().size(), 3u);
}

TEST(LatticePolytope, RejectsDegenerate) {
  EXPECT_THROW(LatticePolytope({{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(LatticePolytope({}), std::invalid_argument);
  EXPECT_THROW(LatticePolytope({{0, 0}, {1}}), std::invalid_argument);
  EXPECT_THROW(LatticePolytope::dilated_triangle(0), std::invalid_argument);
}

TEST(LatticePolytope, Segment) {
  const LatticePolytope p({{0}, {3}, {1}});
  EXPECT_EQ(p.dim(), 1u);
  EXPECT_EQ(p.vertices().size(), 2u);
}

TEST(MomentMap, Barycenter) {
  const auto mu = moment_map(unit_triangle(), std::vector<Complex>{1.0, 1.0});
  EXPECT_NEAR(mu[0], 1.0 / 3, 1e-15);
  EXPECT_NEAR(mu[1], 1.0 / 3, 1e-15);
}

TEST(MomentMap, DominantMonomial) {
  const auto mu = moment_map(unit_triangle(), std::vector<Complex>{1e200, 1.0});
  EXPECT_NEAR(mu[0], 1.0, 1e-15);
  EXPECT_NEAR(mu[1], 0.0, 1e-15);
}

TEST(MomentMap, RangeAndPhaseInvariance) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> lm(-30, 30);
  std::uniform_real_distribution<double> ph(0, 6.28);
  const auto p = LatticePolytope::dilated_triangle(3);
  for (int i = 0; i < 1000; ++i) {
    const double r1 = std::exp(lm(rng));
    const double r2 = std::exp(lm(rng));
    const auto mu = moment_map(p, std::vector<Complex>{r1, r2});
    const auto rotated = moment_map(p, std::vector<Complex>{std::polar(r1, ph(rng)), std::polar(r2, ph(rng))});
    EXPECT_NEAR(mu[0], rotated[0], 1e-12);
    EXPECT_NEAR(mu[1], rotated[1], 1e-12);
    EXPECT_TRUE(p.contains(mu));
    EXPECT_GE(mu[0], 0.0);
    EXPECT_GE(mu[1], 0.0);
    EXPECT_LE(mu[0] + mu[1], 3.0 + 1e-12);
  }
}

TEST(MomentMap, ZeroCoordinateThrows) {
  EXPECT_THROW(moment_map(unit_triangle(), std::vector<Complex>{0.0, 1.0}), std::domain_error);
}

TEST(TropMoment, Examples) {
  const auto nu = trop_moment(unit_triangle(), std::vector<double>{0, 0});
  EXPECT_NEAR(nu[0], 1.0 / 3, 1e-15);
  EXPECT_NEAR(nu[1], 1.0 / 3, 1e-15);
  const auto far = trop_moment(unit_triangle(), std::vector<double>{-800, 0});
  EXPECT_NEAR(far[0], 1.0, 1e-15);
  EXPECT_NEAR(far[1], 0.0, 1e-15);
}

TEST(TropMoment, AgreesWithMomentMap) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(-20, 20);
  const auto p = LatticePolytope::dilated_triangle(2);
  for (int i = 0; i < 1000; ++i) {
    const std::vector<double> w{u(rng), u(rng)};
    const auto nu = trop_moment(p, w);
    const auto mu = moment_map(p, std::vector<Complex>{std::exp(-w[0]), std::exp(-w[1])});
    EXPECT_NEAR(nu[0], mu[0], 1e-12);
    EXPECT_NEAR(nu[1], mu[1], 1e-12);
  }
}

TEST(TropMoment, FaceLimits) {
  const auto p = unit_triangle();
  const std::vector<std::vector<double>> directions{{1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1}};
  for (const auto& d : directions) {
    const auto nu = trop_moment(p, std::vector<double>{50 * d[0], 50 * d[1]});
    const auto expected = face_barycenter(p, d);
    EXPECT_NEAR(nu[0], expected[0], 1e-6) << d[0] << "," << d[1];
    EXPECT_NEAR(nu[1], expected[1], 1e-6) << d[0] << "," << d[1];
  }
}

TEST(TropMoment, Injective) {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(-3, 3);
  const auto p = unit_triangle();
  std::vector<std::vector<double>> ws;
  std::vector<std::vector<double>> nus;
  for (int i = 0; i < 1000; ++i) {
    ws.push_back({u(rng), u(rng)});
    nus.push_back(trop_moment(p, ws.back()));
  }
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      if (std::hypot(ws[i][0] - ws[j][0], ws[i][1] - ws[j][1]) < 1e-6) continue;
      EXPECT_GT(std::hypot(nus[i][0] - nus[j][0], nus[i][1] - nus[j][1]), 1e-9);
    }
  }
}

TEST(CompactifyCloud, Examples) {
  const auto p = unit_triangle();
  const auto c = compactify_cloud(cloud_of(2, {{0, 0}, {-40, -40}}), p);
  EXPECT_NEAR(c.point(0)[0], 1.0 / 3, 1e-15);
  EXPECT_NEAR(c.point(0)[1], 1.0 / 3, 1e-15);
  EXPECT_NEAR(c.point(1)[0], 0.5, 1e-12);
  EXPECT_NEAR(c.point(1)[1], 0.5, 1e-12);
  EXPECT_THROW(compactify_cloud(cloud_of(1, {{0}}), p), std::invalid_argument);
}

// The three rays of the tropical line end at the midpoints of the edges
// they point towards.
TEST(CompactifyCloud, TropicalLineRaysReachEdgeMidpoints) {
  const auto p = unit_triangle();
  const auto c = corner_locus_2d(trivial_tropicalize(line_poly()));
  for (const auto& r : c.rays) {
    const std::vector<double> d{double(r.direction[0]), double(r.direction[1])};
    const auto end = compactify_cloud(cloud_of(2, {{50 * d[0], 50 * d[1]}}), p);
    const auto expected = face_barycenter(p, d);
    EXPECT_NEAR(end.point(0)[0], expected[0], 1e-6);
    EXPECT_NEAR(end.point(0)[1], expected[1], 1e-6);
  }
  // Direction (1, 0) minimizes m1, giving the edge {m1 = 0} with midpoint (0, 1/2).
  EXPECT_EQ(face_barycenter(p, {1, 0}), (std::vector<double>{0.0, 0.5}));
}
