#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rank2/cluster_basis.hpp"
#include "rank2/errors.hpp"
#include "rank2/support_region.hpp"

using namespace rank2;

namespace {

const ExchangeParams k33 = ExchangeParams::skew(3);

const std::vector<ExchangeParams> kParams{{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 1}, {2, 3}, {1, 4}, {4, 1}, {1, 3}};

}  // namespace

TEST(SupportRegion, ImaginaryRoots) {
  EXPECT_TRUE(is_imaginary_root({3, 4}, k33));
  EXPECT_FALSE(is_imaginary_root({2, 8}, k33));
  for (int a1 = -6; a1 <= 6; ++a1)
    for (int a2 = -6; a2 <= 6; ++a2) EXPECT_FALSE(is_imaginary_root({a1, a2}, ExchangeParams(1, 1)));
  EXPECT_TRUE(is_imaginary_root({1, 1}, ExchangeParams::skew(2)));
  EXPECT_FALSE(is_imaginary_root({-1, -1}, ExchangeParams::skew(5)));
}

TEST(SupportRegion, DValues) {
  EXPECT_EQ(d_value(1, 0, {3, 4}, k33), 9);
  EXPECT_EQ(d_value(0, 0, {3, 4}, k33), 0);
  EXPECT_EQ(d_value(4, 1, {2, 8}, k33), 15);
  // c a1 q + b a2 p - b p^2 - bc pq - c q^2 with b != c
  EXPECT_EQ(d_value(1, 2, {3, 5}, ExchangeParams(2, 3)), 3 * 3 * 2 + 2 * 5 * 1 - 2 - 6 * 2 - 3 * 4);
}

TEST(SupportRegion, DenominatorVectorsTable) {
  for (const auto& P : kParams) {
    const long b = P.b, c = P.c;
    EXPECT_EQ(denominator_vector(1, P), (DenomVector{-1, 0}));
    EXPECT_EQ(denominator_vector(2, P), (DenomVector{0, -1}));
    EXPECT_EQ(denominator_vector(3, P), (DenomVector{1, 0}));
    EXPECT_EQ(denominator_vector(4, P), (DenomVector{b, 1}));
    EXPECT_EQ(denominator_vector(0, P), (DenomVector{0, 1}));
    EXPECT_EQ(denominator_vector(-1, P), (DenomVector{1, c}));
    EXPECT_EQ(denominator_vector(-2, P), (DenomVector{b, b * c - 1}));
  }
}

TEST(SupportRegion, DeterminantInvariant) {
  for (const auto& P : kParams) {
    for (int n = -20; n < 20; ++n) {
      const DenomVector d = denominator_vector(n, P), e = denominator_vector(n + 1, P);
      EXPECT_EQ(d.d1 * e.d2 - e.d1 * d.d2, 1) << "n=" << n;
    }
  }
}

TEST(SupportRegion, DenominatorCapAndOverflow) {
  EXPECT_THROW(denominator_vector(65, k33), CapExceeded);
  EXPECT_THROW(denominator_vector(-65, k33), CapExceeded);
  EXPECT_THROW(denominator_vector(5, k33, 4), CapExceeded);
  // Growth is geometric for bc > 4; 64 steps overflow 64-bit integers.
  EXPECT_THROW(denominator_vector(60, k33), CapExceeded);
}

TEST(SupportRegion, DenominatorMatchesClusterVariable) {
  for (const auto& P : kParams) {
    for (int m = -3; m <= 6; ++m) {
      const DenomVector d = denominator_vector(m, P);
      EXPECT_EQ(cluster_variable(m, P).min_exponent(), (Exponent{static_cast<int>(-d.d1), static_cast<int>(-d.d2)}))
          << "m=" << m;
    }
  }
}

TEST(SupportRegion, RealDecomposeExamples) {
  EXPECT_EQ(real_decompose({2, 8}, k33), (RealDecomposition{-1, 2, 2}));
  EXPECT_EQ(real_decompose({3, 1}, k33), (RealDecomposition{4, 1, 0}));
  EXPECT_EQ(real_decompose({0, 0}, k33), (RealDecomposition{1, 0, 0}));
  EXPECT_THROW(real_decompose({3, 4}, k33), PreconditionViolated);
  EXPECT_THROW(real_decompose({30, 31}, ExchangeParams(1, 4), 2), NotFound);
}

TEST(SupportRegion, RealDecomposeRoundTrip) {
  for (const auto& P : kParams) {
    for (int a1 = -10; a1 <= 10; ++a1) {
      for (int a2 = -10; a2 <= 10; ++a2) {
        if (is_imaginary_root({a1, a2}, P)) continue;
        const RealDecomposition d = real_decompose({a1, a2}, P);
        const DenomVector x = denominator_vector(d.n, P), y = denominator_vector(d.n + 1, P);
        EXPECT_GE(d.s1, 0);
        EXPECT_GE(d.s2, 0);
        EXPECT_EQ(d.s1 * x.d1 + d.s2 * y.d1, a1);
        EXPECT_EQ(d.s1 * x.d2 + d.s2 * y.d2, a2);
        if (a1 != 0 || a2 != 0) EXPECT_GT(d.s1, 0);
      }
    }
  }
}

TEST(SupportRegion, RegionExamples) {
  const RegionDescription r28 = region({2, 8}, k33);
  EXPECT_EQ(r28.kind, RegionKind::kQuadrilateral);
  EXPECT_EQ(r28.vertices, (std::vector<LatticePoint>{{0, 0}, {8, 0}, {2, 2}, {0, 2}}));
  EXPECT_EQ(region({-2, -5}, k33).kind, RegionKind::kPoint);
  EXPECT_EQ(region({-2, -5}, k33).vertices, (std::vector<LatticePoint>{{0, 0}}));
  EXPECT_EQ(region({3, 4}, k33).kind, RegionKind::kCurved);
  EXPECT_TRUE(region({3, 4}, k33).vertices.empty());
  EXPECT_FALSE(region_contains({3, 4}, 1, 2, k33));
  EXPECT_TRUE(region_contains({3, 4}, 1, 1, k33));
  EXPECT_FALSE(region_contains({2, 8}, 3, 2, k33));
  EXPECT_TRUE(region_contains({2, 8}, 5, 1, k33));
  EXPECT_FALSE(region_contains({2, 8}, 6, 1, k33));
  EXPECT_EQ(region({0, 3}, k33).kind, RegionKind::kSegmentHorizontal);
  EXPECT_EQ(region({3, 0}, k33).kind, RegionKind::kSegmentVertical);
  EXPECT_EQ(to_string(RegionKind::kSegmentHorizontal), "segment-horizontal");
}

TEST(SupportRegion, OriginAlwaysInside) {
  for (const auto& P : kParams)
    for (int a1 = -6; a1 <= 6; ++a1)
      for (int a2 = -6; a2 <= 6; ++a2) EXPECT_TRUE(region_contains({a1, a2}, 0, 0, P));
}

TEST(SupportRegion, VerticesAreCounterclockwiseAndOnBoundary) {
  for (const auto& P : kParams) {
    for (int a1 = -8; a1 <= 8; ++a1) {
      for (int a2 = -8; a2 <= 8; ++a2) {
        const RootVector a{a1, a2};
        const RegionDescription reg = region(a, P);
        if (reg.kind == RegionKind::kCurved) continue;
        ASSERT_FALSE(reg.vertices.empty());
        EXPECT_EQ(reg.vertices.front(), (LatticePoint{0, 0}));
        for (std::size_t i = 1; i < reg.vertices.size(); ++i) {
          EXPECT_EQ(d_value(reg.vertices[i].p, reg.vertices[i].q, a, P), 0) << to_string(a);
        }
        const std::size_t n = reg.vertices.size();
        for (std::size_t i = 0; n >= 3 && i < n; ++i) {
          const auto& o = reg.vertices[i];
          const auto& x = reg.vertices[(i + 1) % n];
          const auto& y = reg.vertices[(i + 2) % n];
          EXPECT_GT((x.p - o.p) * (y.q - o.q) - (x.q - o.q) * (y.p - o.p), 0) << to_string(a);
        }
      }
    }
  }
}

TEST(SupportRegion, ContainmentMatchesSupport) {
  for (const auto& P : kParams) {
    for (int a1 = -7; a1 <= 7; ++a1) {
      for (int a2 = -7; a2 <= 7; ++a2) {
        const RootVector a{a1, a2};
        if (std::abs(a1) + std::abs(a2) > 9) continue;
        // The imaginary-root region {D >= 0} is not convex; there the support
        // itself is the reference.
        const bool imaginary = is_imaginary_root(a, P);
        const ECoefficients e = e_coefficients(a, P);
        std::vector<LatticePoint> pts;
        for (const auto& [pq, c] : e) pts.push_back({pq.first, pq.second});
        const auto h = oracle::hull(pts);
        for (int p = 0; p <= pos(a2) + 1; ++p) {
          for (int q = 0; q <= pos(a1) + 1; ++q) {
            const bool want = imaginary ? e.count({p, q}) > 0 : oracle::in_hull(h, p, q);
            EXPECT_EQ(region_contains(a, p, q, P), want)
                << "b=" << P.b << " c=" << P.c << " a=" << to_string(a) << " (" << p << "," << q << ")";
          }
        }
      }
    }
  }
}

TEST(SupportRegion, RegionJson) {
  const nlohmann::json j = region({2, 8}, k33);
  EXPECT_EQ(j["kind"], "quadrilateral");
  EXPECT_EQ(j["vertices"].size(), 4u);
  EXPECT_EQ(j["vertices"][1], nlohmann::json::parse("[8,0]"));
  const nlohmann::json k = region({3, 4}, k33);
  EXPECT_EQ(k["kind"], "curved");
  EXPECT_EQ(k["b"], 3);
}
