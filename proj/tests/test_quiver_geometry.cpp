#include <gtest/gtest.h>

#include <algorithm>

#include "rank2/errors.hpp"
#include "rank2/quiver_geometry.hpp"

using namespace rank2;

namespace {

std::vector<WeightW> weights(int bound) {
  std::vector<WeightW> out;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c)
        for (int d = 0; d <= bound; ++d) out.push_back({a, b, c, d});
  return out;
}

}  // namespace

TEST(QuiverGeometry, LDominance) {
  EXPECT_TRUE(is_l_dominant({2, 2}, {0, 4, 4, 0}, 3));
  EXPECT_TRUE(is_l_dominant({0, 0}, {0, 0, 0, 0}, 2));
  EXPECT_FALSE(is_l_dominant({1, 2}, {0, 1, 1, 0}, 2));
}

TEST(QuiverGeometry, DomEnumerate) {
  for (int r = 2; r <= 5; ++r) EXPECT_EQ(dom_enumerate({0, 1, 1, 0}, r), (std::vector<DimV>{{0, 0}, {1, 1}}));
  EXPECT_EQ(dom_enumerate({0, 0, 0, 0}, 3), (std::vector<DimV>{{0, 0}}));
  const auto dom = dom_enumerate({0, 4, 4, 0}, 3);
  for (DimV v : {DimV{0, 0}, DimV{1, 1}, DimV{1, 2}, DimV{2, 1}, DimV{2, 2}}) {
    EXPECT_NE(std::find(dom.begin(), dom.end(), v), dom.end()) << to_string(v);
  }
  EXPECT_TRUE(std::is_sorted(dom.begin(), dom.end()));
}

TEST(QuiverGeometry, CqAndWperp) {
  EXPECT_EQ(cq({1, 1}, 3), (std::array<long, 4>{-2, 1, 1, -2}));
  EXPECT_EQ(cq({0, 0}, 3), (std::array<long, 4>{0, 0, 0, 0}));
  EXPECT_EQ(cq({1, 2}, 3), (std::array<long, 4>{-5, 1, 2, -1}));
  EXPECT_EQ(wperp({0, 4, 4, 0}, {1, 1}, 3), (WeightW{2, 3, 3, 2}));
  EXPECT_EQ(wperp({1, 2, 3, 4}, {0, 0}, 3), (WeightW{1, 2, 3, 4}));
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(wperp({0, 1, 1, 0}, {1, 1}, r), (WeightW{r - 1, 0, 0, r - 1}));
  EXPECT_THROW(wperp({0, 1, 1, 0}, {1, 2}, 2), NegativeEntry);
}

TEST(QuiverGeometry, WperpNonnegativeIffDominant) {
  for (int r = 1; r <= 3; ++r) {
    for (const WeightW& w : weights(3)) {
      for (int v1 = 0; v1 <= 4; ++v1) {
        for (int v2 = 0; v2 <= 4; ++v2) {
          const DimV v{v1, v2};
          if (is_l_dominant(v, w, r)) {
            EXPECT_NO_THROW(wperp(w, v, r));
          } else {
            EXPECT_THROW(wperp(w, v, r), NegativeEntry);
          }
        }
      }
    }
  }
}

TEST(QuiverGeometry, VbarExamples) {
  EXPECT_EQ(vbar({5, 5}, {0, 4, 4, 0}, 3), (DimV{4, 4}));
  EXPECT_EQ(vbar({2, 2}, {0, 4, 4, 0}, 3), (DimV{2, 2}));
  for (int r = 2; r <= 3; ++r) {
    for (int w1p = 0; w1p <= 4; ++w1p) {
      for (int w2 = 0; w2 <= 4; ++w2) {
        if (r * w2 < w1p || r * w1p < w2) continue;
        for (int v1 = 0; v1 <= w1p; ++v1) {
          for (int v2 = w2; v2 <= r * v1; ++v2) {
            EXPECT_EQ(vbar({v1, v2}, {0, w1p, w2, 0}, r), (DimV{v1, w2}));
          }
        }
      }
    }
  }
}

TEST(QuiverGeometry, VbarIsTheLargestDominantBelow) {
  for (int r = 1; r <= 4; ++r) {
    for (const WeightW& w : weights(5)) {
      const auto dom = dom_enumerate(w, r);
      for (int v1 = 0; v1 <= 6; ++v1) {
        for (int v2 = 0; v2 <= 6; ++v2) {
          const DimV v{v1, v2};
          const DimV vb = vbar(v, w, r);
          ASSERT_TRUE(is_l_dominant(vb, w, r)) << to_string(v) << to_string(w);
          ASSERT_TRUE(vb.leq(v));
          for (const DimV& u : dom) {
            if (u.leq(v)) ASSERT_TRUE(u.leq(vb)) << to_string(u) << " " << to_string(vb);
          }
          if (is_l_dominant(v, w, r)) ASSERT_EQ(vb, v);
        }
      }
    }
  }
}

TEST(QuiverGeometry, DimsExamples) {
  const Dimensions d = dims({2, 2}, {0, 4, 4, 0}, 3);
  EXPECT_EQ(d.d, 12);
  EXPECT_EQ(d.dTilde, 20);
  const Dimensions z = dims({0, 0}, {1, 2, 3, 4}, 3);
  EXPECT_EQ(z.d, 0);
  EXPECT_EQ(z.dTilde, 0);
  EXPECT_EQ(z.dimE, 0);
  EXPECT_EQ(z.dimG, 0);
  EXPECT_EQ(z.dimGTilde, 0);
  EXPECT_EQ(dims({1, 1}, {0, 1, 1, 0}, 2).dTilde, 2);
  EXPECT_THROW(dims({2, 0}, {0, 1, 1, 0}, 2), EmptyVariety);
  EXPECT_FALSE(dims({1, 3}, {0, 1, 1, 2}, 2).dimG.has_value());
}

TEST(QuiverGeometry, DimsMonotone) {
  for (int r = 1; r <= 3; ++r) {
    for (const WeightW& w : weights(3)) {
      for (const DimV& v : dom_enumerate(w, r)) {
        if (!nonempty_f(v, w, r)) continue;
        const Dimensions d = dims(v, w, r);
        EXPECT_GE(d.d, 0);
        EXPECT_GE(d.dTilde, d.d);
        EXPECT_EQ(d.dimE, d.dTilde);
      }
    }
  }
}

TEST(QuiverGeometry, FGValues) {
  EXPECT_EQ(fg_values({2, 2}, {0, 4, 4, 0}, 3).f, 4);
  const FGValues z = fg_values({0, 0}, {1, 2, 3, 4}, 2);
  EXPECT_EQ(z.f, 0);
  EXPECT_EQ(z.fSwap, 0);
  EXPECT_EQ(z.g, 0);
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(fg_values({1, 1}, {0, 1, 1, 0}, r).g, -r);
  for (int r = 1; r <= 3; ++r) {
    for (const WeightW& w : weights(3)) {
      for (int v1 = 0; v1 <= 3; ++v1) {
        for (int v2 = 0; v2 <= 3; ++v2) {
          const DimV v{v1, v2};
          const FGValues fg = fg_values(v, w, r);
          EXPECT_EQ(fg.f, 2 * d_dim(v, w, r) - d_tilde(v, w, r));
          EXPECT_EQ(fg.fSwap, fg_values(swap(v), swap(w), r).f);
          EXPECT_EQ(fg.g, -v1 * v1 - r * v1 * v2 - v2 * v2 + v1 * (w.w1p - w.w1) + v2 * (w.w2 - w.w2p));
        }
      }
    }
  }
}

TEST(QuiverGeometry, SliceShiftOfF) {
  // For w = (0, w'1, w2, 0): f(v,w) - f(v - v0, w - C_q v0) and its variants
  // against f(v0), fSwap(v0), g(v0) as explicit quadratics in v0.
  for (int r = 2; r <= 4; ++r) {
    for (int w1p = 0; w1p <= 4; ++w1p) {
      for (int w2 = 0; w2 <= 4; ++w2) {
        const WeightW w{0, w1p, w2, 0};
        for (const DimV& x : dom_enumerate(w, r)) {
          const WeightW wp = wperp(w, x, r);
          const long Q = (long)x.v1 * x.v1 - (long)r * x.v1 * x.v2 + (long)x.v2 * x.v2;
          for (int v1 = x.v1; v1 <= x.v1 + 3; ++v1) {
            for (int v2 = x.v2; v2 <= x.v2 + 3; ++v2) {
              const DimV v{v1, v2};
              const long d1 = fg_values(v, w, r).f - fg_values(v - x, wp, r).f;
              const FGValues at0 = fg_values(x, w, r);
              EXPECT_EQ(d1, Q + (w1p - 2L * v1) * x.v1 + (2L * r * v1 - 2L * v2 - w2) * x.v2);
              EXPECT_EQ(d1 - at0.f, 2 * (Q - (long)v1 * x.v1 + ((long)r * v1 - v2) * x.v2));
              EXPECT_EQ(d1 - at0.fSwap, 2 * (Q + (long)(w1p - v1) * x.v1 + ((long)r * v1 - v2 - w2) * x.v2));
              EXPECT_EQ(d1 - at0.g, 2 * ((long)x.v1 * x.v1 + (long)x.v2 * x.v2 - (long)v1 * x.v1 +
                                         ((long)r * v1 - v2 - w2) * x.v2));
            }
          }
        }
      }
    }
  }
}

TEST(QuiverGeometry, Fibers) {
  const DimV v{2, 3};
  const WeightW w{0, 4, 4, 1};
  const auto same = pi_fiber(v, w, v, 3);
  EXPECT_EQ(same[0].dim() + same[1].dim(), 0);
  for (int w1p = 1; w1p <= 4; ++w1p) {
    for (int w2 = 0; w2 <= 4; ++w2) {
      for (int v1 = 0; v1 <= w1p; ++v1) {
        for (int v2 = w2; v2 <= 3 * v1; ++v2) {
          const auto f = pi_fiber({v1, v2}, {0, w1p, w2, 0}, {v1, w2}, 3);
          EXPECT_EQ(f[0].dim(), 0);
          EXPECT_EQ(f[1].k, v2 - w2);
          EXPECT_EQ(f[1].n, 3 * v1 - w2);
        }
      }
    }
  }
  EXPECT_EQ(fiber(FiberMap::kP2, v, w, v.v2, 3).dim(), 0);
  EXPECT_EQ(fiber(FiberMap::kP1, v, w, 1, 3).k, 1);
  EXPECT_EQ(fiber(FiberMap::kP1, v, w, 1, 3).n, 3);
  EXPECT_EQ(fiber(FiberMap::kP2Prime, v, w, 1, 3).n, 3);
  EXPECT_THROW(fiber(FiberMap::kP1, v, w, 3, 3), OutOfRange);
  EXPECT_THROW(pi_fiber(v, w, {3, 0}, 3), OutOfRange);
}
