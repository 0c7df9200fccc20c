#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "numeric_oracle.hpp"
#include "su3/errors.hpp"
#include "su3/group.hpp"
#include "su3/series_c.hpp"
#include "su3/series_d.hpp"

using namespace su3;

TEST(CloseTest, SmallExamples) {
  const auto c3 = close({make_E()});
  EXPECT_EQ(c3.order(), 3u);
  EXPECT_TRUE(c3.elements().front().is_identity());

  const auto a4 = close({make_E(), make_F(2, 0, 1)});
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_EQ(element_order_histogram(a4), (OrderHistogram{{1, 1}, {2, 3}, {3, 8}}));

  // Frozen from the numeric oracle: <F(4,0,1), E^-1 F(4,0,1) E> ~ Z4 x Z4.
  const auto f = make_F(4, 0, 1);
  const auto z4z4 = close({f, conjugate(f, make_E())});
  EXPECT_EQ(z4z4.order(), 16u);
  EXPECT_EQ(element_order_histogram(z4z4), (OrderHistogram{{1, 1}, {2, 3}, {4, 12}}));
}

TEST(CloseTest, PreconditionViolations) {
  EXPECT_THROW(close(std::vector<MonomialElement>{}), ParameterError);
  EXPECT_THROW(close({make_E()}, 0), ParameterError);
  const auto g = close({MonomialElement{}});
  EXPECT_EQ(g.order(), 1u);
}

TEST(CloseTest, CapExceededCarriesCap) {
  try {
    close({make_E(), make_F(6, 0, 1)}, 50);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 50u);
  }
  EXPECT_NO_THROW(close({make_E(), make_F(6, 0, 1)}, 108));
}

TEST(CloseTest, EnvironmentCapIsHonoured) {
  ASSERT_EQ(setenv("SU3_ORDER_CAP", "20", 1), 0);
  EXPECT_EQ(default_order_cap(), 20u);
  EXPECT_THROW(close({make_E(), make_F(3, 0, 1)}), CapExceeded);
  ASSERT_EQ(setenv("SU3_ORDER_CAP", "garbage", 1), 0);
  EXPECT_EQ(default_order_cap(), default_order_cap_value);
  unsetenv("SU3_ORDER_CAP");
  EXPECT_EQ(default_order_cap(), default_order_cap_value);
}

TEST(CloseTest, IndexOfMatchesElementOrder) {
  const auto g = build_C(6, 1, 1);
  for (std::size_t i = 0; i < g.order(); ++i)
    ASSERT_EQ(g.index_of(g.elements()[i]), i);
}

TEST(GroupProperty, ClosureIsIdempotentAndDeterministic) {
  for (const auto& fx : fixtures::all()) {
    const auto g = close(fx.exact_generators());
    const auto again = close(g.elements());
    ASSERT_EQ(again.order(), g.order()) << fx.name;
    for (const auto& x : again.elements())
      ASSERT_TRUE(g.contains(x)) << fx.name;
    ASSERT_EQ(close(fx.exact_generators()).elements(), g.elements()) << fx.name;
  }
}

TEST(GroupProperty, ClosedUnderProductsAndInverses) {
  std::mt19937_64 rng(11);
  for (const auto& fx : fixtures::all()) {
    const auto g = close(fx.exact_generators());
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int i = 0; i < 200; ++i) {
      const auto& x = g.elements()[pick(rng)];
      const auto& y = g.elements()[pick(rng)];
      ASSERT_TRUE(g.contains(x * y)) << fx.name;
      ASSERT_TRUE(g.contains(inverse(x))) << fx.name;
    }
  }
}

TEST(GroupProperty, LagrangeForDerivedCenterAndDiagonal) {
  for (const auto& fx : fixtures::all()) {
    const auto g = close(fx.exact_generators());
    for (const auto& sub : {diagonal_part(g), derived_subgroup(g), center(g)}) {
      ASSERT_EQ(g.order() % sub.order(), 0u) << fx.name;
      ASSERT_TRUE(is_normal(g, sub)) << fx.name;
    }
  }
}

TEST(GroupProperty, FirstIsomorphismTheoremForPermPart) {
  for (const auto& fx : fixtures::all()) {
    const auto g = close(fx.exact_generators());
    const auto map = perm_part_epimorphism(g);
    ASSERT_EQ(map.labels.size(), g.order());
    ASSERT_EQ(map.kernel_order, diagonal_part(g).order()) << fx.name;
    ASSERT_EQ(map.kernel_order * map.image.size(), g.order()) << fx.name;
    ASSERT_EQ(map.image.size(), fx.is_d ? 6u : 3u) << fx.name;
    ASSERT_EQ(map.image_is_full_s3(), fx.is_d);
  }
}

TEST(GroupTest, IsNormalRejectsForeignSubgroup) {
  const auto g = build_C(3, 0, 1);
  EXPECT_FALSE(is_normal(build_D({3, 0, 1, 2, 1, 1}), close({make_Gtilde(2, 1, 1)})));
  EXPECT_THROW(is_normal(g, close({make_Gtilde(2, 1, 1)})), SubNotContained);
}

TEST(GroupTest, GeneratedSubgroupPicksFewGenerators) {
  const auto g = build_C(6, 1, 1);
  const auto h = generated_subgroup(g.elements());
  EXPECT_EQ(h.order(), g.order());
  EXPECT_LE(h.generators().size(), 6u);
}

TEST(FingerprintTest, FrozenValues) {
  const auto a4 = fingerprint(build_C(2, 0, 1));
  EXPECT_EQ(a4.order, 12);
  EXPECT_EQ(a4.center_order, 1);
  EXPECT_EQ(a4.derived_order, 4);
  EXPECT_EQ(a4.abelianization, (std::vector<std::int64_t>{3}));

  const auto c611 = fingerprint(build_C(6, 1, 1));
  EXPECT_EQ(c611.histogram, (OrderHistogram{{1, 1}, {2, 3}, {3, 26}, {6, 6}}));
  EXPECT_EQ(c611.center_order, 3);
  EXPECT_EQ(c611.derived_order, 4);
  EXPECT_EQ(to_string(c611), "36|1:1,2:3,3:26,6:6|3|4|3,3");

  const auto c911 = fingerprint(build_C(9, 1, 1));
  EXPECT_EQ(c911.histogram, (OrderHistogram{{1, 1}, {3, 62}, {9, 18}}));
  EXPECT_EQ(c911.center_order, 3);
  EXPECT_EQ(c911.derived_order, 9);
}

TEST(FingerprintTest, InvariantFactors) {
  using V = std::vector<std::int64_t>;
  EXPECT_EQ(invariant_factors_from_histogram({{1, 1}}), V{});
  EXPECT_EQ(invariant_factors_from_histogram({{1, 1}, {2, 3}}), (V{2, 2}));
  EXPECT_EQ(invariant_factors_from_histogram({{1, 1}, {2, 1}, {3, 2}, {6, 2}}), (V{6}));
  EXPECT_EQ(invariant_factors_from_histogram({{1, 1}, {2, 3}, {4, 12}}), (V{4, 4}));
}

TEST(FingerprintTest, SeparatesSameOrderGroups) {
  // Both of order 48: Delta(48) and Z4 x Z4 x Z3.
  EXPECT_NE(fingerprint(build_C(4, 0, 1)), fingerprint(close({make_F(4, 0, 1), make_F(4, 1, 0), make_scalar_omega()})));
  // Both of order 63: T_21 and Z21 x Z3.
  EXPECT_NE(fingerprint(build_C(21, 1, 4)), fingerprint(close({make_F(21, 1, 4), make_F(3, 0, 1)})));
}

TEST(FingerprintProperty, MatchesCayleyTableOracle) {
  for (const auto& fx : fixtures::all()) {
    const auto g = close(fx.exact_generators());
    if (g.order() > 400)
      continue;
    const auto num = oracle::numeric_close(fx.numeric_generators());
    ASSERT_EQ(fingerprint(g), oracle::table_fingerprint(oracle::cayley_table(num))) << fx.name;
  }
}
