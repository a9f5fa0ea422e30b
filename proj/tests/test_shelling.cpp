#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cgx/shelling.hpp"
#include "fixtures.hpp"

using namespace cgx;

namespace {

RationalPoint pt(long x, long y) { return RationalPoint{Rational(x), Rational(y)}; }

std::vector<OrderingFamily> all_families(std::size_t n, std::size_t m) {
  std::vector<Ordering> perms;
  std::vector<ElementId> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.emplace_back(p, n);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<OrderingFamily> out;
  std::vector<std::size_t> idx(m, 0);
  for (;;) {
    std::vector<Ordering> chosen;
    for (std::size_t i : idx) chosen.push_back(perms[i]);
    out.emplace_back(GroundSet::letters(n), chosen);
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == perms.size() - 1) idx[--i] = 0;
    if (i == 0) break;
    ++idx[i - 1];
  }
  return out;
}

// Literal shelling on the real line: element at position p sits at 2p, Hull(Q) is the
// single point 2 gap - 1 between positions gap - 1 and gap.
ConvexGeometry literal_line_shelling(const GroundSet& ground, const std::vector<ElementId>& order, std::size_t gap) {
  PointMap points(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) points[order[p]] = RationalPoint{Rational(2 * static_cast<long>(p))};
  const RationalPoint q{Rational(2 * static_cast<long>(gap) - 1)};
  return shelling_geometry(ShellingInstance(ground, points, {q}));
}

bool line_realizable(const ConvexGeometry& g) {
  std::vector<ElementId> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  do {
    for (std::size_t gap = 0; gap <= g.n(); ++gap) {
      if (literal_line_shelling(g.ground(), order, gap) == g) return true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

TEST(EmbedShelling, Fan3Coordinates) {
  const auto e = embed_shelling(test::fan3_orders());
  EXPECT_EQ(e.lambda, 27);
  EXPECT_EQ(e.points(), (PointMap{pt(-3, -3), pt(-9, -27), pt(-27, -9)}));
  EXPECT_EQ(e.q(), (std::vector<RationalPoint>{pt(0, 0), pt(27, 0), pt(0, 27)}));
}

TEST(EmbedShelling, SingleOrder) {
  const auto f = test::orders({"a", "b"}, {{"a", "b"}});
  const auto e = embed_shelling(f);
  EXPECT_EQ(e.lambda, 4);
  EXPECT_EQ(e.points(), (PointMap{RationalPoint{Rational(-2)}, RationalPoint{Rational(-4)}}));
  EXPECT_EQ(e.q().size(), 2U);

  const auto zero = embed_shelling(f, Rational(0));
  EXPECT_EQ(zero.q(), (std::vector<RationalPoint>{RationalPoint{Rational(0)}}));
  EXPECT_TRUE(verify_roundtrip(zero, generate(f)).pass);
  EXPECT_TRUE(verify_roundtrip(e, generate(f)).pass);
}

TEST(EmbedShelling, RejectsNonPositiveLambda) {
  EXPECT_THROW(embed_shelling(test::fan3_orders(), Rational(0)), InvalidInput);
  EXPECT_THROW(embed_shelling(test::fan3_orders(), Rational(-1)), InvalidInput);
  EXPECT_THROW(embed_shelling(test::orders({"a"}, {{"a"}}), Rational(-1, 2)), InvalidInput);
}

TEST(EmbedShelling, DefaultLambda) {
  EXPECT_EQ(default_lambda(1), 4);
  EXPECT_EQ(default_lambda(2), 27);
  EXPECT_EQ(default_lambda(3), 256);
  EXPECT_EQ(default_lambda(4), 3125);
}

TEST(EmbedShelling, SufficientLambda) {
  EXPECT_EQ(sufficient_lambda(1, 5), 4);
  EXPECT_EQ(sufficient_lambda(2, 3), 2 * 729);
  EXPECT_EQ(sufficient_lambda(3, 2), 3 * 256);
}

// Five elements, three orders: (M+1)^(M+1) = 256 is too small and {e} turns convex.
TEST(EmbedShelling, FixedScaleCounterexample) {
  const auto f = test::orders({"a", "b", "c", "d", "e"}, {{"a", "d", "b", "c", "e"},
                                                          {"d", "e", "c", "b", "a"},
                                                          {"b", "d", "e", "c", "a"}});
  const auto g = generate(f);
  const auto fixed = embed_shelling(f, default_lambda(3));
  EXPECT_FALSE(fixed.lambda_raised);
  const auto report = verify_roundtrip(fixed, g);
  ASSERT_FALSE(report.pass);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(*report.witness, g.ground().subset_of({"e"}));
  EXPECT_FALSE(g.contains(*report.witness));
  EXPECT_FALSE(verify_hull_equals_ext_hull(fixed).pass);

  const auto e = embed_shelling(f);
  EXPECT_TRUE(e.lambda_raised);
  EXPECT_EQ(e.lambda, sufficient_lambda(3, 5));
  EXPECT_TRUE(verify_roundtrip(e, g).pass);
  EXPECT_TRUE(verify_hull_equals_ext_hull(e).pass);
}

TEST(EmbedShelling, FixedScaleHoldsWhenOrdersOutnumberElements) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + trial % 4;
    const std::size_t n = 1 + trial % (m + 1);
    const auto f = random_ordering_family(n, m, rng);
    const auto e = embed_shelling(f);
    EXPECT_FALSE(e.lambda_raised) << trial;
    EXPECT_EQ(e.lambda, default_lambda(m));
  }
}

TEST(EmbedShelling, RaisedScaleAlwaysVerifies) {
  std::mt19937_64 rng(405);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t m = 2 + trial % 3;
    const std::size_t n = m + 2 + trial % 2;
    const auto f = random_ordering_family(n, m, rng);
    const auto e = embed_shelling(f, sufficient_lambda(m, n));
    EXPECT_TRUE(verify_roundtrip(e, generate(f)).pass) << trial;
    EXPECT_TRUE(verify_hull_equals_ext_hull(e).pass) << trial;
  }
}

TEST(EmbedShelling, IntegralBoundedMonotoneCoordinates) {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t m = 1 + trial % 4;
    const auto f = random_ordering_family(n, m, rng);
    const auto e = embed_shelling(f);
    const Rational base(static_cast<long>(m + 1));
    Rational low = -1;
    for (std::size_t k = 0; k < n; ++k) low *= base;
    EXPECT_EQ(e.q().size(), m + 1);
    for (ElementId x = 0; x < n; ++x) {
      ASSERT_EQ(e.points()[x].dimension(), m);
      for (std::size_t i = 0; i < m; ++i) {
        const Rational& c = e.points()[x][i];
        EXPECT_TRUE(is_integer(c));
        EXPECT_TRUE(mpz_class(c.get_num() % mpz_class(static_cast<long>(m + 1))) == 0);
        EXPECT_LE(c, -base);
        EXPECT_GE(c, low);
        for (ElementId y = 0; y < n; ++y) {
          EXPECT_EQ(f.orders()[i].prefers(x, y), c > e.points()[y][i]);
        }
      }
    }
  }
}

TEST(VerifyRoundtrip, Fan3DefaultLambdaPasses) {
  const auto e = embed_shelling(test::fan3_orders());
  EXPECT_TRUE(verify_roundtrip(e, test::fan3()).pass);
  EXPECT_TRUE(verify_pos_equals_ext_hull(e).pass);
  EXPECT_TRUE(verify_hull_equals_ext_hull(e).pass);
}

TEST(VerifyRoundtrip, ChainSingleOrderPasses) {
  const auto f = test::orders({"a", "b", "c"}, {{"a", "b", "c"}});
  EXPECT_TRUE(verify_roundtrip(embed_shelling(f), test::chain(3)).pass);
}

TEST(VerifyRoundtrip, SmallLambdaFailsWithCheckableWitness) {
  const auto e = embed_shelling(test::fan3_orders(), Rational(1, 100));
  const auto report = verify_roundtrip(e, test::fan3());
  ASSERT_FALSE(report.pass);
  ASSERT_TRUE(report.witness.has_value());
  const Subset w = *report.witness;
  EXPECT_FALSE(report.detail.empty());

  // Recompute the witness's status in the shelling with the planar oracle.
  std::vector<RationalPoint> span = e.q();
  w.for_each([&](ElementId x) { span.push_back(e.points()[x]); });
  bool convex_in_shelling = true;
  for (ElementId y = 0; y < 3; ++y) {
    if (!w.contains(y) && oracle::in_hull_2d(e.points()[y], span)) convex_in_shelling = false;
  }
  EXPECT_NE(convex_in_shelling, test::fan3().contains(w));

  // The Hull(P + Q) identity breaks as well while the Pos/ExtHull identity does not involve Q.
  EXPECT_FALSE(verify_hull_equals_ext_hull(e).pass);
  EXPECT_TRUE(verify_pos_equals_ext_hull(e).pass);
}

TEST(VerifyRoundtrip, ExhaustiveOverSmallFamilies) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      for (const auto& f : all_families(n, m)) {
        const auto e = embed_shelling(f);
        const auto g = generate(f);
        ASSERT_TRUE(verify_roundtrip(e, g).pass);
        ASSERT_TRUE(verify_pos_equals_ext_hull(e).pass);
        ASSERT_TRUE(verify_hull_equals_ext_hull(e).pass);
      }
    }
  }
}

TEST(VerifyRoundtrip, RandomFamiliesUpToFourOrders) {
  std::mt19937_64 rng(402);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto f = random_ordering_family(n, 1 + trial % 4, rng);
    const auto e = embed_shelling(f);
    const auto g = generate(f);
    EXPECT_TRUE(verify_roundtrip(e, g).pass) << trial;
    EXPECT_TRUE(verify_pos_equals_ext_hull(e).pass) << trial;
    EXPECT_TRUE(verify_hull_equals_ext_hull(e).pass) << trial;
  }
}

TEST(VerifyRoundtrip, PlanarEmbeddingsMatchOracle) {
  std::mt19937_64 rng(403);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto f = random_ordering_family(n, 2, rng);
    const auto e = embed_shelling(f);
    const auto expected = oracle::generate(test::as_perms(f), static_cast<int>(n));
    oracle::Family realized;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      std::vector<RationalPoint> span = e.q();
      Subset(b).for_each([&](ElementId x) { span.push_back(e.points()[x]); });
      bool convex = true;
      for (ElementId y = 0; y < n; ++y) {
        if (!Subset(b).contains(y) && oracle::in_hull_2d(e.points()[y], span)) convex = false;
      }
      if (convex) realized.insert(oracle::to_list(b));
    }
    EXPECT_EQ(realized, expected);
  }
}

TEST(VerifyShelling, ReportsMismatchDirection) {
  const auto e = embed_shelling(test::fan3_orders());
  const auto report = verify_shelling(e.instance, test::chain(3));
  ASSERT_FALSE(report.pass);
  EXPECT_EQ(*report.witness, Subset::singleton(0).with(2));
  EXPECT_NE(report.detail.find("not in the target"), std::string::npos);
}

TEST(DecideDim1, Chain) {
  const auto g = test::chain(3);
  const auto r = decide_dim1(g);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->gap, 0U);
  EXPECT_EQ(r->order, (std::vector<ElementId>{0, 1, 2}));
  EXPECT_EQ(line_geometry(g.ground(), *r), g);
  EXPECT_EQ(literal_line_shelling(g.ground(), r->order, r->gap), g);
}

TEST(DecideDim1, Fan3HasNoLineRealization) {
  EXPECT_FALSE(decide_dim1(test::fan3()).has_value());
  EXPECT_FALSE(line_realizable(test::fan3()));
}

TEST(DecideDim1, TwoElementPowerSet) {
  const auto g = test::power_set(2);
  const auto r = decide_dim1(g);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->gap, 1U);
  EXPECT_EQ(literal_line_shelling(g.ground(), r->order, r->gap), g);
}

TEST(DecideDim1, AgreesWithLiteralLineShellings) {
  std::mt19937_64 rng(404);
  int realizable = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 5;
    ConvexGeometry g = test::chain(1);
    if (trial % 3 == 0) {
      // Geometries of random line shellings, so that positives are common.
      std::vector<ElementId> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      g = literal_line_shelling(GroundSet::letters(n), order, rng() % (n + 1));
    } else {
      g = generate(random_ordering_family(n, 1 + trial % 3, rng));
    }
    const auto r = decide_dim1(g);
    EXPECT_EQ(r.has_value(), line_realizable(g)) << trial;
    if (r) {
      ++realizable;
      EXPECT_EQ(literal_line_shelling(g.ground(), r->order, r->gap), g);
      EXPECT_EQ(line_geometry(g.ground(), *r), g);
    }
  }
  EXPECT_GT(realizable, 30);
}

TEST(DecideDim1, ChainsAlwaysRealizable) {
  std::mt19937_64 rng(405);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = generate(random_ordering_family(1 + trial % 7, 1, rng));
    EXPECT_TRUE(decide_dim1(g).has_value());
  }
}

TEST(DecideDim1, RespectsLimit) { EXPECT_THROW(decide_dim1(test::chain(6), 5), LimitExceeded); }

TEST(DimReport, Fan3) {
  const auto r = dim_report(test::fan3());
  EXPECT_EQ(r.cdim, 2U);
  EXPECT_EQ(r.upper_bound, 2U);
  EXPECT_EQ(r.lower_bound, 2U);
  EXPECT_FALSE(r.dim1);
  ASSERT_TRUE(r.dim_exact.has_value());
  EXPECT_EQ(*r.dim_exact, 2U);
}

TEST(DimReport, ChainIsExactlyOne) {
  const auto r = dim_report(test::chain(4));
  EXPECT_TRUE(r.dim1);
  EXPECT_EQ(r.dim_exact, std::optional<std::size_t>(1));
}

TEST(DimReport, PowerSetOfFourIsOnlyBounded) {
  const auto r = dim_report(test::power_set(4));
  EXPECT_EQ(r.cdim, 4U);
  EXPECT_EQ(r.lower_bound, 2U);
  EXPECT_EQ(r.upper_bound, 4U);
  EXPECT_FALSE(r.dim1);
  EXPECT_FALSE(r.dim_exact.has_value());
}
