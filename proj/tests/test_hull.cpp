#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "cgx/hull.hpp"
#include "cgx/lp.hpp"
#include "cgx/shelling.hpp"
#include "fixtures.hpp"

using namespace cgx;

namespace {

RationalPoint pt(long x, long y) { return RationalPoint{Rational(x), Rational(y)}; }

Rational dot(const RationalPoint& a, const RationalPoint& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) s += a[i] * b[i];
  return s;
}

// Re-checks whichever certificate in_hull returned.
void expect_certificate(const HullMembership& r, const RationalPoint& x, const std::vector<RationalPoint>& s) {
  if (r.inside) {
    ASSERT_EQ(r.weights.size(), s.size());
    Rational total = 0;
    RationalPoint sum(std::vector<Rational>(x.dimension(), Rational(0)));
    for (std::size_t k = 0; k < s.size(); ++k) {
      EXPECT_GE(r.weights[k], 0);
      total += r.weights[k];
      for (std::size_t i = 0; i < x.dimension(); ++i) sum[i] += r.weights[k] * s[k][i];
    }
    EXPECT_EQ(total, 1);
    EXPECT_EQ(sum, x);
  } else {
    ASSERT_TRUE(r.separator.has_value());
    for (const auto& p : s) EXPECT_LE(dot(r.separator->normal, p), r.separator->threshold);
    EXPECT_GT(dot(r.separator->normal, x), r.separator->threshold);
  }
}

RationalPoint random_point(std::mt19937_64& rng, std::size_t dim, long range) {
  std::uniform_int_distribution<long> coord(-range, range);
  std::uniform_int_distribution<long> den(1, 4);
  RationalPoint p;
  for (std::size_t i = 0; i < dim; ++i) {
    Rational q(coord(rng), den(rng));
    q.canonicalize();
    p.coords.push_back(q);
  }
  return p;
}

const PointMap kFan3Points{pt(-3, -3), pt(-9, -27), pt(-27, -9)};

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("-2/6"), Rational(-1, 3));
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(27)), "27");
  EXPECT_TRUE(is_integer(Rational(8, 2)));
  EXPECT_FALSE(is_integer(Rational(1, 100)));
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "1/", "/2", " 3"}) {
    EXPECT_THROW(parse_rational(bad), InvalidInput) << bad;
  }
}

TEST(Feasibility, SmallSystems) {
  // x + y = 1, x - y = 0 has the unique nonnegative solution (1/2, 1/2).
  const auto ok = solve_feasibility({{1, 1}, {1, -1}}, {1, 0});
  ASSERT_TRUE(ok.feasible);
  EXPECT_EQ(ok.solution, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));

  // x + y = -1 has no nonnegative solution; the certificate proves it.
  const auto bad = solve_feasibility({{1, 1}}, {-1});
  ASSERT_FALSE(bad.feasible);
  ASSERT_EQ(bad.farkas.size(), 1U);
  EXPECT_LE(bad.farkas[0] * 1, 0);
  EXPECT_GT(bad.farkas[0] * -1, 0);
}

TEST(InHull, VertexIsInside) {
  const std::vector<RationalPoint> s{pt(1, 2), pt(3, 4), pt(0, 7)};
  const auto r = in_hull(s[0], s);
  EXPECT_TRUE(r.inside);
  expect_certificate(r, s[0], s);
}

TEST(InHull, ShellingPointAbsorbedByQ) {
  const std::vector<RationalPoint> s{pt(-9, -27), pt(0, 0), pt(27, 0), pt(0, 27)};
  const auto x = pt(-3, -3);
  const auto r = in_hull(x, s);
  ASSERT_TRUE(r.inside);
  expect_certificate(r, x, s);
  // The weights are not unique; the hand-derived combination is valid as well.
  const std::vector<Rational> alpha{Rational(1, 3), Rational(4, 9), Rational(0), Rational(2, 9)};
  RationalPoint sum{Rational(0), Rational(0)};
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 2; ++i) sum[i] += alpha[k] * s[k][i];
  }
  EXPECT_EQ(sum, x);
}

TEST(InHull, OutsideWithSeparator) {
  const std::vector<RationalPoint> s{pt(-3, -3), pt(0, 0), pt(27, 0), pt(0, 27)};
  const auto x = pt(-9, -27);
  const auto r = in_hull(x, s);
  EXPECT_FALSE(r.inside);
  expect_certificate(r, x, s);
}

TEST(InHull, RejectsBadInput) {
  EXPECT_THROW(in_hull(pt(0, 0), std::vector<RationalPoint>{}), InvalidInput);
  EXPECT_THROW(in_hull(pt(0, 0), std::vector<RationalPoint>{RationalPoint{Rational(1)}}), InvalidInput);
}

TEST(InHull, AgreesWithPlanarOracleAndCertificatesCheck) {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t size = 1 + trial % 6;
    std::vector<RationalPoint> s;
    // Small integer range so that collinear and boundary cases occur often.
    for (std::size_t k = 0; k < size; ++k) s.push_back(random_point(rng, 2, trial % 3 == 0 ? 2 : 6));
    const auto x = trial % 5 == 0 ? s[trial % size] : random_point(rng, 2, trial % 3 == 0 ? 2 : 6);
    const auto r = in_hull(x, s);
    EXPECT_EQ(r.inside, oracle::in_hull_2d(x, s)) << trial;
    expect_certificate(r, x, s);
  }
}

TEST(InHull, HigherDimensionalCertificates) {
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 3 + trial % 3;
    std::vector<RationalPoint> s;
    for (std::size_t k = 0; k < 2 + trial % 6; ++k) s.push_back(random_point(rng, dim, 5));
    // Half the queries are convex combinations, hence inside by construction.
    RationalPoint x;
    if (trial % 2 == 0) {
      x = RationalPoint(std::vector<Rational>(dim, Rational(0)));
      for (std::size_t k = 0; k < s.size(); ++k) {
        for (std::size_t i = 0; i < dim; ++i) x[i] += s[k][i] / Rational(static_cast<long>(s.size()));
      }
    } else {
      x = random_point(rng, dim, 5);
    }
    const auto r = in_hull(x, s);
    if (trial % 2 == 0) EXPECT_TRUE(r.inside);
    expect_certificate(r, x, s);
  }
}

TEST(PosHull, Examples) {
  const Subset all = Subset::full(3);
  EXPECT_EQ(pos_hull_members(all, kFan3Points), all);
  EXPECT_EQ(pos_hull_members(Subset::singleton(1), kFan3Points), Subset::singleton(0).with(1));
  EXPECT_EQ(pos_hull_members(Subset::singleton(0), kFan3Points), Subset::singleton(0));
  EXPECT_THROW(pos_hull_members(Subset{}, kFan3Points), InvalidInput);
}

TEST(ExtHull, Examples) {
  EXPECT_EQ(ext_hull_members(Subset::singleton(1).with(2), kFan3Points), Subset::full(3));
  EXPECT_TRUE(dominates_hull_point(pt(-18, -18), Subset::singleton(1).with(2), kFan3Points));
  EXPECT_FALSE(dominates_hull_point(pt(-19, -18), Subset::singleton(1).with(2), kFan3Points));
  EXPECT_THROW(ext_hull_members(Subset{}, kFan3Points), InvalidInput);
}

TEST(ExtHull, SingletonsMatchPosAndGeneralSetsAreContained) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    PointMap f;
    for (std::size_t e = 0; e < n; ++e) f.push_back(random_point(rng, 2 + trial % 2, 8));
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
      const Subset p(b);
      const Subset ext = ext_hull_members(p, f);
      EXPECT_TRUE(ext.is_subset_of(pos_hull_members(p, f)));
      EXPECT_TRUE(p.is_subset_of(ext));
      if (p.size() == 1) EXPECT_EQ(ext, pos_hull_members(p, f));
    }
  }
}

TEST(ShellingInstance, Validation) {
  const GroundSet ground({"a", "b"});
  EXPECT_THROW(ShellingInstance(ground, {pt(1, 1), pt(1, 1)}, {pt(0, 0)}), InvalidInput);
  EXPECT_THROW(ShellingInstance(ground, {pt(1, 1), pt(2, 1)}, {}), InvalidInput);
  EXPECT_THROW(ShellingInstance(ground, {pt(1, 1), RationalPoint{Rational(2)}}, {pt(0, 0)}), InvalidInput);
  EXPECT_THROW(ShellingInstance(ground, {pt(1, 1)}, {pt(0, 0)}), InvalidInput);
  // (1,1) lies on the segment between the two Q points.
  EXPECT_THROW(ShellingInstance(ground, {pt(1, 1), pt(5, 0)}, {pt(0, 0), pt(2, 2)}), InvalidInput);
  EXPECT_NO_THROW(ShellingInstance(ground, {pt(1, 1), pt(5, 0)}, {pt(0, 0)}));
}

TEST(ShellingGeometry, Fan3Instance) {
  const ShellingInstance inst(GroundSet({"a", "b", "c"}), kFan3Points, {pt(0, 0), pt(27, 0), pt(0, 27)});
  const auto g = shelling_geometry(inst);
  EXPECT_EQ(g, test::fan3());
  EXPECT_EQ(inst.hull_trace(Subset::singleton(1)), Subset::singleton(0).with(1));
}

TEST(ShellingGeometry, RandomInstancesAreConvexGeometriesAndMatchOracle) {
  std::mt19937_64 rng(304);
  int tested = 0;
  for (int trial = 0; tested < 60 && trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 4;
    PointMap f;
    for (std::size_t e = 0; e < n; ++e) f.push_back(random_point(rng, 2, 6));
    std::vector<RationalPoint> q{random_point(rng, 2, 2)};
    if (trial % 2) q.push_back(random_point(rng, 2, 2));
    std::unique_ptr<ShellingInstance> inst;
    try {
      inst = std::make_unique<ShellingInstance>(GroundSet::letters(n), f, q);
    } catch (const InvalidInput&) {
      continue;  // coincident points or G meeting Hull(Q)
    }
    ++tested;
    const auto g = shelling_geometry(*inst);
    EXPECT_TRUE(check_axioms(g).pass());
    EXPECT_TRUE(check_anti_exchange(g).pass);
    EXPECT_TRUE(g.contains(Subset{}));
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      std::vector<RationalPoint> hull(q);
      Subset(b).for_each([&](ElementId e) { hull.push_back(f[e]); });
      bool convex = true;
      for (ElementId y = 0; y < n; ++y) {
        if (!Subset(b).contains(y) && oracle::in_hull_2d(f[y], hull)) convex = false;
      }
      EXPECT_EQ(g.contains(Subset(b)), convex);
    }
  }
  EXPECT_EQ(tested, 60);
}
