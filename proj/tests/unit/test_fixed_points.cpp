#include <gtest/gtest.h>

#include <map>
#include <set>

#include "parhiggs/chambers.hpp"
#include "parhiggs/errors.hpp"
#include "parhiggs/fixed_points.hpp"
#include "parhiggs/sampling.hpp"
#include "parhiggs/stability.hpp"

using namespace parhiggs;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

WeightVector sample() { return WeightVector({q(1, 8), q(1, 6), q(1, 5), q(1, 4)}); }

// Direct evaluation of the twelve affine forms, in wall order.
std::string signs_by_hand(const WeightVector& a) {
  std::vector<Rational> v;
  Rational s = a.sum();
  v.push_back(s - 1);
  for (std::size_t k = 0; k < kPointCount; ++k) v.push_back(s - 2 * a[k]);
  for (std::size_t k = 0; k < kPointCount; ++k) v.push_back(s - 2 * a[k] - 1);
  v.push_back(a[0] + a[1] - a[2] - a[3]);
  v.push_back(a[0] + a[2] - a[1] - a[3]);
  v.push_back(a[0] + a[3] - a[1] - a[2]);
  std::string out;
  for (const auto& x : v) out += x > 0 ? '+' : '-';
  return out;
}

}  // namespace

TEST(Chambers, SampleSignature) {
  EXPECT_EQ(chamber_of(sample()).signature(), "-++++------+");
  Sampler rng(79);
  for (int n = 0; n < 200; ++n) {
    WeightVector a = rng.generic_weights(40);
    EXPECT_EQ(chamber_of(a).signature(), signs_by_hand(a));
  }
}

TEST(Chambers, OnWall) {
  EXPECT_THROW(chamber_of(WeightVector({q(1, 3), q(1, 3), q(1, 3), q(1, 3)})), OnWall);
  EXPECT_THROW(chamber_of(WeightVector({q(1, 8), q(1, 8), q(1, 8), q(1, 8)})), OnWall);
  try {
    chamber_of(WeightVector({q(1, 4), q(1, 4), q(1, 4), q(1, 4)}));
    FAIL();
  } catch (const OnWall& e) {
    EXPECT_EQ(e.wall(), 0);
  }
  EXPECT_FALSE(is_generic(WeightVector({q(1, 8), q(1, 8), q(1, 8), q(1, 8)})));
  EXPECT_TRUE(is_generic(sample()));
  EXPECT_THROW(enumerate_fixed_components(WeightVector({q(1, 8), q(1, 8), q(1, 8), q(1, 8)})), OnWall);
}

TEST(Chambers, CensusAtForty) {
  ChamberCensus c = chamber_census(40);
  EXPECT_EQ(c.chambers.size(), 24u);
  EXPECT_EQ(c.grid_points, 19u * 19 * 19 * 19);
  std::size_t sampled = 0;
  int stable = 0;
  for (const auto& e : c.chambers) {
    sampled += e.samples;
    EXPECT_EQ(chamber_of(e.representative), e.chamber);
    if (central_sphere(e.representative).kind == CentralKind::StableBundle) ++stable;
  }
  EXPECT_EQ(sampled + c.on_walls, c.grid_points);
  EXPECT_EQ(stable, 16);
  EXPECT_TRUE(std::is_sorted(c.chambers.begin(), c.chambers.end(),
                             [](const CensusEntry& x, const CensusEntry& y) { return x.chamber < y.chamber; }));
}

TEST(FixedPoints, SampleComponents) {
  FixedComponents f = enumerate_fixed_components(sample());
  EXPECT_EQ(f.component_count(), 5u);
  ASSERT_EQ(f.exterior.size(), 4u);
  EXPECT_EQ(f.exterior[0].subset, PointSubset());
  std::set<PointSubset> pairs;
  for (std::size_t k = 1; k < 4; ++k) pairs.insert(f.exterior[k].subset);
  EXPECT_EQ(pairs, (std::set<PointSubset>{PointSubset::of({0, 3}), PointSubset::of({1, 3}), PointSubset::of({2, 3})}));
  EXPECT_EQ(f.central.kind, CentralKind::StableBundle);
  EXPECT_FALSE(f.central_representative.has_value());
}

TEST(FixedPoints, DegreeOneCentral) {
  WeightVector a({q(2, 5), q(1, 20), q(1, 20), q(1, 20)});
  CentralSphere c = central_sphere(a);
  EXPECT_EQ(c.kind, CentralKind::Degree1);
  EXPECT_EQ(c.index, std::optional<std::size_t>(0));
  EXPECT_EQ(c.subset, std::optional<PointSubset>(PointSubset::of({0})));
  FixedComponents f = enumerate_fixed_components(a);
  ASSERT_TRUE(f.central_representative.has_value());
  EXPECT_EQ(f.central_representative->subset, PointSubset::of({0}));
}

TEST(FixedPoints, DegreeFourExterior) {
  WeightVector a({q(2, 5), q(2, 5), q(2, 5), q(1, 6)});
  ASSERT_TRUE(is_generic(a));
  FixedComponents f = enumerate_fixed_components(a);
  EXPECT_EQ(f.exterior[0].subset, PointSubset::all());
  EXPECT_EQ(f.exterior[0].split, (SplitType{-1, -3}));
  EXPECT_TRUE(f.exterior[0].phi0.numerator().is_constant());
}

TEST(FixedPointDatum, SplitTypes) {
  WeightVector a({q(2, 5), q(2, 5), q(2, 5), q(1, 6)});
  FixedPointDatum d4 = fixed_point_datum(a, PointSubset::all());
  EXPECT_EQ(d4.split, (SplitType{-1, -3}));
  EXPECT_EQ(d4.d, 2);
  FixedPointDatum d2 = fixed_point_datum(sample(), PointSubset::of({2, 3}));
  EXPECT_EQ(d2.split, (SplitType{-2, -2}));
  EXPECT_EQ(d2.flags[0], ProjectivePoint::first_axis());
  EXPECT_EQ(d2.flags[3], ProjectivePoint::second_axis());
  WeightVector odd({q(1, 20), q(2, 5), q(1, 20), q(1, 20)});
  FixedPointDatum d1 = fixed_point_datum(odd, PointSubset::of({1}));
  EXPECT_EQ(d1.split, (SplitType{-3, -1}));
  EXPECT_EQ(d1.phi0, RationalFunction(Polynomial::z(), Polynomial::linear(1)));
  FixedPointDatum moved = fixed_point_datum(odd, PointSubset::of({1}), MarkedDivisor::standard(),
                                            ProjectivePoint::from_ratio(5));
  EXPECT_EQ(moved.phi0.numerator().order_at(5), 1);
}

TEST(FixedPointDatum, WeightsAndDegrees) {
  FixedPointDatum d = fixed_point_datum(sample(), PointSubset::of({2, 3}));
  EXPECT_EQ(d.l1.degree, -2);
  EXPECT_EQ(d.l2.degree, -2);
  EXPECT_EQ(d.l1.weights, (std::vector<Rational>{q(7, 8), q(5, 6), q(1, 5), q(1, 4)}));
  EXPECT_EQ(par_degree(d.l1) + par_degree(d.l2), 0);
  EXPECT_LT(par_degree(d.l2), 0);
}

TEST(FixedPointDatum, ConditionViolated) {
  EXPECT_FALSE(table_condition(sample(), PointSubset::of({0, 1})));
  EXPECT_THROW(fixed_point_datum(sample(), PointSubset::of({0, 1})), ConditionViolated);
  EXPECT_THROW(fixed_point_datum(sample(), PointSubset::all()), ConditionViolated);
  EXPECT_FALSE(table_inequality(PointSubset::of({0, 1})).empty());
}

TEST(FixedPoints, RandomGenericWeights) {
  Sampler rng(83);
  std::map<std::string, CentralKind> kind_of;
  for (int n = 0; n < 100; ++n) {
    WeightVector a = rng.generic_weights(60);
    FixedComponents f = enumerate_fixed_components(a);
    EXPECT_EQ(f.component_count(), 5u);
    for (unsigned m : {0x3u, 0x5u, 0x9u}) {
      PointSubset s(m);
      EXPECT_NE(table_condition(a, s), table_condition(a, s.complement()));
    }
    for (const auto& d : f.exterior) EXPECT_TRUE(is_stable(d.higgs()).stable) << d.subset.label();
    if (f.central_representative) {
      EXPECT_TRUE(is_stable(f.central_representative->higgs()).stable);
    }
    auto [it, fresh] = kind_of.emplace(chamber_of(a).signature(), f.central.kind);
    EXPECT_EQ(it->second, f.central.kind);
  }
}
