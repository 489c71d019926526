#include <gtest/gtest.h>

#include "parhiggs/errors.hpp"
#include "parhiggs/residues.hpp"
#include "parhiggs/stability.hpp"
#include "support/oracles.hpp"
#include "support/random_connection.hpp"

using namespace parhiggs;
namespace pt = parhiggs::testing;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

const ProjectivePoint e1 = ProjectivePoint::first_axis();
const ProjectivePoint e2 = ProjectivePoint::second_axis();
const MarkedDivisor D = MarkedDivisor::standard();

WeightVector uniform_weights(Rational a) { return WeightVector({a, a, a, a}); }

WeightVector stable_chamber() { return WeightVector({q(1, 8), q(1, 6), q(1, 5), q(1, 4)}); }

FieldMatrix zero_field() { return {}; }

RationalFunction over_n(const Polynomial& p) { return RationalFunction(p, D.product()); }

// diag(s, -s) with Res_{p_i} s = c_i.
FieldMatrix diagonal(const std::array<GaussianRational, 3>& c, RationalFunction* s_out = nullptr) {
  std::vector<PointResidue> r{{0, c[0]}, {1, c[1]}, {2, c[2]}};
  RationalFunction s = section_with_residues({D.point_list(), 0}, r);
  if (s_out) *s_out = s;
  FieldMatrix m;
  m[0][0] = s;
  m[1][1] = -s;
  return m;
}

}  // namespace

TEST(LambdaConnection, RejectsBadData) {
  ParabolicRank2Bundle b({-2, -2}, D, {e1, e1, e1, e1}, stable_chamber());
  FieldMatrix double_pole;
  double_pole[0][1] = RationalFunction(Polynomial(GaussianRational(1)), pow(Polynomial::z(), 2));
  EXPECT_THROW(LambdaConnection::higgs(b, double_pole), InvalidInput);
  FieldMatrix traceful;
  traceful[0][0] = over_n(Polynomial(GaussianRational(1)));
  EXPECT_THROW(LambdaConnection::higgs(b, traceful), InvalidInput);
  FieldMatrix moves_flag;
  moves_flag[1][0] = over_n(Polynomial(GaussianRational(1)));
  EXPECT_FALSE(connection_violations(0, b, moves_flag).empty());
  EXPECT_TRUE(connection_violations(0, b, zero_field()).empty());
  // λ d alone has the wrong trace on a bundle of degree -4.
  EXPECT_FALSE(connection_violations(1, b, zero_field()).empty());
}

TEST(Residues, ZeroAndDiagonal) {
  ParabolicRank2Bundle b({-2, -2}, D, {e1, e1, e2, e2}, stable_chamber());
  auto zero = LambdaConnection::higgs(b, zero_field());
  for (std::size_t i = 0; i < kPointCount; ++i) {
    for (const auto& row : residue_matrix(zero, i)) {
      for (const auto& x : row) EXPECT_TRUE(x.is_zero());
    }
  }
  RationalFunction s;
  auto diag = LambdaConnection::higgs(b, diagonal({1, GaussianRational::i(), 3}, &s));
  Matrix2 r = residue_matrix(diag, 1);
  EXPECT_EQ(r[0][0], GaussianRational::i());
  EXPECT_EQ(r[1][1], -GaussianRational::i());
  auto mu = complex_masses(diag);
  EXPECT_EQ(mu[0], GaussianRational(1));
  EXPECT_EQ(mu[1], GaussianRational::i());
  EXPECT_EQ(mu[2], GaussianRational(-3));
  EXPECT_EQ(mu[3], -residue_at(s, 3));
  EXPECT_EQ(hitchin_det(diag), s * s);
}

TEST(Residues, NilpotentAndCompanion) {
  auto alpha = uniform_weights(q(2, 5));
  ParabolicRank2Bundle b({-1, -3}, D, {e2, e2, e2, e2}, alpha);
  FieldMatrix nil;
  nil[1][0] = over_n(Polynomial(GaussianRational(1)));
  auto higgs = LambdaConnection::higgs(b, nil);
  EXPECT_TRUE(hitchin_det(higgs).is_zero());
  for (const auto& m : complex_masses(higgs)) EXPECT_TRUE(m.is_zero());
  FieldMatrix companion = nil;
  companion[0][1] = RationalFunction(GaussianRational(5));
  auto c = LambdaConnection::higgs(b, companion);
  EXPECT_EQ(hitchin_det(c), over_n(Polynomial(GaussianRational(5))));
  for (std::size_t i = 0; i < kPointCount; ++i) {
    Matrix2 r = residue_matrix(c, i);
    EXPECT_TRUE((r[0][0] * r[1][1] - r[0][1] * r[1][0]).is_zero());
  }
}

TEST(HitchinDet, AgreesWithEntrywiseOracle) {
  pt::ConnectionOptions opts;
  Sampler rng(41);
  int checked = 0;
  for (int n = 0; n < 60; ++n) {
    auto b = pt::random_bundle(rng, pt::random_split(rng, 2), rng.generic_weights(12));
    auto c = pt::random_connection(rng, 0, b, opts);
    if (!c) continue;
    EXPECT_EQ(hitchin_det(*c), pt::oracle_minus_det(c->matrix()));
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(HitchinDet, GaugeInvariant) {
  Sampler rng(43);
  auto b = ParabolicRank2Bundle({-2, -2}, D, {e1, e1, e2, e2}, stable_chamber());
  FieldMatrix phi = diagonal({1, 2, GaussianRational::i()});
  phi[0][1] = over_n(Polynomial::linear(0) * Polynomial::linear(1));
  for (int n = 0; n < 100; ++n) {
    FieldMatrix g;
    FieldMatrix g_inv;
    GaussianRational a = rng.gaussian(3, 3), bb = rng.gaussian(3, 3), c = rng.gaussian(3, 3), d = rng.gaussian(3, 3);
    RationalFunction f = RationalFunction(Polynomial::linear(rng.gaussian(2, 2)));
    GaussianRational det = a * d - bb * c;
    if (det.is_zero()) continue;
    g = {{{RationalFunction(a), RationalFunction(bb) * f}, {RationalFunction(c) / f, RationalFunction(d)}}};
    g_inv = {{{RationalFunction(d / det), RationalFunction(-bb / det) * f},
              {RationalFunction(-c / det) / f, RationalFunction(a / det)}}};
    EXPECT_EQ(hitchin_det(multiply(multiply(g, phi), g_inv)), hitchin_det(phi));
  }
}

TEST(Trace, ResidueTraceIsLambda) {
  Sampler rng(47);
  for (int n = 0; n < 40; ++n) {
    GaussianRational lambda = n % 2 ? GaussianRational(0) : rng.gaussian(2, 3);
    auto b = pt::random_bundle(rng, pt::random_split(rng, 2), rng.generic_weights(12));
    auto c = pt::random_connection(rng, lambda, b);
    if (!c) continue;
    for (std::size_t i = 0; i < kPointCount; ++i) {
      Matrix2 r = residue_matrix(*c, i);
      EXPECT_EQ(r[0][0] + r[1][1], lambda);
    }
  }
}

TEST(Scale, Homogeneity) {
  ParabolicRank2Bundle b({-2, -2}, D, {e1, e1, e2, e2}, stable_chamber());
  auto phi = LambdaConnection::higgs(b, diagonal({1, 2, 3}));
  EXPECT_EQ(scale(1, phi), phi);
  auto zero = scale(0, phi);
  EXPECT_EQ(zero.bundle(), b);
  EXPECT_EQ(zero.matrix(), zero_field());
  GaussianRational xi(q(2, 3), q(-1));
  EXPECT_EQ(hitchin_det(scale(xi, phi)), RationalFunction(xi * xi) * hitchin_det(phi));
}

TEST(HitchinDet, RequiresHiggsField) {
  Sampler rng(67);
  std::optional<LambdaConnection> c;
  while (!c) c = pt::random_connection(rng, 1, pt::random_bundle(rng, {-2, -2}, stable_chamber()));
  EXPECT_THROW(hitchin_det(*c), InvalidInput);
}

TEST(InvariantLines, ZeroFieldIsEverything) {
  ParabolicRank2Bundle b({-2, -2}, D, {e1, e1, e2, e2}, stable_chamber());
  auto lines = invariant_line_subbundles(LambdaConnection::higgs(b, zero_field()));
  EXPECT_TRUE(std::holds_alternative<AllSubbundles>(lines));
}

TEST(InvariantLines, NilpotentHasKernelOnly) {
  ParabolicRank2Bundle b({-1, -3}, D, {e2, e2, e2, e2}, uniform_weights(q(2, 5)));
  FieldMatrix nil;
  nil[1][0] = over_n(Polynomial(GaussianRational(1)));
  auto lines = std::get<std::vector<RankedLine>>(invariant_line_subbundles(LambdaConnection::higgs(b, nil)));
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].line, LineSubbundle::second_summand(b.split()));
  EXPECT_EQ(lines[0].par_degree, q(-3) + 4 * q(3, 5));
}

TEST(InvariantLines, DiagonalHasBothSummands) {
  ParabolicRank2Bundle b({-2, -2}, D, {e1, e1, e2, e2}, stable_chamber());
  auto lines = std::get<std::vector<RankedLine>>(invariant_line_subbundles(LambdaConnection::higgs(b, diagonal({1, 2, 3}))));
  ASSERT_EQ(lines.size(), 2u);
  std::vector<LineSubbundle> found{lines[0].line, lines[1].line};
  EXPECT_NE(std::find(found.begin(), found.end(), LineSubbundle::first_summand(b.split())), found.end());
  EXPECT_NE(std::find(found.begin(), found.end(), LineSubbundle::second_summand(b.split())), found.end());
}

TEST(InvariantLines, NonSquareHasNone) {
  ParabolicRank2Bundle b({-1, -3}, D, {e2, e2, e2, e2}, uniform_weights(q(1, 8)));
  FieldMatrix companion;
  companion[1][0] = over_n(Polynomial(GaussianRational(1)));
  companion[0][1] = RationalFunction(GaussianRational(1));
  auto lines = std::get<std::vector<RankedLine>>(invariant_line_subbundles(LambdaConnection::higgs(b, companion)));
  EXPECT_TRUE(lines.empty());
  EXPECT_TRUE(is_stable(LambdaConnection::higgs(b, companion)).stable);
}

TEST(MaxDestabilizing, FlagsInFirstSummand) {
  ParabolicRank2Bundle b({-1, -3}, D, {e1, e1, e1, e1}, uniform_weights(q(1, 4)));
  RankedLine best = max_destabilizing_line(b);
  EXPECT_EQ(best.line, LineSubbundle::first_summand(b.split()));
  EXPECT_EQ(best.par_degree, q(2));
  EXPECT_EQ(best.par_degree, pt::oracle_max_subbundle_par_degree(b));
}

TEST(MaxDestabilizing, GenericFlagsMatchBruteForce) {
  ParabolicRank2Bundle b({-1, -3}, D,
                         {ProjectivePoint::from_ratio(1), ProjectivePoint::from_ratio(2),
                          ProjectivePoint::from_ratio(GaussianRational::i()), ProjectivePoint::from_ratio(-5)},
                         uniform_weights(q(1, 4)));
  EXPECT_EQ(max_destabilizing_line(b).par_degree, pt::oracle_max_subbundle_par_degree(b));
  Sampler rng(53);
  for (int n = 0; n < 60; ++n) {
    auto r = pt::random_bundle(rng, pt::random_split(rng, 3), rng.generic_weights(15));
    RankedLine best = max_destabilizing_line(r);
    EXPECT_EQ(best.par_degree, pt::oracle_max_subbundle_par_degree(r));
    EXPECT_EQ(best.par_degree, par_degree(induced_sub_bundle(r, best.line)));
  }
}

TEST(MaxDestabilizing, StableBundleInCentralChamber) {
  ParabolicRank2Bundle b({-2, -2}, D,
                         {e1, e2, ProjectivePoint::from_ratio(1), ProjectivePoint::from_ratio(Rational(7, 3))},
                         stable_chamber());
  EXPECT_LT(max_destabilizing_line(b).par_degree, 0);
}

TEST(IsStable, ZeroFieldDelegatesToBundle) {
  ParabolicRank2Bundle b({-1, -3}, D, {e1, e1, e1, e1}, uniform_weights(q(1, 4)));
  StabilityReport r = is_stable(LambdaConnection::higgs(b, zero_field()));
  EXPECT_FALSE(r.stable);
  EXPECT_TRUE(r.all_lines_invariant);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.certificate->par_degree, q(2));
  EXPECT_EQ(r.certificate->line, LineSubbundle::first_summand(b.split()));
}

TEST(IsStable, DiagonalIsNotStable) {
  ParabolicRank2Bundle b({-2, -2}, D, {e1, e1, e2, e2}, stable_chamber());
  StabilityReport r = is_stable(LambdaConnection::higgs(b, diagonal({1, 2, 3})));
  EXPECT_FALSE(r.stable);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.certificate->line, LineSubbundle::first_summand(b.split()));
  EXPECT_EQ(r.certificate->par_degree, q(-2) + q(7, 8) + q(5, 6) + q(1, 5) + q(1, 4));
}

TEST(IsStable, AgreesWithOracle) {
  Sampler rng(59);
  int checked = 0;
  for (int n = 0; n < 60; ++n) {
    GaussianRational lambda = n % 3 == 0 ? rng.gaussian(2, 2) : GaussianRational(0);
    pt::ConnectionOptions opts;
    opts.upper_zero = n % 4 == 1;
    auto b = pt::random_bundle(rng, pt::random_split(rng, 2), rng.generic_weights(12));
    auto c = pt::random_connection(rng, lambda, b, opts);
    if (!c) continue;
    EXPECT_EQ(is_stable(*c).stable, pt::oracle_is_stable(*c));
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(SecondFundamentalForm, MatchesProjection) {
  Sampler rng(61);
  for (int n = 0; n < 40; ++n) {
    auto b = pt::random_bundle(rng, pt::random_split(rng, 2), rng.generic_weights(12));
    auto c = pt::random_connection(rng, n % 2 ? GaussianRational(1) : GaussianRational(0), b);
    if (!c) continue;
    LineSubbundle l = max_destabilizing_line(b).line;
    EXPECT_EQ(second_fundamental_form(*c, l), pt::oracle_second_fundamental_form(*c, l.u(), l.v()));
  }
}
