#include "parhiggs/hitchin_sections.hpp"

#include <stdexcept>

#include "parhiggs/errors.hpp"
#include "parhiggs/fixed_points.hpp"
#include "parhiggs/residues.hpp"

namespace parhiggs {

RationalFunction QuadraticBase::at(const GaussianRational& t) const { return q0 + r * RationalFunction(t); }

GaussianRational quadratic_residue(const RationalFunction& q, const GaussianRational& p) {
  return q.laurent_coefficient(p, -2);
}

QuadraticBase basis_B_mu(const MassVector& mu, const MarkedDivisor& divisor) {
  std::vector<GaussianRational> values;
  for (std::size_t i = 0; i < kPointCount; ++i) {
    const auto& dn = divisor.product_derivative(i);
    values.push_back(mu[i] * mu[i] * dn * dn);
  }
  auto xs = divisor.point_list();
  Polynomial q0 = interpolate(xs, values);
  const Polynomial& n = divisor.product();
  return {RationalFunction(q0, n * n), RationalFunction(Polynomial(GaussianRational(1)), n)};
}

GaussianRational base_coordinate(const RationalFunction& q, const MarkedDivisor& divisor) {
  const Polynomial& n = divisor.product();
  RationalFunction scaled = q * RationalFunction(n * n);
  if (!scaled.is_polynomial()) throw ConditionViolated("q has poles beyond 2D");
  return scaled.numerator().coefficient(4);
}

void require_in_base(const RationalFunction& q, const MassVector& mu, const MarkedDivisor& divisor) {
  const Polynomial& n = divisor.product();
  RationalFunction scaled = q * RationalFunction(n * n);
  if (!scaled.is_polynomial() || scaled.numerator().degree() > 4) {
    throw ConditionViolated("q is not a section of K^2(2D)");
  }
  for (std::size_t i = 0; i < kPointCount; ++i) {
    if (!(quadratic_residue(q, divisor.point(i)) == mu[i] * mu[i])) {
      throw ConditionViolated("quadratic residue of q at p" + std::to_string(i + 1) + " is not mu^2");
    }
  }
}

TwistedHiggs s_KD(const RationalFunction& q, const MarkedDivisor& divisor) {
  const Polynomial& n = divisor.product();
  TwistedHiggs out{{-1, -3}, {}};
  out.field[0][1] = q * RationalFunction(n);
  out.field[1][0] = RationalFunction(Polynomial(GaussianRational(1)), n);
  return out;
}

std::string to_string(SectionBranch branch) {
  switch (branch) {
    case SectionBranch::Degree4:
      return "deg-4";
    case SectionBranch::Degree2:
      return "deg-2";
    case SectionBranch::Degree0Split:
      return "deg-0-split";
    default:
      return "deg-0-nonsplit";
  }
}

int framed_base_sheets(const MassVector& mu) {
  int sheets = 1;
  for (const auto& m : mu) {
    if (!m.is_zero()) sheets *= 2;
  }
  return sheets;
}

namespace {

RationalFunction k_d_section(const MarkedDivisor& divisor, std::vector<PointResidue> residues) {
  return section_with_residues(TwistedCanonical{divisor.point_list(), 0}, residues);
}

HitchinSection degree4(const WeightVector& alpha, const MassVector& mu, const RationalFunction& q,
                       const MarkedDivisor& divisor) {
  TwistedHiggs base = s_KD(q, divisor);
  std::array<ProjectivePoint, kPointCount> flags{ProjectivePoint::second_axis(), ProjectivePoint::second_axis(),
                                                 ProjectivePoint::second_axis(), ProjectivePoint::second_axis()};
  for (std::size_t i = 0; i < kPointCount; ++i) {
    // Residue [[0, μ² N'], [1/N', 0]] has μ-eigenline (μ N', 1); the kernel (0, 1) when μ = 0.
    flags[i] = ProjectivePoint(mu[i] * divisor.product_derivative(i), GaussianRational(1));
  }
  ParabolicRank2Bundle bundle(base.split, divisor, flags, alpha);
  return {LambdaConnection::higgs(bundle, base.field), SectionBranch::Degree4, PointSubset::all(),
          LineSubbundle::first_summand(base.split), {}};
}

HitchinSection degree2(const WeightVector& alpha, PointSubset subset, const MassVector& mu, const RationalFunction& q,
                       const MarkedDivisor& divisor, const SectionOptions& options) {
  auto in = subset.indices();
  auto out = subset.complement().indices();
  std::size_t i = options.kernel_point.value_or(in[0]);
  if (!subset.contains(i)) throw InvalidInput("kernel point must belong to the subset");
  std::size_t j = i == in[0] ? in[1] : in[0];
  std::size_t k = out[0];
  std::size_t l = out[1];
  const auto& p = divisor.points();

  RationalFunction phi(Polynomial(GaussianRational(1)), divisor.partial_product(subset));
  RationalFunction s1 = k_d_section(divisor, {{p[k], mu[k]}, {p[l], mu[l]}, {p[i], -mu[i]}});
  RationalFunction s2 = (q - s1 * s1) / phi;

  GaussianRational sigma = residue_at(s1, p[j]);
  GaussianRational c = residue_at(phi, p[j]);
  if (c.is_zero()) throw DegenerateResidue("Res(phi) vanishes at p" + std::to_string(j + 1));

  std::array<ProjectivePoint, kPointCount> flags{ProjectivePoint::first_axis(), ProjectivePoint::first_axis(),
                                                 ProjectivePoint::first_axis(), ProjectivePoint::first_axis()};
  flags[i] = ProjectivePoint::second_axis();
  flags[j] = ProjectivePoint(mu[j] + sigma, c);

  SplitType split{-2, -2};
  FieldMatrix field;
  field[0][0] = s1;
  field[0][1] = s2;
  field[1][0] = phi;
  field[1][1] = -s1;
  ParabolicRank2Bundle bundle(split, divisor, flags, alpha);
  return {LambdaConnection::higgs(bundle, field), SectionBranch::Degree2, subset, LineSubbundle::first_summand(split),
          {{"s1", s1}, {"s2", s2}, {"phi", phi}}};
}

HitchinSection degree0_split(const WeightVector& alpha, const MassVector& mu, const RationalFunction& q,
                             const MarkedDivisor& divisor) {
  const auto& p = divisor.points();
  RationalFunction t1 = k_d_section(divisor, {{p[0], mu[0]}, {p[1], mu[1]}, {p[2], mu[2]}});
  RationalFunction t2 = q - t1 * t1;
  SplitType split{-3, -1};
  FieldMatrix field;
  field[0][0] = t1;
  field[0][1] = t2;
  field[1][0] = RationalFunction(GaussianRational(1));
  field[1][1] = -t1;
  std::array<ProjectivePoint, kPointCount> flags{ProjectivePoint::first_axis(), ProjectivePoint::first_axis(),
                                                 ProjectivePoint::first_axis(), ProjectivePoint::first_axis()};
  ParabolicRank2Bundle bundle(split, divisor, flags, alpha);
  return {LambdaConnection::higgs(bundle, field), SectionBranch::Degree0Split, PointSubset(),
          LineSubbundle::first_summand(split), {{"t1", t1}, {"t2", t2}}};
}

// Sections t1, t2, t3 of K(D) for the eigenline data along w = (z - p1, z - p2), parameterized by a3 = Res_{p3} t1.
struct NonsplitEntries {
  RationalFunction t1, t2, t3;
};

NonsplitEntries nonsplit_entries(const MassVector& mu, const MarkedDivisor& divisor, const GaussianRational& a3) {
  const auto& p = divisor.points();
  std::array<GaussianRational, kPointCount> a{-mu[0], mu[1], a3, mu[0] - mu[1] - a3};
  std::vector<PointResidue> r1;
  std::vector<PointResidue> r2{{p[0], GaussianRational(0)}};
  std::vector<PointResidue> r3{{p[1], GaussianRational(0)}};
  for (std::size_t i = 0; i < 3; ++i) r1.push_back({p[i], a[i]});
  for (std::size_t i = 2; i < kPointCount; ++i) {
    GaussianRational x = p[i] - p[0];
    GaussianRational y = p[i] - p[1];
    r2.push_back({p[i], (mu[i] - a[i]) * x / y});
    r3.push_back({p[i], (mu[i] + a[i]) * y / x});
  }
  return {k_d_section(divisor, r1), k_d_section(divisor, r2), k_d_section(divisor, r3)};
}

HitchinSection degree0_nonsplit(const WeightVector& alpha, const MassVector& mu, const RationalFunction& q,
                                const MarkedDivisor& divisor) {
  const auto& p = divisor.points();
  auto top = [&](const GaussianRational& a3) {
    auto e = nonsplit_entries(mu, divisor, a3);
    return base_coordinate(e.t1 * e.t1 + e.t2 * e.t3, divisor);
  };
  // The z^4 coefficient of T1^2 + T2 T3 is affine in a3 with slope (p3 - p4)(p2 - p1) Σμ.
  GaussianRational f0 = top(GaussianRational(0));
  GaussianRational f1 = top(GaussianRational(1));
  GaussianRational f2 = top(GaussianRational(2));
  if (!(f2 - f1 - f1 + f0).is_zero()) throw std::logic_error("top coefficient is not affine in a3");
  GaussianRational slope = f1 - f0;
  if (slope.is_zero()) throw DegenerateResidue("sum of masses vanishes; use the split branch");
  GaussianRational a3 = (base_coordinate(q, divisor) - f0) / slope;
  NonsplitEntries e = nonsplit_entries(mu, divisor, a3);
  if (!(e.t1 * e.t1 + e.t2 * e.t3 == q)) throw std::logic_error("nonsplit construction missed q");

  SplitType split{-2, -2};
  FieldMatrix field;
  field[0][0] = e.t1;
  field[0][1] = e.t2;
  field[1][0] = e.t3;
  field[1][1] = -e.t1;
  std::array<ProjectivePoint, kPointCount> flags{ProjectivePoint::first_axis(), ProjectivePoint::first_axis(),
                                                 ProjectivePoint::first_axis(), ProjectivePoint::first_axis()};
  for (std::size_t i = 0; i < kPointCount; ++i) flags[i] = ProjectivePoint(p[i] - p[0], p[i] - p[1]);
  ParabolicRank2Bundle bundle(split, divisor, flags, alpha);
  LineSubbundle w = LineSubbundle::saturate(RationalFunction(Polynomial::linear(p[0])),
                                            RationalFunction(Polynomial::linear(p[1])), split);
  return {LambdaConnection::higgs(bundle, field), SectionBranch::Degree0Nonsplit, PointSubset(), w,
          {{"t1", e.t1}, {"t2", e.t2}, {"t3", e.t3}}};
}

}  // namespace

HitchinSection hitchin_section(const WeightVector& alpha, PointSubset subset, const MassVector& mu,
                               const RationalFunction& q, const MarkedDivisor& divisor, const SectionOptions& options) {
  if (subset.size() % 2 == 1) {
    throw ConditionViolated("odd subsets " + subset.label() + " label the central sphere, not an exterior point");
  }
  if (!table_condition(alpha, subset)) {
    throw ConditionViolated("fixed point " + subset.label() + " requires " + table_inequality(subset));
  }
  require_in_base(q, mu, divisor);
  switch (subset.size()) {
    case 4:
      return degree4(alpha, mu, q, divisor);
    case 2:
      return degree2(alpha, subset, mu, q, divisor, options);
    default: {
      GaussianRational total;
      for (const auto& m : mu) total += m;
      if (total.is_zero()) return degree0_split(alpha, mu, q, divisor);
      return degree0_nonsplit(alpha, mu, q, divisor);
    }
  }
}

bool parabolic_oper_check(const LambdaConnection& conn, const LineSubbundle& sub, PointSubset subset) {
  if (conn.is_higgs()) throw InvalidInput("parabolic_oper_check requires lambda != 0");
  RationalFunction sff = second_fundamental_form(conn, sub);
  if (sff.is_zero()) return false;
  const auto& divisor = conn.bundle().divisor();
  // Hom(O(d), O(-4-d)) ⊗ K(D_I) has degree -6 - 2d + |I|.
  int line_degree = -6 - 2 * sub.degree() + subset.size();
  if (line_degree != 0) return false;
  RationalFunction trivialized = sff * RationalFunction(divisor.partial_product(subset));
  return trivialized.is_polynomial() && trivialized.numerator().degree() == 0;
}

}  // namespace parhiggs
