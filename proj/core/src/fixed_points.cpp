#include "parhiggs/fixed_points.hpp"

#include "parhiggs/chambers.hpp"
#include "parhiggs/errors.hpp"

namespace parhiggs {

ParabolicRank2Bundle FixedPointDatum::bundle() const { return ParabolicRank2Bundle(split, divisor, flags, alpha); }

LambdaConnection FixedPointDatum::higgs() const {
  FieldMatrix m;
  m[1][0] = phi0;
  return LambdaConnection::higgs(bundle(), m);
}

namespace {

ParabolicLineBundle quotient_line(const WeightVector& alpha, PointSubset subset) {
  int size = subset.size();
  ParabolicLineBundle l2{-1 - size / 2, {}};
  for (std::size_t i = 0; i < kPointCount; ++i) l2.weights.push_back(induced_sub_weight(alpha, i, subset.contains(i)));
  return l2;
}

std::string alpha_sum(const std::vector<std::size_t>& idx) {
  std::string out;
  for (auto i : idx) {
    if (!out.empty()) out += " + ";
    out += "alpha_" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

bool table_condition(const WeightVector& alpha, PointSubset subset) {
  return par_degree(quotient_line(alpha, subset)) < 0;
}

std::string table_inequality(PointSubset subset) {
  auto in = subset.indices();
  auto out = subset.complement().indices();
  switch (subset.size()) {
    case 0:
      return alpha_sum(out) + " < 1";
    case 1:
      return alpha_sum(out) + " - alpha_" + std::to_string(in[0] + 1) + " < 0";
    case 2:
      return alpha_sum(out) + " - (" + alpha_sum(in) + ") < 0";
    case 3:
      return "alpha_" + std::to_string(out[0] + 1) + " - (" + alpha_sum(in) + ") < -1";
    default:
      return alpha_sum(in) + " > 1";
  }
}

FixedPointDatum fixed_point_datum(const WeightVector& alpha, PointSubset subset, const MarkedDivisor& divisor,
                                  std::optional<ProjectivePoint> zero) {
  if (!table_condition(alpha, subset)) {
    throw ConditionViolated("fixed point " + subset.label() + " requires " + table_inequality(subset));
  }
  const int size = subset.size();
  const int d = size / 2;
  std::array<ProjectivePoint, kPointCount> flags{ProjectivePoint::first_axis(), ProjectivePoint::first_axis(),
                                                 ProjectivePoint::first_axis(), ProjectivePoint::first_axis()};
  ParabolicLineBundle l1{d - 3, {}};
  for (std::size_t i = 0; i < kPointCount; ++i) {
    if (subset.contains(i)) flags[i] = ProjectivePoint::second_axis();
    l1.weights.push_back(induced_sub_weight(alpha, i, !subset.contains(i)));
  }
  Polynomial numerator(GaussianRational(1));
  if (size % 2 == 1) {
    if (!zero) zero = ProjectivePoint::first_axis();
    numerator = Polynomial({-zero->y(), zero->x()});
  } else {
    zero.reset();
  }
  return FixedPointDatum{
      .subset = subset,
      .d = d,
      .split = {d - 3, -1 - d},
      .phi0 = RationalFunction(numerator, divisor.partial_product(subset)),
      .zero = zero,
      .flags = flags,
      .l1 = l1,
      .l2 = quotient_line(alpha, subset),
      .divisor = divisor,
      .alpha = alpha,
  };
}

std::string to_string(CentralKind kind) {
  switch (kind) {
    case CentralKind::StableBundle:
      return "stable-bundle";
    case CentralKind::Degree1:
      return "deg-1";
    default:
      return "deg-3";
  }
}

CentralSphere central_sphere(const WeightVector& alpha) {
  const Rational total = alpha.sum();
  for (std::size_t k = 0; k < kPointCount; ++k) {
    Rational value = total - 2 * alpha[k];  // Σ_{i≠k} α_i - α_k
    if (value < 0) return {CentralKind::Degree1, k, PointSubset::of({k})};
    if (value > 1) return {CentralKind::Degree3, k, PointSubset::of({k}).complement()};
  }
  return {};
}

FixedComponents enumerate_fixed_components(const WeightVector& alpha, const MarkedDivisor& divisor) {
  chamber_of(alpha);
  FixedComponents out;
  PointSubset extreme = alpha.sum() < 1 ? PointSubset() : PointSubset::all();
  out.exterior.push_back(fixed_point_datum(alpha, extreme, divisor));
  for (std::size_t partner = 1; partner < kPointCount; ++partner) {
    PointSubset s = PointSubset::of({0, partner});
    PointSubset pick = table_condition(alpha, s) ? s : s.complement();
    out.exterior.push_back(fixed_point_datum(alpha, pick, divisor));
  }
  out.central = central_sphere(alpha);
  if (out.central.subset) out.central_representative = fixed_point_datum(alpha, *out.central.subset, divisor);
  return out;
}

}  // namespace parhiggs
