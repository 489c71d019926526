#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parhiggs/lambda_connection.hpp"

namespace parhiggs {

// C*-fixed Hodge bundle L1 ⊕ L2 = O(d-3) ⊕ O(-1-d), d = floor(|I|/2), with Φ = [[0,0],[φ0,0]].
// Flags are the L2 line at points of I and the L1 line elsewhere.
struct FixedPointDatum {
  PointSubset subset;
  int d = 0;
  SplitType split;
  // φ0 = P / N_I, P constant for even |I| and P = x z - y for the zero (x : y) when |I| is odd.
  RationalFunction phi0;
  std::optional<ProjectivePoint> zero;
  std::array<ProjectivePoint, kPointCount> flags{ProjectivePoint::first_axis(), ProjectivePoint::first_axis(),
                                                 ProjectivePoint::first_axis(), ProjectivePoint::first_axis()};
  ParabolicLineBundle l1;  // weights β1
  ParabolicLineBundle l2;  // weights β2
  MarkedDivisor divisor = MarkedDivisor::standard();
  WeightVector alpha;

  ParabolicRank2Bundle bundle() const;
  LambdaConnection higgs() const;
};

// par_degree(L2(β2)) < 0 for the datum labeled by I.
bool table_condition(const WeightVector& alpha, PointSubset subset);
// Human-readable form of the inequality, one-based indices.
std::string table_inequality(PointSubset subset);

// zero: location of the zero of φ0 for odd |I|, as a point (1 : z0) or (0 : 1) for infinity; default z0 = 0.
// Throws ConditionViolated when the table condition fails.
FixedPointDatum fixed_point_datum(const WeightVector& alpha, PointSubset subset,
                                  const MarkedDivisor& divisor = MarkedDivisor::standard(),
                                  std::optional<ProjectivePoint> zero = std::nullopt);

enum class CentralKind { StableBundle, Degree1, Degree3 };

struct CentralSphere {
  CentralKind kind = CentralKind::StableBundle;
  // Distinguished index k (zero-based) for the odd types: I = {k} or I = complement of {k}.
  std::optional<std::size_t> index;
  std::optional<PointSubset> subset;
};

std::string to_string(CentralKind kind);

struct FixedComponents {
  // Isolated fixed points: the deg-0 or deg-4 datum, then one deg-2 datum per complementary pair.
  std::vector<FixedPointDatum> exterior;
  CentralSphere central;
  // For odd central types, the member of the P^1-family with zero at z = 0.
  std::optional<FixedPointDatum> central_representative;

  std::size_t component_count() const { return exterior.size() + 1; }
};

CentralSphere central_sphere(const WeightVector& alpha);

// Throws OnWall for non-generic α.
FixedComponents enumerate_fixed_components(const WeightVector& alpha,
                                           const MarkedDivisor& divisor = MarkedDivisor::standard());

}  // namespace parhiggs
