#pragma once

#include <nlohmann/json.hpp>

#include "parhiggs/cstar_limit.hpp"
#include "parhiggs/fixed_points.hpp"
#include "parhiggs/lambda_connection.hpp"
#include "parhiggs/weight_mass_tables.hpp"

namespace parhiggs {

using Json = nlohmann::json;

// Wire format: scalars are exact strings ("a/b", "a/b+c/d*i"); polynomials are coefficient arrays,
// constant term first; rational functions are {"num": [...], "den": [...]} with monic den.
// Fiber points of P^1 are the ratio y/x as a scalar string, or "inf" for (0 : 1).
// Every decoder throws InvalidInput on malformed input.

Json encode(const Rational& r);
Json encode(const GaussianRational& g);
Json encode(const Polynomial& p);
Json encode(const RationalFunction& f);
Json encode(PointSubset s);
Json encode(const SplitType& s);
Json encode(const MarkedDivisor& d);
Json encode(const WeightVector& a);
Json encode(const ProjectivePoint& p);
Json encode(const ParabolicLineBundle& l);
Json encode(const ParabolicRank2Bundle& b);
Json encode(const FieldMatrix& m);
Json encode(const LambdaConnection& c);
Json encode(const LineSubbundle& l);
Json encode(const FixedPointDatum& f);
Json encode(const LimitDatum& l);
Json encode(const WeightMassPair& p);
Json encode(const TransformedPair& p);

Rational decode_rational(const Json& j);
GaussianRational decode_gaussian(const Json& j);
Polynomial decode_polynomial(const Json& j);
RationalFunction decode_rational_function(const Json& j);
PointSubset decode_subset(const Json& j);
SplitType decode_split(const Json& j);
MarkedDivisor decode_divisor(const Json& j);
WeightVector decode_weights(const Json& j);
ProjectivePoint decode_projective_point(const Json& j);
ParabolicLineBundle decode_line_bundle(const Json& j);
ParabolicRank2Bundle decode_bundle(const Json& j);
FieldMatrix decode_field_matrix(const Json& j);
LambdaConnection decode_connection(const Json& j);
LineSubbundle decode_line_subbundle(const Json& j, SplitType split);
FixedPointDatum decode_fixed_point(const Json& j);
LimitDatum decode_limit(const Json& j);
WeightMassPair decode_weight_mass_pair(const Json& j);
TransformedPair decode_transformed_pair(const Json& j);

}  // namespace parhiggs
