#pragma once

#include <optional>

#include "parhiggs/lambda_connection.hpp"

namespace parhiggs {

using GaugeMatrix = std::array<std::array<Polynomial, 2>, 2>;

// Searches for g with entries in Hom(O(a_j), O(a_i)) (triangular when a != b) such that
// λ g' + A_2 g = g A_1, det g is a nonzero constant and g maps flags to flags.
std::optional<GaugeMatrix> find_isomorphism(const LambdaConnection& from, const LambdaConnection& to);

}  // namespace parhiggs
