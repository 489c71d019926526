#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace parhiggs {

// Expression templates off so that arithmetic results convert implicitly.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Accepts "n" or "n/d" with optional leading sign; throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Integer floor(const Rational& r);
Rational frac(const Rational& r);
int sign(const Rational& r);

// Exact square root in Q, if one exists.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace parhiggs
