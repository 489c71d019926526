#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "parhiggs/rational.hpp"

namespace parhiggs {

// re + im*i with exact rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int value) : re_(value) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

// Total order (real part first) used only for deterministic tie-breaks.
std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b);

// Square root in Q(i) when the value is a square there.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& c);

GaussianRational pow(const GaussianRational& base, unsigned exponent);

// Canonical forms: "3", "-1/2", "1/2+3/4*i", "0-1*i".
std::string to_string(const GaussianRational& c);
GaussianRational parse_gaussian(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& c);

}  // namespace parhiggs
