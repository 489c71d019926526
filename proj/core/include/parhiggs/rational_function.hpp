#pragma once

#include <climits>
#include <optional>
#include <string>

#include "parhiggs/polynomial.hpp"

namespace parhiggs {

// Reduced quotient num/den with den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(GaussianRational(1)) {}
  RationalFunction(const GaussianRational& c) : num_(c), den_(GaussianRational(1)) {}
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(GaussianRational(1)) {}
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction z() { return RationalFunction(Polynomial::z()); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // deg num - deg den; INT_MIN for zero. The order at infinity is -degree().
  int degree() const;
  // Valuation at a finite point; INT_MAX for zero.
  int order_at(const GaussianRational& p) const;

  // Throws std::domain_error at a pole.
  GaussianRational operator()(const GaussianRational& x) const;
  RationalFunction derivative() const;
  // Coefficient of (z - p)^k in the Laurent expansion at p.
  GaussianRational laurent_coefficient(const GaussianRational& p, int k) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

// Residue of f(z)dz at p. Throws PoleOrderTooHigh for poles of order > 1.
GaussianRational residue_at(const RationalFunction& f, const GaussianRational& p);

enum class SquareClass { NotSquare, SquareOutsideField, Square };

struct SquareRoot {
  SquareClass kind = SquareClass::NotSquare;
  RationalFunction root;  // meaningful when kind == Square
};

// Decides whether q = c * g^2 over C(z) and whether c is a square in Q(i).
SquareRoot classify_square(const RationalFunction& q);

// s with s^2 = q over Q(i)(z), if any.
std::optional<RationalFunction> is_square(const RationalFunction& q);

std::strong_ordering lex_compare(const RationalFunction& a, const RationalFunction& b);

std::string to_string(const RationalFunction& f);

}  // namespace parhiggs
