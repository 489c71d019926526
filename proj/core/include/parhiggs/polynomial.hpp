#pragma once

#include <climits>
#include <compare>
#include <span>
#include <vector>

#include "parhiggs/gaussian_rational.hpp"

namespace parhiggs {

// Dense univariate polynomial over Q(i); coefficients stored low to high, trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coefficients);
  Polynomial(const GaussianRational& constant);

  static Polynomial monomial(const GaussianRational& c, int k);
  static Polynomial z() { return monomial(1, 1); }
  // z - root
  static Polynomial linear(const GaussianRational& root);
  static Polynomial from_roots(std::span<const GaussianRational> roots);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  GaussianRational coefficient(int k) const;
  GaussianRational leading() const;

  GaussianRational operator()(const GaussianRational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  // f(z + shift)
  Polynomial taylor_shift(const GaussianRational& shift) const;
  // Multiplicity of x as a root; INT_MAX for the zero polynomial.
  int order_at(const GaussianRational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

PolynomialDivision divmod(const Polynomial& a, const Polynomial& b);
// Throws std::domain_error unless b divides a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial pow(const Polynomial& base, unsigned exponent);

// Yun's algorithm: f = leading(f) * prod_k factors[k]^(k+1), factors monic, pairwise coprime, square-free.
std::vector<Polynomial> square_free_factors(const Polynomial& f);

std::strong_ordering lex_compare(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& p);

}  // namespace parhiggs
