#include "parhiggs/polynomial.hpp"

#include <stdexcept>

namespace parhiggs {

Polynomial::Polynomial(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(const GaussianRational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const GaussianRational& c, int k) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear(const GaussianRational& root) { return Polynomial({-root, GaussianRational(1)}); }

Polynomial Polynomial::from_roots(std::span<const GaussianRational> roots) {
  Polynomial out(GaussianRational(1));
  for (const auto& r : roots) out *= linear(r);
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

GaussianRational Polynomial::leading() const { return is_zero() ? GaussianRational() : coeffs_.back(); }

GaussianRational Polynomial::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<GaussianRational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * GaussianRational(static_cast<int>(k)));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  GaussianRational inv = GaussianRational(1) / leading();
  out *= inv;
  return out;
}

Polynomial Polynomial::taylor_shift(const GaussianRational& shift) const {
  // Horner in the shifted variable: f(w + s) = (...(c_n (w+s) + c_{n-1})(w+s) ...)
  Polynomial acc;
  Polynomial step({shift, GaussianRational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += Polynomial(*it);
  }
  return acc;
}

int Polynomial::order_at(const GaussianRational& x) const {
  if (is_zero()) return INT_MAX;
  Polynomial shifted = taylor_shift(x);
  int k = 0;
  while (shifted.coeffs_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GaussianRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

PolynomialDivision divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<GaussianRational> rem = a.coefficients();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Polynomial(), a};
  std::vector<GaussianRational> quot(static_cast<std::size_t>(da - db + 1));
  GaussianRational inv = GaussianRational(1) / b.leading();
  for (int k = da; k >= db; --k) {
    GaussianRational c = rem[static_cast<std::size_t>(k)] * inv;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coefficient(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(GaussianRational(1));
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

std::vector<Polynomial> square_free_factors(const Polynomial& f) {
  std::vector<Polynomial> factors;
  if (f.degree() <= 0) return factors;
  Polynomial fm = f.monic();
  Polynomial df = fm.derivative();
  Polynomial a = gcd(fm, df);
  Polynomial b = exact_quotient(fm, a);
  Polynomial c = exact_quotient(df, a);
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    factors.push_back(g);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

std::strong_ordering lex_compare(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    auto c = lex_compare(a.coefficient(k), b.coefficient(k));
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const auto& c = p.coefficient(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    if (k >= 1) out += "*z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace parhiggs
