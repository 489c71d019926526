#include "parhiggs/rational_function.hpp"

#include <stdexcept>

#include "parhiggs/errors.hpp"

namespace parhiggs {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(GaussianRational(1));
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  GaussianRational lc = den_.leading();
  if (!(lc == GaussianRational(1))) {
    GaussianRational inv = GaussianRational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

int RationalFunction::degree() const {
  if (num_.is_zero()) return INT_MIN;
  return num_.degree() - den_.degree();
}

int RationalFunction::order_at(const GaussianRational& p) const {
  if (num_.is_zero()) return INT_MAX;
  return num_.order_at(p) - den_.order_at(p);
}

GaussianRational RationalFunction::operator()(const GaussianRational& x) const {
  GaussianRational d = den_(x);
  if (d.is_zero()) throw std::domain_error("evaluation of a rational function at a pole");
  return num_(x) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

GaussianRational RationalFunction::laurent_coefficient(const GaussianRational& p, int k) const {
  if (num_.is_zero()) return {};
  const auto ns = num_.taylor_shift(p).coefficients();
  const auto ds = den_.taylor_shift(p).coefficients();
  std::size_t o = 0;
  while (ns[o].is_zero()) ++o;
  std::size_t v = 0;
  while (ds[v].is_zero()) ++v;
  long m = static_cast<long>(k) - (static_cast<long>(o) - static_cast<long>(v));
  if (m < 0) return {};
  auto a = [&](std::size_t j) { return o + j < ns.size() ? ns[o + j] : GaussianRational(); };
  auto b = [&](std::size_t j) { return v + j < ds.size() ? ds[v + j] : GaussianRational(); };
  std::vector<GaussianRational> c(static_cast<std::size_t>(m) + 1);
  GaussianRational inv_b0 = GaussianRational(1) / b(0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    GaussianRational acc = a(j);
    for (std::size_t l = 1; l <= j; ++l) {
      GaussianRational bl = b(l);
      if (!bl.is_zero()) acc -= bl * c[j - l];
    }
    c[j] = acc * inv_b0;
  }
  return c.back();
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

GaussianRational residue_at(const RationalFunction& f, const GaussianRational& p) {
  if (f.is_zero()) return {};
  int ord = f.order_at(p);
  if (ord >= 0) return {};
  if (ord < -1) {
    throw PoleOrderTooHigh("pole of order " + std::to_string(-ord) + " at " + to_string(p));
  }
  Polynomial rest = exact_quotient(f.denominator(), Polynomial::linear(p));
  return f.numerator()(p) / rest(p);
}

namespace {

// Square root of a monic polynomial that is a perfect square, else empty.
std::optional<Polynomial> monic_square_root(const Polynomial& f) {
  auto factors = square_free_factors(f);
  Polynomial root(GaussianRational(1));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    unsigned multiplicity = static_cast<unsigned>(k + 1);
    if (factors[k].degree() <= 0) continue;
    if (multiplicity % 2 == 1) return std::nullopt;
    root *= pow(factors[k], multiplicity / 2);
  }
  return root;
}

}  // namespace

SquareRoot classify_square(const RationalFunction& q) {
  if (q.is_zero()) return {SquareClass::Square, RationalFunction()};
  auto num_root = monic_square_root(q.numerator().monic());
  auto den_root = monic_square_root(q.denominator());
  if (!num_root || !den_root) return {SquareClass::NotSquare, {}};
  auto c = exact_sqrt(q.numerator().leading());
  if (!c) return {SquareClass::SquareOutsideField, {}};
  return {SquareClass::Square, RationalFunction(*num_root * *c, *den_root)};
}

std::optional<RationalFunction> is_square(const RationalFunction& q) {
  auto r = classify_square(q);
  if (r.kind != SquareClass::Square) return std::nullopt;
  return r.root;
}

std::strong_ordering lex_compare(const RationalFunction& a, const RationalFunction& b) {
  auto c = lex_compare(a.numerator(), b.numerator());
  if (c != std::strong_ordering::equal) return c;
  return lex_compare(a.denominator(), b.denominator());
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace parhiggs
