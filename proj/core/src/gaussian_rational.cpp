#include "parhiggs/gaussian_rational.hpp"

#include <stdexcept>

#include "parhiggs/errors.hpp"

namespace parhiggs {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.im_ == 0) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (o.im_ == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b) {
  if (a.re() < b.re()) return std::strong_ordering::less;
  if (a.re() > b.re()) return std::strong_ordering::greater;
  if (a.im() < b.im()) return std::strong_ordering::less;
  if (a.im() > b.im()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// x + yi = (u + vi)^2 with u^2 - v^2 = x, 2uv = y, so u^2 = (x + r)/2 and v^2 = (r - x)/2 where r = |c|.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& c) {
  if (c.im() == 0) {
    if (auto s = exact_sqrt(c.re())) return GaussianRational(*s);
    if (auto s = exact_sqrt(Rational(-c.re()))) return GaussianRational(Rational(0), *s);
    return std::nullopt;
  }
  auto r = exact_sqrt(c.norm());
  if (!r) return std::nullopt;
  auto u = exact_sqrt(Rational((c.re() + *r) / 2));
  if (!u || *u == 0) return std::nullopt;
  Rational v = c.im() / (2 * *u);
  return GaussianRational(*u, v);
}

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

std::string to_string(const GaussianRational& c) {
  if (c.im() == 0) return to_string(c.re());
  std::string out = to_string(c.re());
  if (c.im() < 0) {
    out += "-" + to_string(Rational(-c.im()));
  } else {
    out += "+" + to_string(c.im());
  }
  return out + "*i";
}

namespace {

// Parses an imaginary term body such as "", "3", "3/4" (the part before "*i" or "i").
Rational parse_imag_coefficient(std::string_view body, std::string_view whole) {
  if (body.empty()) return Rational(1);
  if (body.back() == '*') body.remove_suffix(1);
  if (body.empty()) throw InvalidInput("malformed Gaussian rational: '" + std::string(whole) + "'");
  return parse_rational(body);
}

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ') compact += ch;
  }
  std::string_view s = compact;
  if (s.empty()) throw InvalidInput("empty Gaussian rational");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));

  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    bool negative = !body.empty() && body[0] == '-';
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
    Rational im = parse_imag_coefficient(body, text);
    return GaussianRational(Rational(0), negative ? Rational(-im) : im);
  }
  Rational re = parse_rational(body.substr(0, split));
  bool negative = body[split] == '-';
  Rational im = parse_imag_coefficient(body.substr(split + 1), text);
  return GaussianRational(re, negative ? Rational(-im) : im);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) { return os << to_string(c); }

}  // namespace parhiggs
