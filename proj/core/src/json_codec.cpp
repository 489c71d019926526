#include "parhiggs/json_codec.hpp"

#include "parhiggs/errors.hpp"

namespace parhiggs {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array_of(const Json& j, std::size_t size, const char* what) {
  if (!j.is_array() || (size != 0 && j.size() != size)) {
    throw InvalidInput(std::string("expected ") + (size ? std::to_string(size) + "-element " : "") + "array for " +
                       what);
  }
  return j;
}

std::string string_of(const Json& j) {
  if (!j.is_string()) throw InvalidInput("expected an exact scalar string, got " + j.dump());
  return j.get<std::string>();
}

int integer_of(const Json& j) {
  if (!j.is_number_integer()) throw InvalidInput("expected an integer, got " + j.dump());
  return j.get<int>();
}

template <typename T, typename F>
std::array<T, kPointCount> four(const Json& j, const char* what, F decode) {
  array_of(j, kPointCount, what);
  return {decode(j[0]), decode(j[1]), decode(j[2]), decode(j[3])};
}

}  // namespace

Json encode(const Rational& r) { return to_string(r); }
Json encode(const GaussianRational& g) { return to_string(g); }

Json encode(const Polynomial& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(encode(p.coefficient(k)));
  return out;
}

Json encode(const RationalFunction& f) { return {{"num", encode(f.numerator())}, {"den", encode(f.denominator())}}; }

Json encode(PointSubset s) {
  Json out = Json::array();
  for (auto i : s.indices()) out.push_back(i + 1);
  return out;
}

Json encode(const SplitType& s) { return Json::array({s.a, s.b}); }

Json encode(const MarkedDivisor& d) {
  Json out = Json::array();
  for (const auto& p : d.points()) out.push_back(encode(p));
  return out;
}

Json encode(const WeightVector& a) {
  Json out = Json::array();
  for (const auto& x : a.values()) out.push_back(encode(x));
  return out;
}

Json encode(const ProjectivePoint& p) {
  auto r = p.ratio();
  return r ? encode(*r) : Json("inf");
}

Json encode(const ParabolicLineBundle& l) {
  Json weights = Json::array();
  for (const auto& w : l.weights) weights.push_back(encode(w));
  return {{"degree", l.degree}, {"weights", weights}};
}

Json encode(const ParabolicRank2Bundle& b) {
  Json flags = Json::array();
  for (const auto& f : b.flags()) flags.push_back(encode(f));
  return {{"split", encode(b.split())}, {"points", encode(b.divisor())}, {"flags", flags},
          {"alpha", encode(b.alpha())}};
}

Json encode(const FieldMatrix& m) {
  return Json::array({Json::array({encode(m[0][0]), encode(m[0][1])}),
                      Json::array({encode(m[1][0]), encode(m[1][1])})});
}

Json encode(const LambdaConnection& c) {
  return {{"lambda", encode(c.lambda())}, {"bundle", encode(c.bundle())}, {"matrix", encode(c.matrix())}};
}

Json encode(const LineSubbundle& l) { return {{"degree", l.degree()}, {"u", encode(l.u())}, {"v", encode(l.v())}}; }

Json encode(const FixedPointDatum& f) {
  Json flags = Json::array();
  for (const auto& p : f.flags) flags.push_back(encode(p));
  Json out = {{"subset", encode(f.subset)}, {"d", f.d},           {"split", encode(f.split)},
              {"phi0", encode(f.phi0)},     {"flags", flags},     {"l1", encode(f.l1)},
              {"l2", encode(f.l2)},         {"points", encode(f.divisor)}, {"alpha", encode(f.alpha)}};
  out["zero"] = f.zero ? encode(*f.zero) : Json();
  return out;
}

Json encode(const LimitDatum& l) {
  if (l.stable_bundle) return {{"type", "stable-bundle"}, {"bundle", encode(*l.bundle)}};
  return {{"type", "hodge"},
          {"split", encode(l.split)},
          {"ambient_split", encode(l.ambient_split)},
          {"line", encode(*l.line)},
          {"subset", encode(l.subset)},
          {"phi0", encode(l.phi0)},
          {"l1", encode(*l.l1)},
          {"l2", encode(*l.l2)}};
}

Json encode(const WeightMassPair& p) {
  Json alpha = Json::array();
  Json mu = Json::array();
  for (std::size_t i = 0; i < kPointCount; ++i) {
    alpha.push_back(encode(p.alpha[i]));
    mu.push_back(encode(p.mu[i]));
  }
  return {{"alpha", alpha}, {"mu", mu}};
}

Json encode(const TransformedPair& p) {
  Json out = encode(p.pair);
  Json carry = Json::array();
  for (const auto& c : p.carry) carry.push_back(c.str());
  out["carry"] = carry;
  return out;
}

Rational decode_rational(const Json& j) { return parse_rational(string_of(j)); }
GaussianRational decode_gaussian(const Json& j) { return parse_gaussian(string_of(j)); }

Polynomial decode_polynomial(const Json& j) {
  array_of(j, 0, "polynomial");
  std::vector<GaussianRational> coeffs;
  for (const auto& c : j) coeffs.push_back(decode_gaussian(c));
  return Polynomial(std::move(coeffs));
}

RationalFunction decode_rational_function(const Json& j) {
  Polynomial den = decode_polynomial(field(j, "den"));
  if (den.is_zero()) throw InvalidInput("rational function with zero denominator");
  return RationalFunction(decode_polynomial(field(j, "num")), den);
}

PointSubset decode_subset(const Json& j) {
  array_of(j, 0, "subset");
  unsigned mask = 0;
  int last = 0;
  for (const auto& x : j) {
    int i = integer_of(x);
    if (i < 1 || i > static_cast<int>(kPointCount)) throw InvalidInput("point index out of range: " + x.dump());
    if (i <= last) throw InvalidInput("subset indices must be strictly increasing");
    last = i;
    mask |= 1u << (i - 1);
  }
  return PointSubset(mask);
}

SplitType decode_split(const Json& j) {
  array_of(j, 2, "split type");
  return {integer_of(j[0]), integer_of(j[1])};
}

MarkedDivisor decode_divisor(const Json& j) {
  return MarkedDivisor(four<GaussianRational>(j, "divisor", decode_gaussian));
}

WeightVector decode_weights(const Json& j) { return WeightVector(four<Rational>(j, "weights", decode_rational)); }

ProjectivePoint decode_projective_point(const Json& j) {
  if (j == "inf") return ProjectivePoint::second_axis();
  return ProjectivePoint::from_ratio(decode_gaussian(j));
}

ParabolicLineBundle decode_line_bundle(const Json& j) {
  ParabolicLineBundle out{integer_of(field(j, "degree")), {}};
  for (const auto& w : array_of(field(j, "weights"), kPointCount, "weights")) out.weights.push_back(decode_rational(w));
  validate(out);
  return out;
}

ParabolicRank2Bundle decode_bundle(const Json& j) {
  return ParabolicRank2Bundle(decode_split(field(j, "split")), decode_divisor(field(j, "points")),
                              four<ProjectivePoint>(field(j, "flags"), "flags", decode_projective_point),
                              decode_weights(field(j, "alpha")));
}

FieldMatrix decode_field_matrix(const Json& j) {
  array_of(j, 2, "matrix");
  FieldMatrix out;
  for (std::size_t r = 0; r < 2; ++r) {
    array_of(j[r], 2, "matrix row");
    for (std::size_t c = 0; c < 2; ++c) out[r][c] = decode_rational_function(j[r][c]);
  }
  return out;
}

LambdaConnection decode_connection(const Json& j) {
  return LambdaConnection(decode_gaussian(field(j, "lambda")), decode_bundle(field(j, "bundle")),
                          decode_field_matrix(field(j, "matrix")));
}

LineSubbundle decode_line_subbundle(const Json& j, SplitType split) {
  LineSubbundle out = LineSubbundle::saturate(RationalFunction(decode_polynomial(field(j, "u"))),
                                              RationalFunction(decode_polynomial(field(j, "v"))), split);
  if (out.degree() != integer_of(field(j, "degree"))) {
    throw InvalidInput("line subbundle degree does not match its sections");
  }
  return out;
}

FixedPointDatum decode_fixed_point(const Json& j) {
  const Json& zero = field(j, "zero");
  std::optional<ProjectivePoint> z;
  if (!zero.is_null()) z = decode_projective_point(zero);
  FixedPointDatum out = fixed_point_datum(decode_weights(field(j, "alpha")), decode_subset(field(j, "subset")),
                                          decode_divisor(field(j, "points")), z);
  if (encode(out) != j) throw InvalidInput("fixed point datum is inconsistent with its label");
  return out;
}

LimitDatum decode_limit(const Json& j) {
  std::string type = string_of(field(j, "type"));
  LimitDatum out;
  if (type == "stable-bundle") {
    out.bundle = decode_bundle(field(j, "bundle"));
    out.split = out.bundle->split();
    return out;
  }
  if (type != "hodge") throw InvalidInput("unknown limit type \"" + type + "\"");
  out.stable_bundle = false;
  out.split = decode_split(field(j, "split"));
  out.ambient_split = decode_split(field(j, "ambient_split"));
  out.line = decode_line_subbundle(field(j, "line"), out.ambient_split);
  out.subset = decode_subset(field(j, "subset"));
  out.phi0 = decode_rational_function(field(j, "phi0"));
  out.l1 = decode_line_bundle(field(j, "l1"));
  out.l2 = decode_line_bundle(field(j, "l2"));
  return out;
}

WeightMassPair decode_weight_mass_pair(const Json& j) {
  return {four<Rational>(field(j, "alpha"), "alpha", decode_rational),
          four<GaussianRational>(field(j, "mu"), "mu", decode_gaussian)};
}

TransformedPair decode_transformed_pair(const Json& j) {
  TransformedPair out{decode_weight_mass_pair(j), {}};
  const Json& carry = array_of(field(j, "carry"), kPointCount, "carry");
  for (std::size_t i = 0; i < kPointCount; ++i) {
    try {
      out.carry[i] = Integer(string_of(carry[i]));
    } catch (const std::runtime_error&) {
      throw InvalidInput("bad integer " + carry[i].dump());
    }
  }
  return out;
}

}  // namespace parhiggs
