#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "parhiggs/chambers.hpp"
#include "parhiggs/cone_geometry.hpp"
#include "parhiggs/errors.hpp"
#include "parhiggs/hitchin_sections.hpp"
#include "parhiggs/sampling.hpp"
#include "parhiggs/stability.hpp"

namespace parhiggs::cli {
namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

// Domain parse errors in flag values become usage errors.
template <typename F>
auto parsing(const std::string& flag, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

template <typename T, typename F>
std::array<T, kPointCount> four(const std::string& flag, const std::string& text, F parse) {
  auto items = split_list(text);
  if (items.size() != kPointCount) throw UsageError(flag + " needs 4 comma-separated values");
  return parsing(flag, [&] {
    return std::array<T, kPointCount>{parse(items[0]), parse(items[1]), parse(items[2]), parse(items[3])};
  });
}

WeightVector parse_alpha(const std::string& text) {
  auto values = four<Rational>("--alpha", text, parse_rational);
  return parsing("--alpha", [&] { return WeightVector(values); });
}

MassVector parse_masses(const std::string& text) { return four<GaussianRational>("--mu", text, parse_gaussian); }

MarkedDivisor parse_points(const std::string& text) {
  auto values = four<GaussianRational>("--points", text, parse_gaussian);
  return parsing("--points", [&] { return MarkedDivisor(values); });
}

PointSubset parse_subset(const std::string& text) {
  if (text.empty() || text == "none" || text == "{}") return PointSubset();
  unsigned mask = 0;
  for (const auto& item : split_list(text)) {
    int i = 0;
    try {
      i = std::stoi(item);
    } catch (const std::exception&) {
      throw UsageError("--I: bad point index \"" + item + "\"");
    }
    if (i < 1 || i > static_cast<int>(kPointCount)) throw UsageError("--I: point index out of range: " + item);
    mask |= 1u << (i - 1);
  }
  return PointSubset(mask);
}

Json read_json(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open " + path);
    in = &file;
  }
  try {
    return Json::parse(*in);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Accepts a bare connection or a report carrying outputs.connection.
LambdaConnection read_connection(const std::string& path) {
  Json j = read_json(path);
  if (j.is_object() && j.contains("outputs") && j["outputs"].contains("connection")) j = j["outputs"]["connection"];
  return parsing("--input", [&] { return decode_connection(j); });
}

Json encode_masses(const MassVector& mu) {
  Json out = Json::array();
  for (const auto& m : mu) out.push_back(encode(m));
  return out;
}

Json encode_ranked(const RankedLine& r) {
  return {{"line", encode(r.line)}, {"par_degree", encode(r.par_degree)}};
}

Json encode_report(const StabilityReport& r) {
  Json out = {{"stable", r.stable}, {"all_lines_invariant", r.all_lines_invariant}};
  out["certificate"] = r.certificate ? encode_ranked(*r.certificate) : Json();
  Json ties = Json::array();
  for (const auto& t : r.ties) ties.push_back(encode_ranked(t));
  out["ties"] = ties;
  return out;
}

Json encode_filtration(const GriffithsFiltration& f) {
  Json out = {{"whole_until", f.whole_until}, {"line_until", f.line_until}};
  out["line"] = f.line ? encode(*f.line) : Json();
  return out;
}

Json encode_invariants(const LimitInvariants& inv) {
  Json weights = Json::array();
  for (const auto& w : inv.l1_weights) weights.push_back(encode(w));
  return {{"stable_bundle", inv.stable_bundle}, {"split", encode(inv.split)}, {"subset", encode(inv.subset)},
          {"l1_weights", weights},           {"phi0_divisor", encode(inv.phi0_divisor)}};
}

Json encode_central(const CentralSphere& c) {
  Json out = {{"kind", to_string(c.kind)}};
  out["index"] = c.index ? Json(*c.index + 1) : Json();
  out["subset"] = c.subset ? encode(*c.subset) : Json();
  return out;
}

}  // namespace

bool RunReport::verified() const {
  for (const auto& [key, value] : verification.items()) {
    if (value.is_boolean() && !value.get<bool>()) return false;
  }
  return true;
}

Json RunReport::to_json(std::optional<long long> wall_ms) const {
  Json out = {{"schema", kReportSchema}, {"command", command},           {"inputs", inputs},
              {"outputs", outputs},      {"verification", verification}, {"verified", verified()}};
  if (wall_ms) out["timing"] = {{"wall_ms", *wall_ms}};
  return out;
}

RunReport run_tables(const CommonOptions& common, const TablesOptions& o) {
  RunReport r{"tables"};
  WeightMassPair pair{four<Rational>("--alpha", o.alpha, parse_rational), parse_masses(o.mu)};
  for (const auto& a : pair.alpha) {
    if (a < 0 || a >= 1) throw UsageError("--alpha: weights must lie in [0, 1)");
  }
  GaussianRational lambda = parsing("--lambda", [&] { return parse_gaussian(o.lambda); });
  GaussianRational hbar = parsing("--hbar", [&] { return parse_gaussian(o.hbar); });
  Rational radius = parsing("--R", [&] { return parse_rational(o.radius); });
  r.inputs = {{"rule", o.rule}, {"pair", encode(pair)}};
  TransformedPair out;
  if (o.rule == "nah") {
    out = nah_transform(pair);
  } else if (o.rule == "lambda") {
    r.inputs["lambda"] = encode(lambda);
    out = lambda_transform(pair, lambda);
  } else if (o.rule == "family") {
    r.inputs["hbar"] = encode(hbar);
    r.inputs["R"] = encode(radius);
    out = cl_family_transform(pair, hbar, radius);
  } else if (o.rule == "cl") {
    r.inputs["hbar"] = encode(hbar);
    out = cl_transform(pair, hbar);
  } else {
    throw UsageError("--rule must be one of nah, lambda, family, cl");
  }
  r.outputs["transformed"] = encode(out);
  r.verification["family_at_zero_is_cl"] = cl_family_transform(pair, hbar, 0) == cl_transform(pair, hbar);
  r.verification["lambda_one_is_nah"] = lambda_transform(pair, GaussianRational(1)) == nah_transform(pair);
  r.verification["cl_fixes_weights"] = cl_transform(pair, hbar).pair.alpha == pair.alpha;
  if (o.samples > 0) {
    r.inputs["seed"] = common.seed;
    r.inputs["samples"] = o.samples;
    Sampler rng(common.seed);
    bool ok = true;
    for (int n = 0; n < o.samples; ++n) {
      WeightMassPair p;
      for (std::size_t i = 0; i < kPointCount; ++i) {
        p.alpha[i] = rng.weight(30);
        p.mu[i] = rng.gaussian(2, 5);
      }
      GaussianRational h = rng.gaussian(2, 4);
      ok = ok && cl_family_transform(p, h, 0) == cl_transform(p, h) &&
           lambda_transform(p, GaussianRational(1)) == nah_transform(p) && cl_transform(p, h).pair.alpha == p.alpha;
    }
    r.verification["random_identities"] = ok;
  }
  return r;
}

RunReport run_chambers(const CommonOptions&, const ChambersOptions& o) {
  RunReport r{"chambers"};
  if (o.grid < 3) throw UsageError("--grid must be at least 3");
  r.inputs = {{"grid", o.grid}};
  ChamberCensus census = chamber_census(o.grid);
  Json chambers = Json::array();
  int stable = 0;
  for (const auto& e : census.chambers) {
    CentralSphere c = central_sphere(e.representative);
    if (c.kind == CentralKind::StableBundle) ++stable;
    chambers.push_back({{"signature", e.chamber.signature()},
                        {"representative", encode(e.representative)},
                        {"samples", e.samples},
                        {"central", encode_central(c)}});
  }
  Json wall_names = Json::array();
  for (const auto& w : walls()) wall_names.push_back(w.name);
  r.outputs = {{"denominator", census.denominator},
               {"grid_points", census.grid_points},
               {"on_walls", census.on_walls},
               {"walls", wall_names},
               {"chamber_count", census.chambers.size()},
               {"stable_bundle_chambers", stable},
               {"chambers", chambers}};

  std::string golden_dir = o.golden_dir;
  if (golden_dir.empty()) {
    if (const char* env = std::getenv("PARHIGGS_GOLDEN_DIR")) golden_dir = env;
  }
  if (!golden_dir.empty()) {
    auto path = std::filesystem::path(golden_dir) / ("chamber_census_" + std::to_string(o.grid) + ".json");
    if (std::filesystem::exists(path)) {
      r.verification["golden_match"] = read_json(path.string()) == r.outputs;
    }
  }

  if (!o.slice.empty()) {
    auto fixed = split_list(o.slice);
    if (fixed.size() != 2) throw UsageError("--slice needs alpha3,alpha4");
    Rational a3 = parsing("--slice", [&] { return parse_rational(fixed[0]); });
    Rational a4 = parsing("--slice", [&] { return parse_rational(fixed[1]); });
    if (o.csv.empty()) throw UsageError("--slice needs --csv");
    std::ofstream csv(o.csv);
    if (!csv) throw UsageError("cannot write " + o.csv);
    csv << "alpha1,alpha2,alpha3,alpha4,chamber,central\n";
    std::size_t rows = 0;
    for (int i = 1; 2 * i < o.grid; ++i) {
      for (int j = 1; 2 * j < o.grid; ++j) {
        WeightVector alpha = parsing("--slice", [&] {
          return WeightVector({Rational(i, o.grid), Rational(j, o.grid), a3, a4});
        });
        csv << to_string(alpha[0]) << ',' << to_string(alpha[1]) << ',' << to_string(a3) << ',' << to_string(a4)
            << ',';
        if (is_generic(alpha)) {
          csv << chamber_of(alpha).signature() << ',' << to_string(central_sphere(alpha).kind) << '\n';
        } else {
          csv << "wall,\n";
        }
        ++rows;
      }
    }
    r.inputs["slice"] = Json::array({encode(a3), encode(a4)});
    r.outputs["atlas_rows"] = rows;
  }
  return r;
}

RunReport run_fixed_points(const CommonOptions& common, const FixedPointsOptions& o) {
  RunReport r{"fixed-points"};
  WeightVector alpha = parse_alpha(o.alpha);
  MarkedDivisor divisor = parse_points(common.points);
  r.inputs = {{"alpha", encode(alpha)}, {"points", encode(divisor)}};
  FixedComponents f = enumerate_fixed_components(alpha, divisor);
  Json exterior = Json::array();
  bool all_stable = true;
  for (const auto& datum : f.exterior) {
    exterior.push_back(encode(datum));
    all_stable = all_stable && is_stable(datum.higgs()).stable;
  }
  r.outputs = {{"chamber", chamber_of(alpha).signature()},
               {"component_count", f.component_count()},
               {"exterior", exterior},
               {"central", encode_central(f.central)}};
  if (f.central_representative) {
    r.outputs["central_representative"] = encode(*f.central_representative);
    all_stable = all_stable && is_stable(f.central_representative->higgs()).stable;
  }
  r.verification["component_count_is_5"] = f.component_count() == 5;
  r.verification["data_stable"] = all_stable;
  return r;
}

RunReport run_hitchin_section(const CommonOptions& common, const HitchinOptions& o) {
  RunReport r{"hitchin-section"};
  WeightVector alpha = parse_alpha(o.alpha);
  PointSubset subset = parse_subset(o.subset);
  MassVector mu = parse_masses(o.mu);
  MarkedDivisor divisor = parse_points(common.points);
  GaussianRational t;
  if (o.t.empty()) {
    Sampler rng(common.seed);
    t = rng.gaussian(4, 4);
    r.inputs["seed"] = common.seed;
  } else {
    t = parsing("--t", [&] { return parse_gaussian(o.t); });
  }
  SectionOptions options;
  if (o.kernel_point != 0) {
    if (o.kernel_point < 1 || o.kernel_point > static_cast<int>(kPointCount)) {
      throw UsageError("--kernel-point out of range");
    }
    options.kernel_point = static_cast<std::size_t>(o.kernel_point - 1);
  }
  RationalFunction q = basis_B_mu(mu, divisor).at(t);
  r.inputs.update({{"alpha", encode(alpha)},
                   {"I", encode(subset)},
                   {"mu", encode_masses(mu)},
                   {"t", encode(t)},
                   {"points", encode(divisor)}});
  HitchinSection s = hitchin_section(alpha, subset, mu, q, divisor, options);
  Json ingredients = Json::object();
  for (const auto& ing : s.ingredients) ingredients[ing.name] = encode(ing.value);
  r.outputs = {{"q", encode(q)},
               {"branch", to_string(s.branch)},
               {"connection", encode(s.higgs)},
               {"ingredients", ingredients},
               {"limit_line", encode(s.limit_line)}};
  r.verification["hitchin_det_is_q"] = hitchin_det(s.higgs) == q;
  r.verification["masses_are_mu"] = complex_masses(s.higgs) == mu;
  r.verification["stable"] = is_stable(s.higgs).stable;
  r.verification["limit_is_fixed_point"] =
      invariants(hn_limit(s.higgs), divisor) == invariants(fixed_point_datum(alpha, subset, divisor));
  return r;
}

RunReport run_stability(const CommonOptions&, const StabilityOptions& o) {
  RunReport r{"stability"};
  LambdaConnection conn = read_connection(o.input);
  r.inputs = {{"connection", encode(conn)}};
  StabilityReport report = is_stable(conn);
  r.outputs = encode_report(report);
  RankedLine best = max_destabilizing_line(conn.bundle());
  r.outputs["bundle_max_destabilizing"] = encode_ranked(best);
  if (report.certificate) {
    r.verification["certificate_invariant"] =
        second_fundamental_form(conn, report.certificate->line).is_zero();
    r.verification["certificate_degree"] =
        par_degree(induced_sub_bundle(conn.bundle(), report.certificate->line)) == report.certificate->par_degree;
  }
  return r;
}

RunReport run_climit(const CommonOptions&, const ClimitOptions& o) {
  RunReport r{"climit"};
  LambdaConnection conn = read_connection(o.input);
  r.inputs = {{"connection", encode(conn)}, {"filtration", o.filtration}};
  GriffithsFiltration start;
  if (o.filtration == "trivial") {
    start = GriffithsFiltration::trivial();
  } else if (o.filtration == "hn") {
    start = GriffithsFiltration::two_step(max_destabilizing_line(conn.bundle()).line);
  } else {
    throw UsageError("--filtration must be trivial or hn");
  }
  IterationResult it = iterate_to_semistable(conn, start);
  LimitDatum limit = limit_from_graded(conn, it.graded);
  Json trace = Json::array();
  for (const auto& e : it.trace) trace.push_back({{"zeta", encode(e.zeta)}, {"eta", e.eta}, {"slot", e.slot}});
  r.outputs = {{"limit", encode(limit)},
               {"invariants", encode_invariants(invariants(limit, conn.bundle().divisor()))},
               {"trace", trace},
               {"steps", it.trace.size()},
               {"final_filtration", encode_filtration(it.filtration)}};
  r.verification["matches_hn_limit"] =
      invariants(limit, conn.bundle().divisor()) == invariants(hn_limit(conn), conn.bundle().divisor());
  return r;
}

RunReport run_cone(const CommonOptions&, const ConeOptions& o) {
  RunReport r{"cone"};
  WeightVector alpha = parse_alpha(o.alpha);
  PointSubset subset = parse_subset(o.subset);
  r.inputs = {{"alpha", encode(alpha)}, {"I", encode(subset)}};
  ConeAngleProfile profile = cone_angles(alpha, subset);
  Json marked = Json::array();
  for (const auto& a : profile.marked) marked.push_back(encode(a));
  Json unmarked = Json::array();
  for (const auto& a : profile.unmarked) unmarked.push_back(encode(a));
  Json gamma = Json::array();
  for (const auto& g : gamma_weights(alpha, subset)) gamma.push_back(encode(g));
  Rational area = hyperbolic_area(profile);
  r.outputs = {{"angles_over_pi", marked},
               {"unmarked_angles_over_pi", unmarked},
               {"curvature", ConeAngleProfile::kCurvature},
               {"gamma", gamma},
               {"k_gamma_half_par_degree", encode(k_gamma_half_par_degree(alpha, subset))},
               {"area_over_pi", encode(area)}};
  return r;
}

RunReport run_oper_check(const CommonOptions&, const OperOptions& o) {
  RunReport r{"oper-check"};
  LambdaConnection conn = read_connection(o.input);
  PointSubset subset = parse_subset(o.subset);
  const SplitType split = conn.bundle().split();
  LineSubbundle sub = LineSubbundle::first_summand(split);
  if (!o.line.empty()) {
    Json j = read_json(o.line);
    sub = parsing("--line", [&] { return decode_line_subbundle(j, split); });
  } else if (o.sub == "second") {
    sub = LineSubbundle::second_summand(split);
  } else if (o.sub != "first") {
    throw UsageError("--sub must be first or second");
  }
  r.inputs = {{"connection", encode(conn)}, {"sub", encode(sub)}, {"I", encode(subset)}};
  r.outputs = {{"oper", parabolic_oper_check(conn, sub, subset)},
               {"second_fundamental_form", encode(second_fundamental_form(conn, sub))}};
  return r;
}

}  // namespace parhiggs::cli
