#include <benchmark/benchmark.h>

#include <fstream>

#include "parhiggs/chambers.hpp"
#include "parhiggs/cstar_limit.hpp"
#include "parhiggs/fixed_points.hpp"
#include "parhiggs/hitchin_sections.hpp"
#include "parhiggs/json_codec.hpp"
#include "parhiggs/stability.hpp"
#include "parhiggs/weight_mass_tables.hpp"

using namespace parhiggs;

namespace {

WeightVector generic_alpha() {
  return WeightVector({Rational(1, 8), Rational(1, 6), Rational(1, 5), Rational(1, 4)});
}

MassVector sample_mu() {
  return {GaussianRational(Rational(1, 2)), GaussianRational(Rational(1, 3)), GaussianRational(0),
          GaussianRational(1)};
}

HitchinSection sample_section() {
  RationalFunction q = basis_B_mu(sample_mu(), MarkedDivisor::standard()).at(GaussianRational(2));
  return hitchin_section(generic_alpha(), PointSubset(0b1100u), sample_mu(), q);
}

LambdaConnection sample_lambda_one() {
  std::ifstream in(PARHIGGS_SAMPLES_DIR "/connection_lambda1.json");
  return decode_connection(Json::parse(in));
}

void BM_ChamberOf(benchmark::State& state) {
  WeightVector alpha = generic_alpha();
  for (auto _ : state) benchmark::DoNotOptimize(chamber_of(alpha));
}
BENCHMARK(BM_ChamberOf);

void BM_ChamberCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chamber_census(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ChamberCensus)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_FixedComponents(benchmark::State& state) {
  WeightVector alpha = generic_alpha();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fixed_components(alpha));
}
BENCHMARK(BM_FixedComponents)->Unit(benchmark::kMicrosecond);

void BM_HitchinSection(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_section());
}
BENCHMARK(BM_HitchinSection)->Unit(benchmark::kMicrosecond);

void BM_IsStableHiggs(benchmark::State& state) {
  LambdaConnection higgs = sample_section().higgs;
  for (auto _ : state) benchmark::DoNotOptimize(is_stable(higgs));
}
BENCHMARK(BM_IsStableHiggs)->Unit(benchmark::kMicrosecond);

void BM_HitchinDet(benchmark::State& state) {
  LambdaConnection higgs = sample_section().higgs;
  for (auto _ : state) benchmark::DoNotOptimize(hitchin_det(higgs));
}
BENCHMARK(BM_HitchinDet)->Unit(benchmark::kMicrosecond);

void BM_IterateToSemistable(benchmark::State& state) {
  LambdaConnection higgs = sample_section().higgs;
  for (auto _ : state) benchmark::DoNotOptimize(iterate_to_semistable(higgs, GriffithsFiltration::trivial()));
}
BENCHMARK(BM_IterateToSemistable)->Unit(benchmark::kMicrosecond);

void BM_HnLimitLambdaOne(benchmark::State& state) {
  LambdaConnection conn = sample_lambda_one();
  for (auto _ : state) benchmark::DoNotOptimize(hn_limit(conn));
}
BENCHMARK(BM_HnLimitLambdaOne)->Unit(benchmark::kMicrosecond);

void BM_ConnectionRoundTrip(benchmark::State& state) {
  LambdaConnection conn = sample_lambda_one();
  for (auto _ : state) benchmark::DoNotOptimize(decode_connection(Json::parse(encode(conn).dump())));
}
BENCHMARK(BM_ConnectionRoundTrip)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
