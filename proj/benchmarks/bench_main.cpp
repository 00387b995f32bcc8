// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <benchmark/benchmark.h>

#include "gfpkit/identity/parser.hpp"
#include "gfpkit/identity/verify.hpp"
#include "gfpkit/sequence.hpp"

using namespace gfpkit;

namespace {

Poly dense_poly(std::size_t degree) {
    std::vector<Rational> c(degree + 1);
    for (std::size_t i = 0; i <= degree; ++i) c[i] = Rational(static_cast<int>(i % 13) - 6, 7);
    c[degree] = 1;
    return Poly(std::move(c));
}

void bm_poly_mul(benchmark::State& state) {
    const Poly p = dense_poly(static_cast<std::size_t>(state.range(0)));
    const Poly q = dense_poly(static_cast<std::size_t>(state.range(0)) / 2 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(bm_poly_mul)->Arg(32)->Arg(128);

void bm_recurrence_terms(benchmark::State& state) {
    const FamilySpec& pell = *find_family("pell");
    for (auto _ : state) {
        SequenceCache seq(pell);
        benchmark::DoNotOptimize(seq.term(state.range(0)));
    }
}
BENCHMARK(bm_recurrence_terms)->Arg(32)->Arg(128);

void bm_closed_form_term(benchmark::State& state) {
    const FamilySpec& pell = *find_family("pell");
    for (auto _ : state) benchmark::DoNotOptimize(binet_term(pell, state.range(0)));
}
BENCHMARK(bm_closed_form_term)->Arg(32)->Arg(128);

void bm_verify_identity(benchmark::State& state) {
    const IdentityDef i6 = load_identity_file(std::string(GFPKIT_CORPUS_DIR) + "/I6.gfpid");
    const FamilyPair& pair = *find_pair("fibonacci");
    for (auto _ : state) benchmark::DoNotOptimize(verify_identity(i6, pair, state.range(0)));
}
BENCHMARK(bm_verify_identity)->Arg(8)->Arg(16);

void bm_parse_identity_file(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            load_identity_file(std::string(GFPKIT_CORPUS_DIR) + "/I73.gfpid"));
}
BENCHMARK(bm_parse_identity_file);

}  // namespace

BENCHMARK_MAIN();
