#include <benchmark/benchmark.h>

#include <random>

#include "sgl/corpus.hpp"
#include "sgl/decomposer.hpp"
#include "sgl/ideals.hpp"
#include "sgl/maxlen.hpp"
#include "sgl/support_graph.hpp"

using namespace sgl;

namespace {

Algebra so3_adjoint(std::uint64_t p) {
    const Field f = p ? Field::prime(p) : Field::rationals();
    const Algebra g = lie_so3(f);
    return gen_hemisemidirect(g, adjoint_action(g), Parity::Even, {"m:x", "m:y", "m:z"});
}

// Dense random rows; the argument is the ambient dimension.
void BM_RrefRational(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Field q = Field::rationals();
    std::mt19937_64 rng(1);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < n; ++r) {
        Vector v(q, n);
        for (std::size_t c = 0; c < n; ++c) v[c] = q.from_int(static_cast<long long>(rng() % 19) - 9);
        rows.push_back(std::move(v));
    }
    for (auto _ : state) benchmark::DoNotOptimize(rref(rows));
}
BENCHMARK(BM_RrefRational)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ValidateN2Family(benchmark::State& state) {
    const auto alg = gen_n2_family(static_cast<std::size_t>(state.range(0)), Field::rationals());
    for (auto _ : state) benchmark::DoNotOptimize(validate(alg));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(alg.dim()));
}
BENCHMARK(BM_ValidateN2Family)->RangeMultiplier(2)->Range(1, 8)->Complexity();

void BM_ConnectionClasses(benchmark::State& state) {
    const auto alg = gen_n2_family(static_cast<std::size_t>(state.range(0)), Field::prime(7));
    for (auto _ : state) benchmark::DoNotOptimize(connection_classes(alg));
}
BENCHMARK(BM_ConnectionClasses)->RangeMultiplier(2)->Range(1, 8);

void BM_FrakI(benchmark::State& state) {
    const auto alg = so3_adjoint(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(frak_I(alg));
}
BENCHMARK(BM_FrakI)->Arg(0)->Arg(7)->Arg(41);

void BM_Decompose(benchmark::State& state) {
    const auto alg = direct_sum(so3_adjoint(7), gen_n2_family(2, Field::prime(7)));
    for (auto _ : state) benchmark::DoNotOptimize(decompose(alg));
}
BENCHMARK(BM_Decompose);

// Exact enumeration over GF(p) grows with the size of the homogeneous pieces.
void BM_SimplicityOracle(benchmark::State& state) {
    const auto alg = so3_adjoint(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(simplicity_oracle(alg));
}
BENCHMARK(BM_SimplicityOracle)->Arg(0)->Arg(5)->Arg(41);

void BM_TheoremCheck(benchmark::State& state) {
    const auto alg = so3_adjoint(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(theorem_simplicity_check(alg));
}
BENCHMARK(BM_TheoremCheck)->Arg(0)->Arg(41);

void BM_StandardCorpus(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(standard_corpus());
}
BENCHMARK(BM_StandardCorpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
