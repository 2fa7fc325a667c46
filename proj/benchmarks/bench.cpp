#include <random>

#include <benchmark/benchmark.h>

#include "hexapauli/gaussian.hpp"
#include "hexapauli/group.hpp"
#include "hexapauli/hexagon.hpp"
#include "hexapauli/invariants.hpp"

namespace {

using namespace hexapauli;

void BM_GroupClosure(benchmark::State& state) {
    const Generators gen = build_generators();
    for (auto _ : state) {
        GeneratedGroup g = generate_group({gen.alpha, gen.beta, gen.gamma});
        benchmark::DoNotOptimize(g.elements.data());
    }
}
BENCHMARK(BM_GroupClosure)->Unit(benchmark::kMillisecond);

void BM_HexagonBuild(benchmark::State& state) {
    for (auto _ : state) {
        HexagonModel m = HexagonModel::build();
        benchmark::DoNotOptimize(&m);
    }
}
BENCHMARK(BM_HexagonBuild)->Unit(benchmark::kMillisecond);

void BM_HexagonCertify(benchmark::State& state) {
    const HexagonModel m = HexagonModel::build();
    for (auto _ : state) {
        HexagonCertificate c = certify_generalized_hexagon(m);
        benchmark::DoNotOptimize(&c);
    }
}
BENCHMARK(BM_HexagonCertify)->Unit(benchmark::kMillisecond);

void BM_AutomorphismGroup(benchmark::State& state) {
    const HexagonModel m = HexagonModel::build();
    for (auto _ : state) {
        HexagonAutomorphisms a = automorphism_group(m);
        benchmark::DoNotOptimize(a.elements.data());
    }
}
BENCHMARK(BM_AutomorphismGroup)->Unit(benchmark::kMillisecond);

GaussianMatrix8 random_antisymmetric(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    GaussianMatrix8 m;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            m.a[i][j] = {mpq_class(d(rng)), mpq_class(d(rng))};
            m.a[j][i] = -m.a[i][j];
        }
    return m;
}

void BM_Pfaffian(benchmark::State& state) {
    std::mt19937_64 rng(20080911);
    const GaussianMatrix8 m = random_antisymmetric(rng);
    for (auto _ : state) {
        GaussianRational p = pfaffian(m);
        benchmark::DoNotOptimize(&p);
    }
}
BENCHMARK(BM_Pfaffian);

void BM_J4CrossForms(benchmark::State& state) {
    std::mt19937_64 rng(20080911);
    std::uniform_int_distribution<int> d(-9, 9);
    ChargeConfiguration c;
    for (int l = 0; l < 7; ++l)
        for (int i = 0; i < 8; ++i) c.at(l, i) = d(rng);
    for (auto _ : state) {
        mpq_class a = j4_cartan(c);
        GaussianRational b = j4_cremmer(central_charge(c));
        benchmark::DoNotOptimize(&a);
        benchmark::DoNotOptimize(&b);
    }
}
BENCHMARK(BM_J4CrossForms)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
