#include "fusionring/fusion.hpp"
#include "fusionring/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace fusionring;

namespace {

struct Case {
    const char* type;
    int level;
};

constexpr Case kCases[] = {{"C2~1", 5}, {"A2~1", 6}, {"G2~1", 4}, {"A4~2", 9}, {"E6~2", 2}};

const LevelData& level_for(std::int64_t i) {
    static const std::vector<LevelData> data = [] {
        std::vector<LevelData> v;
        for (const auto& c : kCases) v.push_back(LevelData::build(parse_affine_type(c.type), c.level));
        return v;
    }();
    return data[static_cast<std::size_t>(i)];
}

template <Backend B>
void numerators(benchmark::State& state) {
    const auto& ld = level_for(state.range(0));
    state.SetLabel(ld.type().str() + " k=" + std::to_string(ld.level()));
    for (auto _ : state) {
        auto m = B == Backend::Serial ? kernels::serial::weyl_numerator_matrix(ld, ld.weights())
                                      : kernels::parallel::weyl_numerator_matrix(ld, ld.weights());
        benchmark::DoNotOptimize(m.data());
    }
}

template <Backend B>
void fusion_sums(benchmark::State& state) {
    const auto& ld = level_for(state.range(0));
    const FusionRing ring(ld, {}, Backend::Serial);
    const kernels::FusionInput in{ring.characters(), ring.delta(), ld.norm_const()};
    state.SetLabel(ld.type().str() + " k=" + std::to_string(ld.level()) + " |P|=" + std::to_string(ld.size()));
    for (auto _ : state) {
        auto s = B == Backend::Serial ? kernels::serial::fusion_sums(in) : kernels::parallel::fusion_sums(in);
        benchmark::DoNotOptimize(s.data());
    }
}

void args(benchmark::internal::Benchmark* b) {
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(std::size(kCases)); ++i) b->Arg(i);
}

}  // namespace

BENCHMARK(numerators<Backend::Serial>)->Name("weyl_numerator_matrix/serial")->Apply(args);
BENCHMARK(numerators<Backend::Parallel>)->Name("weyl_numerator_matrix/parallel")->Apply(args);
BENCHMARK(fusion_sums<Backend::Serial>)->Name("fusion_sums/serial")->Apply(args);
BENCHMARK(fusion_sums<Backend::Parallel>)->Name("fusion_sums/parallel")->Apply(args);

BENCHMARK_MAIN();
