#include <benchmark/benchmark.h>

#include "dwpc/catalog.hpp"

namespace {

using namespace dwpc;

const DwpSpec& generic_pb() {
    for (const auto& s : builtin_catalog())
        if (s.id == "generic-pb") return s;
    throw std::runtime_error("missing generic-pb");
}

void BM_ModelBuild(benchmark::State& state) {
    for (auto _ : state) {
        DwpModel model(generic_pb());
        benchmark::DoNotOptimize(model);
    }
}
BENCHMARK(BM_ModelBuild);

void BM_PointEvaluation(benchmark::State& state) {
    DwpModel model(generic_pb());
    auto pts = model.sample_points(1, 8);
    std::size_t i = 0;
    for (auto _ : state) {
        DwpPoint pt = model.at(pts[i++ % pts.size()]);
        benchmark::DoNotOptimize(pt.r_sm);
    }
}
BENCHMARK(BM_PointEvaluation);

void BM_RiemannAt(benchmark::State& state) {
    DwpModel model(generic_pb());
    auto pts = model.sample_points(2, 8);
    model.product_ssmc().ensure_built();
    std::size_t i = 0;
    for (auto _ : state) {
        TensorValue R = model.product_ssmc().riemann_at(pts[i++ % pts.size()]);
        benchmark::DoNotOptimize(R);
    }
}
BENCHMARK(BM_RiemannAt);

void BM_SingleManifoldSuite(benchmark::State& state) {
    SuiteConfig cfg;
    cfg.manifolds = {generic_pb()};
    cfg.samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SuiteReport r = run_suite(cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SingleManifoldSuite)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
