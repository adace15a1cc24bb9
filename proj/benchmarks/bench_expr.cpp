#include <benchmark/benchmark.h>

#include "dwpc/expr.hpp"

namespace {

using namespace dwpc;

const std::vector<std::string> kVars = {"x1", "x2", "y1", "y2"};
const char* kSource = "exp(2*x1)*sin(y1) + (1 + (x1^2 + x2^2)/8)^2 / sqrt(1 + y2^2)";

void BM_Parse(benchmark::State& state) {
    for (auto _ : state) {
        Expr e = parse_expr(kSource, kVars);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_Parse);

void BM_Evaluate(benchmark::State& state) {
    Expr e = parse_expr(kSource, kVars);
    std::vector<double> p = {0.3, -0.2, 0.7, 0.4};
    for (auto _ : state) {
        double v = e.evaluate(p);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Evaluate);

void BM_Derivative(benchmark::State& state) {
    Expr e = parse_expr(kSource, kVars);
    for (auto _ : state) {
        Expr d = e.derivative(0);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Derivative);

void BM_ThirdDerivativeEvaluate(benchmark::State& state) {
    Expr e = parse_expr(kSource, kVars);
    Expr d3 = e.derivative(0).derivative(1).derivative(0);
    std::vector<double> p = {0.3, -0.2, 0.7, 0.4};
    for (auto _ : state) {
        double v = d3.evaluate(p);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ThirdDerivativeEvaluate);

}  // namespace
