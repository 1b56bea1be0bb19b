#include <numbers>

#include <benchmark/benchmark.h>

#include "mlaf/diagnostics.hpp"
#include "mlaf/forcing.hpp"
#include "mlaf/initial.hpp"
#include "mlaf/integrator.hpp"
#include "mlaf/model.hpp"
#include "mlaf/transform.hpp"

namespace {

using namespace mlaf;

SimState forced_state(int n) {
    const TorusGrid g = make_grid(n, 2.0 * std::numbers::pi);
    RandomFieldSpec spec;
    spec.seed = 1;
    spec.kmax = 3;
    return SimState{0.0, random_solenoidal(g, spec), ModelParams{0.05, 0.2, ModelKind::MlAlpha},
                    narrowband_force(g, ForcingSpec{3, 1.0, 1}), 0};
}

void BM_InverseTransform(benchmark::State& st) {
    const SimState s = forced_state(static_cast<int>(st.range(0)));
    const TorusGrid& g = s.u.grid();
    std::vector<double> out(g.physical_size());
    for (auto _ : st) {
        inverse_transform(g, s.u.component(0), out);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_InverseTransform)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ForwardTransform(benchmark::State& st) {
    const SimState s = forced_state(static_cast<int>(st.range(0)));
    const TorusGrid& g = s.u.grid();
    std::vector<double> samples(g.physical_size());
    inverse_transform(g, s.u.component(0), samples);
    SpectralVectorField out(g);
    for (auto _ : st) {
        forward_transform(g, samples, out.component(0));
        benchmark::DoNotOptimize(out.component(0).data());
    }
}
BENCHMARK(BM_ForwardTransform)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_NonlinearTerm(benchmark::State& st) {
    const SimState s = forced_state(static_cast<int>(st.range(0)));
    const SpectralVectorField ubar = helmholtz_filter(s.u, s.params.alpha);
    for (auto _ : st) {
        benchmark::DoNotOptimize(nonlinear_term(ModelKind::MlAlpha, s.u, ubar));
    }
}
BENCHMARK(BM_NonlinearTerm)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Step(benchmark::State& st) {
    SimState s = forced_state(static_cast<int>(st.range(0)));
    const double dt = kDtSafety * cfl_dt(s);
    StepOptions opts;
    opts.check_cfl = false;
    for (auto _ : st) {
        s = step(s, dt, opts);
    }
}
BENCHMARK(BM_Step)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Record(benchmark::State& st) {
    const SimState s = forced_state(static_cast<int>(st.range(0)));
    for (auto _ : st) {
        benchmark::DoNotOptimize(record(s, 6));
    }
}
BENCHMARK(BM_Record)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
