// Reference (serial, public API) against parallel (OpenMP, memoized) engines
// on reduced grids. Both must report identical counts; the benchmark aborts
// otherwise.

#include "orbicurve/suites.hpp"

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <cstdio>

using namespace orbicurve;

namespace {

SuiteOptions reduced(const std::string& name, Engine engine, int workers)
{
    auto o = default_options(name);
    o.engine = engine;
    o.workers = workers;
    if (name == "thm-weak-convexity" || name == "thm-weak-concavity") {
        o.bounds.max_ab = 3;
        o.bounds.max_l = 3;
        o.bounds.min_d = std::max<std::int64_t>(o.bounds.min_d, -4);
        o.bounds.max_d = 4;
        o.bounds.max_len = 2;
    } else if (name == "log-canonical") {
        o.bounds.max_ab = 3;
        o.bounds.max_l = 3;
        o.bounds.max_len = 4;
    } else if (name == "pairing-comparison") {
        o.wps = WPSBounds{4, 3, 2, 3};
    } else if (name == "operator-identity") {
        o.trials = 200;
    }
    return o;
}

void run(benchmark::State& state, const std::string& name, Engine engine)
{
    const int workers = static_cast<int>(state.range(0));
    SuiteResult last;
    for (auto _ : state) {
        last = run_suite(name, reduced(name, engine, workers));
        benchmark::DoNotOptimize(last.cases);
    }
    if (!last.passed()) state.SkipWithError(last.first_counterexample.c_str());
    state.counters["cases"] = static_cast<double>(last.cases);
    state.counters["cases_per_s"] =
        benchmark::Counter(static_cast<double>(last.cases) * static_cast<double>(state.iterations()),
                           benchmark::Counter::kIsRate);
}

void check_agreement(const std::string& name)
{
    auto a = run_suite(name, reduced(name, Engine::Reference, 1));
    auto b = run_suite(name, reduced(name, Engine::Parallel, 0));
    if (a.cases != b.cases || a.failures != b.failures || a.first_counterexample != b.first_counterexample) {
        std::fprintf(stderr, "%s: engines disagree (%llu/%llu cases, %llu/%llu failures)\n", name.c_str(),
                     static_cast<unsigned long long>(a.cases), static_cast<unsigned long long>(b.cases),
                     static_cast<unsigned long long>(a.failures), static_cast<unsigned long long>(b.failures));
        std::exit(1);
    }
}

} // namespace

int main(int argc, char** argv)
{
    const char* suites[] = {"two-path-h1", "thm-weak-convexity", "thm-weak-concavity", "log-canonical",
                            "rank-formula", "pairing-comparison", "operator-identity"};
    const int max_workers = effective_workers(0);
    for (const char* s : suites) {
        check_agreement(s);
        std::string name = s;
        benchmark::RegisterBenchmark((name + "/reference").c_str(), run, name, Engine::Reference)
            ->Arg(1)
            ->Unit(benchmark::kMillisecond)
            ->UseRealTime();
        auto* par = benchmark::RegisterBenchmark((name + "/parallel").c_str(), run, name, Engine::Parallel);
        for (int w = 1; w <= max_workers; w *= 2) par->Arg(w);
        if ((max_workers & (max_workers - 1)) != 0) par->Arg(max_workers);
        par->Unit(benchmark::kMillisecond)->UseRealTime();
    }
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
