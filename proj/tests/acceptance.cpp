// Runs every acceptance criterion at its stated bounds and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include "oracles.hpp"

#include "orbicurve/suites.hpp"
#include "orbicurve/twisted_curve.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace orbicurve;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

Outcome from_suite(const std::string& name)
{
    auto r = run_suite(name, default_options(name));
    Outcome o;
    o.passed = r.passed() && r.cases > 0;
    o.detail = std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " counterexamples";
    if (!r.first_counterexample.empty()) o.detail += "; first: " + r.first_counterexample;
    return o;
}

// Brute-force stabilizer orders against present/isotropy_order for c, d <= 12.
Outcome isotropy_oracle()
{
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (std::int64_t c = 1; c <= 12; ++c)
        for (std::int64_t d = 1; d <= 12; ++d) {
            auto comp = present(c, d);
            auto act = oracle::action_of(comp);
            std::int64_t s1 = oracle::stabilizer_order(act, PointKind::X1);
            std::int64_t s2 = oracle::stabilizer_order(act, PointKind::X2);
            std::int64_t sg = oracle::stabilizer_order(act, PointKind::Generic);
            ++checked;
            bool ok = s1 == c && s2 == d && sg == 1 && isotropy_order(comp, PointKind::X1) == c &&
                      isotropy_order(comp, PointKind::X2) == d;
            if (!ok && bad++ == 0)
                first = comp.str() + ": stabilizers " + std::to_string(s1) + ", " + std::to_string(s2) + ", " +
                        std::to_string(sg);
        }
    Outcome o;
    o.passed = bad == 0;
    o.detail = std::to_string(checked) + " presentations, " + std::to_string(bad) + " mismatches";
    if (!first.empty()) o.detail += "; first: " + first;
    return o;
}

Outcome pairing_family()
{
    auto o = from_suite("pairing-comparison");
    auto models = enumerate_wps_models(default_options("pairing-comparison").wps);
    bool has_instance = false;
    for (const auto& m : models)
        has_instance |= m.weights == std::vector<std::int64_t>{1, 1, 2, 2} && m.bundle == std::vector<std::int64_t>{1};
    o.passed &= has_instance;
    o.detail += has_instance ? "; P(1,1,2,2) with O(1) included" : "; P(1,1,2,2) with O(1) missing";
    return o;
}

struct Criterion {
    const char* label;
    Outcome (*run)();
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"H1 vanishing for 0 <= d <= 12", [] { return from_suite("h1-vanishing"); }},
        {"two-route H1 agreement for -12 <= d <= 12", [] { return from_suite("two-path-h1"); }},
        {"orbifold Riemann-Roch", [] { return from_suite("riemann-roch"); }},
        {"weak semipositivity implies weak convexity", [] { return from_suite("thm-weak-convexity"); }},
        {"weak convexity iff weak concavity of the dual", [] { return from_suite("thm-weak-concavity"); }},
        {"log-canonical certificate on chains of length <= 6", [] { return from_suite("log-canonical"); }},
        {"rank formula against direct h1", [] { return from_suite("rank-formula"); }},
        {"age sums and sign consistency", [] { return from_suite("age-sum"); }},
        {"pairing comparison and delta-tilde dimensions", pairing_family},
        {"operator identity under the Novikov change of variables", [] { return from_suite("operator-identity"); }},
        {"isotropy orders against brute-force stabilizers", isotropy_oracle},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.passed;
        std::printf("[%s] %2zu. %s: %s (%.2fs)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].label,
                    o.detail.c_str(), seconds);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures;
}
