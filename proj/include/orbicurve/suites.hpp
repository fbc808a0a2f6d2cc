#pragma once

#include "orbicurve/enumeration.hpp"
#include "orbicurve/wps.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orbicurve {

/// Reference: direct public-API loops, serial. Parallel: OpenMP kernels with
/// memoized per-component data. Both report identical cases, failures and
/// first counterexample.
enum class Engine { Reference, Parallel };

struct WPSBounds {
    std::size_t max_n = 5;
    std::int64_t max_weight = 4;
    std::size_t max_rank = 2;
    std::int64_t max_k = 4;
};

struct SuiteOptions {
    FamilyBounds bounds;
    WPSBounds wps;
    std::uint64_t seed = 1;
    std::uint64_t trials = 0;
    std::int64_t order = 4;
    int workers = 0; // 0: ORBICURVE_WORKERS if set, else the OpenMP default
    Engine engine = Engine::Parallel;
};

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;
    double seconds = 0;
    [[nodiscard]] bool passed() const noexcept { return failures == 0; }
};

/// In run order; "all" is not included.
const std::vector<std::string>& suite_names();

/// Bounds of the acceptance grid for the named suite. Throws
/// std::invalid_argument on an unknown name.
SuiteOptions default_options(std::string_view name);

SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

/// Thread count actually used for a request (see SuiteOptions::workers).
int effective_workers(int requested);

/// Model families of the WPS suites, in enumeration order: nondecreasing
/// weight tuples with 2 <= n <= max_n, bundle degree multisets of size <= max_rank.
std::vector<WPSModel> enumerate_wps_models(const WPSBounds& bounds);

/// Models used for random operator-identity tables: compact-type dimension
/// between 1 and max_dim.
std::vector<WPSModel> operator_identity_models(std::size_t max_dim);

} // namespace orbicurve
