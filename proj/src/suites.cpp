#include "orbicurve/suites.hpp"

#include "orbicurve/cohomology.hpp"
#include "orbicurve/convexity.hpp"
#include "orbicurve/errors.hpp"
#include "orbicurve/novikov.hpp"
#include "orbicurve/sector.hpp"

#include <omp.h>

#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace orbicurve {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct Tally {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::uint64_t first_index = kNone;
    std::string first;

    /// Records a failure of item `index`; the message is only built when it
    /// would become the earliest one.
    void fail(std::uint64_t index, const std::function<std::string()>& message, std::uint64_t count = 1)
    {
        failures += count;
        if (index < first_index) {
            first_index = index;
            first = message();
        }
    }

    void merge(Tally&& o)
    {
        cases += o.cases;
        failures += o.failures;
        if (o.first_index < first_index) {
            first_index = o.first_index;
            first = std::move(o.first);
        }
    }
};

/// Runs body(i, tally, state) for i in [0, n) with one state per thread;
/// exceptions count as failures of item i.
template <typename MakeState, typename Body>
Tally run_items_with(std::size_t n, const SuiteOptions& opt, MakeState make_state, Body body)
{
    auto guarded = [&](std::size_t i, Tally& t, auto& state) {
        try {
            body(i, t, state);
        } catch (const std::exception& e) {
            std::string what = e.what();
            t.fail(i, [&] { return "item " + std::to_string(i) + " threw: " + what; });
        }
    };
    Tally total;
    if (opt.engine == Engine::Reference) {
        auto state = make_state();
        for (std::size_t i = 0; i < n; ++i) guarded(i, total, state);
        return total;
    }
    const int workers = effective_workers(opt.workers);
#pragma omp parallel num_threads(workers)
    {
        Tally local;
        auto state = make_state();
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
            guarded(static_cast<std::size_t>(i), local, state);
#pragma omp critical(orbicurve_suite_merge)
        total.merge(std::move(local));
    }
    return total;
}

template <typename Body>
Tally run_items(std::size_t n, const SuiteOptions& opt, Body body)
{
    return run_items_with(n, opt, [] { return 0; }, [&](std::size_t i, Tally& t, int&) { body(i, t); });
}

std::uint64_t pairs(std::uint64_t n) { return n * (n + 1) / 2; }

std::string chain_str(const std::vector<TwistedComponent>& comps)
{
    std::string s = "[";
    for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? " - " : "") + comps[i].str();
    return s + "]";
}

std::string parts_str(const std::vector<EqLineBundle>& parts)
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " | " : "") + parts[i].str();
    return s + ")";
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

// ---------------------------------------------------------------------------
// single line bundles on one component

std::vector<EqLineBundle> grid(const FamilyBounds& b)
{
    std::vector<EqLineBundle> out;
    for (const auto& comp : enumerate_components(b.max_ab, b.max_l))
        for (auto& L : enumerate_line_bundles(comp, b.min_d, b.max_d)) out.push_back(L);
    return out;
}

template <typename Check>
Tally grid_suite(const SuiteOptions& opt, Check check)
{
    auto items = grid(opt.bounds);
    return run_items(items.size(), opt, [&](std::size_t i, Tally& t) {
        t.cases++;
        if (auto problem = check(items[i]); !problem.empty())
            t.fail(i, [&] { return items[i].str() + ": " + problem; });
    });
}

Tally suite_h1_vanishing(const SuiteOptions& opt)
{
    return grid_suite(opt, [](const EqLineBundle& L) -> std::string {
        auto h1 = h1_component(L).dimension;
        return h1 == 0 ? "" : "h1 = " + std::to_string(h1);
    });
}

Tally suite_two_path(const SuiteOptions& opt)
{
    return grid_suite(opt, [](const EqLineBundle& L) -> std::string {
        auto serre = h1_serre(L).dimension, cech = h1_cech(L).dimension;
        if (serre == cech) return "";
        return "Serre duality gives " + std::to_string(serre) + ", Čech count gives " + std::to_string(cech);
    });
}

Tally suite_riemann_roch(const SuiteOptions& opt)
{
    return grid_suite(opt, [](const EqLineBundle& L) -> std::string {
        auto h0 = h0_component(L).dimension, h1 = h1_component(L).dimension;
        auto rr = riemann_roch_check(L);
        if (Rational(h0 - h1) == rr) return "";
        return "h0 - h1 = " + std::to_string(h0 - h1) + " but deg + 1 - ages = " + rr.str();
    });
}

// ---------------------------------------------------------------------------
// chains: index paths and memoized component data

using Path = std::vector<std::uint16_t>;

std::vector<Path> chain_paths(const std::vector<TwistedComponent>& comps, std::size_t max_len)
{
    std::vector<Path> out;
    std::vector<Path> frontier;
    for (std::size_t c = 0; c < comps.size(); ++c) frontier.push_back({static_cast<std::uint16_t>(c)});
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<Path> next;
        for (auto& prefix : frontier) {
            out.push_back(prefix);
            if (len == max_len) continue;
            for (std::size_t c = 0; c < comps.size(); ++c)
                if (comps[c].c() == comps[prefix.back()].d()) {
                    auto longer = prefix;
                    longer.push_back(static_cast<std::uint16_t>(c));
                    next.push_back(std::move(longer));
                }
        }
        frontier = std::move(next);
    }
    return out;
}

class SummaryTable {
public:
    std::uint16_t intern(const EqLineBundle& L)
    {
        auto s = summarize(L);
        auto key = std::make_tuple(s.h0, s.h1, s.nonzero_at_x1, s.nonzero_at_x2, s.constant, s.trivial_at_x2, s.euler);
        auto [it, fresh] = ids_.try_emplace(key, static_cast<std::uint16_t>(by_id_.size()));
        if (fresh) {
            if (by_id_.size() >= 0xFFFF) throw std::length_error("too many distinct component summaries");
            by_id_.push_back(s);
        }
        return it->second;
    }
    [[nodiscard]] const ComponentSummary& operator[](std::uint16_t id) const { return by_id_[id]; }

private:
    std::map<std::tuple<std::int64_t, std::int64_t, bool, bool, bool, bool, Rational>, std::uint16_t> ids_;
    std::vector<ComponentSummary> by_id_;
};

constexpr std::size_t kMaxMemoLen = 8;

/// h_chain keyed by the summary ids of the parts; one instance per thread.
class ChainMemo {
public:
    explicit ChainMemo(const SummaryTable& table) : table_(table) {}

    std::pair<std::int64_t, std::int64_t> get(const std::array<std::uint16_t, kMaxMemoLen>& ids, std::size_t len)
    {
        Key key{0, 0};
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t v = ids[i] + 1u;
            if (i < 4)
                key.lo |= v << (16 * i);
            else
                key.hi |= v << (16 * (i - 4));
        }
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        std::vector<ComponentSummary> parts;
        for (std::size_t i = 0; i < len; ++i) parts.push_back(table_[ids[i]]);
        auto r = h_chain(parts);
        return cache_[key] = {r.h0, r.h1};
    }

private:
    struct Key {
        std::uint64_t lo, hi;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            return std::hash<std::uint64_t>{}(k.lo * 0x9E3779B97F4A7C15ull ^ k.hi);
        }
    };
    const SummaryTable& table_;
    std::unordered_map<Key, std::pair<std::int64_t, std::int64_t>, KeyHash> cache_;
};

struct LineData {
    EqLineBundle L;
    Rational age1, age2;
    std::uint16_t plain = 0, tw2 = 0, dual = 0, dual_tw1 = 0;
};

struct ChainFamily {
    std::vector<TwistedComponent> comps;
    std::vector<std::vector<LineData>> lines; // per component
    std::vector<Path> paths;
    SummaryTable table;
};

void build_family(ChainFamily& fam, const FamilyBounds& b)
{
    if (b.max_len > kMaxMemoLen) throw std::invalid_argument("chain length is limited to 8");
    fam.comps = enumerate_components(b.max_ab, b.max_l);
    fam.paths = chain_paths(fam.comps, b.max_len);
    for (const auto& comp : fam.comps) {
        std::vector<LineData> data;
        for (const auto& L : enumerate_line_bundles(comp, b.min_d, b.max_d)) {
            LineData x{L, age_at(L, MarkedPoint::X1), age_at(L, MarkedPoint::X2)};
            x.plain = fam.table.intern(L);
            x.tw2 = fam.table.intern(twist_marked(L, MarkedPoint::X2, -1));
            x.dual = fam.table.intern(orbicurve::dual(L));
            x.dual_tw1 = fam.table.intern(twist_marked(orbicurve::dual(L), MarkedPoint::X1, -1));
            data.push_back(std::move(x));
        }
        fam.lines.push_back(std::move(data));
    }
}

/// Balanced chain bundles on a path, as per-component line indices, in the
/// order of enumerate_chain_bundles.
void chain_bundles(const ChainFamily& fam, const Path& path, std::vector<std::array<std::uint16_t, kMaxMemoLen>>& out)
{
    out.clear();
    std::array<std::uint16_t, kMaxMemoLen> cur{};
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == path.size()) {
            out.push_back(cur);
            return;
        }
        const auto& choices = fam.lines[path[j]];
        for (std::size_t i = 0; i < choices.size(); ++i) {
            if (j > 0 && !(fam.lines[path[j - 1]][cur[j - 1]].age2 + choices[i].age1).is_integer()) continue;
            cur[j] = static_cast<std::uint16_t>(i);
            rec(j + 1);
        }
    };
    rec(0);
}

std::vector<EqLineBundle> parts_of(const ChainFamily& fam, const Path& path, const std::array<std::uint16_t, kMaxMemoLen>& b)
{
    std::vector<EqLineBundle> parts;
    for (std::size_t j = 0; j < path.size(); ++j) parts.push_back(fam.lines[path[j]][b[j]].L);
    return parts;
}

std::vector<TwistedComponent> comps_of(const ChainFamily& fam, const Path& path)
{
    std::vector<TwistedComponent> out;
    for (auto c : path) out.push_back(fam.comps[c]);
    return out;
}

struct BundleValues {
    std::int64_t h1_convex;  // h1(L(-x2))
    std::int64_t h0_concave; // h0(L^∨(-x1))
    bool semipositive;
};

BundleValues bundle_values(const ChainFamily& fam, ChainMemo& memo, const Path& path,
                           const std::array<std::uint16_t, kMaxMemoLen>& b)
{
    const std::size_t len = path.size();
    std::array<std::uint16_t, kMaxMemoLen> convex{}, concave{};
    bool semipositive = true;
    for (std::size_t j = 0; j < len; ++j) {
        const auto& x = fam.lines[path[j]][b[j]];
        convex[j] = j + 1 == len ? x.tw2 : x.plain;
        concave[j] = j == 0 ? x.dual_tw1 : x.dual;
        semipositive &= x.L.d >= 0;
    }
    return {memo.get(convex, len).second, memo.get(concave, len).first, semipositive};
}

struct ChainState {
    ChainMemo memo;
    std::vector<std::array<std::uint16_t, kMaxMemoLen>> bundles;
};

// Item order within a chain: rank-1 bundles i, then pairs (i, j), i <= j.

Tally suite_convexity_reference(const SuiteOptions& opt)
{
    const auto& b = opt.bounds;
    auto chains = enumerate_chains(enumerate_components(b.max_ab, b.max_l), b.max_len);
    return run_items(chains.size(), opt, [&](std::size_t c, Tally& t) {
        auto bundles = enumerate_chain_bundles(chains[c], b.min_d, b.max_d);
        auto check = [&](const std::vector<ChainBundle>& summands) {
            t.cases++;
            auto B = SplitBundle::make(summands);
            if (!is_weakly_semipositive(B).holds || is_weakly_convex_on(B).holds) return;
            std::int64_t h1 = 0;
            std::string desc;
            for (const auto& L : summands) {
                h1 += h_twisted(L, MarkedPoint::X2, -1).h1;
                desc += parts_str(L.parts);
            }
            t.fail(c, [&] {
                return "chain " + chain_str(chains[c].components) + " E=" + desc +
                       ": weakly semipositive but h1(E(-x2)) = " + std::to_string(h1);
            });
        };
        for (const auto& L : bundles) check({L});
        for (std::size_t i = 0; i < bundles.size(); ++i)
            for (std::size_t j = i; j < bundles.size(); ++j) check({bundles[i], bundles[j]});
    });
}

Tally suite_convexity_parallel(const SuiteOptions& opt)
{
    ChainFamily fam;
    build_family(fam, opt.bounds);
    auto make_state = [&] { return ChainState{ChainMemo(fam.table), {}}; };
    return run_items_with(fam.paths.size(), opt, make_state, [&](std::size_t c, Tally& t, ChainState& st) {
        const auto& path = fam.paths[c];
        auto& memo = st.memo;
        auto& bundles = st.bundles;
        chain_bundles(fam, path, bundles);
        std::vector<BundleValues> v;
        v.reserve(bundles.size());
        std::uint64_t semi = 0, semi_convex = 0;
        for (const auto& bd : bundles) {
            v.push_back(bundle_values(fam, memo, path, bd));
            semi += v.back().semipositive;
            semi_convex += v.back().semipositive && v.back().h1_convex == 0;
        }
        const std::uint64_t n = bundles.size();
        t.cases += n + pairs(n);
        std::uint64_t fail1 = semi - semi_convex;
        std::uint64_t fail2 = pairs(semi) - pairs(semi_convex);
        if (fail1 + fail2 == 0) return;
        auto message = [&]() -> std::string {
            auto head = "chain " + chain_str(comps_of(fam, path)) + " E=";
            auto tail = [](std::int64_t h1) {
                return ": weakly semipositive but h1(E(-x2)) = " + std::to_string(h1);
            };
            for (std::size_t i = 0; i < n; ++i)
                if (v[i].semipositive && v[i].h1_convex > 0)
                    return head + parts_str(parts_of(fam, path, bundles[i])) + tail(v[i].h1_convex);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (v[i].semipositive && v[j].semipositive && v[i].h1_convex + v[j].h1_convex > 0)
                        return head + parts_str(parts_of(fam, path, bundles[i])) +
                               parts_str(parts_of(fam, path, bundles[j])) +
                               tail(v[i].h1_convex + v[j].h1_convex);
            return head + "?";
        };
        t.fail(c, message, fail1 + fail2);
    });
}

Tally suite_concavity_reference(const SuiteOptions& opt)
{
    const auto& b = opt.bounds;
    auto chains = enumerate_chains(enumerate_components(b.max_ab, b.max_l), b.max_len);
    return run_items(chains.size(), opt, [&](std::size_t c, Tally& t) {
        auto bundles = enumerate_chain_bundles(chains[c], b.min_d, b.max_d);
        auto head = [&] { return "chain " + chain_str(chains[c].components) + " E="; };
        for (const auto& L : bundles) {
            t.cases++;
            auto h0 = h_twisted(dual(L), MarkedPoint::X1, -1).h0;
            auto h1 = h_twisted(L, MarkedPoint::X2, -1).h1;
            if (h0 != h1)
                t.fail(c, [&] {
                    return head() + parts_str(L.parts) + ": h0(E^v(-x1)) = " + std::to_string(h0) +
                           ", h1(E(-x2)) = " + std::to_string(h1);
                });
        }
        for (std::size_t i = 0; i < bundles.size(); ++i)
            for (std::size_t j = i; j < bundles.size(); ++j) {
                t.cases++;
                auto B = SplitBundle::make({bundles[i], bundles[j]});
                bool convex = is_weakly_convex_on(B).holds, concave = is_weakly_concave_on_dual(B).holds;
                if (convex != concave)
                    t.fail(c, [&] {
                        return head() + parts_str(bundles[i].parts) + parts_str(bundles[j].parts) +
                               ": weakly convex " + (convex ? "true" : "false") + ", weakly concave on dual " +
                               (concave ? "true" : "false");
                    });
            }
    });
}

Tally suite_concavity_parallel(const SuiteOptions& opt)
{
    ChainFamily fam;
    build_family(fam, opt.bounds);
    auto make_state = [&] { return ChainState{ChainMemo(fam.table), {}}; };
    return run_items_with(fam.paths.size(), opt, make_state, [&](std::size_t c, Tally& t, ChainState& st) {
        const auto& path = fam.paths[c];
        auto& memo = st.memo;
        auto& bundles = st.bundles;
        chain_bundles(fam, path, bundles);
        std::vector<BundleValues> v;
        v.reserve(bundles.size());
        std::uint64_t mismatch = 0, convex = 0, concave = 0, both = 0;
        for (const auto& bd : bundles) {
            v.push_back(bundle_values(fam, memo, path, bd));
            const auto& x = v.back();
            mismatch += x.h0_concave != x.h1_convex;
            convex += x.h1_convex == 0;
            concave += x.h0_concave == 0;
            both += x.h1_convex == 0 && x.h0_concave == 0;
        }
        const std::uint64_t n = bundles.size();
        t.cases += n + pairs(n);
        // a pair is convex iff both summands are, likewise concave
        std::uint64_t pair_mismatch = pairs(convex) + pairs(concave) - 2 * pairs(both);
        if (mismatch + pair_mismatch == 0) return;
        auto message = [&]() -> std::string {
            auto head = "chain " + chain_str(comps_of(fam, path)) + " E=";
            for (std::size_t i = 0; i < n; ++i)
                if (v[i].h0_concave != v[i].h1_convex)
                    return head + parts_str(parts_of(fam, path, bundles[i])) +
                           ": h0(E^v(-x1)) = " + std::to_string(v[i].h0_concave) +
                           ", h1(E(-x2)) = " + std::to_string(v[i].h1_convex);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    bool cv = v[i].h1_convex == 0 && v[j].h1_convex == 0;
                    bool cc = v[i].h0_concave == 0 && v[j].h0_concave == 0;
                    if (cv != cc)
                        return head + parts_str(parts_of(fam, path, bundles[i])) +
                               parts_str(parts_of(fam, path, bundles[j])) + ": weakly convex " +
                               (cv ? "true" : "false") + ", weakly concave on dual " +
                               (cc ? "true" : "false");
                }
            return head + "?";
        };
        t.fail(c, message, mismatch + pair_mismatch);
    });
}

// ---------------------------------------------------------------------------
// log-canonical certificate

Tally suite_log_canonical_reference(const SuiteOptions& opt)
{
    const auto& b = opt.bounds;
    auto chains = enumerate_chains(enumerate_components(b.max_ab, b.max_l), b.max_len);
    return run_items(chains.size(), opt, [&](std::size_t c, Tally& t) {
        t.cases++;
        try {
            log_canonical_certificate(chains[c]);
        } catch (const CertificateFailure& e) {
            std::string what = e.what();
            t.fail(c, [&] { return "chain " + chain_str(chains[c].components) + ": " + what; });
        }
    });
}

Tally suite_log_canonical_parallel(const SuiteOptions& opt)
{
    const auto& b = opt.bounds;
    if (b.max_len > kMaxMemoLen) throw std::invalid_argument("chain length is limited to 8");
    auto comps = enumerate_components(b.max_ab, b.max_l);
    auto paths = chain_paths(comps, b.max_len);
    SummaryTable table;
    std::vector<EqLineBundle> log_part, x2_part;
    std::vector<std::uint16_t> log_id, x2_id;
    for (const auto& comp : comps) {
        auto w = twist_marked(canonical_bundle(comp), MarkedPoint::X2, 1);
        x2_part.push_back(w);
        log_part.push_back(twist_marked(w, MarkedPoint::X1, 1));
        log_id.push_back(table.intern(log_part.back()));
        x2_id.push_back(table.intern(x2_part.back()));
    }
    auto make_state = [&] { return ChainMemo(table); };
    return run_items_with(paths.size(), opt, make_state, [&](std::size_t c, Tally& t, ChainMemo& memo) {
        const auto& path = paths[c];
        t.cases++;
        auto fail = [&](const std::string& condition, const std::string& detail) {
            std::string what = CertificateFailure(condition, detail).what();
            t.fail(c, [&] {
                std::vector<TwistedComponent> cs;
                for (auto j : path) cs.push_back(comps[j]);
                return "chain " + chain_str(cs) + ": " + what;
            });
        };
        for (std::size_t j = 0; j < path.size(); ++j)
            if (!(log_part[path[j]] == EqLineBundle::trivial(comps[path[j]]))) {
                fail("omega(x1+x2) trivial on component",
                     "component " + std::to_string(j) + " has " + log_part[path[j]].str());
                return;
            }
        std::array<std::uint16_t, kMaxMemoLen> ids{};
        for (std::size_t j = 0; j < path.size(); ++j) ids[j] = log_id[path[j]];
        auto [h0, h1] = memo.get(ids, path.size());
        if (h0 != 1 || h1 != 0) {
            fail("h0(omega(x1+x2)) = 1, h1 = 0", "h0=" + std::to_string(h0) + " h1=" + std::to_string(h1));
            return;
        }
        ids[0] = x2_id[path[0]];
        auto [g0, g1] = memo.get(ids, path.size());
        if (g0 != 0 || g1 != 0)
            fail("h0(omega(x2)) = h1(omega(x2)) = 0", "h0=" + std::to_string(g0) + " h1=" + std::to_string(g1));
    });
}

// ---------------------------------------------------------------------------
// rank formula on single components

Tally suite_rank_formula(const SuiteOptions& opt)
{
    const auto& b = opt.bounds;
    auto comps = enumerate_components(b.max_ab, b.max_l);
    const bool reference = opt.engine == Engine::Reference;
    return run_items(comps.size(), opt, [&](std::size_t c, Tally& t) {
        auto lines = enumerate_line_bundles(comps[c], b.min_d, b.max_d);
        struct Cached {
            std::int64_t h1_convex, h1_dual;
            Rational age1, age2;
        };
        std::vector<Cached> cache;
        if (!reference)
            for (const auto& L : lines) {
                auto single = ChainBundle::single(L);
                cache.push_back({h_twisted(single, MarkedPoint::X2, -1).h1,
                                 h_twisted(dual(single), MarkedPoint::X1, -1).h1, age_at(L, MarkedPoint::X1),
                                 age_at(L, MarkedPoint::X2)});
            }
        auto check = [&](const std::vector<std::size_t>& idx) {
            Rational beta(0);
            for (auto i : idx) beta += lines[i].degree();
            std::int64_t direct = 0;
            Rational predicted;
            if (reference) {
                std::vector<ChainBundle> summands;
                for (auto i : idx) summands.push_back(ChainBundle::single(lines[i]));
                auto B = SplitBundle::make(summands);
                if (!is_weakly_convex_on(B).holds) return;
                for (const auto& L : B.summands) direct += h_twisted(dual(L), MarkedPoint::X1, -1).h1;
                predicted = rank_formula(beta, sector_at(B, MarkedPoint::X1), sector_at(B, MarkedPoint::X2));
            } else {
                SectorAction g1, g2;
                for (auto i : idx) {
                    if (cache[i].h1_convex != 0) return;
                    direct += cache[i].h1_dual;
                    g1.weights.push_back(cache[i].age1);
                    g2.weights.push_back(cache[i].age2);
                }
                predicted = rank_formula(beta, g1, g2);
            }
            t.cases++;
            if (predicted == Rational(direct) && predicted >= Rational(0)) return;
            t.fail(c, [&] {
                std::string desc;
                for (auto i : idx) desc += parts_str({lines[i]});
                return comps[c].str() + " E=" + desc + ": rank formula gives " + predicted.str() +
                       ", h1(E^v(-x1)) = " + std::to_string(direct);
            });
        };
        for (std::size_t i = 0; i < lines.size(); ++i) check({i});
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i; j < lines.size(); ++j) check({i, j});
    });
}

// ---------------------------------------------------------------------------
// age sums and sign consistency

Rational random_weight(std::mt19937_64& rng)
{
    std::int64_t q = std::uniform_int_distribution<std::int64_t>(1, 12)(rng);
    return Rational(std::uniform_int_distribution<std::int64_t>(0, q - 1)(rng), q);
}

Tally suite_age_sum(const SuiteOptions& opt)
{
    const std::uint64_t trials = opt.trials ? opt.trials : 10000;
    return run_items(trials, opt, [&](std::size_t i, Tally& t) {
        auto rng = trial_rng(opt.seed, i);
        auto r = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
        SectorAction g1, g2;
        for (std::size_t j = 0; j < r; ++j) g1.weights.push_back(random_weight(rng));
        for (std::size_t j = 0; j < r; ++j) g2.weights.push_back(random_weight(rng));
        auto n = std::uniform_int_distribution<std::int64_t>(-6, 6)(rng);
        t.cases++;
        auto [lhs, rhs] = age_sum_check(g1);
        if (lhs != rhs) {
            t.fail(i, [&] { return "age sum of " + g1.str() + ": " + lhs.str() + " vs " + rhs.str(); });
            return;
        }
        Rational beta = Rational(n) + age(g1) - age(inverse_sector(g2));
        auto s = sign_cycle(beta, g1, g2);
        Phase correction(age(g1) + age(g2) + Rational(static_cast<std::int64_t>(g2.rank_fixed())));
        auto expected = sign_invariant(beta, static_cast<std::int64_t>(r));
        if (!s.sign || !(s.phase * correction == expected))
            t.fail(i, [&] {
                return "sign at beta(det E)=" + beta.str() + ", g1=" + g1.str() + ", g2=" + g2.str() + ": " +
                       (s.phase * correction).str() + " vs " + expected.str();
            });
    });
}

// ---------------------------------------------------------------------------
// WPS state space

Tally suite_pairing(const SuiteOptions& opt)
{
    auto models = enumerate_wps_models(opt.wps);
    return run_items(models.size(), opt, [&](std::size_t i, Tally& t) {
        t.cases++;
        auto pairing = verify_pairing_comparison(models[i]);
        if (!pairing.passed()) {
            const auto& v = pairing.violations.front();
            t.fail(i, [&] {
                return models[i].str() + ": pairing of (" + std::to_string(v.first.sector) + "," +
                       std::to_string(v.first.power) + ") and (" + std::to_string(v.second.sector) + "," +
                       std::to_string(v.second.power) + ") is " + v.ambient.str() + ", expected " + v.expected.str();
            });
            return;
        }
        auto dims = verify_delta_iso_dims(models[i]);
        if (!dims.passed())
            for (const auto& s : dims.sectors)
                if (!s.ok()) {
                    t.fail(i, [&] {
                        return models[i].str() + ": sector " + s.f.str() + " has euler image " +
                               std::to_string(s.euler_image_dim) + ", ambient " + std::to_string(s.ambient_dim) +
                               ", compact type " + std::to_string(s.ct_dim);
                    });
                    return;
                }
    });
}

Tally suite_operator_identity(const SuiteOptions& opt)
{
    const std::uint64_t trials = opt.trials ? opt.trials : 1000;
    if (opt.order < 1) throw std::invalid_argument("truncation order must be positive");
    auto models = operator_identity_models(6);
    return run_items(trials, opt, [&](std::size_t i, Tally& t) {
        auto rng = trial_rng(opt.seed, i);
        const auto& model = models[std::uniform_int_distribution<std::size_t>(0, models.size() - 1)(rng)];
        RandomTableOptions ropt;
        ropt.order = std::uniform_int_distribution<std::int64_t>(1, opt.order)(rng);
        auto table = random_invariant_table(model, ropt, rng);
        t.cases++;
        auto report = verify_qsd_operator_identity(table, model, ropt.order);
        if (report.violation) {
            const auto& v = *report.violation;
            t.fail(i, [&] {
                return "trial " + std::to_string(i) + " on " + model.str() + ": q^" + v.beta.str() + " z^-" +
                       std::to_string(v.z_inverse_power) + " entry (" + std::to_string(v.row) + "," +
                       std::to_string(v.col) + "): " + v.lhs.str() + " vs " + v.rhs.str();
            });
        }
    });
}

using SuiteFn = Tally (*)(const SuiteOptions&);

struct SuiteEntry {
    std::string name;
    SuiteFn reference;
    SuiteFn parallel;
    SuiteOptions defaults;
};

SuiteOptions with_bounds(std::int64_t max_ab, std::int64_t max_l, std::int64_t min_d, std::int64_t max_d,
                         std::size_t max_len)
{
    SuiteOptions o;
    o.bounds = FamilyBounds{max_ab, max_l, min_d, max_d, max_len};
    return o;
}

const std::vector<SuiteEntry>& registry()
{
    static const std::vector<SuiteEntry> entries = [] {
        SuiteOptions age = with_bounds(4, 4, 0, 8, 3), op = age, pairing = age;
        age.trials = 10000;
        op.trials = 1000;
        op.order = 4;
        return std::vector<SuiteEntry>{
            {"h1-vanishing", suite_h1_vanishing, suite_h1_vanishing, with_bounds(6, 6, 0, 12, 1)},
            {"two-path-h1", suite_two_path, suite_two_path, with_bounds(6, 6, -12, 12, 1)},
            {"riemann-roch", suite_riemann_roch, suite_riemann_roch, with_bounds(6, 6, -12, 12, 1)},
            {"thm-weak-convexity", suite_convexity_reference, suite_convexity_parallel, with_bounds(4, 4, 0, 8, 3)},
            {"thm-weak-concavity", suite_concavity_reference, suite_concavity_parallel, with_bounds(4, 4, -8, 8, 3)},
            {"log-canonical", suite_log_canonical_reference, suite_log_canonical_parallel, with_bounds(4, 4, 0, 8, 6)},
            {"rank-formula", suite_rank_formula, suite_rank_formula, with_bounds(4, 4, -8, 8, 1)},
            {"age-sum", suite_age_sum, suite_age_sum, age},
            {"pairing-comparison", suite_pairing, suite_pairing, pairing},
            {"operator-identity", suite_operator_identity, suite_operator_identity, op},
        };
    }();
    return entries;
}

const SuiteEntry& find_suite(std::string_view name)
{
    for (const auto& e : registry())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) out.push_back(e.name);
        return out;
    }();
    return names;
}

SuiteOptions default_options(std::string_view name)
{
    return find_suite(name).defaults;
}

int effective_workers(int requested)
{
    if (requested > 0) return requested;
    int available = omp_get_max_threads();
    if (const char* env = std::getenv("ORBICURVE_WORKERS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) return static_cast<int>(std::min<long>(cap, available));
    }
    return available;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options)
{
    const auto& entry = find_suite(name);
    auto start = std::chrono::steady_clock::now();
    Tally t = (options.engine == Engine::Reference ? entry.reference : entry.parallel)(options);
    SuiteResult r;
    r.name = entry.name;
    r.cases = t.cases;
    r.failures = t.failures;
    r.first_counterexample = std::move(t.first);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<WPSModel> enumerate_wps_models(const WPSBounds& bounds)
{
    std::vector<std::vector<std::int64_t>> weight_sets, bundle_sets;
    std::function<void(std::vector<std::int64_t>&, std::size_t, std::int64_t, std::int64_t,
                       std::vector<std::vector<std::int64_t>>&)>
        multisets = [&](std::vector<std::int64_t>& cur, std::size_t size, std::int64_t lo, std::int64_t hi,
                        std::vector<std::vector<std::int64_t>>& out) {
            if (cur.size() == size) {
                out.push_back(cur);
                return;
            }
            for (std::int64_t v = lo; v <= hi; ++v) {
                cur.push_back(v);
                multisets(cur, size, v, hi, out);
                cur.pop_back();
            }
        };
    std::vector<std::int64_t> cur;
    for (std::size_t n = 2; n <= bounds.max_n; ++n) multisets(cur, n, 1, bounds.max_weight, weight_sets);
    for (std::size_t r = 0; r <= bounds.max_rank; ++r) multisets(cur, r, 1, bounds.max_k, bundle_sets);
    std::vector<WPSModel> out;
    for (const auto& w : weight_sets)
        for (const auto& k : bundle_sets) out.push_back(WPSModel::make(w, k));
    return out;
}

std::vector<WPSModel> operator_identity_models(std::size_t max_dim)
{
    std::vector<WPSModel> out;
    for (auto& m : enumerate_wps_models(WPSBounds{4, 3, 2, 3})) {
        auto dim = StateSpace(m).reduced_basis().size();
        if (dim >= 1 && dim <= max_dim) out.push_back(std::move(m));
    }
    return out;
}

} // namespace orbicurve
