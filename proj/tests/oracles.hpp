#pragma once

// Brute-force reference computations used only by the test suites. Each one
// works directly from the group action (ζ1, ζ2, λ)·(x, y) = (λ^a ζ1 x, λ^b ζ2 y)
// on C^2 \ 0 and shares no code path with the library formulas it checks.

#include "orbicurve/bundles.hpp"
#include "orbicurve/cohomology.hpp"
#include "orbicurve/linalg.hpp"
#include "orbicurve/rational.hpp"
#include "orbicurve/twisted_curve.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using orbicurve::Rational;

// Element (m1, m2, t) stands for ζ1 = e^{2πi m1/l1}, ζ2 = e^{2πi m2/l2},
// λ = e^{2πi t/M} with M = a·b·l1·l2. Every stabilizer of a point of C^2 \ 0
// has λ^{a l1} = 1 or λ^{b l2} = 1, so an M-th root of unity suffices.
struct GroupElement {
    std::int64_t m1, m2, t;
};

struct Action {
    std::int64_t a, b, l1, l2;
    [[nodiscard]] std::int64_t M() const { return a * b * l1 * l2; }
    // weights in Q/Z by which the element scales x, y and the fiber of O^{k1,k2}(d)
    [[nodiscard]] Rational x_weight(const GroupElement& g) const
    {
        return (Rational(a * g.t, M()) + Rational(g.m1, l1)).frac();
    }
    [[nodiscard]] Rational y_weight(const GroupElement& g) const
    {
        return (Rational(b * g.t, M()) + Rational(g.m2, l2)).frac();
    }
    [[nodiscard]] Rational fiber_weight(const GroupElement& g, std::int64_t k1, std::int64_t k2,
                                        std::int64_t d) const
    {
        return (Rational(d * g.t, M()) + Rational(k1 * g.m1, l1) + Rational(k2 * g.m2, l2)).frac();
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::int64_t t = 0; t < M(); ++t)
            for (std::int64_t m1 = 0; m1 < l1; ++m1)
                for (std::int64_t m2 = 0; m2 < l2; ++m2) f(GroupElement{m1, m2, t});
    }
};

inline Action action_of(const orbicurve::TwistedComponent& c) { return {c.a, c.b, c.l1, c.l2}; }

// Order of the stabilizer of (1,0), (0,1) or the generic point (1,1).
inline std::int64_t stabilizer_order(const Action& act, orbicurve::PointKind pt)
{
    std::int64_t n = 0;
    act.for_each([&](const GroupElement& g) {
        bool fixes_x = act.x_weight(g).is_zero();
        bool fixes_y = act.y_weight(g).is_zero();
        switch (pt) {
        case orbicurve::PointKind::X1: n += fixes_x; break;
        case orbicurve::PointKind::X2: n += fixes_y; break;
        case orbicurve::PointKind::Generic: n += fixes_x && fixes_y; break;
        }
    });
    return n;
}

// Age of the fiber of O^{k1,k2}(d) at X1 or X2: locate the stabilizer
// element rotating the chart coordinate (y on the slice x = 1, resp. x on
// y = 1) by e^{2πi/r} and read off its fiber weight.
inline std::optional<Rational> age_by_search(const orbicurve::TwistedComponent& c, orbicurve::MarkedPoint pt,
                                             std::int64_t k1, std::int64_t k2, std::int64_t d)
{
    Action act = action_of(c);
    bool at_x1 = pt == orbicurve::MarkedPoint::X1;
    std::int64_t r = stabilizer_order(act, at_x1 ? orbicurve::PointKind::X1 : orbicurve::PointKind::X2);
    std::optional<Rational> out;
    act.for_each([&](const GroupElement& g) {
        if (out) return;
        Rational fixed = at_x1 ? act.x_weight(g) : act.y_weight(g);
        Rational chart = at_x1 ? act.y_weight(g) : act.x_weight(g);
        if (fixed.is_zero() && chart == Rational(1, r).frac()) out = act.fiber_weight(g, k1, k2, d);
    });
    return out;
}

// Dimension of the invariant part of the weight-d piece of C[x,y]: check
// every monomial against every element of μ_{l1} × μ_{l2}.
inline std::int64_t h0_by_characters(const orbicurve::TwistedComponent& c, std::int64_t k1, std::int64_t k2,
                                     std::int64_t d)
{
    if (d < 0) return 0;
    std::int64_t n = 0;
    for (std::int64_t i = 0; i <= d; ++i)
        for (std::int64_t j = 0; j <= d; ++j) {
            if (c.a * i + c.b * j != d) continue;
            bool invariant = true;
            for (std::int64_t m1 = 0; m1 < c.l1 && invariant; ++m1)
                for (std::int64_t m2 = 0; m2 < c.l2 && invariant; ++m2) {
                    Rational w = Rational((i - k1) * m1, c.l1) + Rational((j - k2) * m2, c.l2);
                    invariant = w.is_integer();
                }
            n += invariant;
        }
    return n;
}

// All (l1, l2) with l1·l2 = l satisfying the presentation constraints.
inline std::vector<std::pair<std::int64_t, std::int64_t>> admissible_splits(std::int64_t l, std::int64_t a,
                                                                            std::int64_t b)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t l1 = 1; l1 <= l; ++l1) {
        if (l % l1 != 0) continue;
        std::int64_t l2 = l / l1;
        if (std::gcd(l1, l2) == 1 && std::gcd(l1, b) == 1 && std::gcd(l2, a) == 1) out.emplace_back(l1, l2);
    }
    return out;
}

// h0 and h1 of a chain bundle from the full node-evaluation matrix over the
// complete monomial bases, with all-zero columns kept.
inline std::pair<std::int64_t, std::int64_t> chain_cohomology_full(const orbicurve::ChainBundle& B)
{
    using namespace orbicurve;
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> bases;
    std::int64_t total = 0, h1 = 0;
    for (const auto& L : B.parts) {
        std::vector<std::pair<std::int64_t, std::int64_t>> basis;
        for (std::int64_t i = 0; L.comp.a * i <= L.d; ++i) {
            std::int64_t rest = L.d - L.comp.a * i;
            if (rest % L.comp.b != 0) continue;
            std::int64_t j = rest / L.comp.b;
            if ((i - L.k1) % L.comp.l1 == 0 && (j - L.k2) % L.comp.l2 == 0) basis.emplace_back(i, j);
        }
        total += static_cast<std::int64_t>(basis.size());
        bases.push_back(basis);
        h1 += h0_by_characters(L.comp, (L.comp.l1 - 1 - L.k1 % L.comp.l1) % L.comp.l1,
                               (L.comp.l2 - 1 - L.k2 % L.comp.l2) % L.comp.l2, -L.comp.a - L.comp.b - L.d);
    }
    std::vector<std::size_t> nodes;
    for (std::size_t j = 0; j + 1 < B.parts.size(); ++j) {
        auto age = age_by_search(B.parts[j].comp, MarkedPoint::X2, B.parts[j].k1, B.parts[j].k2, B.parts[j].d);
        if (age->is_zero()) nodes.push_back(j);
    }
    Matrix<Rational> F(nodes.size(), static_cast<std::size_t>(total), Rational(0));
    std::size_t offset = 0;
    std::vector<std::size_t> offsets;
    for (const auto& b : bases) {
        offsets.push_back(offset);
        offset += b.size();
    }
    for (std::size_t r = 0; r < nodes.size(); ++r) {
        std::size_t j = nodes[r];
        for (std::size_t s = 0; s < bases[j].size(); ++s)
            if (bases[j][s].first == 0) F(r, offsets[j] + s) = Rational(1);
        for (std::size_t s = 0; s < bases[j + 1].size(); ++s)
            if (bases[j + 1][s].second == 0) F(r, offsets[j + 1] + s) = Rational(-1);
    }
    auto rk = static_cast<std::int64_t>(rank(F));
    return {total - rk, h1 + static_cast<std::int64_t>(nodes.size()) - rk};
}

} // namespace oracle
