#include "orbicurve/cohomology.hpp"

#include "orbicurve/arith.hpp"
#include "orbicurve/errors.hpp"
#include "orbicurve/linalg.hpp"

namespace orbicurve {

std::string_view to_string(CohomologyMethod m) noexcept
{
    switch (m) {
    case CohomologyMethod::Oracle: return "Oracle";
    case CohomologyMethod::RiemannRoch: return "RiemannRoch";
    case CohomologyMethod::Chain: return "Chain";
    }
    return "?";
}

namespace {

/// Solutions (i, j) >= 0 of a·i + b·j = total with i ≡ ri (mod m1), j ≡ rj (mod m2).
SectionBasis invariant_monomials(std::int64_t a, std::int64_t b, std::int64_t total, std::int64_t m1,
                                 std::int64_t ri, std::int64_t m2, std::int64_t rj)
{
    SectionBasis out;
    if (total < 0) return out;
    for (std::int64_t i = 0; a * i <= total; ++i) {
        std::int64_t rest = total - a * i;
        if (rest % b != 0) continue;
        std::int64_t j = rest / b;
        if (pos_mod(i - ri, m1) != 0 || pos_mod(j - rj, m2) != 0) continue;
        out.monomials.emplace_back(i, j);
    }
    return out;
}

} // namespace

ComponentCohomology h0_component(const EqLineBundle& L)
{
    const auto& c = L.comp;
    SectionBasis basis = invariant_monomials(c.a, c.b, L.d, c.l1, L.k1, c.l2, L.k2);
    return {static_cast<std::int64_t>(basis.size()), std::move(basis)};
}

ComponentCohomology h1_serre(const EqLineBundle& L)
{
    return h0_component(tensor(canonical_bundle(L.comp), dual(L)));
}

ComponentCohomology h1_cech(const EqLineBundle& L)
{
    const auto& c = L.comp;
    // x^{-p} y^{-q}, p,q >= 1, a p + b q = -d, -p ≡ k1, -q ≡ k2; shift p = i+1, q = j+1
    SectionBasis shifted =
        invariant_monomials(c.a, c.b, -L.d - c.a - c.b, c.l1, -L.k1 - 1, c.l2, -L.k2 - 1);
    ComponentCohomology out;
    for (auto [i, j] : shifted.monomials) out.basis.monomials.emplace_back(-(i + 1), -(j + 1));
    out.dimension = static_cast<std::int64_t>(out.basis.size());
    return out;
}

ComponentCohomology h1_component(const EqLineBundle& L)
{
    auto cech = h1_cech(L);
    auto serre = h1_serre(L);
    if (serre.dimension != cech.dimension)
        throw InternalInconsistency("cohomology_engine",
                                    "h1 of " + L.str() + ": Serre duality gives " +
                                        std::to_string(serre.dimension) + ", Čech count gives " +
                                        std::to_string(cech.dimension));
    return cech;
}

Rational riemann_roch_check(const EqLineBundle& L)
{
    return L.degree() + Rational(1) - age_at(L, MarkedPoint::X1) - age_at(L, MarkedPoint::X2);
}

CohomologyReport h_component(const EqLineBundle& L)
{
    CohomologyReport r;
    r.h0 = h0_component(L).dimension;
    r.h1 = h1_component(L).dimension;
    r.euler_char = riemann_roch_check(L);
    r.method = CohomologyMethod::Oracle;
    return r;
}

ComponentSummary summarize(const EqLineBundle& L)
{
    ComponentSummary s;
    auto h0 = h0_component(L);
    s.h0 = h0.dimension;
    for (auto [i, j] : h0.basis.monomials) {
        s.nonzero_at_x1 |= (j == 0);
        s.nonzero_at_x2 |= (i == 0);
        s.constant |= (i == 0 && j == 0);
    }
    s.h1 = h1_component(L).dimension;
    s.trivial_at_x2 = age_at(L, MarkedPoint::X2).is_zero();
    s.euler = riemann_roch_check(L);
    return s;
}

CohomologyReport h_chain(const ChainBundle& B)
{
    std::vector<ComponentSummary> parts;
    parts.reserve(B.parts.size());
    for (const auto& L : B.parts) parts.push_back(summarize(L));
    return h_chain(parts);
}

CohomologyReport h_chain(const std::vector<ComponentSummary>& parts)
{
    const std::size_t k = parts.size();
    std::int64_t sections = 0, h1_sum = 0;
    Rational euler(0);
    for (const auto& p : parts) {
        sections += p.h0;
        h1_sum += p.h1;
        euler += p.euler;
    }

    // Only nodes whose isotropy acts trivially on the fiber carry a target C.
    std::vector<std::ptrdiff_t> row_of(k, -1);
    std::size_t live = 0;
    for (std::size_t j = 0; j + 1 < k; ++j)
        if (parts[j].trivial_at_x2) row_of[j] = static_cast<std::ptrdiff_t>(live++);
    euler -= Rational(static_cast<std::int64_t>(live));

    // F(s)_j = s_j(n_j) - s_{j+1}(n_j). A monomial x^i y^j is nonzero at X2 iff
    // i = 0 and at X1 iff j = 0; every other basis monomial gives a zero column
    // of F and is left out.
    std::vector<std::vector<Rational>> columns;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Rational> at_x1(live, Rational(0)), at_x2(live, Rational(0));
        if (j > 0 && row_of[j - 1] >= 0) at_x1[static_cast<std::size_t>(row_of[j - 1])] = Rational(-1);
        if (row_of[j] >= 0) at_x2[static_cast<std::size_t>(row_of[j])] = Rational(1);
        if (parts[j].constant) {
            for (std::size_t r = 0; r < live; ++r) at_x1[r] += at_x2[r];
            columns.push_back(std::move(at_x1));
            continue;
        }
        if (parts[j].nonzero_at_x1) columns.push_back(std::move(at_x1));
        if (parts[j].nonzero_at_x2) columns.push_back(std::move(at_x2));
    }
    Matrix<Rational> F(live, columns.size(), Rational(0));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < live; ++r) F(r, c) = columns[c][r];
    const auto rk = static_cast<std::int64_t>(rank(F));

    CohomologyReport r;
    r.h0 = sections - rk;
    r.h1 = h1_sum + static_cast<std::int64_t>(live) - rk;
    r.euler_char = euler;
    r.method = CohomologyMethod::Chain;
    if (Rational(r.h0 - r.h1) != r.euler_char)
        throw InternalInconsistency("cohomology_engine", "chain Euler characteristic mismatch: h0-h1=" +
                                                             std::to_string(r.h0 - r.h1) + ", Riemann-Roch " +
                                                             r.euler_char.str());
    return r;
}

CohomologyReport h_twisted(const ChainBundle& B, MarkedPoint pt, int sign)
{
    return h_chain(twist_marked(B, pt, sign));
}

} // namespace orbicurve
