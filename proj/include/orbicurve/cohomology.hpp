#pragma once

#include "orbicurve/bundles.hpp"
#include "orbicurve/rational.hpp"

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace orbicurve {

enum class CohomologyMethod { Oracle, RiemannRoch, Chain };
std::string_view to_string(CohomologyMethod m) noexcept;

struct CohomologyReport {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    Rational euler_char;
    CohomologyMethod method = CohomologyMethod::Oracle;
};

/// Monomial exponents (i, j). Sections of H^0 have i, j >= 0; the Čech
/// description of H^1 uses x^{-p} y^{-q} stored as (-p, -q) with p, q >= 1.
struct SectionBasis {
    std::vector<std::pair<std::int64_t, std::int64_t>> monomials;
    [[nodiscard]] std::size_t size() const noexcept { return monomials.size(); }
};

struct ComponentCohomology {
    std::int64_t dimension = 0;
    SectionBasis basis;
};

ComponentCohomology h0_component(const EqLineBundle& L);

/// H^1 as H^0(ω ⊗ L^∨)^∨; the basis is that of H^0(ω ⊗ L^∨).
ComponentCohomology h1_serre(const EqLineBundle& L);
/// H^1 as the invariant Čech classes x^{-p} y^{-q}, p, q >= 1.
ComponentCohomology h1_cech(const EqLineBundle& L);

/// H^1 by Serre duality (h0 of ω ⊗ L^∨) and by counting invariant negative
/// monomials; throws InternalInconsistency if the two disagree.
ComponentCohomology h1_component(const EqLineBundle& L);

/// deg L + 1 - age_{x1}(L) - age_{x2}(L).
Rational riemann_roch_check(const EqLineBundle& L);

CohomologyReport h_component(const EqLineBundle& L);

/// Per-component data the normalization sequence needs: the monomial
/// sections that survive evaluation at X1 (pure powers of x) and at X2 (pure
/// powers of y), h1, the Riemann-Roch value and whether the isotropy at X2
/// acts trivially on the fiber.
struct ComponentSummary {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    bool nonzero_at_x1 = false; // some basis monomial has j = 0
    bool nonzero_at_x2 = false; // some basis monomial has i = 0
    bool constant = false;      // the monomial 1, nonzero at both points
    bool trivial_at_x2 = false;
    Rational euler;
};

ComponentSummary summarize(const EqLineBundle& L);

/// Normalization-sequence computation on a nodal chain.
CohomologyReport h_chain(const ChainBundle& B);

/// Same computation from precomputed component summaries (in chain order).
CohomologyReport h_chain(const std::vector<ComponentSummary>& parts);

CohomologyReport h_twisted(const ChainBundle& B, MarkedPoint pt, int sign);

} // namespace orbicurve
