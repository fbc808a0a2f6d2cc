#pragma once

#include "orbicurve/rational.hpp"
#include "orbicurve/twisted_curve.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbicurve {

/// O^{k1,k2}(d) on P(a,b)/μ_l: the fiber coordinate transforms by
/// λ^d ζ1^{k1} ζ2^{k2}. Monomial x^i y^j is a section iff a·i + b·j = d,
/// i ≡ k1 (mod l1), j ≡ k2 (mod l2).
struct EqLineBundle {
    TwistedComponent comp;
    std::int64_t k1 = 0; // in [0, l1)
    std::int64_t k2 = 0; // in [0, l2)
    std::int64_t d = 0;

    /// Reduces k1, k2 into their residue ranges.
    static EqLineBundle make(const TwistedComponent& comp, std::int64_t k1, std::int64_t k2, std::int64_t d);
    static EqLineBundle trivial(const TwistedComponent& comp) { return make(comp, 0, 0, 0); }

    [[nodiscard]] Rational degree() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const EqLineBundle&, const EqLineBundle&) = default;
    friend auto operator<=>(const EqLineBundle&, const EqLineBundle&) = default;
};

EqLineBundle tensor(const EqLineBundle& L, const EqLineBundle& M);
EqLineBundle dual(const EqLineBundle& L);

/// O(X1), the bundle of the section y: O^{0,1}(b).
EqLineBundle point_bundle(const TwistedComponent& comp, MarkedPoint pt);

/// L(±pt).
EqLineBundle twist_marked(const EqLineBundle& L, MarkedPoint pt, int sign);

/// Age of the fiber at X1 or X2 with respect to the isotropy generator acting
/// on the local chart coordinate by e^{2πi/r}. Value in [0, 1).
Rational age_at(const EqLineBundle& L, MarkedPoint pt);

/// ω = O(-X1-X2); ω(X1+X2) is the trivial equivariant bundle.
EqLineBundle canonical_bundle(const TwistedComponent& comp);

/// A line bundle on each component of a chain. Nodes must be balanced: the
/// fiber ages of the two branches at every node sum to 0 or 1.
struct ChainBundle {
    CurveChain chain;
    std::vector<EqLineBundle> parts;

    /// Validates the chain, per-component placement and node balance; throws
    /// std::invalid_argument describing the first problem.
    static ChainBundle make(CurveChain chain, std::vector<EqLineBundle> parts);
    static ChainBundle trivial(const CurveChain& chain);
    static ChainBundle single(const EqLineBundle& L);

    [[nodiscard]] Rational degree() const;

    friend bool operator==(const ChainBundle&, const ChainBundle&) = default;
};

/// Empty string when balanced, otherwise a description of the first bad node.
std::string node_balance_problem(const std::vector<EqLineBundle>& parts);

ChainBundle dual(const ChainBundle& B);
/// Twist at the marked point x1 (component 0) or x2 (last component).
ChainBundle twist_marked(const ChainBundle& B, MarkedPoint pt, int sign);

/// Split bundle [u]^*E = ⊕ L_i; every summand on the same chain.
struct SplitBundle {
    std::vector<ChainBundle> summands;

    static SplitBundle make(std::vector<ChainBundle> summands);
    [[nodiscard]] std::size_t rank() const noexcept { return summands.size(); }
    [[nodiscard]] const CurveChain& chain() const;
};

} // namespace orbicurve
