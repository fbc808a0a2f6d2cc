#pragma once

#include "orbicurve/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbicurve {

/// The two-pointed twisted curve P(a,b)/μ_l with μ_l = μ_{l1} × μ_{l2}, i.e.
/// the quotient of C^2 \ 0 by (ζ1, ζ2, λ)·(x, y) = (λ^a ζ1 x, λ^b ζ2 y).
///
/// Isotropy at X1 = (1,0) is μ_c with c = a·l1·l2, at X2 = (0,1) it is μ_d
/// with d = b·l1·l2, and trivial elsewhere.
struct TwistedComponent {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t l1 = 1;
    std::int64_t l2 = 1;

    /// Checks the coprimality invariants; throws std::invalid_argument naming
    /// the violated one.
    static TwistedComponent make(std::int64_t a, std::int64_t b, std::int64_t l1, std::int64_t l2);

    [[nodiscard]] std::int64_t l() const noexcept { return l1 * l2; }
    [[nodiscard]] std::int64_t c() const noexcept { return a * l1 * l2; }
    [[nodiscard]] std::int64_t d() const noexcept { return b * l1 * l2; }

    [[nodiscard]] std::string str() const;

    friend bool operator==(const TwistedComponent&, const TwistedComponent&) = default;
    friend auto operator<=>(const TwistedComponent&, const TwistedComponent&) = default;
};

enum class MarkedPoint { X1, X2 };
enum class PointKind { X1, X2, Generic };

constexpr PointKind kind_of(MarkedPoint p) noexcept
{
    return p == MarkedPoint::X1 ? PointKind::X1 : PointKind::X2;
}

/// Presents P_[c,d] as P(a,b)/μ_l with l = gcd(c,d) split canonically.
TwistedComponent present(std::int64_t c, std::int64_t d);

std::int64_t isotropy_order(const TwistedComponent& comp, PointKind pt) noexcept;
inline std::int64_t isotropy_order(const TwistedComponent& comp, MarkedPoint pt) noexcept
{
    return isotropy_order(comp, kind_of(pt));
}

/// Linear chain of components; X2 of component j is glued to X1 of j+1.
struct CurveChain {
    std::vector<TwistedComponent> components;
    std::vector<Rational> degree_tags; // quasimap degree per component

    [[nodiscard]] std::size_t length() const noexcept { return components.size(); }
    /// Single component chain with unit degree tag.
    static CurveChain single(const TwistedComponent& comp);
    /// Chain with unit degree tags.
    static CurveChain of(std::vector<TwistedComponent> comps);

    friend bool operator==(const CurveChain&, const CurveChain&) = default;
};

struct ChainViolation {
    std::string kind;   // "node isotropy mismatch", "nonpositive degree", ...
    std::size_t index;  // component or node index
    std::string detail;
};

struct ChainValidity {
    std::vector<ChainViolation> violations;
    [[nodiscard]] bool valid() const noexcept { return violations.empty(); }
};

ChainValidity validate_chain(const CurveChain& chain);

} // namespace orbicurve
