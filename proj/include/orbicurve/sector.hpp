#pragma once

#include "orbicurve/bundles.hpp"
#include "orbicurve/phase.hpp"
#include "orbicurve/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbicurve {

/// A finite-order action on the fibers of a rank-r bundle, recorded by its
/// fractional weights f_i in [0, 1).
struct SectorAction {
    std::vector<Rational> weights;

    /// Throws std::invalid_argument unless every weight lies in [0, 1).
    static SectorAction make(std::vector<Rational> weights);
    /// The untwisted sector of rank r.
    static SectorAction untwisted(std::size_t r);

    [[nodiscard]] std::size_t rank() const noexcept { return weights.size(); }
    [[nodiscard]] std::size_t rank_fixed() const noexcept;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const SectorAction&, const SectorAction&) = default;
};

Rational age(const SectorAction& s);

/// f -> 1 - f on nonzero weights: the same element acting on the dual bundle.
SectorAction inverse_sector(const SectorAction& s);

/// (age(s) + age(inverse_sector(s)), r - rank_fixed).
std::pair<Rational, Rational> age_sum_check(const SectorAction& s);

/// β(det E) - age_{g1}(E) + age_{g2}(E^∨). Throws std::invalid_argument if
/// the two sectors have different ranks.
Rational rank_formula(const Rational& beta_detE, const SectorAction& g1, const SectorAction& g2);

struct SignResult {
    Phase phase;
    std::optional<int> sign;
    /// Nonempty when the exponent is not an integer, which no split bundle on
    /// a chain can produce.
    std::string warning;
};

/// (-1)^{rank_formula}, kept as an exact phase when the exponent is fractional.
SignResult sign_cycle(const Rational& beta_detE, const SectorAction& g1, const SectorAction& g2);

/// e^{πi(β(det E) + r)}.
Phase sign_invariant(const Rational& beta_detE, std::int64_t r);

/// Fiber weights of a split bundle at the marked point x1 (first component)
/// or x2 (last component).
SectorAction sector_at(const SplitBundle& B, MarkedPoint pt);

} // namespace orbicurve
