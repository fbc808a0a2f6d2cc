#pragma once

#include "orbicurve/bundles.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace orbicurve {

struct FamilyBounds {
    std::int64_t max_ab = 4;   // a, b <= max_ab
    std::int64_t max_l = 4;    // l1 * l2 <= max_l
    std::int64_t min_d = 0;
    std::int64_t max_d = 8;
    std::size_t max_len = 3;
};

/// Every component with coprime a, b <= max_ab and every admissible
/// factorization l1 * l2 <= max_l, in lexicographic order.
std::vector<TwistedComponent> enumerate_components(std::int64_t max_ab, std::int64_t max_l);

/// All chains of length 1..max_len whose nodes have matching isotropy.
std::vector<CurveChain> enumerate_chains(const std::vector<TwistedComponent>& comps, std::size_t max_len);

/// All line bundles O^{k1,k2}(d) on comp with min_d <= d <= max_d.
std::vector<EqLineBundle> enumerate_line_bundles(const TwistedComponent& comp, std::int64_t min_d, std::int64_t max_d);

/// All balanced chain bundles on chain with per-component d in [min_d, max_d].
std::vector<ChainBundle> enumerate_chain_bundles(const CurveChain& chain, std::int64_t min_d, std::int64_t max_d);

} // namespace orbicurve
