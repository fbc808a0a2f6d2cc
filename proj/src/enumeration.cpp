#include "orbicurve/enumeration.hpp"

#include "orbicurve/arith.hpp"

namespace orbicurve {

std::vector<TwistedComponent> enumerate_components(std::int64_t max_ab, std::int64_t max_l)
{
    std::vector<TwistedComponent> out;
    for (std::int64_t a = 1; a <= max_ab; ++a)
        for (std::int64_t b = 1; b <= max_ab; ++b) {
            if (gcd(a, b) != 1) continue;
            for (std::int64_t l1 = 1; l1 <= max_l; ++l1)
                for (std::int64_t l2 = 1; l1 * l2 <= max_l; ++l2)
                    if (gcd(l1, l2) == 1 && gcd(l1, b) == 1 && gcd(l2, a) == 1) out.push_back({a, b, l1, l2});
        }
    return out;
}

std::vector<CurveChain> enumerate_chains(const std::vector<TwistedComponent>& comps, std::size_t max_len)
{
    std::vector<CurveChain> out;
    std::vector<std::vector<TwistedComponent>> frontier;
    for (const auto& c : comps) frontier.push_back({c});
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::vector<TwistedComponent>> next;
        for (auto& prefix : frontier) {
            out.push_back(CurveChain::of(prefix));
            if (len == max_len) continue;
            for (const auto& c : comps)
                if (c.c() == prefix.back().d()) {
                    auto longer = prefix;
                    longer.push_back(c);
                    next.push_back(std::move(longer));
                }
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<EqLineBundle> enumerate_line_bundles(const TwistedComponent& comp, std::int64_t min_d, std::int64_t max_d)
{
    std::vector<EqLineBundle> out;
    for (std::int64_t d = min_d; d <= max_d; ++d)
        for (std::int64_t k1 = 0; k1 < comp.l1; ++k1)
            for (std::int64_t k2 = 0; k2 < comp.l2; ++k2) out.push_back(EqLineBundle{comp, k1, k2, d});
    return out;
}

namespace {

bool balanced(const EqLineBundle& left, const EqLineBundle& right)
{
    return (age_at(left, MarkedPoint::X2) + age_at(right, MarkedPoint::X1)).is_integer();
}

void extend(const CurveChain& chain, const std::vector<std::vector<EqLineBundle>>& choices,
            std::vector<EqLineBundle>& prefix, std::vector<ChainBundle>& out)
{
    std::size_t j = prefix.size();
    if (j == choices.size()) {
        ChainBundle b;
        b.chain = chain;
        b.parts = prefix;
        out.push_back(std::move(b));
        return;
    }
    for (const auto& L : choices[j]) {
        if (j > 0 && !balanced(prefix.back(), L)) continue;
        prefix.push_back(L);
        extend(chain, choices, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<ChainBundle> enumerate_chain_bundles(const CurveChain& chain, std::int64_t min_d, std::int64_t max_d)
{
    std::vector<std::vector<EqLineBundle>> choices;
    for (const auto& c : chain.components) choices.push_back(enumerate_line_bundles(c, min_d, max_d));
    std::vector<ChainBundle> out;
    std::vector<EqLineBundle> prefix;
    extend(chain, choices, prefix, out);
    return out;
}

} // namespace orbicurve
