#include "orbicurve/twisted_curve.hpp"

#include "orbicurve/arith.hpp"

#include <stdexcept>

namespace orbicurve {
namespace {

std::string gcd_msg(const char* what, std::int64_t x, std::int64_t y)
{
    return std::string("gcd(") + what + ")=" + std::to_string(gcd(x, y)) + " ≠ 1";
}

} // namespace

TwistedComponent TwistedComponent::make(std::int64_t a, std::int64_t b, std::int64_t l1, std::int64_t l2)
{
    if (a < 1 || b < 1 || l1 < 1 || l2 < 1)
        throw std::invalid_argument("component integers a, b, l1, l2 must be positive");
    if (gcd(a, b) != 1) throw std::invalid_argument(gcd_msg("a,b", a, b));
    if (gcd(l1, l2) != 1) throw std::invalid_argument(gcd_msg("l1,l2", l1, l2));
    if (gcd(l1, b) != 1) throw std::invalid_argument(gcd_msg("l1,b", l1, b));
    if (gcd(l2, a) != 1) throw std::invalid_argument(gcd_msg("l2,a", l2, a));
    return TwistedComponent{a, b, l1, l2};
}

std::string TwistedComponent::str() const
{
    std::string s = "P(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (l() > 1) s += "/mu_" + std::to_string(l1) + "x" + std::to_string(l2);
    return s;
}

TwistedComponent present(std::int64_t c, std::int64_t d)
{
    if (c < 1 || d < 1) throw std::invalid_argument("isotropy orders c, d must be positive");
    std::int64_t l = gcd(c, d);
    std::int64_t a = c / l, b = d / l;
    LSplit s = canonical_split(l, a, b);
    return TwistedComponent::make(a, b, s.l1, s.l2);
}

std::int64_t isotropy_order(const TwistedComponent& comp, PointKind pt) noexcept
{
    switch (pt) {
    case PointKind::X1: return comp.c();
    case PointKind::X2: return comp.d();
    case PointKind::Generic: return 1;
    }
    return 1;
}

CurveChain CurveChain::single(const TwistedComponent& comp)
{
    return of({comp});
}

CurveChain CurveChain::of(std::vector<TwistedComponent> comps)
{
    CurveChain ch;
    ch.degree_tags.assign(comps.size(), Rational(1));
    ch.components = std::move(comps);
    return ch;
}

ChainValidity validate_chain(const CurveChain& chain)
{
    ChainValidity out;
    if (chain.components.empty()) out.violations.push_back({"empty chain", 0, "a chain needs a component"});
    if (chain.degree_tags.size() != chain.components.size())
        out.violations.push_back({"degree tag count", 0,
                                  std::to_string(chain.degree_tags.size()) + " tags for " +
                                      std::to_string(chain.components.size()) + " components"});
    for (std::size_t j = 0; j < chain.components.size(); ++j) {
        const auto& c = chain.components[j];
        try {
            TwistedComponent::make(c.a, c.b, c.l1, c.l2);
        } catch (const std::invalid_argument& e) {
            out.violations.push_back({"invalid component", j, e.what()});
        }
        if (j < chain.degree_tags.size() && chain.degree_tags[j] <= Rational(0))
            out.violations.push_back({"nonpositive degree", j, "degree tag " + chain.degree_tags[j].str()});
    }
    for (std::size_t j = 0; j + 1 < chain.components.size(); ++j) {
        std::int64_t left = isotropy_order(chain.components[j], PointKind::X2);
        std::int64_t right = isotropy_order(chain.components[j + 1], PointKind::X1);
        if (left != right)
            out.violations.push_back({"node isotropy mismatch", j,
                                      "orders " + std::to_string(left) + " and " + std::to_string(right)});
    }
    return out;
}

} // namespace orbicurve
