#include "orbicurve/bundles.hpp"

#include "orbicurve/arith.hpp"

#include <stdexcept>

namespace orbicurve {

EqLineBundle EqLineBundle::make(const TwistedComponent& comp, std::int64_t k1, std::int64_t k2, std::int64_t d)
{
    return EqLineBundle{comp, pos_mod(k1, comp.l1), pos_mod(k2, comp.l2), d};
}

Rational EqLineBundle::degree() const
{
    return Rational(d, comp.a * comp.b * comp.l1 * comp.l2);
}

std::string EqLineBundle::str() const
{
    return "O^{" + std::to_string(k1) + "," + std::to_string(k2) + "}(" + std::to_string(d) + ") on " +
           comp.str();
}

EqLineBundle tensor(const EqLineBundle& L, const EqLineBundle& M)
{
    if (!(L.comp == M.comp))
        throw std::invalid_argument("tensor: bundles live on different components (" + L.comp.str() + " vs " +
                                    M.comp.str() + ")");
    return EqLineBundle::make(L.comp, L.k1 + M.k1, L.k2 + M.k2, L.d + M.d);
}

EqLineBundle dual(const EqLineBundle& L)
{
    return EqLineBundle::make(L.comp, -L.k1, -L.k2, -L.d);
}

EqLineBundle point_bundle(const TwistedComponent& comp, MarkedPoint pt)
{
    // X1 = {y = 0} is cut out by y, X2 = {x = 0} by x
    if (pt == MarkedPoint::X1) return EqLineBundle::make(comp, 0, 1, comp.b);
    return EqLineBundle::make(comp, 1, 0, comp.a);
}

EqLineBundle twist_marked(const EqLineBundle& L, MarkedPoint pt, int sign)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +1 or -1");
    EqLineBundle o = point_bundle(L.comp, pt);
    return tensor(L, sign > 0 ? o : dual(o));
}

Rational age_at(const EqLineBundle& L, MarkedPoint pt)
{
    const auto& [a, b, l1, l2] = L.comp;
    std::int64_t modulus = 0, chart = 0, fiber = 0;
    if (pt == MarkedPoint::X1) {
        // generator (ζ_{l1}, ζ_{l2}, e^{-2πi/(a l1)}) fixes (1,0); chart coordinate y
        modulus = a * l1 * l2;
        chart = a * l1 - b * l2;
        fiber = -L.d * l2 + L.k1 * a * l2 + L.k2 * a * l1;
    } else {
        // generator (ζ_{l1}, ζ_{l2}, e^{-2πi/(b l2)}) fixes (0,1); chart coordinate x
        modulus = b * l1 * l2;
        chart = b * l2 - a * l1;
        fiber = -L.d * l1 + L.k1 * b * l2 + L.k2 * b * l1;
    }
    if (modulus == 1) return Rational(0);
    // rescale to the power of the generator that acts on the chart by e^{2πi/r}
    std::int64_t s = mod_inverse(chart, modulus);
    std::int64_t w = pos_mod(pos_mod(fiber, modulus) * s, modulus);
    return Rational(w, modulus);
}

EqLineBundle canonical_bundle(const TwistedComponent& comp)
{
    return tensor(dual(point_bundle(comp, MarkedPoint::X1)), dual(point_bundle(comp, MarkedPoint::X2)));
}

std::string node_balance_problem(const std::vector<EqLineBundle>& parts)
{
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
        Rational s = age_at(parts[j], MarkedPoint::X2) + age_at(parts[j + 1], MarkedPoint::X1);
        if (!s.is_integer())
            return "node " + std::to_string(j) + " unbalanced: branch ages " +
                   age_at(parts[j], MarkedPoint::X2).str() + " and " + age_at(parts[j + 1], MarkedPoint::X1).str();
    }
    return {};
}

ChainBundle ChainBundle::make(CurveChain chain, std::vector<EqLineBundle> parts)
{
    auto validity = validate_chain(chain);
    if (!validity.valid()) {
        const auto& v = validity.violations.front();
        throw std::invalid_argument("invalid chain: " + v.kind + " at " + std::to_string(v.index) + " (" +
                                    v.detail + ")");
    }
    if (parts.size() != chain.length())
        throw std::invalid_argument("chain bundle needs one line bundle per component");
    for (std::size_t j = 0; j < parts.size(); ++j)
        if (!(parts[j].comp == chain.components[j]))
            throw std::invalid_argument("line bundle " + std::to_string(j) + " is not on component " +
                                        chain.components[j].str());
    if (auto problem = node_balance_problem(parts); !problem.empty()) throw std::invalid_argument(problem);
    ChainBundle out;
    out.chain = std::move(chain);
    out.parts = std::move(parts);
    return out;
}

ChainBundle ChainBundle::trivial(const CurveChain& chain)
{
    std::vector<EqLineBundle> parts;
    for (const auto& c : chain.components) parts.push_back(EqLineBundle::trivial(c));
    return make(chain, std::move(parts));
}

ChainBundle ChainBundle::single(const EqLineBundle& L)
{
    return make(CurveChain::single(L.comp), {L});
}

Rational ChainBundle::degree() const
{
    Rational total(0);
    for (const auto& p : parts) total += p.degree();
    return total;
}

ChainBundle dual(const ChainBundle& B)
{
    ChainBundle out = B;
    for (auto& p : out.parts) p = dual(p);
    return out;
}

ChainBundle twist_marked(const ChainBundle& B, MarkedPoint pt, int sign)
{
    ChainBundle out = B;
    auto& end = pt == MarkedPoint::X1 ? out.parts.front() : out.parts.back();
    end = twist_marked(end, pt, sign);
    return out;
}

SplitBundle SplitBundle::make(std::vector<ChainBundle> summands)
{
    for (std::size_t i = 1; i < summands.size(); ++i)
        if (!(summands[i].chain.components == summands[0].chain.components))
            throw std::invalid_argument("split bundle summands must live on the same chain");
    return SplitBundle{std::move(summands)};
}

const CurveChain& SplitBundle::chain() const
{
    if (summands.empty()) throw std::logic_error("split bundle of rank 0 has no chain");
    return summands.front().chain;
}

} // namespace orbicurve
