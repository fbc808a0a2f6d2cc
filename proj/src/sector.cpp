#include "orbicurve/sector.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbicurve {

SectorAction SectorAction::make(std::vector<Rational> weights)
{
    for (const auto& f : weights)
        if (f < Rational(0) || f >= Rational(1))
            throw std::invalid_argument("sector weight " + f.str() + " is outside [0, 1)");
    return SectorAction{std::move(weights)};
}

SectorAction SectorAction::untwisted(std::size_t r)
{
    return SectorAction{std::vector<Rational>(r, Rational(0))};
}

std::size_t SectorAction::rank_fixed() const noexcept
{
    return static_cast<std::size_t>(std::count_if(weights.begin(), weights.end(), [](const Rational& f) {
        return f.is_zero();
    }));
}

std::string SectorAction::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + weights[i].str();
    return s + "]";
}

Rational age(const SectorAction& s)
{
    Rational total(0);
    for (const auto& f : s.weights) total += f;
    return total;
}

SectorAction inverse_sector(const SectorAction& s)
{
    SectorAction out = s;
    for (auto& f : out.weights)
        if (!f.is_zero()) f = Rational(1) - f;
    return out;
}

std::pair<Rational, Rational> age_sum_check(const SectorAction& s)
{
    return {age(s) + age(inverse_sector(s)), Rational(static_cast<std::int64_t>(s.rank() - s.rank_fixed()))};
}

Rational rank_formula(const Rational& beta_detE, const SectorAction& g1, const SectorAction& g2)
{
    if (g1.rank() != g2.rank())
        throw std::invalid_argument("sector ranks differ: " + std::to_string(g1.rank()) + " vs " +
                                    std::to_string(g2.rank()));
    return beta_detE - age(g1) + age(inverse_sector(g2));
}

SignResult sign_cycle(const Rational& beta_detE, const SectorAction& g1, const SectorAction& g2)
{
    Rational exponent = rank_formula(beta_detE, g1, g2);
    SignResult out;
    out.phase = Phase(exponent);
    out.sign = out.phase.is_sign();
    if (!exponent.is_integer())
        out.warning = "exponent " + exponent.str() + " is not an integer; these sectors and degree are not realized "
                                                     "by a split bundle on a chain";
    return out;
}

Phase sign_invariant(const Rational& beta_detE, std::int64_t r)
{
    return Phase(beta_detE + Rational(r));
}

SectorAction sector_at(const SplitBundle& B, MarkedPoint pt)
{
    SectorAction out;
    for (const auto& L : B.summands) {
        const auto& part = pt == MarkedPoint::X1 ? L.parts.front() : L.parts.back();
        out.weights.push_back(age_at(part, pt));
    }
    return out;
}

} // namespace orbicurve
