#include "orbicurve/phase.hpp"

#include "orbicurve/arith.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace orbicurve {

std::optional<int> Phase::is_sign() const noexcept
{
    if (exp_.is_zero()) return 1;
    if (exp_ == Rational(1)) return -1;
    return std::nullopt;
}

std::string Phase::str() const
{
    return "e^{i*pi*" + exp_.str() + "}";
}

Phase phase_pow(const Phase& p, std::int64_t n)
{
    return Phase(p.exponent() * Rational(n));
}

namespace {

using IntPoly = std::vector<std::int64_t>; // coefficient of x^k at index k

IntPoly exact_div(IntPoly num, const IntPoly& den)
{
    // den is monic
    const std::size_t dn = den.size() - 1;
    IntPoly q(num.size() - dn, 0);
    for (std::size_t s = q.size(); s-- > 0;) {
        std::int64_t c = num[s + dn];
        q[s] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[s + j] -= c * den[j];
    }
    return q;
}

/// Φ_n, memoized; n stays small (twice an lcm of tiny denominators).
const IntPoly& cyclotomic(std::int64_t n)
{
    static std::mutex mu;
    static std::map<std::int64_t, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) p = exact_div(p, cyclotomic(d));
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

} // namespace

PhasedScalar::PhasedScalar(const Rational& r)
{
    add_term(r, Rational(0));
}

PhasedScalar::PhasedScalar(const Rational& coeff, const Phase& phase)
{
    add_term(coeff, phase.exponent());
}

void PhasedScalar::add_term(const Rational& coeff, Rational exponent)
{
    if (coeff.is_zero()) return;
    exponent = exponent.mod(2);
    Rational c = coeff;
    if (exponent >= Rational(1)) {
        exponent -= Rational(1);
        c = -c;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool PhasedScalar::is_zero() const
{
    if (terms_.empty()) return true;
    std::int64_t n = 2;
    for (const auto& [e, c] : terms_) n = lcm(n, 2 * e.den());
    // value = Σ c ω^k with ω = e^{2πi/n}, k = e·n/2
    std::vector<Rational> poly(static_cast<std::size_t>(n), Rational(0));
    for (const auto& [e, c] : terms_) {
        Rational k = e * Rational(n, 2);
        poly[static_cast<std::size_t>(k.num())] += c;
    }
    const IntPoly& phi = cyclotomic(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c.is_zero()) continue;
        std::size_t shift = i - deg;
        for (std::size_t j = 0; j <= deg; ++j) poly[shift + j] -= c * Rational(phi[j]);
    }
    for (std::size_t i = 0; i < deg && i < poly.size(); ++i)
        if (!poly[i].is_zero()) return false;
    return true;
}

std::optional<Rational> PhasedScalar::as_rational() const
{
    Rational c0(0);
    if (auto it = terms_.find(Rational(0)); it != terms_.end()) c0 = it->second;
    if ((*this - PhasedScalar(c0)).is_zero()) return c0;
    return std::nullopt;
}

std::string PhasedScalar::str() const
{
    if (auto r = as_rational()) return r->str();
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!e.is_zero()) os << "*" << Phase(e).str();
    }
    return os.str();
}

PhasedScalar PhasedScalar::operator-() const
{
    PhasedScalar out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

PhasedScalar& PhasedScalar::operator+=(const PhasedScalar& o)
{
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

PhasedScalar& PhasedScalar::operator-=(const PhasedScalar& o)
{
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

PhasedScalar& PhasedScalar::operator*=(const PhasedScalar& o)
{
    PhasedScalar out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(c1 * c2, e1 + e2);
    return *this = std::move(out);
}

} // namespace orbicurve
