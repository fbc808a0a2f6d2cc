#include "orbicurve/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace orbicurve {
namespace {

__int128 gcd128(__int128 a, __int128 b) noexcept
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v) noexcept
{
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s)
{
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    return v;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d)
{
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (!fits64(n) || !fits64(d)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    std::int64_t n = parse_int(text.substr(0, slash));
    std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("malformed rational: zero denominator");
    return Rational(n, d);
}

std::int64_t Rational::floor() const noexcept
{
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::frac() const
{
    return *this - Rational(floor());
}

Rational Rational::mod(std::int64_t m) const
{
    Rational scaled = *this / Rational(m);
    return (scaled - Rational(scaled.floor())) * Rational(m);
}

std::string Rational::str() const
{
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    return from_wide(-static_cast<__int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& o)
{
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o)
{
    __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return *this = from_wide(n, d);
}

Rational& Rational::operator*=(const Rational& o)
{
    return *this = from_wide(static_cast<__int128>(num_) * o.num_,
                             static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this = from_wide(static_cast<__int128>(num_) * o.den_,
                             static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept
{
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

} // namespace orbicurve
