#include "orbicurve/arith.hpp"

#include <stdexcept>
#include <string>

namespace orbicurve {

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0) return 0;
    std::int64_t g = gcd(a, b);
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a / g, b, &out)) throw std::overflow_error("lcm overflow");
    return out < 0 ? -out : out;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t m) noexcept
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    if (m == 1) return 0;
    // extended Euclid on (a mod m, m)
    std::int64_t old_r = pos_mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw std::invalid_argument("mod_inverse: " + std::to_string(a) + " not invertible mod " +
                                    std::to_string(m));
    return pos_mod(old_s, m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

LSplit canonical_split(std::int64_t l, std::int64_t a, std::int64_t b)
{
    if (l < 1 || a < 1 || b < 1) throw std::invalid_argument("canonical_split: arguments must be positive");
    if (gcd(a, b) != 1)
        throw std::invalid_argument("gcd(a,b)=" + std::to_string(gcd(a, b)) + " ≠ 1");
    LSplit s;
    for (auto [p, e] : factorize(l)) {
        std::int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (b % p == 0)
            s.l2 *= pe;
        else
            s.l1 *= pe;
    }
    return s;
}

} // namespace orbicurve
