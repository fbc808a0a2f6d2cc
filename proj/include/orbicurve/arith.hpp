#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace orbicurve {

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Non-negative residue of a modulo m (m > 0).
std::int64_t pos_mod(std::int64_t a, std::int64_t m) noexcept;

/// Inverse of a modulo m; requires gcd(a, m) = 1. Returns 0 when m = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Prime-power factorization of n >= 1 as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

struct LSplit {
    std::int64_t l1 = 1;
    std::int64_t l2 = 1;
    friend bool operator==(const LSplit&, const LSplit&) = default;
};

/// Splits l = l1*l2 with gcd(l1,l2) = gcd(l1,b) = gcd(l2,a) = 1.
/// Prime powers of l dividing a go to l1, those dividing b go to l2, and the
/// rest go to l1. Throws std::invalid_argument unless gcd(a,b) = 1.
LSplit canonical_split(std::int64_t l, std::int64_t a, std::int64_t b);

} // namespace orbicurve
