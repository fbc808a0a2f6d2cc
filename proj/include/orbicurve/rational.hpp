#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbicurve {

/// Exact rational number p/q kept in lowest terms with q > 0.
///
/// Backed by 64-bit integers; intermediate products are formed in 128 bits and
/// any result that does not fit throws std::overflow_error. Every quantity this
/// library manipulates (degrees, ages, intersection numbers, invariant tables)
/// is tiny, so an overflow means a caller bug rather than a precision problem.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t n) noexcept : num_(n) {} // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

    /// Largest integer <= *this.
    [[nodiscard]] std::int64_t floor() const noexcept;
    /// *this - floor(*this), always in [0, 1).
    [[nodiscard]] Rational frac() const;
    /// Representative of *this modulo m (m > 0) in [0, m).
    [[nodiscard]] Rational mod(std::int64_t m) const;

    [[nodiscard]] std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace orbicurve
