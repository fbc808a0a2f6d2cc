#pragma once

#include "orbicurve/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace orbicurve {

/// The root of unity e^{πi·exponent}, exponent kept in [0, 2).
class Phase {
public:
    Phase() = default;
    explicit Phase(const Rational& exponent) : exp_(exponent.mod(2)) {}

    static Phase one() { return Phase(); }
    static Phase minus_one() { return Phase(Rational(1)); }

    [[nodiscard]] const Rational& exponent() const noexcept { return exp_; }

    /// +1 for exponent 0, -1 for exponent 1, empty otherwise.
    [[nodiscard]] std::optional<int> is_sign() const noexcept;

    [[nodiscard]] Phase inverse() const { return Phase(-exp_); }

    /// "e^{i*pi*p/q}"
    [[nodiscard]] std::string str() const;

    friend Phase operator*(const Phase& a, const Phase& b) { return Phase(a.exp_ + b.exp_); }
    friend bool operator==(const Phase&, const Phase&) = default;
    friend auto operator<=>(const Phase& a, const Phase& b) { return a.exp_ <=> b.exp_; }

private:
    Rational exp_;
};

Phase phase_pow(const Phase& p, std::int64_t n);

/// Finite sum Σ c_k e^{πi r_k} with rational c_k, r_k.
///
/// Terms are folded so every stored exponent lies in [0, 1) (a term at
/// exponent r >= 1 is the negated term at r - 1). Roots of unity still satisfy
/// further linear relations, so equality is decided by reducing modulo the
/// relevant cyclotomic polynomial, not by comparing term maps.
class PhasedScalar {
public:
    PhasedScalar() = default;
    PhasedScalar(const Rational& r); // NOLINT(implicit)
    PhasedScalar(std::int64_t n) : PhasedScalar(Rational(n)) {} // NOLINT(implicit)
    PhasedScalar(const Rational& coeff, const Phase& phase);

    [[nodiscard]] const std::map<Rational, Rational>& terms() const noexcept { return terms_; }

    /// True when the value is exactly zero in the cyclotomic field.
    [[nodiscard]] bool is_zero() const;
    /// The rational value when the scalar is rational, empty otherwise.
    [[nodiscard]] std::optional<Rational> as_rational() const;

    [[nodiscard]] std::string str() const;

    PhasedScalar operator-() const;
    PhasedScalar& operator+=(const PhasedScalar& o);
    PhasedScalar& operator-=(const PhasedScalar& o);
    PhasedScalar& operator*=(const PhasedScalar& o);

    friend PhasedScalar operator+(PhasedScalar a, const PhasedScalar& b) { return a += b; }
    friend PhasedScalar operator-(PhasedScalar a, const PhasedScalar& b) { return a -= b; }
    friend PhasedScalar operator*(PhasedScalar a, const PhasedScalar& b) { return a *= b; }
    friend PhasedScalar operator*(PhasedScalar a, const Phase& p) { return a *= PhasedScalar(1, p); }

    friend bool operator==(const PhasedScalar& a, const PhasedScalar& b) { return (a - b).is_zero(); }

private:
    void add_term(const Rational& coeff, Rational exponent);

    std::map<Rational, Rational> terms_; // exponent in [0,1) -> nonzero coefficient
};

} // namespace orbicurve
