#pragma once

#include "orbicurve/linalg.hpp"
#include "orbicurve/phase.hpp"
#include "orbicurve/rational.hpp"
#include "orbicurve/wps.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace orbicurve {

/// Effective class β, recorded by its values on a generating set of Pic:
/// theta = β(L_θ) orders the monoid, detE = β(det E), extra holds the rest.
struct EffClass {
    Rational theta;
    Rational detE;
    std::vector<Rational> extra;

    /// Throws std::invalid_argument unless theta > 0, or the class is zero.
    static EffClass make(Rational theta, Rational detE, std::vector<Rational> extra = {});
    static EffClass zero() { return EffClass{}; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::string str() const;

    friend EffClass operator+(const EffClass& a, const EffClass& b);
    friend bool operator==(const EffClass&, const EffClass&) = default;
    friend auto operator<=>(const EffClass& a, const EffClass& b)
    {
        if (auto c = a.theta <=> b.theta; c != 0) return c;
        if (auto c = a.detE <=> b.detE; c != 0) return c;
        return a.extra <=> b.extra;
    }
};

/// Σ_β c_β q^β with theta(β) <= order; terms beyond the order are dropped.
class NovikovSeries {
public:
    explicit NovikovSeries(std::int64_t order) : order_(order) {}

    [[nodiscard]] std::int64_t order() const noexcept { return order_; }
    [[nodiscard]] const std::map<EffClass, PhasedScalar>& terms() const noexcept { return terms_; }
    [[nodiscard]] PhasedScalar coefficient(const EffClass& beta) const;

    void add(const EffClass& beta, const PhasedScalar& c);

    friend NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b);
    /// Truncated at min(a.order, b.order).
    friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b);
    friend bool operator==(const NovikovSeries& a, const NovikovSeries& b);

private:
    std::int64_t order_;
    std::map<EffClass, PhasedScalar> terms_;
};

/// q^β -> e^{πi β(det E)} q^β.
NovikovSeries change_novikov(const NovikovSeries& s);

/// 1/(-z-ψ) = Σ_k sign_k ψ^k z^{-(k+1)}, sign_k = (-1)^{k+1}.
struct PsiKernelTerm {
    std::int64_t psi_power = 0;
    std::int64_t z_inverse_power = 0;
    int sign = 0;
    friend bool operator==(const PsiKernelTerm&, const PsiKernelTerm&) = default;
};

/// Terms for k = 0..a_max. Throws std::invalid_argument if a_max < 0.
std::vector<PsiKernelTerm> expand_psi_kernel(std::int64_t a_max);

/// One two-pointed invariant <T_row ψ^a, T_col>_β. Sectors are given by
/// their f values, row/col by the power of H within the sector.
struct InvariantEntry {
    EffClass beta;
    Rational g1, g2;
    std::int64_t psi_power = 0;
    std::int64_t row = 0, col = 0;
    Rational value;
};

struct InvariantTable {
    std::vector<InvariantEntry> entries;
};

/// Entry addressed by positions in a fixed basis.
struct ResolvedEntry {
    EffClass beta;
    std::int64_t psi_power = 0;
    std::size_t row = 0, col = 0;
    PhasedScalar value;
};

/// Maps every entry with theta <= order onto the reduced basis of the state
/// space. Throws std::invalid_argument on an unknown sector, an index outside
/// the compact-type part of its sector, an entry at the zero class, a
/// negative ψ power or a repeated key.
std::vector<ResolvedEntry> resolve_table(const InvariantTable& table, const StateSpace& space, std::int64_t order);

/// L(z) = 1 + Σ_β q^β Σ_k z^{-k} L^{β,k}. Matrices act on columns: column m
/// is the image of the m-th basis vector.
class LOperator {
public:
    LOperator(std::size_t dim, std::int64_t order);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::int64_t order() const noexcept { return order_; }
    [[nodiscard]] const std::map<EffClass, std::map<std::int64_t, Matrix<PhasedScalar>>>& terms() const noexcept
    {
        return terms_;
    }
    /// Coefficient of q^β z^{-k}; zero when absent.
    [[nodiscard]] Matrix<PhasedScalar> coefficient(const EffClass& beta, std::int64_t k) const;
    /// Matrix entry (row, col) as a Novikov series at z^{-k}.
    [[nodiscard]] NovikovSeries entry(std::size_t row, std::size_t col, std::int64_t k) const;

    void add(const EffClass& beta, std::int64_t k, const Matrix<PhasedScalar>& m);

private:
    std::size_t dim_;
    std::int64_t order_;
    std::map<EffClass, std::map<std::int64_t, Matrix<PhasedScalar>>> terms_;
};

LOperator change_novikov(const LOperator& L);

/// α + Σ_β q^β Σ_i <α/(-z-ψ), T_i>_β T^i with T^i dual to T_i under the
/// pairing. Throws std::invalid_argument if the pairing is degenerate.
LOperator build_L(const std::vector<ResolvedEntry>& entries, const Matrix<Rational>& pairing, std::int64_t order);

Matrix<PhasedScalar> to_phased(const Matrix<Rational>& m);

/// Z-side invariants in the ambient basis j^*T_s:
/// <j^*T_s ψ^a, j^*T_t>^Z_β = e^{-πi(age_s + age_t)} e^{πi(β(det E) + r)} <T_s ψ^a, T_t>^{E^∨}_β.
std::vector<ResolvedEntry> derive_z_entries(const std::vector<ResolvedEntry>& e_entries, const StateSpace& space);

struct OperatorViolation {
    EffClass beta;
    std::int64_t z_inverse_power = 0;
    std::size_t row = 0, col = 0;
    PhasedScalar lhs, rhs;
};

struct OperatorIdentityReport {
    std::size_t coefficients_checked = 0;
    std::optional<OperatorViolation> violation;
    [[nodiscard]] bool passed() const noexcept { return !violation.has_value(); }
};

/// Checks L^Z ∘ Δ̃ = Δ̃ ∘ L^{E^∨}|_{q^β -> e^{πi β(det E)} q^β} coefficientwise
/// up to theta <= order. L^{E^∨} uses the compact-type pairing, L^Z the
/// ambient pairing; both are computed from the model directly.
OperatorIdentityReport verify_qsd_operator_identity(const InvariantTable& table, const WPSModel& model,
                                                    std::int64_t order);

struct RandomTableOptions {
    std::int64_t order = 3;
    std::int64_t max_psi = 2;
    std::size_t max_classes = 3;
    std::size_t max_entries = 10;
};

/// Classes of degree m/lcm(w) <= order with β(det E) = theta·Σk_j, entries
/// on random compact-type basis pairs with small rational values.
InvariantTable random_invariant_table(const WPSModel& model, const RandomTableOptions& opt, std::mt19937_64& rng);

} // namespace orbicurve
