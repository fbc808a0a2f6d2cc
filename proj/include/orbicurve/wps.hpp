#pragma once

#include "orbicurve/linalg.hpp"
#include "orbicurve/phase.hpp"
#include "orbicurve/rational.hpp"
#include "orbicurve/sector.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbicurve {

/// X = P(w_1, ..., w_n) with E = ⊕ O(k_j).
struct WPSModel {
    std::vector<std::int64_t> weights;
    std::vector<std::int64_t> bundle;

    /// Requires n >= 2 and positive weights and degrees. An empty bundle list
    /// (r = 0) is accepted.
    static WPSModel make(std::vector<std::int64_t> weights, std::vector<std::int64_t> bundle);

    [[nodiscard]] std::size_t n() const noexcept { return weights.size(); }
    [[nodiscard]] std::size_t r() const noexcept { return bundle.size(); }
    [[nodiscard]] std::string str() const;
};

/// Twisted sector X_f: the weighted projective space on the coordinates with
/// f·w_i ∈ Z. Its cohomology is Q[H]/H^{ring_dim}.
struct Sector {
    Rational f;
    std::vector<std::size_t> fixed;
    SectorAction fiber; // weights <f k_j>

    [[nodiscard]] std::size_t ring_dim() const noexcept { return fixed.size(); }
    [[nodiscard]] std::int64_t dim() const noexcept { return static_cast<std::int64_t>(fixed.size()) - 1; }
    /// rank of E_f, the part of E fixed by the sector.
    [[nodiscard]] std::size_t rank_fixed() const noexcept { return fiber.rank_fixed(); }
};

/// All f = k/w_i in [0, 1), ascending.
std::vector<Sector> enumerate_sectors(const WPSModel& m);

/// ∫_{X_f} H^power: 1/∏_{fixed} w_i in top degree, 0 below. Throws
/// std::invalid_argument if power is negative or exceeds dim X_f.
Rational integrate(const WPSModel& m, const Sector& s, std::int64_t power);

/// Class on the inertia stack: per sector, coefficients of 1, H, H^2, ...
struct StateSpaceElement {
    std::vector<std::vector<PhasedScalar>> coeffs;

    StateSpaceElement& operator+=(const StateSpaceElement& o);
    friend StateSpaceElement operator+(StateSpaceElement a, const StateSpaceElement& b) { return a += b; }
    friend StateSpaceElement operator*(const PhasedScalar& c, StateSpaceElement a);
    friend bool operator==(const StateSpaceElement& a, const StateSpaceElement& b);
};

/// Element of the basis of the compact-type or ambient state space: H^power
/// on sector `sector`.
struct BasisLabel {
    std::size_t sector = 0;
    std::int64_t power = 0;
    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

class StateSpace {
public:
    explicit StateSpace(WPSModel model);

    [[nodiscard]] const WPSModel& model() const noexcept { return model_; }
    [[nodiscard]] const std::vector<Sector>& sectors() const noexcept { return sectors_; }
    /// Index of the sector 1 - f (f for f = 0).
    [[nodiscard]] std::size_t inverse(std::size_t sector) const { return inverse_.at(sector); }
    [[nodiscard]] std::optional<std::size_t> find(const Rational& f) const;

    [[nodiscard]] StateSpaceElement zero() const;
    [[nodiscard]] StateSpaceElement unit(std::size_t sector, std::int64_t power,
                                         const PhasedScalar& c = PhasedScalar(1)) const;

    /// age_f(E) and e(E_f) = c_f H^{rank E_f}, c_f = ∏_{<f k_j> = 0} k_j.
    [[nodiscard]] Rational age(std::size_t sector) const { return orbicurve::age(sectors_[sector].fiber); }
    [[nodiscard]] Rational euler_coefficient(std::size_t sector) const;

    /// Σ_f ∫_{X_f} α_f ∪ β_{ι f} [∪ weight_f H^{shift_f}].
    [[nodiscard]] PhasedScalar cr_pairing(const StateSpaceElement& a, const StateSpaceElement& b) const;
    /// Pairing of j^*α and j^*β on the complete intersection: e(E_f) inserted.
    [[nodiscard]] PhasedScalar ambient_pairing(const StateSpaceElement& a, const StateSpaceElement& b) const;
    /// Pairing of i_*α and i_*β on the total space of E^∨: e(E^∨_f) inserted.
    [[nodiscard]] PhasedScalar ct_pairing(const StateSpaceElement& a, const StateSpaceElement& b) const;

    /// H^p on each sector with p < ring_dim - rank E_f. These represent both
    /// the compact-type classes i_*(H^p) and the ambient classes j^*(H^p).
    [[nodiscard]] std::vector<BasisLabel> reduced_basis() const;

    /// Δ̃(i_*α) = e^{πi age_f(E)} j^*α, with j^*α written in the reduced
    /// ambient basis (coefficients of H^p for p >= ring_dim - rank E_f are
    /// dropped, being in the kernel of the ambient pairing).
    [[nodiscard]] StateSpaceElement delta_tilde(const StateSpaceElement& preimage) const;

    [[nodiscard]] Matrix<Rational> ambient_gram(const std::vector<BasisLabel>& basis) const;
    [[nodiscard]] Matrix<Rational> ct_gram(const std::vector<BasisLabel>& basis) const;

private:
    PhasedScalar twisted_pairing(const StateSpaceElement& a, const StateSpaceElement& b, int euler_mode) const;

    WPSModel model_;
    std::vector<Sector> sectors_;
    std::vector<std::size_t> inverse_;
};

PhasedScalar cr_pairing(const WPSModel& m, const StateSpaceElement& a, const StateSpaceElement& b);
PhasedScalar ambient_pairing_Z(const WPSModel& m, const StateSpaceElement& a, const StateSpaceElement& b);
StateSpaceElement delta_tilde(const WPSModel& m, const StateSpaceElement& preimage);

struct PairingViolation {
    BasisLabel first, second;
    PhasedScalar ambient;  // <Δ̃γ1, Δ̃γ2>^Z
    PhasedScalar expected; // (-1)^r <γ1, γ2>^ct
};

struct PairingComparisonReport {
    std::size_t pairs_checked = 0;
    std::vector<PairingViolation> violations;
    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

/// <Δ̃γ1, Δ̃γ2>^Z = (-1)^r <γ1, γ2>^ct over all pairs of reduced basis classes.
PairingComparisonReport verify_pairing_comparison(const WPSModel& m);

struct SectorDims {
    Rational f;
    std::size_t ring_dim = 0;
    std::size_t euler_image_dim = 0; // rank of e(E_f)· on Q[H]/H^{ring_dim}
    std::size_t ambient_dim = 0;     // rank of the ambient pairing on sectors (f, ι f)
    std::size_t ct_dim = 0;          // rank of e(E^∨_f)·, the compact-type part
    bool nondegenerate = false;      // ambient pairing on the reduced basis is invertible
    bool kernel_is_ideal = false;    // pairing kernel = span{H^p : p >= ring_dim - rank E_f}, stable under H·
    [[nodiscard]] bool ok() const noexcept
    {
        return euler_image_dim == ambient_dim && ambient_dim == ct_dim && nondegenerate && kernel_is_ideal;
    }
};

struct DeltaIsoReport {
    std::vector<SectorDims> sectors;
    [[nodiscard]] bool passed() const noexcept;
};

DeltaIsoReport verify_delta_iso_dims(const WPSModel& m);

} // namespace orbicurve
