#include "orbicurve/wps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orbicurve {

WPSModel WPSModel::make(std::vector<std::int64_t> weights, std::vector<std::int64_t> bundle)
{
    if (weights.size() < 2) throw std::invalid_argument("weighted projective space needs at least 2 weights");
    for (auto w : weights)
        if (w < 1) throw std::invalid_argument("weight " + std::to_string(w) + " is not positive");
    for (auto k : bundle)
        if (k < 1) throw std::invalid_argument("bundle degree " + std::to_string(k) + " is not positive");
    return WPSModel{std::move(weights), std::move(bundle)};
}

std::string WPSModel::str() const
{
    std::string s = "P(";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + std::to_string(weights[i]);
    s += ")";
    if (bundle.empty()) return s + ", E=0";
    s += ", E=";
    for (std::size_t j = 0; j < bundle.size(); ++j) s += (j ? "+O(" : "O(") + std::to_string(bundle[j]) + ")";
    return s;
}

std::vector<Sector> enumerate_sectors(const WPSModel& m)
{
    std::set<Rational> fs;
    for (auto w : m.weights)
        for (std::int64_t k = 0; k < w; ++k) fs.insert(Rational(k, w));
    std::vector<Sector> out;
    for (const auto& f : fs) {
        Sector s;
        s.f = f;
        for (std::size_t i = 0; i < m.weights.size(); ++i)
            if ((f * Rational(m.weights[i])).is_integer()) s.fixed.push_back(i);
        for (auto k : m.bundle) s.fiber.weights.push_back((f * Rational(k)).frac());
        out.push_back(std::move(s));
    }
    return out;
}

Rational integrate(const WPSModel& m, const Sector& s, std::int64_t power)
{
    if (power < 0 || power > s.dim())
        throw std::invalid_argument("cannot integrate H^" + std::to_string(power) + " over a sector of dimension " +
                                    std::to_string(s.dim()));
    if (power < s.dim()) return Rational(0);
    std::int64_t prod = 1;
    for (auto i : s.fixed) prod *= m.weights[i];
    return Rational(1, prod);
}

StateSpaceElement& StateSpaceElement::operator+=(const StateSpaceElement& o)
{
    if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("state space elements of different shape");
    for (std::size_t f = 0; f < coeffs.size(); ++f) {
        if (coeffs[f].size() != o.coeffs[f].size()) throw std::invalid_argument("state space elements of different shape");
        for (std::size_t p = 0; p < coeffs[f].size(); ++p) coeffs[f][p] += o.coeffs[f][p];
    }
    return *this;
}

StateSpaceElement operator*(const PhasedScalar& c, StateSpaceElement a)
{
    for (auto& part : a.coeffs)
        for (auto& x : part) x = c * x;
    return a;
}

bool operator==(const StateSpaceElement& a, const StateSpaceElement& b)
{
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t f = 0; f < a.coeffs.size(); ++f) {
        if (a.coeffs[f].size() != b.coeffs[f].size()) return false;
        for (std::size_t p = 0; p < a.coeffs[f].size(); ++p)
            if (!(a.coeffs[f][p] == b.coeffs[f][p])) return false;
    }
    return true;
}

StateSpace::StateSpace(WPSModel model) : model_(std::move(model)), sectors_(enumerate_sectors(model_))
{
    for (const auto& s : sectors_) {
        auto inv = find((Rational(1) - s.f).frac());
        if (!inv) throw std::logic_error("sector list is not closed under f -> 1 - f");
        inverse_.push_back(*inv);
    }
}

std::optional<std::size_t> StateSpace::find(const Rational& f) const
{
    for (std::size_t i = 0; i < sectors_.size(); ++i)
        if (sectors_[i].f == f) return i;
    return std::nullopt;
}

StateSpaceElement StateSpace::zero() const
{
    StateSpaceElement e;
    for (const auto& s : sectors_) e.coeffs.emplace_back(s.ring_dim(), PhasedScalar());
    return e;
}

StateSpaceElement StateSpace::unit(std::size_t sector, std::int64_t power, const PhasedScalar& c) const
{
    if (sector >= sectors_.size()) throw std::invalid_argument("no sector with index " + std::to_string(sector));
    if (power < 0 || power >= static_cast<std::int64_t>(sectors_[sector].ring_dim()))
        throw std::invalid_argument("H^" + std::to_string(power) + " vanishes on sector " + sectors_[sector].f.str());
    auto e = zero();
    e.coeffs[sector][static_cast<std::size_t>(power)] = c;
    return e;
}

Rational StateSpace::euler_coefficient(std::size_t sector) const
{
    Rational c(1);
    const auto& s = sectors_[sector];
    for (std::size_t j = 0; j < model_.bundle.size(); ++j)
        if (s.fiber.weights[j].is_zero()) c *= Rational(model_.bundle[j]);
    return c;
}

PhasedScalar StateSpace::twisted_pairing(const StateSpaceElement& a, const StateSpaceElement& b, int euler_mode) const
{
    auto shape_ok = [&](const StateSpaceElement& e) {
        if (e.coeffs.size() != sectors_.size()) return false;
        for (std::size_t f = 0; f < sectors_.size(); ++f)
            if (e.coeffs[f].size() != sectors_[f].ring_dim()) return false;
        return true;
    };
    if (!shape_ok(a) || !shape_ok(b)) throw std::invalid_argument("state space element does not match the model");

    PhasedScalar total;
    for (std::size_t f = 0; f < sectors_.size(); ++f) {
        const auto& s = sectors_[f];
        std::int64_t shift = 0;
        Rational weight(1);
        if (euler_mode != 0) {
            shift = static_cast<std::int64_t>(s.rank_fixed());
            weight = euler_coefficient(f);
            if (euler_mode == 2 && shift % 2 == 1) weight = -weight;
        }
        const auto& af = a.coeffs[f];
        const auto& bf = b.coeffs[inverse_[f]];
        for (std::size_t p = 0; p < af.size(); ++p) {
            if (af[p].is_zero()) continue;
            std::int64_t q = s.dim() - shift - static_cast<std::int64_t>(p);
            if (q < 0 || q >= static_cast<std::int64_t>(bf.size())) continue;
            Rational integral = weight * integrate(model_, s, s.dim());
            total += af[p] * bf[static_cast<std::size_t>(q)] * PhasedScalar(integral);
        }
    }
    return total;
}

PhasedScalar StateSpace::cr_pairing(const StateSpaceElement& a, const StateSpaceElement& b) const
{
    return twisted_pairing(a, b, 0);
}

PhasedScalar StateSpace::ambient_pairing(const StateSpaceElement& a, const StateSpaceElement& b) const
{
    return twisted_pairing(a, b, 1);
}

PhasedScalar StateSpace::ct_pairing(const StateSpaceElement& a, const StateSpaceElement& b) const
{
    return twisted_pairing(a, b, 2);
}

std::vector<BasisLabel> StateSpace::reduced_basis() const
{
    std::vector<BasisLabel> out;
    for (std::size_t f = 0; f < sectors_.size(); ++f) {
        auto top = static_cast<std::int64_t>(sectors_[f].ring_dim()) - static_cast<std::int64_t>(sectors_[f].rank_fixed());
        for (std::int64_t p = 0; p < top; ++p) out.push_back({f, p});
    }
    return out;
}

StateSpaceElement StateSpace::delta_tilde(const StateSpaceElement& preimage) const
{
    auto out = zero();
    if (preimage.coeffs.size() != sectors_.size()) throw std::invalid_argument("state space element does not match the model");
    for (std::size_t f = 0; f < sectors_.size(); ++f) {
        const auto& s = sectors_[f];
        if (preimage.coeffs[f].size() != s.ring_dim()) throw std::invalid_argument("state space element does not match the model");
        auto top = static_cast<std::int64_t>(s.ring_dim()) - static_cast<std::int64_t>(s.rank_fixed());
        Phase phase(age(f));
        for (std::int64_t p = 0; p < top; ++p)
            out.coeffs[f][static_cast<std::size_t>(p)] = preimage.coeffs[f][static_cast<std::size_t>(p)] * phase;
    }
    return out;
}

namespace {

Rational real_part(const PhasedScalar& x, const char* what)
{
    auto r = x.as_rational();
    if (!r) throw std::logic_error(std::string(what) + " pairing of rational classes is not rational");
    return *r;
}

} // namespace

Matrix<Rational> StateSpace::ambient_gram(const std::vector<BasisLabel>& basis) const
{
    Matrix<Rational> g(basis.size(), basis.size(), Rational(0));
    for (std::size_t s = 0; s < basis.size(); ++s)
        for (std::size_t t = 0; t < basis.size(); ++t)
            g(s, t) = real_part(ambient_pairing(unit(basis[s].sector, basis[s].power), unit(basis[t].sector, basis[t].power)),
                                "ambient");
    return g;
}

Matrix<Rational> StateSpace::ct_gram(const std::vector<BasisLabel>& basis) const
{
    Matrix<Rational> g(basis.size(), basis.size(), Rational(0));
    for (std::size_t s = 0; s < basis.size(); ++s)
        for (std::size_t t = 0; t < basis.size(); ++t)
            g(s, t) = real_part(ct_pairing(unit(basis[s].sector, basis[s].power), unit(basis[t].sector, basis[t].power)),
                                "compact-type");
    return g;
}

PhasedScalar cr_pairing(const WPSModel& m, const StateSpaceElement& a, const StateSpaceElement& b)
{
    return StateSpace(m).cr_pairing(a, b);
}

PhasedScalar ambient_pairing_Z(const WPSModel& m, const StateSpaceElement& a, const StateSpaceElement& b)
{
    return StateSpace(m).ambient_pairing(a, b);
}

StateSpaceElement delta_tilde(const WPSModel& m, const StateSpaceElement& preimage)
{
    return StateSpace(m).delta_tilde(preimage);
}

PairingComparisonReport verify_pairing_comparison(const WPSModel& m)
{
    StateSpace space(m);
    std::vector<BasisLabel> labels;
    for (std::size_t f = 0; f < space.sectors().size(); ++f)
        for (std::size_t p = 0; p < space.sectors()[f].ring_dim(); ++p) labels.push_back({f, static_cast<std::int64_t>(p)});

    PairingComparisonReport report;
    Phase sign = phase_pow(Phase::minus_one(), static_cast<std::int64_t>(m.r()));
    for (const auto& x : labels)
        for (const auto& y : labels) {
            auto gx = space.unit(x.sector, x.power), gy = space.unit(y.sector, y.power);
            PhasedScalar lhs = space.ambient_pairing(space.delta_tilde(gx), space.delta_tilde(gy));
            PhasedScalar rhs = space.ct_pairing(gx, gy) * sign;
            ++report.pairs_checked;
            if (!(lhs == rhs)) report.violations.push_back({x, y, lhs, rhs});
        }
    return report;
}

bool DeltaIsoReport::passed() const noexcept
{
    return std::all_of(sectors.begin(), sectors.end(), [](const SectorDims& s) { return s.ok(); });
}

DeltaIsoReport verify_delta_iso_dims(const WPSModel& m)
{
    StateSpace space(m);
    DeltaIsoReport report;
    for (std::size_t f = 0; f < space.sectors().size(); ++f) {
        const auto& s = space.sectors()[f];
        const std::size_t n = s.ring_dim(), shift = s.rank_fixed();
        const Rational c = space.euler_coefficient(f);

        SectorDims dims;
        dims.f = s.f;
        dims.ring_dim = n;

        // multiplication by c·H^shift on Q[H]/H^n, and by (-1)^shift c·H^shift
        Matrix<Rational> mult(n, n, Rational(0)), mult_dual(n, n, Rational(0));
        for (std::size_t p = 0; p + shift < n; ++p) {
            mult(p + shift, p) = c;
            mult_dual(p + shift, p) = shift % 2 ? -c : c;
        }
        dims.euler_image_dim = rank(mult);
        dims.ct_dim = rank(mult_dual);

        // ambient pairing between sector f and its inverse, full basis H^0..H^{n-1}
        Matrix<Rational> A(n, n, Rational(0));
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                A(p, q) = real_part(space.ambient_pairing(space.unit(f, static_cast<std::int64_t>(p)),
                                                          space.unit(space.inverse(f), static_cast<std::int64_t>(q))),
                                    "ambient");
        dims.ambient_dim = rank(A);

        const std::size_t top = n > shift ? n - shift : 0;
        Matrix<Rational> reduced(top, top, Rational(0));
        for (std::size_t p = 0; p < top; ++p)
            for (std::size_t q = 0; q < top; ++q) reduced(p, q) = A(p, q);
        dims.nondegenerate = rank(reduced) == top;

        auto kernel = nullspace(A.transpose());
        bool ideal = kernel.size() == n - top;
        for (const auto& v : kernel) {
            for (std::size_t p = 0; p < top; ++p) ideal &= v[p].is_zero();
            // H·v must stay in the kernel
            std::vector<Rational> hv(n, Rational(0));
            for (std::size_t p = 0; p + 1 < n; ++p) hv[p + 1] = v[p];
            for (std::size_t q = 0; q < n; ++q) {
                Rational acc(0);
                for (std::size_t p = 0; p < n; ++p) acc += hv[p] * A(p, q);
                ideal &= acc.is_zero();
            }
        }
        dims.kernel_is_ideal = ideal;
        report.sectors.push_back(dims);
    }
    return report;
}

} // namespace orbicurve
