#include "orbicurve/novikov.hpp"

#include "orbicurve/arith.hpp"
#include "orbicurve/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace orbicurve {

EffClass EffClass::make(Rational theta, Rational detE, std::vector<Rational> extra)
{
    EffClass b{theta, detE, std::move(extra)};
    if (theta < Rational(0)) throw std::invalid_argument("effective class with negative degree " + theta.str());
    if (theta.is_zero() && !b.is_zero())
        throw std::invalid_argument("nonzero effective class " + b.str() + " has degree 0");
    return b;
}

bool EffClass::is_zero() const
{
    return theta.is_zero() && detE.is_zero() &&
           std::all_of(extra.begin(), extra.end(), [](const Rational& x) { return x.is_zero(); });
}

std::string EffClass::str() const
{
    std::string s = "(" + theta.str() + "," + detE.str();
    for (const auto& x : extra) s += "," + x.str();
    return s + ")";
}

EffClass operator+(const EffClass& a, const EffClass& b)
{
    EffClass out{a.theta + b.theta, a.detE + b.detE, a.extra};
    if (out.extra.size() < b.extra.size()) out.extra.resize(b.extra.size(), Rational(0));
    for (std::size_t i = 0; i < b.extra.size(); ++i) out.extra[i] += b.extra[i];
    return out;
}

PhasedScalar NovikovSeries::coefficient(const EffClass& beta) const
{
    auto it = terms_.find(beta);
    return it == terms_.end() ? PhasedScalar() : it->second;
}

void NovikovSeries::add(const EffClass& beta, const PhasedScalar& c)
{
    if (beta.theta > Rational(order_)) return;
    auto& slot = terms_[beta];
    slot += c;
    if (slot.is_zero()) terms_.erase(beta);
}

NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b)
{
    NovikovSeries out(std::min(a.order_, b.order_));
    for (const auto& [beta, c] : a.terms_) out.add(beta, c);
    for (const auto& [beta, c] : b.terms_) out.add(beta, c);
    return out;
}

NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b)
{
    NovikovSeries out(std::min(a.order_, b.order_));
    for (const auto& [ba, ca] : a.terms_)
        for (const auto& [bb, cb] : b.terms_) out.add(ba + bb, ca * cb);
    return out;
}

bool operator==(const NovikovSeries& a, const NovikovSeries& b)
{
    std::set<EffClass> keys;
    for (const auto& [beta, c] : a.terms_) keys.insert(beta);
    for (const auto& [beta, c] : b.terms_) keys.insert(beta);
    return std::all_of(keys.begin(), keys.end(),
                       [&](const EffClass& beta) { return a.coefficient(beta) == b.coefficient(beta); });
}

NovikovSeries change_novikov(const NovikovSeries& s)
{
    NovikovSeries out(s.order());
    for (const auto& [beta, c] : s.terms()) out.add(beta, c * Phase(beta.detE));
    return out;
}

std::vector<PsiKernelTerm> expand_psi_kernel(std::int64_t a_max)
{
    if (a_max < 0) throw std::invalid_argument("psi kernel order must be nonnegative");
    std::vector<PsiKernelTerm> out;
    for (std::int64_t k = 0; k <= a_max; ++k) out.push_back({k, k + 1, k % 2 == 0 ? -1 : 1});
    return out;
}

std::vector<ResolvedEntry> resolve_table(const InvariantTable& table, const StateSpace& space, std::int64_t order)
{
    auto basis = space.reduced_basis();
    auto index_of = [&](const Rational& f, std::int64_t power, const char* which) -> std::size_t {
        auto sector = space.find(f);
        if (!sector) throw std::invalid_argument("sector " + f.str() + " does not occur in " + space.model().str());
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].sector == *sector && basis[i].power == power) return i;
        throw std::invalid_argument(std::string(which) + " index " + std::to_string(power) +
                                    " is outside the compact-type classes of sector " + f.str());
    };
    std::vector<ResolvedEntry> out;
    std::set<std::tuple<EffClass, std::int64_t, std::size_t, std::size_t>> seen;
    for (const auto& e : table.entries) {
        if (e.beta.theta <= Rational(0)) throw std::invalid_argument("degree mismatch: invariant entry at class " + e.beta.str());
        if (e.psi_power < 0) throw std::invalid_argument("negative psi power " + std::to_string(e.psi_power));
        std::size_t row = index_of(e.g1, e.row, "row");
        std::size_t col = index_of(e.g2, e.col, "col");
        if (!seen.insert({e.beta, e.psi_power, row, col}).second)
            throw std::invalid_argument("repeated invariant entry at class " + e.beta.str());
        if (e.beta.theta > Rational(order)) continue;
        out.push_back({e.beta, e.psi_power, row, col, PhasedScalar(e.value)});
    }
    return out;
}

LOperator::LOperator(std::size_t dim, std::int64_t order) : dim_(dim), order_(order)
{
    terms_[EffClass::zero()][0] = Matrix<PhasedScalar>::identity(dim);
}

Matrix<PhasedScalar> LOperator::coefficient(const EffClass& beta, std::int64_t k) const
{
    auto it = terms_.find(beta);
    if (it != terms_.end())
        if (auto jt = it->second.find(k); jt != it->second.end()) return jt->second;
    return Matrix<PhasedScalar>(dim_, dim_);
}

NovikovSeries LOperator::entry(std::size_t row, std::size_t col, std::int64_t k) const
{
    NovikovSeries s(order_);
    for (const auto& [beta, by_k] : terms_)
        if (auto it = by_k.find(k); it != by_k.end()) s.add(beta, it->second(row, col));
    return s;
}

void LOperator::add(const EffClass& beta, std::int64_t k, const Matrix<PhasedScalar>& m)
{
    if (beta.theta > Rational(order_)) return;
    auto& by_k = terms_[beta];
    auto it = by_k.find(k);
    if (it == by_k.end())
        by_k.emplace(k, m);
    else
        it->second = it->second + m;
}

LOperator change_novikov(const LOperator& L)
{
    LOperator out(L.dim(), L.order());
    for (const auto& [beta, by_k] : L.terms()) {
        if (beta.is_zero()) continue;
        PhasedScalar phase(Rational(1), Phase(beta.detE));
        for (const auto& [k, m] : by_k) {
            Matrix<PhasedScalar> scaled = m;
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) = m(i, j) * phase;
            out.add(beta, k, scaled);
        }
    }
    return out;
}

Matrix<PhasedScalar> to_phased(const Matrix<Rational>& m)
{
    Matrix<PhasedScalar> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = PhasedScalar(m(i, j));
    return out;
}

LOperator build_L(const std::vector<ResolvedEntry>& entries, const Matrix<Rational>& pairing, std::int64_t order)
{
    const std::size_t n = pairing.rows();
    Matrix<Rational> ginv;
    try {
        ginv = inverse(pairing);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("degenerate pairing on the declared basis");
    }
    auto ginv_phased = to_phased(ginv);

    // C^{β,k}(m, i) = <T_m ψ^k, T_i>_β
    std::map<std::pair<EffClass, std::int64_t>, Matrix<PhasedScalar>> brackets;
    for (const auto& e : entries) {
        if (e.row >= n || e.col >= n) throw std::invalid_argument("invariant entry outside the basis");
        if (e.beta.theta > Rational(order)) continue;
        auto [it, fresh] = brackets.try_emplace({e.beta, e.psi_power}, n, n);
        it->second(e.row, e.col) += e.value;
    }

    LOperator L(n, order);
    for (const auto& [key, c] : brackets) {
        const auto& [beta, k] = key;
        // α ψ^k z^{-k-1} carries (-1)^{k+1}; T^i = Σ_j (G^{-1})_{ij} T_j
        auto m = ginv_phased * c.transpose();
        if (k % 2 == 0)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = -m(i, j);
        L.add(beta, k + 1, m);
    }
    return L;
}

namespace {

std::vector<Phase> delta_phases(const StateSpace& space, const std::vector<BasisLabel>& basis)
{
    std::vector<Phase> out;
    for (std::size_t s = 0; s < basis.size(); ++s) {
        auto image = space.delta_tilde(space.unit(basis[s].sector, basis[s].power));
        const auto& c = image.coeffs[basis[s].sector][static_cast<std::size_t>(basis[s].power)];
        auto unit_phase = space.unit(basis[s].sector, basis[s].power, c);
        if (!(image == unit_phase) || c.terms().size() != 1)
            throw InternalInconsistency("novikov_series", "delta tilde is not a phase times the basis vector " +
                                                              std::to_string(s));
        const auto& [exponent, coeff] = *c.terms().begin();
        if (coeff != Rational(1) && coeff != Rational(-1))
            throw InternalInconsistency("novikov_series", "delta tilde rescales basis vector " + std::to_string(s));
        out.push_back(Phase(coeff == Rational(1) ? exponent : exponent + Rational(1)));
    }
    return out;
}

} // namespace

std::vector<ResolvedEntry> derive_z_entries(const std::vector<ResolvedEntry>& e_entries, const StateSpace& space)
{
    auto basis = space.reduced_basis();
    auto r = static_cast<std::int64_t>(space.model().r());
    std::vector<ResolvedEntry> out;
    for (const auto& e : e_entries) {
        Phase age_s(space.age(basis.at(e.row).sector)), age_t(space.age(basis.at(e.col).sector));
        Phase phase = (age_s * age_t).inverse() * Phase(e.beta.detE + Rational(r));
        out.push_back({e.beta, e.psi_power, e.row, e.col, e.value * phase});
    }
    return out;
}

OperatorIdentityReport verify_qsd_operator_identity(const InvariantTable& table, const WPSModel& model,
                                                    std::int64_t order)
{
    StateSpace space(model);
    auto basis = space.reduced_basis();
    const std::size_t n = basis.size();
    auto e_entries = resolve_table(table, space, order);
    auto z_entries = derive_z_entries(e_entries, space);

    LOperator LE = change_novikov(build_L(e_entries, space.ct_gram(basis), order));
    LOperator LZ = build_L(z_entries, space.ambient_gram(basis), order);

    auto phases = delta_phases(space, basis);
    Matrix<PhasedScalar> D(n, n);
    for (std::size_t s = 0; s < n; ++s) D(s, s) = PhasedScalar(Rational(1), phases[s]);

    std::set<std::pair<EffClass, std::int64_t>> keys;
    for (const auto* L : {&LE, &LZ})
        for (const auto& [beta, by_k] : L->terms())
            for (const auto& [k, m] : by_k) keys.insert({beta, k});

    OperatorIdentityReport report;
    for (const auto& [beta, k] : keys) {
        auto lhs = LZ.coefficient(beta, k) * D;
        auto rhs = D * LE.coefficient(beta, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                report.coefficients_checked++;
                if (!(lhs(i, j) == rhs(i, j))) {
                    report.violation = OperatorViolation{beta, k, i, j, lhs(i, j), rhs(i, j)};
                    return report;
                }
            }
    }
    return report;
}

InvariantTable random_invariant_table(const WPSModel& model, const RandomTableOptions& opt, std::mt19937_64& rng)
{
    StateSpace space(model);
    auto basis = space.reduced_basis();
    std::int64_t L = 1, k_sum = 0;
    for (auto w : model.weights) L = lcm(L, w);
    for (auto k : model.bundle) k_sum += k;

    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };

    std::set<EffClass> class_set;
    auto n_classes = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(opt.max_classes)));
    for (std::size_t c = 0; c < n_classes; ++c) {
        Rational theta(uniform(1, opt.order * L), L);
        class_set.insert(EffClass::make(theta, theta * Rational(k_sum)));
    }
    std::vector<EffClass> classes(class_set.begin(), class_set.end());

    InvariantTable table;
    std::set<std::tuple<EffClass, std::int64_t, std::size_t, std::size_t>> used;
    if (basis.empty()) return table;
    auto n_entries = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(opt.max_entries)));
    for (std::size_t e = 0; e < n_entries; ++e) {
        const auto& beta = classes[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(classes.size()) - 1))];
        auto a = uniform(0, opt.max_psi);
        auto s = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(basis.size()) - 1));
        auto t = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(basis.size()) - 1));
        if (!used.insert({beta, a, s, t}).second) continue;
        Rational value(uniform(-6, 6), uniform(1, 4));
        table.entries.push_back({beta, space.sectors()[basis[s].sector].f, space.sectors()[basis[t].sector].f, a,
                                 basis[s].power, basis[t].power, value});
    }
    return table;
}

} // namespace orbicurve
