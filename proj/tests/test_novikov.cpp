#include "doctest.h"

#include "orbicurve/novikov.hpp"

#include <random>

using namespace orbicurve;

namespace {

EffClass cls(std::int64_t theta, Rational detE) { return EffClass::make(Rational(theta), detE); }

WPSModel p1122() { return WPSModel::make({1, 1, 2, 2}, {1}); }

} // namespace

TEST_CASE("effective classes")
{
    auto b = cls(1, Rational(1, 2)) + cls(2, Rational(1));
    CHECK(b.theta == Rational(3));
    CHECK(b.detE == Rational(3, 2));
    CHECK(EffClass::zero().is_zero());
    CHECK_THROWS_AS(EffClass::make(Rational(0), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(EffClass::make(Rational(-1), Rational(0)), std::invalid_argument);
    CHECK(cls(1, Rational(5)) < cls(2, Rational(0)));
}

TEST_CASE("psi kernel expansion")
{
    auto terms = expand_psi_kernel(2);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0] == PsiKernelTerm{0, 1, -1});
    CHECK(terms[1] == PsiKernelTerm{1, 2, 1});
    CHECK(terms[2] == PsiKernelTerm{2, 3, -1});
    CHECK_THROWS_AS(expand_psi_kernel(-1), std::invalid_argument);
}

TEST_CASE("series arithmetic respects truncation")
{
    NovikovSeries a(2), b(3);
    a.add(EffClass::zero(), 1);
    a.add(cls(1, Rational(1)), 2);
    b.add(cls(1, Rational(1)), 3);
    b.add(cls(3, Rational(0)), 5);
    auto p = a * b;
    CHECK(p.order() == 2);
    CHECK(p.coefficient(cls(1, Rational(1))) == PhasedScalar(3));
    CHECK(p.coefficient(cls(2, Rational(2))) == PhasedScalar(6));
    CHECK(p.terms().size() == 2);
    for (const auto& [beta, c] : p.terms()) CHECK(beta.theta <= Rational(2));
}

TEST_CASE("change of Novikov variables")
{
    NovikovSeries s(4);
    s.add(cls(1, Rational(1)), 3);
    s.add(cls(2, Rational(0)), 5);
    s.add(cls(3, Rational(1, 2)), 1);
    auto t = change_novikov(s);
    CHECK(t.coefficient(cls(1, Rational(1))) == PhasedScalar(-3));
    CHECK(t.coefficient(cls(2, Rational(0))) == PhasedScalar(5));
    CHECK(t.coefficient(cls(3, Rational(1, 2))) == PhasedScalar(Rational(1), Phase(Rational(1, 2))));

    NovikovSeries integral(4);
    integral.add(cls(1, Rational(1)), 3);
    integral.add(cls(2, Rational(-3)), 7);
    CHECK(change_novikov(change_novikov(integral)) == integral);
}

TEST_CASE("change of Novikov variables is multiplicative")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> small(-3, 3), den(1, 4), deg(1, 3);
    auto draw = [&] {
        NovikovSeries s(4);
        s.add(EffClass::zero(), small(rng));
        for (int i = 0; i < 3; ++i) s.add(EffClass::make(Rational(deg(rng)), Rational(small(rng), den(rng))), small(rng));
        return s;
    };
    for (int t = 0; t < 200; ++t) {
        auto a = draw(), b = draw();
        CHECK(change_novikov(a * b) == change_novikov(a) * change_novikov(b));
        CHECK(change_novikov(a + b) == change_novikov(a) + change_novikov(b));
    }
}

TEST_CASE("build_L")
{
    auto empty = build_L({}, Matrix<Rational>::identity(2), 3);
    REQUIRE(empty.terms().size() == 1);
    CHECK(empty.coefficient(EffClass::zero(), 0) == Matrix<PhasedScalar>::identity(2));

    auto b0 = cls(1, Rational(0));
    auto L = build_L({{b0, 0, 0, 0, PhasedScalar(Rational(5, 2))}}, Matrix<Rational>::identity(1), 3);
    CHECK(L.coefficient(b0, 1)(0, 0) == PhasedScalar(Rational(-5, 2)));
    CHECK(L.entry(0, 0, 0).coefficient(EffClass::zero()) == PhasedScalar(1));
    CHECK(L.coefficient(b0, 2)(0, 0).is_zero());

    auto psi = build_L({{b0, 1, 0, 0, PhasedScalar(4)}}, Matrix<Rational>::identity(1), 3);
    CHECK(psi.coefficient(b0, 2)(0, 0) == PhasedScalar(4));

    // symmetric table and orthonormal pairing give a symmetric operator
    std::vector<ResolvedEntry> sym{{b0, 0, 0, 1, PhasedScalar(3)}, {b0, 0, 1, 0, PhasedScalar(3)},
                                   {b0, 0, 1, 1, PhasedScalar(2)}};
    auto S = build_L(sym, Matrix<Rational>::identity(2), 3).coefficient(b0, 1);
    CHECK(S == S.transpose());

    // a nontrivial pairing raises indices with its inverse
    Matrix<Rational> g(2, 2, Rational(0));
    g(0, 1) = g(1, 0) = Rational(2);
    auto R = build_L({{b0, 0, 0, 0, PhasedScalar(1)}}, g, 3).coefficient(b0, 1);
    CHECK(R(1, 0) == PhasedScalar(Rational(-1, 2)));
    CHECK(R(0, 0).is_zero());

    CHECK_THROWS_AS(build_L({}, Matrix<Rational>(2, 2, Rational(0)), 3), std::invalid_argument);
    auto truncated = build_L({{cls(4, Rational(0)), 0, 0, 0, PhasedScalar(1)}}, Matrix<Rational>::identity(1), 3);
    CHECK(truncated.terms().size() == 1);
}

TEST_CASE("table resolution errors")
{
    StateSpace space(p1122());
    auto b = cls(1, Rational(1));
    InvariantTable bad_sector{{{b, Rational(1, 3), Rational(0), 0, 0, 0, Rational(1)}}};
    CHECK_THROWS_AS(resolve_table(bad_sector, space, 3), std::invalid_argument);
    InvariantTable bad_index{{{b, Rational(1, 2), Rational(0), 0, 2, 0, Rational(1)}}};
    CHECK_THROWS_AS(resolve_table(bad_index, space, 3), std::invalid_argument);
    InvariantTable zero_class{{{EffClass::zero(), Rational(0), Rational(0), 0, 0, 0, Rational(1)}}};
    CHECK_THROWS_WITH_AS(resolve_table(zero_class, space, 3), doctest::Contains("degree mismatch"), std::invalid_argument);
    InvariantTable twice{{{b, Rational(0), Rational(0), 0, 0, 0, Rational(1)}, {b, Rational(0), Rational(0), 0, 0, 0, Rational(2)}}};
    CHECK_THROWS_AS(resolve_table(twice, space, 3), std::invalid_argument);
    InvariantTable ok{{{b, Rational(1, 2), Rational(0), 1, 1, 2, Rational(1)}, {cls(5, Rational(5)), Rational(0), Rational(0), 0, 0, 0, Rational(1)}}};
    auto resolved = resolve_table(ok, space, 3);
    REQUIRE(resolved.size() == 1);
    CHECK(resolved[0].row == 4);
    CHECK(resolved[0].col == 2);
}

TEST_CASE("operator identity examples")
{
    CHECK(verify_qsd_operator_identity({}, p1122(), 3).passed());

    // P(1,1)/O(1): one compact-type class, rank one
    auto line = WPSModel::make({1, 1}, {1});
    auto b0 = cls(1, Rational(1));
    InvariantTable single{{{b0, Rational(0), Rational(0), 0, 0, 0, Rational(7)}}};
    StateSpace space(line);
    auto z = derive_z_entries(resolve_table(single, space, 1), space);
    REQUIRE(z.size() == 1);
    CHECK(z[0].value == PhasedScalar(7));
    auto report = verify_qsd_operator_identity(single, line, 1);
    CHECK(report.passed());
    CHECK(report.coefficients_checked == 2);
}

TEST_CASE("operator identity fails when the Novikov substitution is dropped")
{
    // sanity check that the comparison is sensitive to the phase
    auto line = WPSModel::make({1, 1}, {1});
    StateSpace space(line);
    auto basis = space.reduced_basis();
    InvariantTable single{{{cls(1, Rational(1)), Rational(0), Rational(0), 0, 0, 0, Rational(7)}}};
    auto e = resolve_table(single, space, 1);
    auto LE = build_L(e, space.ct_gram(basis), 1);
    auto LZ = build_L(derive_z_entries(e, space), space.ambient_gram(basis), 1);
    CHECK_FALSE(LZ.coefficient(cls(1, Rational(1)), 1) == LE.coefficient(cls(1, Rational(1)), 1));
    CHECK(LZ.coefficient(cls(1, Rational(1)), 1) == change_novikov(LE).coefficient(cls(1, Rational(1)), 1));
}

TEST_CASE("operator identity on random tables")
{
    std::mt19937_64 rng(2024);
    for (const auto& m : {p1122(), WPSModel::make({1, 1, 1}, {3}), WPSModel::make({1, 2, 3}, {2}),
                          WPSModel::make({1, 2}, {}), WPSModel::make({1, 3}, {1, 2})}) {
        for (std::int64_t order = 1; order <= 4; ++order)
            for (int t = 0; t < 10; ++t) {
                RandomTableOptions opt;
                opt.order = order;
                auto table = random_invariant_table(m, opt, rng);
                auto report = verify_qsd_operator_identity(table, m, order);
                CHECK_MESSAGE(report.passed(), m.str());
            }
    }
}
