#include <doctest.h>

#include "icp/bundle.hpp"
#include "oracles.hpp"

using namespace icp;

namespace {

const Field Q = Field::rationals();

/// p⊗p⊗p with p = (1 - g)/2, on k[ℤ₂]^{⊗3}.
oracle::Vec ppp(Field f)
{
    const Scalar half = Scalar::one(f) / Scalar(f, 2L);
    const oracle::Vec p{half, -half};
    oracle::Vec out;
    for (const auto& a : p)
        for (const auto& b : p)
            for (const auto& c : p) out.push_back(a * b * c);
    return out;
}

oracle::Vec one3(Field f)
{
    return oracle::basis(f, 8, 0);
}

/// 1 + c·p⊗p⊗p
oracle::Vec deformed(Field f, const Scalar& c)
{
    oracle::Vec v = one3(f);
    oracle::axpy(v, c, ppp(f));
    return v;
}

oracle::Vec mul3(const Algebra& H, const oracle::Vec& x, const oracle::Vec& y)
{
    const oracle::Table h = oracle::table_of(H);
    const oracle::Table h3 = oracle::kronecker_table(oracle::kronecker_table(h, h), h);
    return oracle::mul(h3, x, y);
}

} // namespace

TEST_CASE("k[Z2] as a quasi-bialgebra")
{
    const QuasiBialgebra plain = z2_quasi_bialgebra(Q, false);
    const QuasiBialgebra twisted = z2_quasi_bialgebra(Q, true);
    CHECK(plain.phi == trivial_associator(plain.H));
    CHECK(twisted.phi == deformed(Q, Scalar(Q, -2L)));
    CHECK(twisted.phi_inv == twisted.phi);
    // Φ² = 1
    CHECK(mul3(twisted.H, twisted.phi, twisted.phi) == one3(Q));
    CHECK(tensor_power_multiply(twisted.H, 3, twisted.phi, twisted.phi_inv) == one3(Q));

    CHECK(check_quasi_bialgebra(plain.H, plain.comul, plain.counit, plain.phi, plain.phi_inv).passed());
    CHECK(check_quasi_bialgebra(twisted.H, twisted.comul, twisted.counit, twisted.phi, twisted.phi_inv).passed());
    CHECK(check_bialgebra(plain.H, plain.comul, plain.counit).passed());
}

TEST_CASE("trivial associator agrees with the bialgebra checker")
{
    const QuasiBialgebra h = z2_quasi_bialgebra(Q, false);
    const Vector one = trivial_associator(h.H);
    SUBCASE("good data")
    {
        CHECK(check_quasi_bialgebra(h.H, h.comul, h.counit, one, one).passed() ==
              check_bialgebra(h.H, h.comul, h.counit).passed());
    }
    SUBCASE("bad counit")
    {
        // ε(g) = 2 is not an algebra map
        const LinMap eps = h.counit.with_entry(0, 1, Scalar(Q, 2L));
        const bool quasi = check_quasi_bialgebra(h.H, h.comul, eps, one, one).passed();
        CHECK_FALSE(quasi);
        CHECK(quasi == check_bialgebra(h.H, h.comul, eps).passed());
    }
    SUBCASE("non-coassociative comultiplication")
    {
        // Δ(g) = g⊗1
        const LinMap comul = h.comul.with_entry(3, 1, Scalar::zero(Q)).with_entry(2, 1, Scalar::one(Q));
        const AxiomReport quasi = check_quasi_bialgebra(h.H, comul, h.counit, one, one);
        const AxiomReport plain = check_bialgebra(h.H, comul, h.counit);
        CHECK(quasi.passed() == plain.passed());
        CHECK_FALSE(plain.passed());
    }
}

TEST_CASE("associator failures")
{
    const QuasiBialgebra h = z2_quasi_bialgebra(Q, false);
    SUBCASE("1 + 2p⊗p⊗p is invertible but not a 3-cocycle")
    {
        const oracle::Vec phi = deformed(Q, Scalar(Q, 2L));
        const oracle::Vec inv = deformed(Q, Scalar(Q, mpq_class(-2, 3)));
        REQUIRE(mul3(h.H, phi, inv) == one3(Q));
        const AxiomReport r = check_quasi_bialgebra(h.H, h.comul, h.counit, phi, inv);
        CHECK(r.find("associator-inverse")->passed());
        CHECK_FALSE(r.find("pentagon")->passed());
        CHECK_THROWS_AS(make_quasi_bialgebra(h.H, h.comul, h.counit, phi, inv), AxiomError);
    }
    SUBCASE("wrong inverse")
    {
        const oracle::Vec phi = deformed(Q, Scalar(Q, -2L));
        const AxiomReport r = check_quasi_bialgebra(h.H, h.comul, h.counit, phi, one3(Q));
        CHECK_FALSE(r.find("associator-inverse")->passed());
    }
    SUBCASE("counit condition")
    {
        // Φ = 2·1⊗1⊗1 with inverse 1/2·1⊗1⊗1
        oracle::Vec two = one3(Q), half = one3(Q);
        two[0] = Scalar(Q, 2L);
        half[0] = Scalar::one(Q) / Scalar(Q, 2L);
        const AxiomReport r = check_quasi_bialgebra(h.H, h.comul, h.counit, two, half);
        CHECK_FALSE(r.find("associator-counit")->passed());
        CHECK(r.find("associator-inverse")->passed());
    }
}

TEST_CASE("tensor_power_multiply matches the Kronecker oracle")
{
    std::mt19937 rng(23);
    const Algebra H = group_algebra({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0, Q);
    const oracle::Table h = oracle::table_of(H);
    const oracle::Table h2 = oracle::kronecker_table(h, h);
    for (int i = 0; i < 10; ++i) {
        const auto x = oracle::random_vector(rng, 9, Q), y = oracle::random_vector(rng, 9, Q);
        CHECK(tensor_power_multiply(H, 2, x, y) == oracle::mul(h2, x, y));
    }
}

TEST_CASE("characteristic 2 is refused where signs are needed")
{
    const Field f2 = Field::prime(2);
    CHECK_THROWS_AS(z2_quasi_bialgebra(f2, true), std::invalid_argument);
    CHECK_THROWS_AS(braided_triple("sign-braid", f2), std::invalid_argument);
    CHECK_THROWS_AS(smash_preset("smash-z2", f2), std::invalid_argument);
    CHECK_NOTHROW(braided_triple("flips", f2));
    CHECK_NOTHROW(smash_preset("trivial-action", f2));
    CHECK_THROWS_AS(braided_triple("no-such-preset", Q), std::invalid_argument);
}

TEST_CASE("module algebras")
{
    for (const auto& p : smash_presets()) {
        CAPTURE(p);
        const SmashData s = smash_preset(p, Q);
        CHECK(check_module_algebra(s.left).passed());
        CHECK(check_module_algebra(s.right).passed());
    }
    SUBCASE("an action that is not a representation")
    {
        const SmashData s = smash_preset("smash-z2", Q);
        // g·x = 2x
        const LinMap action = s.left.action.with_entry(1, 3, Scalar(Q, 2L));
        ModuleAlgebraAction bad = s.left;
        bad.action = action;
        const AxiomReport r = check_module_algebra(bad);
        CHECK_FALSE(r.find("module-associative")->passed());
        CHECK(r.find("module-unit")->passed());
        CHECK_THROWS_AS(make_module_algebra(Side::left, s.left.H, s.left.A, action), AxiomError);
    }
}

TEST_CASE("one-sided smash products match the smash formula")
{
    for (const auto& p : smash_presets()) {
        CAPTURE(p);
        const SmashData s = smash_preset(p, Q);
        const Algebra left = build_mirror(left_smash(s.left));
        const Algebra right = build_brz(right_smash(s.right));
        CHECK(oracle::table_of(left) == oracle::left_smash_table(s.left));
        CHECK(oracle::table_of(right) == oracle::right_smash_table(s.right));
        CHECK(oracle::associative(oracle::table_of(left)));
        CHECK(oracle::associative(oracle::table_of(right)));
    }
}

TEST_CASE("two-sided smash products match the direct formula")
{
    for (const char* p : {"smash-z2", "quasi-smash-z2"}) {
        for (Field f : {Q, Field::prime(3)}) {
            CAPTURE(p);
            CAPTURE(f.name());
            const SmashData s = smash_preset(p, f);
            const QuasiBialgebra& H = s.left.H;
            REQUIRE(check_quasi_bialgebra(H.H, H.comul, H.counit, H.phi, H.phi_inv).passed());
            const Algebra M = build_iterated(two_sided_q(s.left, s.right));
            REQUIRE(M.dim() == 8);
            const oracle::Table expected = oracle::two_sided_table(s.left, s.right);
            CHECK(oracle::table_of(M) == expected);

            // a#h#b = (a#1#1)(1#h#1)(1#1#b) on every basis triple
            const oracle::Table t = oracle::table_of(M);
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t h = 0; h < 2; ++h)
                    for (std::size_t b = 0; b < 2; ++b) {
                        const auto e = [&](std::size_t i, std::size_t j, std::size_t k) {
                            return oracle::basis(f, 8, (i * 2 + j) * 2 + k);
                        };
                        CHECK(oracle::mul(t, oracle::mul(t, e(a, 0, 0), e(0, h, 0)), e(0, 0, b)) == e(a, h, b));
                    }
        }
    }
}

TEST_CASE("the associator changes the two-sided product")
{
    const Algebra plain = build_iterated(two_sided_q(smash_preset("smash-z2", Q).left, smash_preset("smash-z2", Q).right));
    const SmashData qs = smash_preset("quasi-smash-z2", Q);
    const Algebra quasi = build_iterated(two_sided_q(qs.left, qs.right));
    CHECK(plain.mul() != quasi.mul());
}

TEST_CASE("the counit action gives the plain tensor product")
{
    const SmashData s = smash_preset("trivial-action", Q);
    const Algebra M = build_iterated(two_sided_q(s.left, s.right));
    const oracle::Table expected = oracle::kronecker_table(
        oracle::kronecker_table(oracle::table_of(s.left.A.mul), oracle::table_of(s.left.H.H)),
        oracle::table_of(s.right.A.mul));
    CHECK(oracle::table_of(M) == expected);
}

TEST_CASE("actions over different quasi-bialgebras are not linked")
{
    const SmashData plain = smash_preset("smash-z2", Q), quasi = smash_preset("quasi-smash-z2", Q);
    CHECK_THROWS_AS(two_sided_q(plain.left, quasi.right), ShapeError);
}
