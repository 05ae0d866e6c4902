#include "doctest.h"

#include "weilrep/finite_field.hpp"

using weilrep::Cyclotomic;
using weilrep::GaloisField;
using weilrep::MultiplicativeStructure;

TEST_SUITE("finite-field") {

TEST_CASE("prime field arithmetic") {
    const auto* F3 = GaloisField::get(3, 1);
    CHECK(F3->add(2, 2) == 1);
    const auto* F5 = GaloisField::get(5, 1);
    CHECK(F5->mul(2, 3) == 1);
}

TEST_CASE("F9 defining relation x^2 = -1") {
    const auto* F9 = GaloisField::get(3, 2);
    CHECK(F9->modulus() == std::vector<int>{1, 0, 1});
    // x has index 3 (coordinates (0,1))
    CHECK(F9->mul(3, 3) == 2);
}

TEST_CASE("quadratic character") {
    const auto* F3 = GaloisField::get(3, 1);
    CHECK(F3->quadratic_character(F3->neg(1)) == -1);
    const auto* F5 = GaloisField::get(5, 1);
    CHECK(F5->quadratic_character(2) == -1);
    CHECK(F5->quadratic_character(1) == 1);
    CHECK(F5->quadratic_character(0) == 0);
    // multiplicativity, exhaustive over small fields
    for (int q : {3, 5, 7, 13}) {
        const auto* F = GaloisField::get(q, 1);
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                CHECK(F->quadratic_character(F->mul(a, b)) ==
                      F->quadratic_character(a) * F->quadratic_character(b));
    }
}

TEST_CASE("additive characters") {
    const auto* F3 = GaloisField::get(3, 1);
    CHECK(F3->psi(1) == Cyclotomic::root_of_unity(3, 1));
    CHECK(F3->psi(1, 2) == Cyclotomic::root_of_unity(3, 2));
    const auto* F9 = GaloisField::get(3, 2);
    CHECK(F9->trace(1) == 2);
    CHECK(F9->psi(1) == Cyclotomic::root_of_unity(3, 2));
    // character sums: zero for nontrivial twist, q for the trivial one
    for (const auto* F : {GaloisField::get(3, 1), GaloisField::get(5, 1), GaloisField::get(3, 2)}) {
        for (int a = 0; a < F->q(); ++a) {
            Cyclotomic s;
            for (int x = 0; x < F->q(); ++x) s += F->psi(x, a);
            CHECK(s == (a == 0 ? Cyclotomic(F->q()) : Cyclotomic::zero()));
        }
    }
    // psi(a+b) = psi(a) psi(b)
    const auto* F7 = GaloisField::get(7, 1);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) CHECK(F7->psi(F7->add(a, b)) == F7->psi(a) * F7->psi(b));
}

TEST_CASE("multiplicative decomposition") {
    MultiplicativeStructure m7(GaloisField::get(7, 1));
    CHECK(m7.l() == 3);
    CHECK(m7.n() == 1);
    MultiplicativeStructure m5(GaloisField::get(5, 1));
    CHECK(m5.l() == 1);
    CHECK(m5.n() == 2);
    CHECK(m5.generator() == 2);
    MultiplicativeStructure m13(GaloisField::get(13, 1));
    CHECK(m13.l() == 3);
    CHECK(m13.n() == 2);
    // internal direct product: orders multiply, intersection trivial
    for (int q : {5, 7, 9, 13}) {
        const auto* F = q == 9 ? GaloisField::get(3, 2) : GaloisField::get(q, 1);
        MultiplicativeStructure ms(F);
        CHECK((long long)ms.subgroup_l().size() * ms.subgroup_2n().size() == q - 1);
        int common = 0;
        for (int a : ms.subgroup_l())
            for (int b : ms.subgroup_2n())
                if (a == b) ++common;
        CHECK(common == 1);
    }
}

TEST_CASE("tau is the inverse-square-root homomorphism") {
    // q=3: trivial
    MultiplicativeStructure m3(GaloisField::get(3, 1));
    CHECK(m3.tau(1) == 1);
    CHECK(m3.tau(2) == 1);
    // q=7 with squares {1,2,4}: tau(4)=4, tau(2)=2, tau(1)=1
    const auto* F7 = GaloisField::get(7, 1);
    MultiplicativeStructure m7(F7);
    CHECK(m7.tau(4) == 4);
    CHECK(m7.tau(2) == 2);
    CHECK(m7.tau(1) == 1);
    CHECK(F7->mul(m7.tau(4), m7.tau(4)) == m7.tau(F7->mul(4, 4)));
    // homomorphism property on the whole group, small odd q
    for (int q : {3, 5, 7, 9, 13}) {
        const auto* F = q == 9 ? GaloisField::get(3, 2) : GaloisField::get(q, 1);
        MultiplicativeStructure ms(F);
        for (int a = 1; a < F->q(); ++a)
            for (int b = 1; b < F->q(); ++b) CHECK(F->mul(ms.tau(a), ms.tau(b)) == ms.tau(F->mul(a, b)));
        // on the defining domain, tau(a)^2 * a is trivial on the domain part:
        // tau(w^{2k})^2 w^{2k} = 1 for w generating the domain
        for (int a : (F->q() % 4 == 3 ? ms.squares() : ms.subgroup_l()))
            CHECK(F->mul(F->mul(ms.tau(a), ms.tau(a)), a) == 1);
    }
}

TEST_CASE("chi_plus projects onto the 2-part") {
    const auto* F5 = GaloisField::get(5, 1);
    MultiplicativeStructure m5(F5);
    for (int a = 1; a < 5; ++a) CHECK(m5.chi_plus(a) == a);  // l = 1
    const auto* F13 = GaloisField::get(13, 1);
    MultiplicativeStructure m13(F13);
    for (int a : m13.subgroup_l()) CHECK(m13.chi_plus(a) == 1);
    for (int a : m13.subgroup_2n()) CHECK(m13.chi_plus(a) == a);
    for (int a = 1; a < 13; ++a)
        for (int b = 1; b < 13; ++b)
            CHECK(m13.chi_plus(F13->mul(a, b)) == F13->mul(m13.chi_plus(a), m13.chi_plus(b)));
    CHECK_THROWS(m13.chi_plus(0));
}

TEST_CASE("sqrt section and sign cocycle") {
    const auto* F5 = GaloisField::get(5, 1);
    MultiplicativeStructure m5(F5);
    CHECK(m5.sqrt_section(1) == 1);
    CHECK(m5.sqrt_section(4) == 2);
    CHECK(m5.sqrt_cocycle(4, 4) == -1);  // 2*2 = 4 = -sqrt(16 mod 5)
    for (int b : m5.squares()) CHECK(m5.sqrt_cocycle(1, b) == 1);
    for (int q : {5, 9, 13}) {
        const auto* F = q == 9 ? GaloisField::get(3, 2) : GaloisField::get(q, 1);
        MultiplicativeStructure ms(F);
        for (int a : ms.squares())
            for (int b : ms.squares()) {
                CHECK(ms.sqrt_cocycle(a, b) == ms.sqrt_cocycle(b, a));
                for (int c : ms.squares())
                    CHECK(ms.sqrt_cocycle(a, b) * ms.sqrt_cocycle(F->mul(a, b), c) ==
                          ms.sqrt_cocycle(b, c) * ms.sqrt_cocycle(a, F->mul(b, c)));
            }
    }
}

TEST_CASE("errors") {
    const auto* F3 = GaloisField::get(3, 1);
    const auto* F5 = GaloisField::get(5, 1);
    CHECK_THROWS(F3->element(1) + F5->element(1));
    CHECK_THROWS(F3->element(1) / F3->element(0));
    CHECK_THROWS(GaloisField::with_modulus(3, {0, 1, 1}));  // x^2 + x = x(x+1)
    MultiplicativeStructure m5(F5);
    CHECK_THROWS(m5.sqrt_section(2));
}

}  // TEST_SUITE
