#include "doctest.h"

#include "weilrep/galois_ring.hpp"

using weilrep::Cyclotomic;
using weilrep::GaloisRing;

TEST_SUITE("galois-ring") {

TEST_CASE("Z/4 arithmetic") {
    const auto* R = GaloisRing::get(1);
    CHECK(R->add(2, 2) == 0);
    CHECK(R->mul(2, 2) == 0);
    CHECK(R->mul(3, 3) == 1);
}

TEST_CASE("the ideal 2R squares to zero") {
    for (int d : {1, 2}) {
        const auto* R = GaloisRing::get(d);
        for (int a = 0; a < R->size(); ++a) {
            CHECK(R->add(R->add(a, a), R->add(a, a)) == 0);  // 4a = 0
            for (int b = 0; b < R->size(); ++b)
                CHECK(R->mul(R->mul(2, a), R->mul(2, b)) == 0);
        }
    }
}

TEST_CASE("reduction to the residue field is a ring map") {
    for (int d : {1, 2}) {
        const auto* R = GaloisRing::get(d);
        const auto* F = R->residue_field();
        CHECK(F->q() * F->q() == R->size());
        for (int a = 0; a < R->size(); ++a)
            for (int b = 0; b < R->size(); ++b) {
                CHECK(R->reduce(R->mul(a, b)) == F->mul(R->reduce(a), R->reduce(b)));
                CHECK(R->reduce(R->add(a, b)) == F->add(R->reduce(a), R->reduce(b)));
            }
    }
    const auto* R1 = GaloisRing::get(1);
    CHECK(R1->reduce(3) == 1);
    CHECK(R1->reduce(2) == 0);
}

TEST_CASE("lift sections reduction") {
    for (int d : {1, 2}) {
        const auto* R = GaloisRing::get(d);
        for (int f = 0; f < R->residue_field()->q(); ++f) {
            CHECK(R->reduce(R->lift(f)) == f);
            CHECK(R->reduce(R->teichmueller(f)) == f);
        }
    }
}

TEST_CASE("Teichmueller lift is multiplicative") {
    for (int d : {1, 2}) {
        const auto* R = GaloisRing::get(d);
        const auto* F = R->residue_field();
        for (int a = 0; a < F->q(); ++a)
            for (int b = 0; b < F->q(); ++b)
                CHECK(R->teichmueller(F->mul(a, b)) == R->mul(R->teichmueller(a), R->teichmueller(b)));
    }
}

TEST_CASE("character values and additivity") {
    const auto* R = GaloisRing::get(1);
    CHECK(R->psi(1) == Cyclotomic::root_of_unity(4, 1));
    CHECK(R->psi(2) == Cyclotomic(-1));
    CHECK(R->psi(3) == Cyclotomic::root_of_unity(4, 3));
    // injective on Z/4
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) CHECK(R->psi(a) != R->psi(b));
    for (int d : {1, 2}) {
        const auto* Rd = GaloisRing::get(d);
        Cyclotomic sum;
        for (int a = 0; a < Rd->size(); ++a) {
            sum += Rd->psi(a);
            for (int b = 0; b < Rd->size(); ++b)
                CHECK(Rd->psi(Rd->add(a, b)) == Rd->psi(a) * Rd->psi(b));
        }
        CHECK(sum.is_zero());
        // nontrivial on 2R
        bool nontrivial = false;
        for (int f = 0; f < Rd->residue_field()->q(); ++f)
            nontrivial = nontrivial || Rd->psi(Rd->mul(2, Rd->lift(f))) != Cyclotomic::one();
        CHECK(nontrivial);
    }
}

TEST_CASE("unit inversion") {
    const auto* R = GaloisRing::get(2);
    for (int a = 0; a < R->size(); ++a) {
        if (R->is_unit(a))
            CHECK(R->mul(a, R->inv(a)) == 1);
        else
            CHECK_THROWS(R->inv(a));
    }
}

}  // TEST_SUITE
