#include "doctest.h"

#include "weilrep/rep.hpp"
#include "weilrep/weil_odd.hpp"

#include <array>
#include <random>

using namespace weilrep;

TEST_SUITE("rep") {

TEST_CASE("characters, inner products and orthogonality on S3") {
    // S3 as the symmetric group on {0,1,2}, indices = permutations in lex order
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto mul = [perms](int a, int b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // compose b then a
        for (int j = 0; j < 6; ++j)
            if (perms[j] == c) return j;
        return -1;
    };
    auto s3 = make_from_oracle(6, 0, mul, {1, 3}, "S3");
    CHECK(!check_group_axioms(*s3).has_value());
    // permutation representation
    auto pperms = std::make_shared<std::vector<std::array<int, 3>>>(perms);
    MatrixRep perm(
        s3, 3,
        [pperms](int g) {
            CycMatrix out(3, 3);
            for (int i = 0; i < 3; ++i) out.at((*pperms)[g][i], i) = Cyclotomic::one();
            return out;
        },
        "perm");
    // multiplicative sanity
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(perm.at(s3->mul(a, b)) == perm.at(a) * perm.at(b));
    CHECK(perm.character()[0] == Cyclotomic(3));
    // <chi_perm, chi_perm> = 2 (trivial + standard)
    CHECK(inner_product(perm.character(), perm.character(), *s3).rational_value() == Rat(2));
    std::vector<Cyclotomic> triv(6, Cyclotomic::one());
    CHECK(inner_product(perm.character(), triv, *s3).rational_value() == Rat(1));
    // sign character is orthogonal to the permutation character minus trivial
    std::vector<Cyclotomic> sign(6);
    for (int g = 0; g < 6; ++g) {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) inv += perms[g][i] > perms[g][j];
        sign[g] = inv % 2 ? Cyclotomic(-1) : Cyclotomic::one();
    }
    CHECK(inner_product(perm.character(), sign, *s3).rational_value() == Rat(0));
    // conjugation invariance of characters on samples
    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
        const int g = (int)(rng() % 6), h = (int)(rng() % 6);
        CHECK(perm.character()[s3->conj(g, h)] == perm.character()[g]);
    }
    // decompose the permutation rep against {trivial, sign}
    auto d = decompose_against(perm.character(), {triv, sign}, *s3);
    CHECK(d.multiplicities == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(d.residual == Rat(1));  // the irreducible 2-dim summand is unexplained

    // induction from the alternating subgroup: Frobenius reciprocity
    std::vector<int> a3;
    for (int g = 0; g < 6; ++g) {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) inv += perms[g][i] > perms[g][j];
        if (inv % 2 == 0) a3.push_back(g);
    }
    auto sub = subgroup_from_indices(s3, a3, "A3");
    std::vector<Cyclotomic> omega_chi(3);
    for (int i = 0; i < 3; ++i) {
        // nontrivial character of A3 = Z/3: identify by element order
        const int amb = sub.to_ambient(i);
        if (amb == 0)
            omega_chi[i] = Cyclotomic::one();
        else
            omega_chi[i] = Cyclotomic::root_of_unity(3, amb == sub.to_ambient(1) ? 1 : 2);
    }
    MatrixRep om(
        sub.sub, 1,
        [omega_chi](int i) {
            CycMatrix m(1, 1);
            m.at(0, 0) = omega_chi[i];
            return m;
        },
        "omega");
    auto ind = induce(sub, om);
    CHECK(ind.rep.dim() == 2);
    // representation property of the induced matrices
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(ind.rep.at(s3->mul(a, b)) == ind.rep.at(a) * ind.rep.at(b));
    // Frobenius reciprocity: <Ind chi, chi_perm>_G = <chi, Res chi_perm>_H
    const auto lhs = inner_product(ind.rep.character(), perm.character(), *s3).rational_value();
    const auto rhs =
        inner_product(om.character(), restrict_character(perm.character(), sub), *sub.sub).rational_value();
    CHECK(lhs == rhs);
    // induction from the full group is the identity
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    auto full = subgroup_from_indices(s3, all, "S3");
    auto ind2 = induce(full, perm);
    CHECK(ind2.rep.dim() == 3);
    for (int g = 0; g < 6; ++g) CHECK(ind2.rep.character_at(g) == perm.character()[g]);
}

TEST_CASE("intertwiner: Schur scalar and equivalence") {
    // two equivalent copies of the standard rep of S3, conjugated
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto mul = [perms](int a, int b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        for (int j = 0; j < 6; ++j)
            if (perms[j] == c) return j;
        return -1;
    };
    auto s3 = make_from_oracle(6, 0, mul, {1, 3}, "S3");
    // standard rep on the sum-zero subspace of the permutation rep, basis
    // e0 - e1, e1 - e2; integral matrices
    auto std_mat = [&](int g) {
        CycMatrix p(3, 3);
        for (int i = 0; i < 3; ++i) p.at(perms[g][i], i) = Cyclotomic::one();
        // transition to the subspace basis
        CycMatrix out(2, 2);
        // columns: images of b0 = e0-e1 and b1 = e1-e2 expressed in b
        auto col = [&](int j) {
            std::array<int, 3> v{};
            if (j == 0) {
                v[perms[g][0]] += 1;
                v[perms[g][1]] -= 1;
            } else {
                v[perms[g][1]] += 1;
                v[perms[g][2]] -= 1;
            }
            // v = a b0 + c b1 with b0 = (1,-1,0), b1 = (0,1,-1): a = v0, c = -v2
            return std::make_pair(v[0], -v[2]);
        };
        auto [a0, c0] = col(0);
        auto [a1, c1] = col(1);
        out.at(0, 0) = Cyclotomic(a0);
        out.at(1, 0) = Cyclotomic(c0);
        out.at(0, 1) = Cyclotomic(a1);
        out.at(1, 1) = Cyclotomic(c1);
        return out;
    };
    MatrixRep rho1(s3, 2, std_mat, "std");
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(rho1.at(s3->mul(a, b)) == rho1.at(a) * rho1.at(b));
    // conjugate by a fixed invertible T
    CycMatrix T(2, 2);
    T.at(0, 0) = Cyclotomic(1);
    T.at(0, 1) = Cyclotomic(1);
    T.at(1, 0) = Cyclotomic::zero();
    T.at(1, 1) = Cyclotomic(1);
    const CycMatrix Tinv = T.inverse();
    MatrixRep rho2(s3, 2, [std_mat, T, Tinv](int g) { return T * std_mat(g) * Tinv; }, "std conj");
    // rho1 = rho2 up to the intertwiner; M rho1 = rho2 M exactly
    auto M = solve_intertwiner(rho1, rho2, {1, 3});
    REQUIRE(M.has_value());
    for (int g = 0; g < 6; ++g) CHECK(*M * rho1.at(g) == rho2.at(g) * *M);
    // self-intertwiner is scalar
    auto Mself = solve_intertwiner(rho1, rho1, {1, 3});
    REQUIRE(Mself.has_value());
    CHECK(Mself->scalar_ratio_to(CycMatrix::identity(2)).has_value());
    // inequivalent: standard vs trivial+sign-ish 2-dim? use the regular-ish
    // diagonal rep with characters (1, sign)
    std::vector<Cyclotomic> sign(6);
    for (int g = 0; g < 6; ++g) {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) inv += perms[g][i] > perms[g][j];
        sign[g] = inv % 2 ? Cyclotomic(-1) : Cyclotomic::one();
    }
    MatrixRep diag(
        s3, 2,
        [sign](int g) {
            CycMatrix m(2, 2);
            m.at(0, 0) = Cyclotomic::one();
            m.at(1, 1) = sign[g];
            return m;
        },
        "1+sgn");
    CHECK(!solve_intertwiner(rho1, diag, {1, 3}).has_value());
    // non-irreducible equal inputs are rejected (intertwiner space too big)
    CHECK_THROWS(solve_intertwiner(diag, diag, {1, 3}));
}

TEST_CASE("extract_cocycle on a genuine representation is trivial") {
    auto z4 = make_cyclic(4);
    auto mats = std::make_shared<std::vector<CycMatrix>>();
    for (int k = 0; k < 4; ++k) {
        CycMatrix m(1, 1);
        m.at(0, 0) = Cyclotomic::root_of_unity(4, k);
        mats->push_back(m);
    }
    auto c = extract_cocycle(z4, [mats](int g) -> const CycMatrix& { return (*mats)[g]; });
    CHECK(c.order == 1);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(c.exponent(a, b) == 0);
}

TEST_CASE("cocycle order reduction and its refusals") {
    // the nontrivial Z/2-extension cocycle of Z/2 (the Z/4 class) cannot be
    // reduced to mu_1 but trivially reduces to mu_2
    auto z2 = make_cyclic(2);
    ScalarCocycle c;
    c.base = z2;
    c.order = 2;
    c.exponent = [](int a, int b) { return a == 1 && b == 1 ? 1 : 0; };
    c.value = [](int a, int b) { return a == 1 && b == 1 ? Cyclotomic(-1) : Cyclotomic::one(); };
    auto red2 = reduce_cocycle_order(c, 2, {1}, true);
    CHECK(red2.exists);
    auto red1 = reduce_cocycle_order(c, 1, {1}, true);
    CHECK(!red1.exists);
    // a coboundary in mu_4 does reduce to mu_1: c(a,b) = t(a)t(b)/t(ab) for
    // t = (i^0, i^1) on Z/2 gives c(1,1) = i*i/1 = -1 ... that is the same
    // class; instead take t-shifted trivial cocycle on Z/4
    auto z4 = make_cyclic(4);
    std::vector<int> t = {0, 1, 0, 1};
    ScalarCocycle cb;
    cb.base = z4;
    cb.order = 4;
    cb.exponent = [t, z4](int a, int b) { return (int)mod_ll(t[z4->mul(a, b)] - t[a] - t[b], 4); };
    auto exp_copy = cb.exponent;
    cb.value = [exp_copy](int a, int b) { return Cyclotomic::root_of_unity(4, exp_copy(a, b)); };
    auto red = reduce_cocycle_order(cb, 1, {1}, true);
    CHECK(red.exists);
    // the recovered rescaling cancels the coboundary pointwise
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(mod_ll(cb.exponent(a, b) + red.t_exponent[a] + red.t_exponent[b] - red.t_exponent[z4->mul(a, b)],
                         4) == 0);
}

}  // TEST_SUITE
