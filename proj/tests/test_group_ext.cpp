#include "doctest.h"

#include "weilrep/group_ext.hpp"

#include <random>
#include <set>

using namespace weilrep;

TEST_SUITE("group-ext") {

TEST_CASE("cocycle validation and the classic nonsplit Z/4") {
    auto z2 = make_cyclic(2);
    TwoCocycle c;
    c.base = z2;
    c.coeff = z2;
    c.value = [](int a, int b) { return a == 1 && b == 1 ? 1 : 0; };
    CHECK(validate_cocycle(c).ok);
    auto ext = build_extension(c, "Z4");
    CHECK(ext.group->size == 4);
    // the extension is cyclic of order 4: some element has order 4
    bool has4 = false;
    for (int x = 0; x < 4; ++x) has4 = has4 || ext.group->element_order(x) == 4;
    CHECK(has4);
    CHECK(!check_group_axioms(*ext.group).has_value());

    // a perturbed table fails with a witness
    TwoCocycle bad = c;
    bad.value = [](int a, int b) { return a == 1 && b == 0 ? 1 : 0; };  // breaks normalization
    auto v = validate_cocycle(bad);
    CHECK(!v.ok);
    CHECK(!v.witness.empty());
    TwoCocycle bad2 = c;
    bad2.value = [](int a, int b) { return a == 1 && b == 1 ? 0 : (a == 0 && b == 0 ? 0 : 0); };
    CHECK(validate_cocycle(bad2).ok);  // trivial cocycle still fine
}

TEST_CASE("trivial cocycle gives the direct product") {
    auto z3 = make_cyclic(3), z2 = make_cyclic(2);
    TwoCocycle c;
    c.base = z3;
    c.coeff = z2;
    c.value = [](int, int) { return 0; };
    auto ext = build_extension(c);
    CHECK(ext.group->size == 6);
    bool has6 = false;
    for (int x = 0; x < 6; ++x) has6 = has6 || ext.group->element_order(x) == 6;
    CHECK(has6);  // Z/6, not S3
}

TEST_CASE("c-prime and c-triple-prime closed forms") {
    for (int q : {5, 13}) {
        const auto* F = GaloisField::get(q, 1);
        MultiplicativeStructure ms(F);
        // c'(1., t.) = 1 and c'(xi., xi.) = xi^2
        CHECK(c_prime(ms, 1, ms.xi()) == 1);
        CHECK(c_prime(ms, ms.xi(), ms.xi()) == F->mul(ms.xi(), ms.xi()));
        // c''' is a symmetric {+-1} cocycle on F^x: exhaustive identity
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b) {
                CHECK(c_triple_prime(ms, a, b) == c_triple_prime(ms, b, a));
                for (int cc = 1; cc < q; ++cc)
                    CHECK(c_triple_prime(ms, a, b) * c_triple_prime(ms, F->mul(a, b), cc) ==
                          c_triple_prime(ms, b, cc) * c_triple_prime(ms, a, F->mul(b, cc)));
            }
        // the closed form is the cocycle of the sqrt-tower bijection:
        // [t, e] <-> ([a_t^2, e], t.) multiplied through the c'' extension
        for (int t1 = 1; t1 < q; ++t1)
            for (int t2 = 1; t2 < q; ++t2) {
                const int a1 = ms.square_part_root(t1), a2 = ms.square_part_root(t2);
                const int a1sq = F->mul(a1, a1), a2sq = F->mul(a2, a2);
                const int expected = ms.sqrt_cocycle(a1sq, a2sq) *
                                     ms.sqrt_cocycle(F->mul(a1sq, a2sq), c_prime(ms, t1, t2));
                CHECK(c_triple_prime(ms, t1, t2) == expected);
            }
    }
}

TEST_CASE("square root tower at q=5") {
    auto T = build_tilde_tower(GaloisField::get(5, 1), 1);
    const auto* F = T.F;

    // ~F^{x2} is isomorphic to F^x through [a, e] -> sqrt(a) e
    CHECK(T.tF2.group->size == 4);
    std::set<int> image;
    for (int x = 0; x < 4; ++x) {
        const int a = T.ms->squares()[T.tF2.proj(x)];
        int v = T.ms->sqrt_section(a);
        if (x % 2 == 1) v = F->neg(v);
        image.insert(v);
        // homomorphism check against the extension law
        for (int y = 0; y < 4; ++y) {
            const int b = T.ms->squares()[T.tF2.proj(y)];
            int w = T.ms->sqrt_section(b);
            if (y % 2 == 1) w = F->neg(w);
            const int z = T.tF2.group->mul(x, y);
            const int cz = T.ms->squares()[T.tF2.proj(z)];
            int u = T.ms->sqrt_section(cz);
            if (z % 2 == 1) u = F->neg(u);
            CHECK(F->mul(v, w) == u);
        }
    }
    CHECK(image == std::set<int>{1, 2, 3, 4});

    // pinned values: [4,+] -> 2, [4,-] -> 3, [1,-] -> 4
    auto val = [&](int sq, int eps) {
        int v = T.ms->sqrt_section(sq);
        return eps ? F->neg(v) : v;
    };
    CHECK(val(4, 0) == 2);
    CHECK(val(4, 1) == 3);
    CHECK(val(1, 1) == 4);
    // the named isomorphism agrees and self-checks
    auto iso = sqrt_iso(*T.ms, T.tF2);
    for (int x = 0; x < 4; ++x) {
        const int a = T.ms->squares()[T.tF2.proj(x)];
        CHECK(iso(x) == val(a, x % 2));
    }

    // group sizes along the tower
    CHECK(T.gsp.get()->size == 480);
    CHECK(T.tgsp.group->size == 960);
    CHECK(T.pgsp.group->size == 240);
    CHECK(T.wide.group->size == 3840);
    CHECK((long long)T.sp_in_tgsp.size() == 120);
    CHECK((long long)T.f2sp_in_tgsp.size() == 480);

    // lambda~ is a homomorphism, exhaustively
    for (long long x = 0; x < T.tgsp.group->size; ++x)
        for (long long y = 0; y < T.tgsp.group->size; ++y) {
            const int lhs = T.tilde_lambda(T.tgsp.group->mul((int)x, (int)y));
            const int rhs = T.tFx.group->mul(T.tilde_lambda((int)x), T.tilde_lambda((int)y));
            if (lhs != rhs) {
                REQUIRE(lhs == rhs);
            }
        }

    // ker(lambda~) = embedded Sp, elementwise
    {
        std::set<int> ker;
        for (long long x = 0; x < T.tgsp.group->size; ++x)
            if (T.tilde_lambda((int)x) == T.tFx.group->identity) ker.insert((int)x);
        CHECK(ker == std::set<int>(T.sp_in_tgsp.begin(), T.sp_in_tgsp.end()));
    }

    // nu is an injective central homomorphism avoiding Sp
    {
        std::set<int> img;
        for (int x = 0; x < 4; ++x) {
            img.insert(T.nu(x));
            for (int y = 0; y < 4; ++y)
                CHECK(T.nu(T.tF2.group->mul(x, y)) == T.tgsp.group->mul(T.nu(x), T.nu(y)));
        }
        CHECK(img.size() == 4);
        for (int x : img) {
            for (long long g = 0; g < T.tgsp.group->size; ++g)
                CHECK(T.tgsp.group->mul((int)g, x) == T.tgsp.group->mul(x, (int)g));
            CHECK((x == T.tgsp.group->identity) ==
                  std::binary_search(T.sp_in_tgsp.begin(), T.sp_in_tgsp.end(), x));
        }
    }

    // ~F^{x2} Sp is exactly nu(~F^{x2}) * Sp
    {
        std::set<int> prod;
        for (int x = 0; x < 4; ++x)
            for (int s : T.sp_in_tgsp) prod.insert(T.tgsp.group->mul(T.nu(x), s));
        CHECK(prod == std::set<int>(T.f2sp_in_tgsp.begin(), T.f2sp_in_tgsp.end()));
    }

    // the quotient tower: 1 -> Sp -> PGSp+- -> F^x/F^{x2} -> 1
    {
        std::set<int> sp_img;
        for (int s : T.sp_in_tgsp) sp_img.insert(T.pgsp.proj(s));
        CHECK(sp_img.size() == 120);  // Sp embeds
        // index two
        CHECK(T.pgsp.group->size == 240);
    }

    // tau~ satisfies tau(x) tau(y) = tau(xy) c(x, y), exhaustively here
    for (long long x = 0; x < T.tgsp.group->size; ++x)
        for (long long y = 0; y < T.tgsp.group->size; ++y) {
            const int lhs = F->mul(T.tau_tilde((int)x), T.tau_tilde((int)y));
            const int c = T.tower_cocycle.value((int)x, (int)y) + 1;  // F^x element index shift
            const int rhs = F->mul(T.tau_tilde(T.tgsp.group->mul((int)x, (int)y)), c);
            if (lhs != rhs) REQUIRE(lhs == rhs);
        }

    // c vanishes against the kernel, both ways
    for (int x : T.f2sp_in_tgsp)
        for (long long y = 0; y < T.tgsp.group->size; ++y) {
            CHECK(T.tower_cocycle.value(x, (int)y) == 0);
            CHECK(T.tower_cocycle.value((int)y, x) == 0);
        }

    // the wide extension is a group
    CHECK(!check_group_axioms(*T.wide.group, 2000000).has_value());
    CHECK(validate_cocycle(T.tower_cocycle).ok);
}

TEST_CASE("tower cocycles at q=13") {
    auto T = build_tilde_tower(GaloisField::get(13, 1), 1);
    CHECK(T.gsp.get()->size == 26208);
    CHECK(T.tgsp.group->size == 52416);
    // F~^{x2} = F^x as groups
    CHECK(T.tF2.group->size == 12);
    std::set<int> image;
    for (int x = 0; x < 12; ++x) {
        const int a = T.ms->squares()[T.tF2.proj(x)];
        int v = T.ms->sqrt_section(a);
        if (x % 2 == 1) v = T.F->neg(v);
        image.insert(v);
    }
    CHECK(image.size() == 12);
    // exhaustive cocycle identity at the reduced level, sampled upstairs
    CHECK(validate_cocycle(T.tower_cocycle).ok);
    // sampled tau~ lemma
    std::mt19937 rng(23);
    for (int i = 0; i < 10000; ++i) {
        const int x = (int)(rng() % T.tgsp.group->size), y = (int)(rng() % T.tgsp.group->size);
        const int lhs = T.F->mul(T.tau_tilde(x), T.tau_tilde(y));
        const int c = T.tower_cocycle.value(x, y) + 1;
        const int rhs = T.F->mul(T.tau_tilde(T.tgsp.group->mul(x, y)), c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("PGSp+- for q = 3 mod 4") {
    SymplecticSpace sp3(GaloisField::get(3, 1), 1);
    auto p3 = quotient_pgsp_q3(sp3);
    CHECK(p3.pgsp.group->size == 48);  // F^{x2} trivial
    SymplecticSpace sp7(GaloisField::get(7, 1), 1);
    auto p7 = quotient_pgsp_q3(sp7);
    CHECK(p7.gsp.get()->size == 2016);
    CHECK(p7.pgsp.group->size == 672);
    // 1 -> Sp -> PGSp+- -> F^x/F^{x2} -> 1: Sp embeds, quotient has order 2
    std::set<int> sp_img;
    for (int i : p7.sp_indices) sp_img.insert(p7.pgsp.proj(i));
    CHECK(sp_img.size() == 336);
    CHECK(p7.pgsp.group->size / sp_img.size() == 2);
    CHECK(!check_group_axioms(*p3.pgsp.group).has_value());
}

}  // TEST_SUITE
