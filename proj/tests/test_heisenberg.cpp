#include "doctest.h"

#include "weilrep/weil_odd.hpp"

using namespace weilrep;

namespace {

OddScenario& sc(int q) {
    static std::map<int, std::unique_ptr<OddScenario>> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::make_unique<OddScenario>(GaloisField::get(q, 1), 1)).first;
    return *it->second;
}

}  // namespace

TEST_SUITE("heisenberg") {

TEST_CASE("semidirect products: orders and the defining relation") {
    auto& s = sc(3);
    auto sh = s.sp_h();
    CHECK(sh->size == 648);
    CHECK(!check_group_axioms(*sh).has_value());
    // trivial action gives the direct product
    auto dp = direct_product(s.sp().group, s.heisenberg().group());
    CHECK(dp->size == 648);
    // [g,0][1,h] = [1, h . g^{-1}][g,0]
    const auto& H = s.heisenberg();
    const long long nh = H.size();
    const long long idg = s.sp().group->identity;
    for (int g = 0; g < 24; ++g)
        for (long long h = 0; h < nh; ++h) {
            const int lhs = sh->mul((int)(g * nh), (int)(idg * nh + h));
            // h . g^{-1} under the untwisted action
            const auto he = H.decode((int)h);
            HeisElem moved;
            moved.w = apply_row(he.w, s.sp().elements[s.sp().group->inv(g)].mat);
            moved.t = he.t;
            const int rhs = sh->mul((int)(idg * nh + H.encode(moved)), (int)(g * nh));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("sign-twisted action: the four defining computations at q=3") {
    auto& s = sc(3);
    const auto* F = s.F();
    const auto& H = s.heisenberg();
    const auto& g = s.gsp();
    auto gh = s.gsp_h_q3();
    (void)gh;  // construction validates the action
    const auto& ms = s.ms();
    auto act = [&](const HeisElem& h, int gi) {
        const auto& e = g.elements[gi];
        HeisElem r;
        const int tau = ms.tau(e.lambda);
        std::vector<int> v(h.w.size());
        for (std::size_t i = 0; i < h.w.size(); ++i) v[i] = F->mul(tau, h.w[i]);
        r.w = apply_row(v, e.mat);
        r.t = F->quadratic_character(e.lambda) == 1 ? h.t : F->neg(h.t);
        return r;
    };
    const int hneg = g.find(s.sp_space().make_h(F->neg(1)).mat);
    REQUIRE(hneg >= 0);
    for (long long hi = 0; hi < H.size(); ++hi) {
        const auto v = H.decode((int)hi);
        // (i) acting twice with h_{-1} returns the point
        CHECK(H.encode(act(act(v, hneg), hneg)) == (int)hi);
        for (std::size_t gi = 0; gi < g.elements.size(); ++gi) {
            if (!ms.is_square(g.elements[gi].lambda)) continue;  // F^x Sp part
            // (ii) alpha(g) alpha(h_{-1}) = alpha(g h_{-1})
            const int gh1 = g.group->mul((int)gi, hneg);
            CHECK(H.encode(act(act(v, (int)gi), hneg)) == H.encode(act(v, gh1)));
            // (iii) alpha(h_{-1}) alpha(g) alpha(h_{-1}) = alpha(h_{-1} g h_{-1})
            const int hgh = g.group->mul(g.group->mul(hneg, (int)gi), hneg);
            CHECK(H.encode(act(act(act(v, hneg), (int)gi), hneg)) == H.encode(act(v, hgh)));
        }
        // (iv) automorphism property of alpha(h_{-1})
        for (long long hj = 0; hj < H.size(); ++hj) {
            const auto w = H.decode((int)hj);
            CHECK(H.encode(act(H.mul(v, w), hneg)) == H.encode(H.mul(act(v, hneg), act(w, hneg))));
        }
    }
}

TEST_CASE("twisted action axioms, exhaustive at q=3 and q=5") {
    // q=3 uses the sign twist, q=5 the projection twist
    for (int q : {3, 5}) {
        auto& s = sc(q);
        const auto& H = s.heisenberg();
        const auto& g = s.gsp();
        auto gh = q % 4 == 3 ? s.gsp_h_q3() : s.gsp_h_q1();
        (void)gh;
        const auto* F = s.F();
        const auto& ms = s.ms();
        auto act = [&](const HeisElem& h, int gi) {
            const auto& e = g.elements[gi];
            HeisElem r;
            const int tau = ms.tau(e.lambda);
            std::vector<int> v(h.w.size());
            for (std::size_t i = 0; i < h.w.size(); ++i) v[i] = F->mul(tau, h.w[i]);
            r.w = apply_row(v, e.mat);
            if (q % 4 == 3)
                r.t = F->quadratic_character(e.lambda) == 1 ? h.t : F->neg(h.t);
            else
                r.t = F->mul(ms.chi_plus(e.lambda), h.t);
            return r;
        };
        // identity
        for (long long h = 0; h < H.size(); ++h)
            CHECK(H.encode(act(H.decode((int)h), g.group->identity)) == (int)h);
        // compatibility act(act(h,g1),g2) = act(h, g1 g2)
        for (long long h = 0; h < H.size(); ++h) {
            const auto he = H.decode((int)h);
            for (std::size_t g1 = 0; g1 < g.elements.size(); ++g1) {
                const auto mid = act(he, (int)g1);
                for (std::size_t g2 = 0; g2 < g.elements.size(); ++g2)
                    CHECK(H.encode(act(mid, (int)g2)) ==
                          H.encode(act(he, g.group->mul((int)g1, (int)g2))));
            }
        }
        // automorphism per group element
        for (std::size_t gi = 0; gi < g.elements.size(); ++gi)
            for (long long h1 = 0; h1 < H.size(); ++h1) {
                const auto e1 = H.decode((int)h1);
                const auto e1g = act(e1, (int)gi);
                for (long long h2 = 0; h2 < H.size(); ++h2) {
                    const auto e2 = H.decode((int)h2);
                    CHECK(H.encode(act(H.mul(e1, e2), (int)gi)) == H.encode(H.mul(e1g, act(e2, (int)gi))));
                }
            }
    }
}

TEST_CASE("polarized flavor mirrors the half-pairing coordinates") {
    auto& s = sc(3);
    auto hb = HeisenbergGroup::polarized(s.sp_space());
    CHECK(hb.size() == 27);
    // (x, 0)(y*, 0) = (x + y*, <x, y*>) with no halving
    const HeisElem p = hb.mul({{1, 0}, 0}, {{0, 1}, 0});
    CHECK(p.t == 1);
    CHECK(!check_group_axioms(*hb.group()).has_value());
    // its commutators still recover the symplectic form
    auto grp = hb.group();
    for (int a = 0; a < 27; ++a)
        for (int b = 0; b < 27; ++b) {
            const auto ea = hb.decode(a), eb = hb.decode(b);
            const auto c = hb.decode(grp->mul(grp->mul(a, b), grp->mul(grp->inv(a), grp->inv(b))));
            CHECK(c.t == s.sp_space().pairing(ea.w, eb.w));
        }
}

}  // TEST_SUITE
