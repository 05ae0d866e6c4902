#include "doctest.h"

#include "weilrep/weil_odd.hpp"

#include <random>

using namespace weilrep;

namespace {

OddScenario& scenario(int q, int m) {
    static std::map<std::pair<int, int>, std::unique_ptr<OddScenario>> cache;
    auto key = std::make_pair(q, m);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const GaloisField* F = q == 9 ? GaloisField::get(3, 2) : GaloisField::get(q, 1);
        it = cache.emplace(key, std::make_unique<OddScenario>(F, m)).first;
    }
    return *it->second;
}

}  // namespace

TEST_SUITE("weil-odd") {

TEST_CASE("gauss sums") {
    auto& s3 = scenario(3, 1);
    const Cyclotomic g3 = s3.model()->gauss_sum();
    // gamma = 1 + 2 zeta_3^2 for the base character mod 3
    CHECK(g3 == Cyclotomic::one() + Cyclotomic(2) * Cyclotomic::root_of_unity(3, 2));
    for (int q : {3, 5, 7, 9, 13}) {
        auto& s = scenario(q, 1);
        const Cyclotomic g = s.model()->gauss_sum();
        CHECK(g * g.conj() == Cyclotomic(q));
    }
    // independent counting oracle: gamma conj(gamma) = sum over (x, y) of
    // psi((x^2 - y^2)/2), accumulated as residue counts
    for (int q : {3, 5, 7}) {
        auto& s = scenario(q, 1);
        const auto* F = s.F();
        const int half = F->inv(2);
        std::vector<long long> count(q, 0);
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y)
                ++count[F->mul(half, F->add(F->mul(x, x), F->neg(F->mul(y, y))))];
        Cyclotomic total;
        for (int c = 0; c < q; ++c) total += Cyclotomic(count[c]) * F->psi(c);
        CHECK(total == Cyclotomic(q));
    }
}

TEST_CASE("heisenberg operators multiply") {
    auto& s = scenario(3, 1);
    auto mod = s.model();
    const auto& H = s.heisenberg();
    // central elements act by the character
    for (int k = 0; k < 3; ++k) {
        const CycMatrix c = mod->op_heisenberg({{0, 0}, k});
        CHECK(c == CycMatrix::identity(3).scaled(mod->psi(k)));
    }
    // (e1, 0) is the translation f(y) -> f(e1 + y)
    const CycMatrix tr = mod->op_heisenberg({{1, 0}, 0});
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x) CHECK(tr.at(y, x) == (x == (y + 1) % 3 ? Cyclotomic::one() : Cyclotomic::zero()));
    // (e1*, 0) is the diagonal psi(<y, e1*>)
    const CycMatrix dg = mod->op_heisenberg({{0, 1}, 0});
    for (int y = 0; y < 3; ++y) CHECK(dg.at(y, y) == mod->psi(y));
    // full multiplicativity over all pairs
    for (long long a = 0; a < H.size(); ++a)
        for (long long b = 0; b < H.size(); ++b) {
            const auto ha = H.decode((int)a), hb = H.decode((int)b);
            CHECK(mod->op_heisenberg(ha) * mod->op_heisenberg(hb) == mod->op_heisenberg(H.mul(ha, hb)));
        }
}

TEST_CASE("heisenberg group structure") {
    auto& s = scenario(3, 1);
    const auto& H = s.heisenberg();
    // (e1,0)(e1*,0) = (e1+e1*, 2): <e1, e1*>/2 = 1/2 = 2 in F_3
    const HeisElem prod = H.mul({{1, 0}, 0}, {{0, 1}, 0});
    CHECK(prod.w == std::vector<int>{1, 1});
    CHECK(prod.t == 2);
    // center is exactly 0 x F, and the commutator recovers the form
    auto grp = H.group();
    for (long long a = 0; a < H.size(); ++a) {
        const auto ea = H.decode((int)a);
        bool central = true;
        for (long long b = 0; b < H.size() && central; ++b)
            central = grp->mul((int)a, (int)b) == grp->mul((int)b, (int)a);
        const bool zero_w = std::all_of(ea.w.begin(), ea.w.end(), [](int v) { return v == 0; });
        CHECK(central == zero_w);
        for (long long b = 0; b < H.size(); ++b) {
            const auto eb = H.decode((int)b);
            const int comm = grp->mul(grp->mul((int)a, (int)b), grp->mul(grp->inv((int)a), grp->inv((int)b)));
            const HeisElem c = H.decode(comm);
            CHECK(std::all_of(c.w.begin(), c.w.end(), [](int v) { return v == 0; }));
            CHECK(c.t == s.sp_space().pairing(ea.w, eb.w));
        }
    }
}

TEST_CASE("generator operators match the formulas") {
    auto& s = scenario(3, 1);
    auto mod = s.model();
    // U(0) is the identity
    CHECK(mod->op_token({GenToken::U, {0}}) == CycMatrix::identity(3));
    // D(2): sign chi(2) = -1 times the permutation y -> 2y
    const CycMatrix d2 = mod->op_token({GenToken::D, {2}});
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x)
            CHECK(d2.at(y, x) == (x == 2 * y % 3 ? Cyclotomic(-1) : Cyclotomic::zero()));
    // Omega^4 = identity as operators
    const CycMatrix om = mod->op_token({GenToken::Omega, {}});
    CHECK(om.pow(4) == CycMatrix::identity(3));
    // and Omega^2 matches the operator of omega^2 = -1 in Sp
    const auto omega = s.sp_space().make_omega();
    CHECK(om * om == mod->op_sp(s.sp_space().mul(omega, omega)));
    // unitarity of the generators
    FMatrix b(s.F(), 1);
    b.at(0, 0) = 1;
    for (const CycMatrix& g : {mod->op_token({GenToken::U, {1}}), d2, om})
        CHECK((g * g.conj_transpose()).is_identity());
}

TEST_CASE("true representation of Sp, exhaustive at q=3") {
    auto& s = scenario(3, 1);
    auto mod = s.model();
    const auto& all = s.sp().elements;
    for (const auto& a : all)
        for (const auto& b : all) {
            const CycMatrix lhs = mod->op_sp(a) * mod->op_sp(b);
            CHECK(lhs == mod->op_sp(s.sp_space().mul(a, b)));
        }
}

TEST_CASE("true representation sampled at q=5 and q=7") {
    std::mt19937 rng(17);
    for (int q : {5, 7}) {
        auto& s = scenario(q, 1);
        auto mod = s.model();
        const auto& all = s.sp().elements;
        for (int i = 0; i < 50; ++i) {
            const auto& a = all[rng() % all.size()];
            const auto& b = all[rng() % all.size()];
            CHECK(mod->op_sp(a) * mod->op_sp(b) == mod->op_sp(s.sp_space().mul(a, b)));
        }
    }
}

TEST_CASE("semidirect compatibility and the scalar extension") {
    auto& s = scenario(3, 1);
    auto mod = s.model();
    const auto& H = s.heisenberg();
    // pi(g) pi(h) pi(g)^{-1} = pi(h . g^{-1}) for the untwisted action
    for (const auto& g : s.sp().elements) {
        const CycMatrix pg = mod->op_sp(g);
        const CycMatrix pginv = pg.inverse();
        const auto ginv = s.sp_space().inverse(g);
        for (long long hi = 0; hi < H.size(); ++hi) {
            const auto h = H.decode((int)hi);
            HeisElem hg;
            hg.w = apply_row(h.w, ginv.mat);
            hg.t = h.t;
            CHECK(pg * mod->op_heisenberg(h) * pginv == mod->op_heisenberg(hg));
        }
    }
    // scalar extension at q=3: a = -1 gives -(f -> f(-y))
    const CycMatrix neg = mod->op_scalar(2);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x)
            CHECK(neg.at(y, x) == (x == (3 - y) % 3 ? Cyclotomic(-1) : Cyclotomic::zero()));
    CHECK(mod->op_scalar(1) == CycMatrix::identity(3));
    // the scalar formula is consistent with the Sp operator of the same matrix
    for (int a = 1; a < 3; ++a) {
        SympF aI = s.sp_space().identity();
        for (int& v : aI.mat.a) v = s.F()->mul(a, v);
        aI.lambda = s.F()->mul(a, a);
        CHECK(mod->op_scalar(a) == mod->op_square_similitude(aI));
    }
}

TEST_CASE("partial Fourier oracle at m=2") {
    // the element rotating only the first hyperbolic plane, evaluated
    // through generator factorization, must equal the single-coordinate
    // Fourier kernel with one Gauss-sum normalization
    auto& s = scenario(3, 2);
    auto mod = s.model();
    const auto* F = s.F();
    FMatrix m4(F, 4);
    m4.at(0, 2) = F->neg(1);  // e1 -> -e1*
    m4.at(2, 0) = 1;          // e1* -> e1
    m4.at(1, 1) = 1;
    m4.at(3, 3) = 1;
    const SympF omega_s = s.sp_space().from_matrix(m4);
    REQUIRE(omega_s.lambda == 1);
    const CycMatrix lhs = mod->op_sp(omega_s);
    CycMatrix rhs((int)mod->dim(), (int)mod->dim());
    const Cyclotomic scale = mod->gauss_sum().inverse();
    for (long long yi = 0; yi < mod->dim(); ++yi) {
        const auto y = mod->point(yi);
        for (int x1 = 0; x1 < 3; ++x1) {
            std::vector<int> x = y;
            x[0] = x1;
            rhs.at((int)yi, (int)mod->index_of(x)) = scale * mod->psi(F->neg(F->mul(x1, y[0])));
        }
    }
    CHECK(lhs == rhs);
}

TEST_CASE("enumeration budget is enforced") {
    SymplecticSpace sp(GaloisField::get(7, 1), 1);
    CHECK_THROWS(sp.enumerate_sp(100));
    CHECK(sp.enumerate_sp(400).size() == 336);
}

TEST_CASE("pi is irreducible on Sp|xH and splits in two on Sp") {
    auto& s = scenario(3, 1);
    auto pi = s.pi_sp_h();
    const auto ip = inner_product(pi.character(), pi.character(), *s.sp_h()).rational_value();
    CHECK(ip == Rat(1));
    auto pis = s.pi_sp();
    CHECK(inner_product(pis.character(), pis.character(), *s.sp().group).rational_value() == Rat(2));
}

TEST_CASE("twist invariance of the Sp character") {
    for (int q : {3, 5}) {
        auto& s = scenario(q, 1);
        const auto base = s.pi_sp(1).character();
        for (int t = 1; t < q; ++t) {
            const int tsq = s.F()->mul(t, t);
            if (tsq == 1 && t != 1 && q == 3) continue;  // same twist again
            const auto twisted = s.pi_sp(tsq).character();
            CHECK(base == twisted);
        }
    }
}

TEST_CASE("the scalar extension is multiplicative on the square-similitude group, q=7") {
    auto& s = scenario(7, 1);
    auto mod = s.model();
    const auto& fx = s.fxsp();
    const auto& g = s.gsp();
    std::mt19937 rng(41);
    for (int i = 0; i < 40; ++i) {
        const int a = (int)(rng() % fx.sub->size), b = (int)(rng() % fx.sub->size);
        const auto& ea = g.elements[fx.to_ambient(a)];
        const auto& eb = g.elements[fx.to_ambient(b)];
        const auto prod = s.sp_space().mul(ea, eb);
        CHECK(mod->op_square_similitude(ea) * mod->op_square_similitude(eb) == mod->op_square_similitude(prod));
    }
    // and the scalar formula conjugates the Heisenberg operators to the
    // rescaled points
    const auto& H = s.heisenberg();
    for (int a = 1; a < 7; ++a) {
        const CycMatrix pa = mod->op_scalar(a);
        const CycMatrix painv = pa.inverse();
        const int tau = s.ms().tau(s.F()->mul(a, a));
        for (int hi : {1, 7, 53}) {
            const auto h = H.decode(hi);
            HeisElem moved;  // (v, t) . (a I)^{-1}: v -> tau(a^{-2}) v a^{-1} = (tau(a^2) a)^{-1} v
            const int sc = s.F()->inv(s.F()->mul(tau, a));
            moved.w.resize(h.w.size());
            for (std::size_t k = 0; k < h.w.size(); ++k) moved.w[k] = s.F()->mul(sc, h.w[k]);
            moved.t = h.t;
            CHECK(pa * mod->op_heisenberg(h) * painv == mod->op_heisenberg(moved));
        }
    }
}

TEST_CASE("conjugation by h_t matches a twisted model through an intertwiner, q=5") {
    auto& s = scenario(5, 1);
    auto gh = s.gsp_h_q1();
    const auto& g = s.gsp();
    const long long nh = s.heisenberg().size();
    // Sp |x H inside GSp |x H, with its own index set
    std::vector<int> idx;
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        if (g.elements[i].lambda != 1) continue;
        for (long long h = 0; h < nh; ++h) idx.push_back((int)(i * nh + h));
    }
    auto sub = subgroup_from_indices(gh, idx, "Sp|xH");
    auto to_pi_index = [&](int amb) {
        const int gi = (int)(amb / nh), hi = (int)(amb % nh);
        return (int)((long long)s.sp().find(g.elements[gi].mat) * nh + hi);
    };
    auto pi1 = s.pi_sp_h(1);
    MatrixRep rho1(sub.sub, pi1.dim(), [&, pi1](int x) { return pi1.at(to_pi_index(sub.to_ambient(x))); }, "pi");
    // conjugate by (h_2, 0)
    const int t = 2;
    const int ht = (int)((long long)g.find(s.sp_space().make_h(t).mat) * nh);
    MatrixRep rho2(sub.sub, pi1.dim(),
                   [&, pi1](int x) {
                       const int conj = gh->mul(gh->mul(ht, sub.to_ambient(x)), gh->inv(ht));
                       return pi1.at(to_pi_index(conj));
                   },
                   "pi conj");
    // it agrees with one of the two twisted models psi^t, psi^{1/t}
    bool matched = false;
    for (int tw : {t, s.F()->inv(t)}) {
        auto pit = s.pi_sp_h(tw);
        MatrixRep cand(sub.sub, pit.dim(), [&, pit](int x) { return pit.at(to_pi_index(sub.to_ambient(x))); },
                       "pi twisted");
        if (!(inner_product(rho2.character(), cand.character(), *sub.sub) == Cyclotomic(1))) continue;
        auto gens = greedy_generators(*sub.sub);
        auto M = solve_intertwiner(cand, rho2, gens);
        REQUIRE(M.has_value());
        for (int gen : gens) CHECK(*M * cand.at(gen) == rho2.at(gen) * *M);
        matched = true;
        break;
    }
    CHECK(matched);
}

TEST_CASE("restriction of rho to Sp splits as the two twists, q=3") {
    auto& s = scenario(3, 1);
    auto& rho = s.rho_q3();
    CHECK(rho.rep.dim() == 6);
    // restrict to Sp inside GSp
    const auto& g = s.gsp();
    std::vector<int> sp_idx;
    for (std::size_t i = 0; i < g.elements.size(); ++i)
        if (g.elements[i].lambda == 1) sp_idx.push_back((int)i);
    auto sub = subgroup_from_indices(g.group, sp_idx, "Sp");
    std::vector<Cyclotomic> chi(sub.sub->size);
    for (long long i = 0; i < sub.sub->size; ++i) chi[i] = rho.rep.character_at(sub.to_ambient((int)i));
    // candidates pi_psi and pi_psi^xi pulled to the same index set
    auto mk = [&](int twist) {
        std::vector<Cyclotomic> c(sub.sub->size);
        for (long long i = 0; i < sub.sub->size; ++i)
            c[i] = s.model(twist)->op_sp(g.elements[sub.to_ambient((int)i)]).trace();
        return c;
    };
    const auto d = decompose_against(chi, {mk(1), mk(s.ms().xi())}, *sub.sub);
    CHECK(d.multiplicities == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(d.residual == Rat(0));
}

}  // TEST_SUITE
