#include "weilrep/suites.hpp"

#include "weilrep/parallel.hpp"

#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

namespace weilrep {

namespace {

using Clock = std::chrono::steady_clock;

class Runner {
public:
    explicit Runner(SuiteReport& report) : report_(report) {}

    void run(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        const auto start = Clock::now();
        try {
            r.witness = body();  // empty or informational note on success
            r.pass = true;
        } catch (const BudgetExceeded& e) {
            r.skipped = true;
            r.witness = e.what();
        } catch (const std::exception& e) {
            r.pass = false;
            r.witness = e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        report_.checks.push_back(std::move(r));
    }

private:
    SuiteReport& report_;
};

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void require_budget(long long needed, long long budget, const char* what) {
    if (needed > budget)
        throw BudgetExceeded(std::string(what) + " needs " + std::to_string(needed) +
                             " elements; raise --budget past that");
}

void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

const GaloisField* field_for(const SuiteOptions& o) {
    if (!o.field_modulus.empty()) {
        // the modulus determines p implicitly: coefficients are reduced mod p,
        // so the caller passes p through q = p^d with the matching degree
        int p = 2;
        while (true) {
            bool ok = true;
            for (int c : o.field_modulus) ok = ok && c < p;
            if (ok) break;
            ++p;
        }
        // smallest prime bound >= all coefficients+1 that matches q
        for (int pp = 2; pp <= o.q; ++pp) {
            bool prime = pp >= 2;
            for (int t = 2; t * t <= pp; ++t)
                if (pp % t == 0) prime = false;
            if (!prime) continue;
            int qq = 1;
            const int deg = (int)o.field_modulus.size() - 1;
            for (int i = 0; i < deg; ++i) qq *= pp;
            if (qq == o.q) return GaloisField::with_modulus(pp, o.field_modulus);
        }
        fail("modulus degree does not match q");
    }
    for (int p = 2; p <= o.q; ++p) {
        bool prime = true;
        for (int t = 2; t * t <= p; ++t)
            if (p % t == 0) prime = false;
        if (!prime) continue;
        int qq = p, d = 1;
        while (qq < o.q) {
            qq *= p;
            ++d;
        }
        if (qq == o.q) return GaloisField::get(p, d);
    }
    fail("q is not a prime power");
}

std::string count_note(long long n, const char* what) {
    std::ostringstream os;
    os << n << " " << what;
    return os.str();
}

// ---------------------------------------------------------------- odd side

void suite_gauss(Runner& r, OddScenario& s) {
    r.run("gauss-sum-norm", [&] {
        const Cyclotomic g = s.model()->gauss_sum();
        require(g * g.conj() == Cyclotomic(s.q()), "gamma conj(gamma) != q");
        return "gamma(psi) conj = " + std::to_string(s.q());
    });
}

void suite_rep(Runner& r, OddScenario& s, const SuiteOptions& o) {
    r.run("true-representation", [&] {
        auto mod = s.model();
        const auto& all = s.sp().elements;
        const long long n = (long long)all.size();
        const bool exhaustive = o.exhaustive || n * n <= 600;
        if (exhaustive) {
            require(n * n <= o.char_budget * 10, "pair budget exceeded");
            std::mutex mtx;
            std::string err;
            parallel_for(n, [&](long long i) {
                for (long long j = 0; j < n; ++j) {
                    if (!(mod->op_sp(all[i]) * mod->op_sp(all[j]) == mod->op_sp(s.sp_space().mul(all[i], all[j])))) {
                        std::lock_guard<std::mutex> lock(mtx);
                        err = "multiplicativity fails at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    }
                }
            });
            require(err.empty(), err);
            return count_note(n * n, "pairs, exhaustive");
        }
        std::mt19937 rng(101);
        for (int i = 0; i < 500; ++i) {
            const auto& a = all[rng() % n];
            const auto& b = all[rng() % n];
            require(mod->op_sp(a) * mod->op_sp(b) == mod->op_sp(s.sp_space().mul(a, b)),
                    "multiplicativity fails at a sampled pair");
        }
        return count_note(500, "sampled pairs");
    });
}

void suite_svn(Runner& r, OddScenario& s, const SuiteOptions& o) {
    r.run("stone-von-neumann", [&] {
        require_budget(s.sp_h()->size, o.char_budget, "the semidirect character sum");
        auto pi = s.pi_sp_h();
        const auto ip = inner_product(pi.character(), pi.character(), *s.sp_h());
        require(ip == Cyclotomic(1), "<chi, chi> = " + ip.str() + " != 1");
        return "<chi,chi> = 1 over " + std::to_string(s.sp_h()->size) + " elements";
    });
    r.run("central-character", [&] {
        auto mod = s.model();
        const long long dim = mod->dim();
        for (int k = 0; k < s.q(); ++k) {
            HeisElem c;
            c.w.assign(2 * s.m(), 0);
            c.t = k;
            require(mod->op_heisenberg(c) == CycMatrix::identity((int)dim).scaled(mod->psi(k)),
                    "central element does not act by psi");
        }
        return std::string();
    });
}

void suite_restriction(Runner& r, OddScenario& s) {
    r.run("similitude-restriction", [&] {
        require(s.q() % 4 == 3, "needs q = 3 mod 4");
        auto& rho = s.rho_q3();
        const auto& g = s.gsp();
        std::vector<int> sp_idx;
        for (std::size_t i = 0; i < g.elements.size(); ++i)
            if (g.elements[i].lambda == 1) sp_idx.push_back((int)i);
        auto sub = subgroup_from_indices(g.group, sp_idx, "Sp");
        std::vector<Cyclotomic> chi(sub.sub->size);
        for (long long i = 0; i < sub.sub->size; ++i) chi[i] = rho.rep.character_at(sub.to_ambient((int)i));
        auto mk = [&](int twist) {
            std::vector<Cyclotomic> c(sub.sub->size);
            for (long long i = 0; i < sub.sub->size; ++i)
                c[i] = s.model(twist)->op_sp(g.elements[sub.to_ambient((int)i)]).trace();
            return c;
        };
        const auto d = decompose_against(chi, {mk(1), mk(s.ms().xi())}, *sub.sub);
        require(d.multiplicities == std::vector<Rat>{Rat(1), Rat(1)},
                "multiplicities are not (1, 1)");
        require(d.residual == Rat(0), "nonzero residual " + d.residual.str());
        return "multiplicities (1,1), residual 0";
    });
}

void suite_irred(Runner& r, OddScenario& s, const SuiteOptions& o) {
    r.run("induced-irreducible", [&] {
        require(s.q() % 4 == 3, "needs q = 3 mod 4");
        require_budget((long long)s.gsp().elements.size() * s.heisenberg().size(), o.char_budget,
                       "the induced character sum");
        auto gh = s.gsp_h_q3();
        auto& rho = s.rho_semidirect_q3();
        // the representation factors through the projective quotient: the
        // central square scalars act trivially
        const auto& g = s.gsp();
        const long long nh = s.heisenberg().size();
        for (int a : s.ms().squares()) {
            FMatrix mat(s.F(), 2 * s.m());
            for (int i = 0; i < 2 * s.m(); ++i) mat.at(i, i) = a;
            const int gi = g.find(mat);
            require(gi >= 0, "central scalar not found");
            require(rho.rep.at((int)((long long)gi * nh)).is_identity(),
                    "central square scalar does not act trivially");
        }
        const auto ip = inner_product(rho.rep.character(), rho.rep.character(), *gh);
        require(ip == Cyclotomic(1), "<chi, chi> = " + ip.str() + " != 1");
        const long long quotient_size = gh->size / (long long)s.ms().squares().size();
        return "<chi,chi> = 1 over the projective semidirect quotient (" + std::to_string(quotient_size) +
               " elements)";
    });
}

void suite_components(Runner& r, OddScenario& s, const SuiteOptions& o) {
    r.run("restriction-components", [&] {
        require(s.q() % 4 == 1, "needs q = 1 mod 4");
        require_budget((long long)s.sp().elements.size() * s.heisenberg().size(), o.char_budget,
                       "the restricted character sum");
        auto gh = s.gsp_h_q1();
        auto& rho = s.rho_semidirect_q1();
        // Sp |x H inside GSp |x H
        const auto& g = s.gsp();
        const long long nh = s.heisenberg().size();
        std::vector<int> idx;
        for (std::size_t i = 0; i < g.elements.size(); ++i) {
            if (g.elements[i].lambda != 1) continue;
            for (long long h = 0; h < nh; ++h) idx.push_back((int)(i * nh + h));
        }
        auto sub = subgroup_from_indices(gh, idx, "Sp|xH");
        require_budget(sub.sub->size, o.char_budget, "the restricted character sum");
        std::vector<Cyclotomic> chi(sub.sub->size);
        parallel_for(sub.sub->size, [&](long long i) { chi[i] = rho.rep.character_at(sub.to_ambient((int)i)); });
        // candidate components pi_{psi^t} for t in the 2-part
        std::vector<std::vector<Cyclotomic>> cands;
        std::vector<int> twists = s.ms().subgroup_2n();
        for (int t : twists) {
            auto pi = s.pi_sp_h(t);
            std::vector<Cyclotomic> c(sub.sub->size);
            // the subgroup of gsp_h and sp_h share the element layout (g, h)
            parallel_for(sub.sub->size, [&](long long i) {
                const int amb = sub.to_ambient((int)i);
                const int gi = (int)(amb / nh), hi = (int)(amb % nh);
                const int spi = s.sp().find(g.elements[gi].mat);
                c[i] = pi.character_at((int)((long long)spi * nh + hi));
            });
            cands.push_back(std::move(c));
        }
        // pairwise inequivalent irreducible candidates
        for (std::size_t i = 0; i < cands.size(); ++i)
            for (std::size_t j = 0; j < cands.size(); ++j) {
                const auto ip = inner_product(cands[i], cands[j], *sub.sub).rational_value();
                require(ip == Rat(i == j ? 1 : 0), "candidates are not orthonormal");
            }
        const auto d = decompose_against(chi, cands, *sub.sub);
        for (const Rat& mlt : d.multiplicities) require(mlt == Rat(1), "multiplicity != 1");
        require(d.residual == Rat(0), "nonzero residual");
        // the induced representation is irreducible upstairs
        if (gh->size <= o.char_budget) {
            const auto ip = inner_product(rho.rep.character(), rho.rep.character(), *gh);
            require(ip == Cyclotomic(1), "induced representation is not irreducible");
        }
        return std::to_string(twists.size()) + " components, each multiplicity 1, residual 0";
    });
}

void suite_tower(Runner& r, OddScenario& s, const SuiteOptions& o) {
    r.run("tower-cocycles", [&] {
        require(s.q() % 4 == 1, "needs q = 1 mod 4");
        auto& T = s.tower();
        const auto* F = s.F();
        const auto& ms = s.ms();
        // c_sqrt on F^{x2}, exhaustive triples
        for (int a : ms.squares())
            for (int b : ms.squares()) {
                require(ms.sqrt_cocycle(a, b) == ms.sqrt_cocycle(b, a), "sqrt cocycle is not symmetric");
                for (int c : ms.squares())
                    require(ms.sqrt_cocycle(a, b) * ms.sqrt_cocycle(F->mul(a, b), c) ==
                                ms.sqrt_cocycle(b, c) * ms.sqrt_cocycle(a, F->mul(b, c)),
                            "sqrt cocycle identity fails");
            }
        // c' and c'' on the order-2 quotient, values in F^{x2} resp. its
        // sign extension; exhaustive
        {
            const int xi = ms.xi();
            auto kl = [&](int cls) { return cls == 0 ? 1 : xi; };
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c) {
                        const int ab = a ^ b, bc = b ^ c;
                        const int lhs = F->mul(c_prime(ms, kl(a), kl(b)), c_prime(ms, kl(ab), kl(c)));
                        const int rhs = F->mul(c_prime(ms, kl(b), kl(c)), c_prime(ms, kl(a), kl(bc)));
                        require(lhs == rhs, "c' identity fails");
                        // c'' multiplies through the sign extension: the sign
                        // parts are c_sqrt values on the squares c' hits
                        const int l2 = ms.sqrt_cocycle(c_prime(ms, kl(a), kl(b)), c_prime(ms, kl(ab), kl(c)));
                        const int r2 = ms.sqrt_cocycle(c_prime(ms, kl(b), kl(c)), c_prime(ms, kl(a), kl(bc)));
                        require(l2 == r2, "c'' identity fails");
                    }
        }
        // c''' on F^x, exhaustive
        for (int a = 1; a < s.q(); ++a)
            for (int b = 1; b < s.q(); ++b)
                for (int c = 1; c < s.q(); ++c)
                    require(c_triple_prime(ms, a, b) * c_triple_prime(ms, F->mul(a, b), c) ==
                                c_triple_prime(ms, b, c) * c_triple_prime(ms, a, F->mul(b, c)),
                            "c''' identity fails");
        // the tower cocycle: exhaustive at the reduced level, sampled above
        auto v = validate_cocycle(T.tower_cocycle);
        require(v.ok, v.witness);
        return "c_sqrt, c', c'', c''', c all pass";
    });
    r.run("tower-structure", [&] {
        auto& T = s.tower();
        // ~F^{x2} = F^x through [a, e] -> sqrt(a) e; the construction of the
        // map already proves it is a bijective homomorphism
        auto iso = sqrt_iso(*T.ms, T.tF2);
        std::set<int> image;
        for (long long x = 0; x < T.tF2.group->size; ++x) image.insert(iso((int)x));
        require((long long)image.size() == (long long)(s.q() - 1), "sqrt map is not bijective");

        // lambda~ is a homomorphism: exhaustive when feasible, else sampled
        const long long n = T.tgsp.group->size;
        if (n * n <= 2000000) {
            for (long long x = 0; x < n; ++x)
                for (long long y = 0; y < n; ++y)
                    require(T.tilde_lambda(T.tgsp.group->mul((int)x, (int)y)) ==
                                T.tFx.group->mul(T.tilde_lambda((int)x), T.tilde_lambda((int)y)),
                            "lambda~ is not a homomorphism");
        } else {
            std::mt19937 rng(7);
            for (int i = 0; i < 100000; ++i) {
                const int x = (int)(rng() % n), y = (int)(rng() % n);
                require(T.tilde_lambda(T.tgsp.group->mul(x, y)) ==
                            T.tFx.group->mul(T.tilde_lambda(x), T.tilde_lambda(y)),
                        "lambda~ is not a homomorphism");
            }
        }
        // nu has central image meeting Sp trivially
        for (long long x = 0; x < T.tF2.group->size; ++x) {
            const int nx = T.nu((int)x);
            for (long long g = 0; g < n; ++g)
                require(T.tgsp.group->mul((int)g, nx) == T.tgsp.group->mul(nx, (int)g), "nu image is not central");
            if (std::binary_search(T.sp_in_tgsp.begin(), T.sp_in_tgsp.end(), nx))
                require(nx == T.tgsp.group->identity, "nu image meets Sp beyond the identity");
        }
        // PGSp+- fits in 1 -> Sp -> PGSp+- -> F^x / F^{x2} -> 1
        std::set<int> sp_img;
        for (int x : T.sp_in_tgsp) sp_img.insert(T.pgsp.proj(x));
        require((long long)sp_img.size() * 2 == T.pgsp.group->size, "the projective quotient has the wrong index");
        return "sizes " + std::to_string(T.tgsp.group->size) + " -> " + std::to_string(T.pgsp.group->size);
    });
    r.run("tau-tilde-identity", [&] {
        auto& T = s.tower();
        const auto* F = s.F();
        const long long n = T.tgsp.group->size;
        auto check_pair = [&](int x, int y) {
            const int lhs = F->mul(T.tau_tilde(x), T.tau_tilde(y));
            const int rhs = F->mul(T.tau_tilde(T.tgsp.group->mul(x, y)), T.tower_cocycle.value(x, y) + 1);
            require(lhs == rhs, "tau~ identity fails");
        };
        if (o.exhaustive && n * n <= 2000000) {
            for (long long x = 0; x < n; ++x)
                for (long long y = 0; y < n; ++y) check_pair((int)x, (int)y);
            return count_note(n * n, "pairs, exhaustive");
        }
        std::mt19937 rng(29);
        for (int i = 0; i < 10000; ++i) check_pair((int)(rng() % n), (int)(rng() % n));
        return count_note(10000, "sampled pairs");
    });
}

void suite_contains(Runner& r, OddScenario& s, const SuiteOptions& o) {
    r.run("contains-every-twist", [&] {
        require(s.q() % 4 == 1, "needs q = 1 mod 4");
        require_budget((long long)s.sp().elements.size() * s.heisenberg().size(), o.char_budget,
                       "the restricted character sum");
        auto& rho = s.rho_wide();
        auto sub = s.sp_h_in_wide();
        std::vector<Cyclotomic> chi(sub.sub->size);
        parallel_for(sub.sub->size, [&](long long i) { chi[i] = rho.rep.character_at(sub.to_ambient((int)i)); });
        const long long nh = s.heisenberg().size();
        std::ostringstream note;
        for (int t = 1; t < s.q(); ++t) {
            auto pi = s.pi_sp_h(t);
            std::vector<Cyclotomic> cand(sub.sub->size);
            parallel_for(sub.sub->size, [&](long long i) {
                const int amb = sub.to_ambient((int)i);
                // layout: ((tgsp, k), h); recover (sp element, h)
                const long long whole = amb;
                const int hi = (int)(whole % nh);
                const int spi = s.varsigma_wide((int)(whole / nh));
                cand[i] = pi.character_at((int)((long long)spi * nh + hi));
            });
            const auto ip = inner_product(chi, cand, *sub.sub).rational_value();
            require(ip >= Rat(1), "multiplicity of twist " + std::to_string(t) + " is " + ip.str());
            note << "m(" << t << ")=" << ip.str() << " ";
        }
        return note.str();
    });
}

void suite_twist(Runner& r, OddScenario& s, const SuiteOptions& o) {
    r.run("twist-invariance", [&] {
        // the sweep materializes one exact matrix per Sp element and twist
        require_budget(s.sp_space().sp_order() * s.model()->dim() * s.model()->dim(), o.char_budget * 10,
                       "the full Sp operator sweep");
        const auto base = s.pi_sp(1).character();
        std::set<int> squares;
        for (int t = 1; t < s.q(); ++t) squares.insert(s.F()->mul(t, t));
        for (int tsq : squares)
            require(s.pi_sp(tsq).character() == base, "square twist changes the Sp character");
        return count_note((long long)squares.size(), "square twists, exhaustive over Sp");
    });
}

void suite_controls_odd(Runner& r, OddScenario& s) {
    r.run("control-perturbed-cocycle", [&] {
        // flip one non-normalized entry of the trivial cocycle on Z/3
        auto z3 = make_cyclic(3);
        TwoCocycle c;
        c.base = z3;
        c.coeff = make_cyclic(2);
        c.value = [](int a, int b) { return a == 1 && b == 1 ? 1 : 0; };
        const auto v = validate_cocycle(c);
        require(!v.ok, "perturbed table passed validation");
        require(!v.witness.empty(), "no witness reported");
        return "witness: " + v.witness;
    });
    r.run("control-sign-flip", [&] {
        auto mod = s.model();
        const CycMatrix flipped = mod->op_token({GenToken::Omega, {}}).scaled(Cyclotomic(-1));
        FMatrix b(s.F(), s.m());
        for (int i = 0; i < s.m(); ++i) b.at(i, i) = 1;
        const auto u = s.sp_space().make_u(b);
        const auto omega_u = s.sp_space().mul(s.sp_space().make_omega(), u);
        require(!(flipped * mod->op_token({GenToken::U, b.a}) == mod->op_sp(omega_u)),
                "sign flip went unnoticed");
        return std::string("flipped Fourier operator breaks multiplicativity");
    });
}

// --------------------------------------------------------------- even side

struct EvenContext {
    std::shared_ptr<EvenSymplecticSpace> space;
    std::shared_ptr<AffineSymplecticGroup> asp;
    std::shared_ptr<EvenWeilFamily> family;
};

EvenContext& even_context(const SuiteOptions& o) {
    static std::map<std::pair<int, int>, EvenContext> cache;
    auto key = std::make_pair(o.d, o.m);
    auto it = cache.find(key);
    if (it == cache.end()) {
        EvenContext ctx;
        ctx.space = std::make_shared<EvenSymplecticSpace>(o.d, o.m);
        ctx.asp = std::make_shared<AffineSymplecticGroup>(ctx.space, false, o.enum_budget);
        it = cache.emplace(key, std::move(ctx)).first;
    }
    return it->second;
}

void suite_even_svn(Runner& r, const SuiteOptions& o) {
    r.run("heisenberg-rep", [&] {
        auto& ctx = even_context(o);
        auto rho = heisenberg_rep_even(*ctx.space);
        long long dim = 1;
        for (int i = 0; i < o.d * o.m; ++i) dim *= 2;
        require(rho.dim() == dim, "dimension is not 2^{dm}");
        const auto& H = ctx.space->heisenberg();
        const auto ip = inner_product(rho.character(), rho.character(), *H.group());
        require(ip == Cyclotomic(1), "<chi,chi> != 1");
        for (int t = 0; t < ctx.space->ring()->size(); ++t) {
            HeisElem c;
            c.w.assign(2 * o.m, 0);
            c.t = t;
            require(rho.at(H.encode(c)) == CycMatrix::identity(rho.dim()).scaled(ctx.space->ring()->psi(t)),
                    "central character is not psi");
        }
        return "dim " + std::to_string(dim) + ", irreducible, central character psi";
    });
    r.run("two-polarizations-equivalent", [&] {
        auto& ctx = even_context(o);
        auto rho1 = heisenberg_rep_even(*ctx.space, true);
        auto rho2 = heisenberg_rep_even(*ctx.space, false);
        auto gens = greedy_generators(*ctx.space->heisenberg().group());
        auto M = solve_intertwiner(rho1, rho2, gens);
        require(M.has_value(), "no intertwiner between the two polarizations");
        for (int s : gens) require(*M * rho1.at(s) == rho2.at(s) * *M, "intertwiner equation fails");
        return std::string();
    });
}

void suite_even_asp(Runner& r, const SuiteOptions& o) {
    r.run("asp-order", [&] {
        auto& ctx = even_context(o);
        const long long expected = ctx.space->sp_f().sp_order() * ctx.asp->hom_count();
        require(ctx.asp->size() == expected, "|ASp| mismatch");
        return "|ASp| = " + std::to_string(ctx.asp->size());
    });
    r.run("asp-closure", [&] {
        auto& ctx = even_context(o);
        // products recompute their Sigma membership; sampled beyond d=1
        std::mt19937 rng(77);
        const long long n = ctx.asp->size();
        const long long pairs = n <= 30 ? n * n : 20000;
        for (long long i = 0; i < pairs; ++i) {
            const int x = n <= 30 ? (int)(i / n) : (int)(rng() % n);
            const int y = n <= 30 ? (int)(i % n) : (int)(rng() % n);
            const int xy = ctx.asp->group()->mul(x, y);  // throws when leaving the coset
            const auto q = ctx.asp->q_table(xy);
            require(ctx.space->sigma_member(ctx.asp->base().elements[ctx.asp->base_part(xy)], q),
                    "product violates the Sigma identity");
        }
        return count_note(pairs, "products checked");
    });
    r.run("no-section-over-sp", [&] {
        auto& ctx = even_context(o);
        require(o.m == 1, "the section search handles m = 1");
        const auto& base = ctx.asp->base();
        auto bgrp = base.group;
        // presentation generators of the base: two involutions with product
        // of order 3 for Sp2(F2) = S3, an involution and an order-3 element
        // with product of order 5 for Sp2(F4) = A5
        const long long oa = 2, ob = o.d == 1 ? 2 : 3, oab = o.d == 1 ? 3 : 5;
        int ga = -1, gb = -1;
        for (long long a = 0; a < bgrp->size && ga < 0; ++a) {
            if (bgrp->element_order((int)a) != oa) continue;
            for (long long b = 0; b < bgrp->size; ++b) {
                if (bgrp->element_order((int)b) != ob) continue;
                if (bgrp->element_order(bgrp->mul((int)a, (int)b)) != oab) continue;
                if ((long long)generated_subgroup(*bgrp, {(int)a, (int)b}).size() != bgrp->size) continue;
                ga = (int)a;
                gb = (int)b;
                break;
            }
        }
        require(ga >= 0, "no presentation pair found in the base group");
        // fiber search: a lift pair satisfying the relations generates a
        // complement, i.e. gives a homomorphic section; the converse is a
        // restriction of any section to the generators
        auto grp = ctx.asp->group();
        const long long nh = ctx.asp->hom_count();
        long long sections = 0;
        for (long long hx = 0; hx < nh; ++hx) {
            const int x = ctx.asp->encode(ga, (int)hx);
            if (grp->power(x, oa) != grp->identity) continue;
            for (long long hy = 0; hy < nh; ++hy) {
                const int y = ctx.asp->encode(gb, (int)hy);
                if (grp->power(y, ob) != grp->identity) continue;
                if (grp->power(grp->mul(x, y), oab) == grp->identity) ++sections;
            }
        }
        require(sections == 0, "found " + std::to_string(sections) +
                                   " generator lifts satisfying the base relations: the extension splits "
                                   "(forced at d=1: H^2 vanishes for the natural module at this size)");
        return std::string("no section found");
    });
}

void suite_even_sigma(Runner& r, const SuiteOptions& o) {
    r.run("sigma-membership", [&] {
        auto& ctx = even_context(o);
        for (const auto& g : ctx.asp->base().elements)
            require(ctx.space->sigma_member(g, ctx.space->sigma_q(g)), "canonical function fails membership");
        return count_note((long long)ctx.asp->base().elements.size(), "canonical members checked");
    });
    r.run("sigma-lift-independence", [&] {
        auto& ctx = even_context(o);
        const auto* R = ctx.space->ring();
        const auto& sp = ctx.space->sp_f();
        // perturb the lift by unipotents that reduce to the identity
        std::vector<RMatrix> perturbations;
        {
            RMatrix u = RMatrix::identity(R, 2 * o.m);
            u.at(0, o.m) = 2;
            perturbations.push_back(u);
            RMatrix l = RMatrix::identity(R, 2 * o.m);
            l.at(o.m, 0) = 2;
            perturbations.push_back(l);
            RMatrix dsc = RMatrix::identity(R, 2 * o.m);
            dsc.at(0, 0) = R->add(1, 2);
            dsc.at(o.m, o.m) = R->inv(R->add(1, 2));
            perturbations.push_back(dsc);
        }
        for (const auto& g : ctx.asp->base().elements) {
            const SympR l1 = ctx.space->sp_r().lift(sp, g);
            const auto q1 = ctx.space->sigma_q_from_lift(l1);
            for (const auto& pert : perturbations) {
                SympR l2{pert * l1.mat, l1.lambda};
                require(ctx.space->sp_r().similitude_of(l2.mat) == l1.lambda, "perturbed lift left the group");
                const auto q2 = ctx.space->sigma_q_from_lift(l2);
                std::vector<int> diff(q1.size());
                for (std::size_t i = 0; i < q1.size(); ++i) diff[i] = R->add(q2[i], R->neg(q1[i]));
                for (std::size_t a = 0; a < diff.size(); ++a) {
                    require(R->mul(2, diff[a]) == 0, "difference leaves 2R");
                    for (std::size_t b = 0; b < diff.size(); ++b) {
                        std::vector<int> sum(2 * o.m);
                        const auto wa = ctx.space->w_point(a), wb = ctx.space->w_point(b);
                        for (int i = 0; i < 2 * o.m; ++i) sum[i] = ctx.space->field()->add(wa[i], wb[i]);
                        require(diff[ctx.space->w_index(sum)] == R->add(diff[a], diff[b]),
                                "difference is not additive");
                    }
                }
            }
        }
        return count_note((long long)ctx.asp->base().elements.size() * 3, "lift pairs compared");
    });
}

void suite_even_mu4(Runner& r, const SuiteOptions& o) {
    r.run("projective-family", [&] {
        auto& ctx = even_context(o);
        if (!ctx.family) ctx.family = std::make_shared<EvenWeilFamily>(ctx.space, ctx.asp);
        // compat with the affine action on generators of H_beta
        const auto& H = ctx.space->heisenberg();
        std::mt19937 rng(3);
        const long long samples = std::min<long long>(ctx.asp->size(), 64);
        for (long long i = 0; i < samples; ++i) {
            const int x = ctx.asp->size() <= 64 ? (int)i : (int)(rng() % ctx.asp->size());
            const CycMatrix& P = ctx.family->P(x);
            require((P * P.conj_transpose()).is_identity(), "family member is not unitary");
            const CycMatrix Pinv = P.conj_transpose();
            for (int s : ctx.family->h_generators()) {
                const int moved = H.encode(ctx.asp->affine_act(H.decode(s), x));
                require(Pinv * ctx.family->heisenberg_rep().at(s) * P == ctx.family->heisenberg_rep().at(moved),
                        "conjugation compatibility fails");
            }
        }
        return count_note(samples, "family members checked");
    });
    r.run("mu4-reduction", [&] {
        auto& ctx = even_context(o);
        if (!ctx.family) ctx.family = std::make_shared<EvenWeilFamily>(ctx.space, ctx.asp);
        auto c = ctx.family->cocycle();
        auto gens = greedy_generators(*ctx.asp->group());
        const bool small = ctx.asp->size() <= 64;
        if (small) {
            auto verdict = validate_cocycle(as_two_cocycle(c));
            require(verdict.ok, verdict.witness);
        }
        auto red = reduce_cocycle_order(c, 4, gens, small);
        require(red.exists, "no reduction to mu_4 exists");
        // informational: does the class already reduce to mu_2?
        auto red2 = reduce_cocycle_order(c, 2, gens, small);
        std::ostringstream note;
        note << "mu_4 reduction exists (generators " << gens.size() << "); mu_2 reduction "
             << (red2.exists ? "exists" : "does not exist");
        return note.str();
    });
    if (o.d == 1) {
        r.run("mu1-reduction-fails", [&] {
            auto& ctx = even_context(o);
            if (!ctx.family) ctx.family = std::make_shared<EvenWeilFamily>(ctx.space, ctx.asp);
            auto c = ctx.family->cocycle();
            auto gens = greedy_generators(*ctx.asp->group());
            auto red = reduce_cocycle_order(c, 1, gens, true);
            require(!red.exists, "the projective class linearizes: the cover would be trivial");
            return std::string("no linearization exists");
        });
    }
}

void suite_even_agsp(Runner& r, const SuiteOptions& o) {
    r.run("agsp-splits-over-torus", [&] {
        auto ctx_space = std::make_shared<EvenSymplecticSpace>(o.d, o.m);
        AffineSymplecticGroup agsp(ctx_space, true, o.enum_budget);
        const auto* F = ctx_space->field();
        std::vector<int> hts;
        for (int t = 1; t < F->q(); ++t) {
            const auto ht = ctx_space->sp_f().make_h(t);
            const auto q = ctx_space->sigma_q(ht);
            require(std::all_of(q.begin(), q.end(), [](int v) { return v == 0; }),
                    "the canonical function of h_t is nonzero");
            hts.push_back(agsp.find(ht, q));
        }
        for (int i = 0; i < (int)hts.size(); ++i)
            for (int j = 0; j < (int)hts.size(); ++j) {
                const auto htij = ctx_space->sp_f().make_h(F->mul(i + 1, j + 1));
                require(agsp.group()->mul(hts[i], hts[j]) == agsp.find(htij, ctx_space->sigma_q(htij)),
                        "the torus section is not a homomorphism");
            }
        // normality of the similitude-1 part and unique factorization
        // x = (kernel part) * (h_{lambda_x}, 0)
        std::mt19937 rng(15);
        const long long samples = std::min<long long>(agsp.size(), 2000);
        for (long long i = 0; i < samples; ++i) {
            const int x = agsp.size() <= 2000 ? (int)i : (int)(rng() % agsp.size());
            const int lam = agsp.base().elements[agsp.base_part(x)].lambda;
            if (lam == 1)
                for (int ht : hts)
                    require(agsp.base().elements[agsp.base_part(agsp.group()->conj(x, ht))].lambda == 1,
                            "conjugation leaves the kernel");
            const int hsec = hts[lam - 1];
            const int kernel_part = agsp.group()->mul(x, agsp.group()->inv(hsec));
            require(agsp.base().elements[agsp.base_part(kernel_part)].lambda == 1, "factorization misses the kernel");
            require(agsp.group()->mul(kernel_part, hsec) == x, "factorization does not recompose");
        }
        std::ostringstream note;
        note << "|AGSp| = " << agsp.size() << ", torus order " << hts.size() << ", split";
        return note.str();
    });
}

}  // namespace

const std::vector<SuiteInfo>& list_suites() {
    static const std::vector<SuiteInfo> infos = {
        {"gauss", "odd", "Gauss sum norm gamma conj(gamma) = q"},
        {"rep", "odd", "the Weil operators form a true representation of Sp"},
        {"svn", "odd", "irreducibility over Sp |x H and the central character"},
        {"restriction", "odd", "restriction of the induced similitude representation to Sp (q = 3 mod 4)"},
        {"irred", "odd", "irreducibility of the induced representation over the projective semidirect product"},
        {"components", "odd", "component count of the restriction for q = 1 mod 4"},
        {"tower", "odd", "square-root tower: cocycles, lambda~, nu, tau~ (q = 1 mod 4)"},
        {"contains", "odd", "the wide induced representation contains every twist (q = 1 mod 4)"},
        {"twist", "odd", "square twists leave the Sp character unchanged"},
        {"controls", "odd", "falsification controls (perturbed cocycle, sign flip)"},
        {"svn", "even", "Heisenberg representation: dimension, irreducibility, uniqueness"},
        {"asp", "even", "affine symplectic group: order, closure, section search"},
        {"sigma", "even", "quadratic functions: membership and lift independence"},
        {"mu4", "even", "projective family cocycle: mu_4 reduction, mu_1 obstruction"},
        {"agsp", "even", "affine similitude group splits over the torus"},
        {"controls", "even", "falsification control (mu_1 reduction refused)"},
    };
    return infos;
}

SuiteReport run_suites(const std::string& parameter_case, const std::vector<std::string>& names,
                       const SuiteOptions& opts) {
    SuiteReport report;
    {
        std::ostringstream os;
        os << parameter_case << " q=" << opts.q << " m=" << opts.m;
        if (parameter_case == "even") os << " d=" << opts.d;
        report.scenario = os.str();
    }
    Runner runner(report);

    std::vector<std::string> selected = names;
    const bool all = std::find(selected.begin(), selected.end(), "all") != selected.end();
    auto want = [&](const char* n) {
        return all || std::find(selected.begin(), selected.end(), std::string(n)) != selected.end();
    };
    // validate names
    for (const auto& n : selected) {
        if (n == "all") continue;
        bool known = false;
        for (const auto& info : list_suites()) known = known || (info.name == n && info.parameter_case == parameter_case);
        if (!known) throw std::invalid_argument("unknown suite '" + n + "' for case " + parameter_case);
    }

    if (parameter_case == "odd") {
        if (opts.q % 2 == 0 || opts.q < 3) throw std::invalid_argument("odd case needs an odd prime power q");
        OddScenario s(field_for(opts), opts.m, opts.enum_budget);
        if (want("gauss")) suite_gauss(runner, s);
        if (want("rep")) suite_rep(runner, s, opts);
        if (want("svn")) suite_svn(runner, s, opts);
        if (want("twist")) suite_twist(runner, s, opts);
        if (opts.q % 4 == 3) {
            if (want("restriction")) suite_restriction(runner, s);
            if (want("irred")) suite_irred(runner, s, opts);
            if (!all && (want("components") || want("tower") || want("contains")))
                throw std::invalid_argument("components/tower/contains need q = 1 mod 4");
        } else {
            if (want("components")) suite_components(runner, s, opts);
            if (want("tower")) suite_tower(runner, s, opts);
            if (want("contains")) suite_contains(runner, s, opts);
            if (!all && (want("restriction") || want("irred")))
                throw std::invalid_argument("restriction/irred need q = 3 mod 4");
        }
        if (want("controls")) suite_controls_odd(runner, s);
    } else if (parameter_case == "even") {
        if (opts.d < 1 || opts.d > 2 || opts.m < 1 || opts.m > 2)
            throw std::invalid_argument("even case supports d in {1,2}, m in {1,2}");
        if (want("svn")) suite_even_svn(runner, opts);
        if (want("asp")) suite_even_asp(runner, opts);
        if (want("sigma")) suite_even_sigma(runner, opts);
        if (want("mu4")) suite_even_mu4(runner, opts);
        if (want("agsp")) suite_even_agsp(runner, opts);
        if (want("controls") && !all && opts.d == 1) {
            // the mu_1 refusal is the falsification control; when "all" runs
            // it is already part of the mu_4 suite
            runner.run("control-mu1-none", [&] {
                auto& ctx = even_context(opts);
                if (!ctx.family) ctx.family = std::make_shared<EvenWeilFamily>(ctx.space, ctx.asp);
                auto c = ctx.family->cocycle();
                auto gens = greedy_generators(*ctx.asp->group());
                auto red = reduce_cocycle_order(c, 1, gens, true);
                require(!red.exists, "the projective class linearizes");
                return std::string("refused, as it must be");
            });
        }
    } else {
        throw std::invalid_argument("case must be 'odd' or 'even'");
    }
    return report;
}

}  // namespace weilrep
