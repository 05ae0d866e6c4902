#include "weilrep/weil_even.hpp"
#include <mutex>
#include <unordered_map>

#include "weilrep/parallel.hpp"

#include <algorithm>

namespace weilrep {

namespace {
const FMatrix& ge_mat(const AffineSymplecticGroup* g, int base_index) {
    return g->base().elements[base_index].mat;
}
}  // namespace

EvenSymplecticSpace::EvenSymplecticSpace(int d, int m)
    : d_(d), m_(m), R_(GaloisRing::get(d)), F_(GaloisRing::get(d)->residue_field()), spF_(F_, m), spR_(R_, m) {
    wsize_ = 1;
    for (int i = 0; i < 2 * m_; ++i) wsize_ *= F_->q();
    beta_.resize(wsize_ * wsize_);
    for (long long a = 0; a < wsize_; ++a) {
        const auto wa = lift_point(w_point(a));
        for (long long b = 0; b < wsize_; ++b) {
            const auto wb = lift_point(w_point(b));
            beta_[a * wsize_ + b] = R_->mul(2, spR_.half_pairing(wa, wb));
        }
    }
    // well-definedness: beta(w, w') is independent of the chosen lifts, since
    // 2 * (w~ + 2u) pairings collapse; checked exhaustively at small sizes
    if (wsize_ <= 16) {
        for (long long a = 0; a < wsize_; ++a)
            for (long long b = 0; b < wsize_; ++b) {
                const auto wa = lift_point(w_point(a)), wb = lift_point(w_point(b));
                for (int ua = 0; ua < R_->size(); ++ua) {
                    auto wa2 = wa;
                    wa2[0] = R_->add(wa2[0], R_->mul(2, ua));
                    if (R_->mul(2, spR_.half_pairing(wa2, wb)) != beta(a, b))
                        throw std::logic_error("beta depends on the lift");
                }
            }
    }
    // the pairing psi(<w, w'>_W) must be nondegenerate
    for (long long a = 1; a < wsize_; ++a) {
        bool hit = false;
        for (long long b = 0; b < wsize_ && !hit; ++b) hit = R_->psi(pairing_w(a, b)) != Cyclotomic::one();
        if (!hit) throw std::logic_error("degenerate pairing on W");
    }
    auto spf = spF_;
    auto self = this;
    hb_ = std::make_shared<HeisenbergGroup>(
        F_, 2 * m_, R_->size(), [R = R_](int a, int b) { return R->add(a, b); },
        [R = R_](int a) { return R->neg(a); },
        [self](const std::vector<int>& a, const std::vector<int>& b) {
            return self->beta_[self->w_index(a) * self->wsize_ + self->w_index(b)];
        },
        "H_beta(W)");
}

std::vector<int> EvenSymplecticSpace::w_point(long long index) const {
    std::vector<int> w(2 * m_);
    for (int i = 0; i < 2 * m_; ++i) {
        w[i] = (int)(index % F_->q());
        index /= F_->q();
    }
    return w;
}

long long EvenSymplecticSpace::w_index(const std::vector<int>& w) const {
    long long idx = 0;
    for (int i = 2 * m_ - 1; i >= 0; --i) idx = idx * F_->q() + w[i];
    return idx;
}

std::vector<int> EvenSymplecticSpace::lift_point(const std::vector<int>& w) const {
    std::vector<int> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = R_->lift(w[i]);
    return out;
}

int EvenSymplecticSpace::pairing_w(long long w1, long long w2) const {
    return R_->add(beta(w1, w2), R_->neg(beta(w2, w1)));
}

std::vector<int> EvenSymplecticSpace::sigma_q_from_lift(const SympR& lift) const {
    std::vector<int> q(wsize_);
    for (long long a = 0; a < wsize_; ++a) {
        const auto wt = lift_point(w_point(a));
        const auto wg = apply_row_ring(wt, lift.mat);
        q[a] = R_->add(spR_.half_pairing(wg, wg), R_->neg(R_->mul(lift.lambda, spR_.half_pairing(wt, wt))));
    }
    return q;
}

std::vector<int> EvenSymplecticSpace::sigma_q(const SympF& g) const {
    return sigma_q_from_lift(spR_.lift(spF_, g));
}

bool EvenSymplecticSpace::sigma_member(const SympF& g, const std::vector<int>& q) const {
    const int lam = R_->teichmueller(g.lambda);
    for (long long a = 0; a < wsize_; ++a) {
        const auto wa = w_point(a);
        const auto wag = apply_row(wa, g.mat);
        for (long long b = 0; b < wsize_; ++b) {
            const auto wb = w_point(b);
            const auto wbg = apply_row(wb, g.mat);
            std::vector<int> sum(2 * m_);
            for (int i = 0; i < 2 * m_; ++i) sum[i] = F_->add(wa[i], wb[i]);
            const int lhs = R_->add(q[w_index(sum)], R_->neg(R_->add(q[a], q[b])));
            const int rhs =
                R_->add(beta(w_index(wag), w_index(wbg)), R_->neg(R_->mul(lam, beta(a, b))));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

AffineSymplecticGroup::AffineSymplecticGroup(std::shared_ptr<EvenSymplecticSpace> space, bool similitude,
                                             long long budget)
    : space_(std::move(space)), similitude_(similitude) {
    const auto& sp = space_->sp_f();
    base_ = similitude_ ? materialize_gsp(sp, budget) : materialize_sp(sp, budget);
    const auto* R = space_->ring();
    const auto* F = space_->field();
    const long long w = space_->wsize();

    canonical_.resize(base_.elements.size());
    parallel_for((long long)base_.elements.size(),
                 [&](long long i) { canonical_[i] = space_->sigma_q(base_.elements[i]); });
    for (std::size_t i = 0; i < base_.elements.size(); ++i)
        if (!space_->sigma_member(base_.elements[i], canonical_[i]))
            throw std::logic_error("canonical quadratic function fails the membership identity");

    // additive maps W -> 2R: free choices on an F_2-basis of W
    const int slots = 2 * space_->m(), bits = space_->d();
    const int nbasis = slots * bits;
    const int twod = 1 << bits;  // |2R|
    long long total = 1;
    for (int i = 0; i < nbasis; ++i) total *= twod;
    if (total * (long long)base_.elements.size() > budget)
        throw std::runtime_error("affine group budget exceeded");
    for (long long code = 0; code < total; ++code) {
        std::vector<int> assign(nbasis);
        long long c = code;
        for (int i = 0; i < nbasis; ++i) {
            assign[i] = R->mul(2, R->lift((int)(c % twod)));
            c /= twod;
        }
        std::vector<int> table(w);
        for (long long a = 0; a < w; ++a) {
            const auto pt = space_->w_point(a);
            int v = 0;
            for (int s = 0; s < slots; ++s)
                for (int b = 0; b < bits; ++b)
                    if ((pt[s] >> b) & 1) v = R->add(v, assign[s * bits + b]);
            table[a] = v;
        }
        hom_index_.emplace(table, (int)homs_.size());
        homs_.push_back(std::move(table));
    }

    auto self = this;
    const long long nh = (long long)homs_.size();
    const long long n = (long long)base_.elements.size() * nh;
    group_ = make_from_oracle(
        n, encode(base_.group->identity, hom_index_.at(std::vector<int>(w, 0))),
        [self, R, F, w, nh](int x, int y) {
            const int gx = self->base_part(x), gy = self->base_part(y);
            const auto qx = self->q_table(x);
            const auto qy = self->q_table(y);
            const auto& ge = self->base_.elements[gx];
            const auto& he = self->base_.elements[gy];
            const int lam = R->teichmueller(he.lambda);
            const int gxy = self->base_.group->mul(gx, gy);
            std::vector<int> q(w);
            for (long long a = 0; a < w; ++a) {
                const auto wa = self->space_->w_point(a);
                const long long wag = self->space_->w_index(apply_row(wa, ge.mat));
                q[a] = R->add(R->mul(lam, qx[a]), qy[wag]);
            }
            // split off the canonical part; landing outside the coset would
            // falsify the construction
            for (long long a = 0; a < w; ++a) q[a] = R->add(q[a], R->neg(self->canonical_[gxy][a]));
            auto it = self->hom_index_.find(q);
            if (it == self->hom_index_.end()) throw std::logic_error("product leaves the Sigma coset");
            return self->encode(gxy, it->second);
        },
        {}, similitude_ ? "AGSp(W)" : "ASp(W)", n <= 2048);
    if (n > 2048) {
        // closed-form inverse: solve (g, q)(g^{-1}, q') = identity
        auto grp = std::const_pointer_cast<FiniteGroup>(group_);
        grp->inv = [self, R, w](int x) {
            const int gx = self->base_part(x);
            const int gi = self->base_.group->inv(gx);
            const auto qx = self->q_table(x);
            const auto& ginv = self->base_.elements[gi];
            const int lam = R->teichmueller(self->base_.elements[gx].lambda);
            // q'(v) = -lam_inv_of_x q(v g^{-1}) with the right twist: from
            // (g,q)(g^{-1},q') = (1, v -> lam' q(v) + q'(v g)), lam' = lift
            // of lambda_{g^{-1}}
            const int lamp = R->teichmueller(ginv.lambda);
            std::vector<int> q(w);
            for (long long a = 0; a < w; ++a) {
                const long long ag = self->space_->w_index(apply_row(self->space_->w_point(a), ge_mat(self, gx)));
                q[ag] = R->neg(R->mul(lamp, qx[a]));
            }
            for (long long a = 0; a < w; ++a) q[a] = R->add(q[a], R->neg(self->canonical_[gi][a]));
            auto it = self->hom_index_.find(q);
            if (it == self->hom_index_.end()) throw std::logic_error("inverse leaves the Sigma coset");
            return self->encode(gi, it->second);
        };
    }
}

std::vector<int> AffineSymplecticGroup::q_table(int idx) const {
    const auto* R = space_->ring();
    std::vector<int> q = canonical_[base_part(idx)];
    const auto& h = homs_[hom_part(idx)];
    for (std::size_t a = 0; a < q.size(); ++a) q[a] = R->add(q[a], h[a]);
    return q;
}

int AffineSymplecticGroup::find(const SympF& g, const std::vector<int>& q) const {
    const int gi = base_.find(g.mat);
    if (gi < 0) throw std::runtime_error("base element not in the group");
    const auto* R = space_->ring();
    std::vector<int> h(q.size());
    for (std::size_t a = 0; a < q.size(); ++a) h[a] = R->add(q[a], R->neg(canonical_[gi][a]));
    auto it = hom_index_.find(h);
    if (it == hom_index_.end()) throw std::runtime_error("function is not in Sigma_g");
    return encode(gi, it->second);
}

HeisElem AffineSymplecticGroup::affine_act(const HeisElem& h, int idx) const {
    const auto* R = space_->ring();
    const auto& g = base_.elements[base_part(idx)];
    HeisElem out;
    out.w = apply_row(h.w, g.mat);
    const auto q = q_table(idx);
    out.t = R->add(h.t, q[space_->w_index(h.w)]);
    return out;
}

MatrixRep heisenberg_rep_even(const EvenSymplecticSpace& space, bool from_dual) {
    const auto& H = space.heisenberg();
    const int m = space.m();
    const auto* F = space.field();
    const auto* R = space.ring();
    // abelian subgroup A = X* x R (or X x R); beta vanishes there
    std::vector<int> aidx;
    for (long long i = 0; i < H.size(); ++i) {
        const auto e = H.decode((int)i);
        bool in = true;
        for (int s = 0; s < m; ++s) in = in && e.w[from_dual ? s : m + s] == 0;
        if (in) aidx.push_back((int)i);
    }
    auto sub = subgroup_from_indices(H.group(), aidx, from_dual ? "X*xR" : "XxR");
    auto Hcopy = H;
    auto sub_to_amb = sub.to_ambient;
    MatrixRep sigma(
        sub.sub, 1,
        [Hcopy, R, sub_to_amb](int i) {
            CycMatrix m1(1, 1);
            m1.at(0, 0) = R->psi(Hcopy.decode(sub_to_amb(i)).t);
            return m1;
        },
        "psi on the abelian slice");
    // coset representatives: the transversal points of the complementary
    // polarization slot, in ascending coordinate order
    std::vector<int> reps;
    long long xcount = 1;
    for (int i = 0; i < m; ++i) xcount *= F->q();
    for (long long x = 0; x < xcount; ++x) {
        HeisElem e;
        e.w.assign(2 * m, 0);
        long long rest = x;
        for (int i = 0; i < m; ++i) {
            e.w[from_dual ? i : m + i] = (int)(rest % F->q());
            rest /= F->q();
        }
        e.t = 0;
        reps.push_back(Hcopy.encode(e));
    }
    auto ind = induce(sub, sigma, reps);
    return ind.rep;
}

EvenWeilFamily::EvenWeilFamily(std::shared_ptr<EvenSymplecticSpace> space, std::shared_ptr<AffineSymplecticGroup> asp)
    : space_(std::move(space)), asp_(std::move(asp)) {
    rho_ = heisenberg_rep_even(*space_);
    const auto& H = space_->heisenberg();
    // a small generating set of H_beta for the intertwiner equations
    h_gens_ = greedy_generators(*H.group());
    // cache rho on the generators and the full matrices per twisted solve
    const long long n = asp_->size();
    P_.resize(n);
    std::mutex err_mtx;
    std::string error;
    parallel_for(n, [&](long long x) {
        try {
            const int xinv = asp_->group()->inv((int)x);
            auto rho = rho_;
            auto aspp = asp_;
            auto Hg = H.group();
            MatrixRep twisted(
                Hg, rho_.dim(),
                [rho, aspp, xinv, &H](int h) { return rho.at(H.encode(aspp->affine_act(H.decode(h), xinv))); },
                "rho twisted");
            auto M = solve_intertwiner(rho_, twisted, h_gens_);
            if (!M) throw std::runtime_error("Heisenberg uniqueness fails: no intertwiner");
            P_[x] = *M;
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(err_mtx);
            if (error.empty()) error = e.what();
        }
    });
    if (!error.empty()) throw std::runtime_error(error);
}

int EvenWeilFamily::cocycle_exp(int x, int y) const {
    static const std::vector<Cyclotomic> mu8 = [] {
        std::vector<Cyclotomic> v;
        for (int k = 0; k < 8; ++k) v.push_back(Cyclotomic::root_of_unity(8, k).lifted_to(8));
        return v;
    }();
    const int xy = asp_->group()->mul(x, y);
    const CycMatrix prod = P_[x] * P_[y];
    const auto ratio = prod.scalar_ratio_to(P_[xy]);
    if (!ratio) throw std::runtime_error("non-scalar defect in the projective family");
    const Cyclotomic lifted = ratio->lifted_to(8);
    for (int k = 0; k < 8; ++k)
        if (lifted.coeffs() == mu8[k].coeffs()) return k;
    throw std::runtime_error("defect scalar outside mu_8: " + ratio->str());
}

ScalarCocycle EvenWeilFamily::cocycle() const {
    ScalarCocycle c;
    c.base = asp_->group();
    c.order = 8;
    const long long n = asp_->size();
    if (n <= 256) {
        auto table = std::make_shared<std::vector<int>>(n * n);
        parallel_for(n, [&](long long x) {
            for (long long y = 0; y < n; ++y) (*table)[x * n + y] = cocycle_exp((int)x, (int)y);
        });
        c.exponent = [table, n](int a, int b) { return (*table)[(long long)a * n + b]; };
        c.value = [table, n](int a, int b) {
            return Cyclotomic::root_of_unity(8, (*table)[(long long)a * n + b]);
        };
        return c;
    }
    auto self = this;
    auto memo = std::make_shared<std::unordered_map<long long, int>>();
    auto mtx = std::make_shared<std::mutex>();
    auto expfn = [self, memo, mtx, n](int a, int b) {
        const long long key = (long long)a * n + b;
        {
            std::lock_guard<std::mutex> lock(*mtx);
            auto it = memo->find(key);
            if (it != memo->end()) return it->second;
        }
        const int e = self->cocycle_exp(a, b);
        std::lock_guard<std::mutex> lock(*mtx);
        memo->emplace(key, e);
        return e;
    };
    c.exponent = expfn;
    c.value = [expfn](int a, int b) { return Cyclotomic::root_of_unity(8, expfn(a, b)); };
    return c;
}

}  // namespace weilrep
