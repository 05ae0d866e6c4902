#include "weilrep/weil_odd.hpp"

#include "weilrep/parallel.hpp"

#include <algorithm>

namespace weilrep {

SchrodingerModel::SchrodingerModel(const SymplecticSpace& sp, std::shared_ptr<MultiplicativeStructure> ms, int twist)
    : sp_(sp), F_(sp.field()), ms_(std::move(ms)), twist_(twist) {
    if (F_->p() == 2) throw std::runtime_error("the Schroedinger model needs odd characteristic");
    if (twist_ == 0) throw std::runtime_error("the character twist must be a unit");
    dim_ = 1;
    for (int i = 0; i < sp_.m(); ++i) dim_ *= F_->q();
    const int half = F_->inv(F_->from_int(2).index());
    gauss_ = Cyclotomic::zero();
    for (int x = 0; x < F_->q(); ++x) gauss_ += psi(F_->mul(half, F_->mul(x, x)));
}

std::vector<int> SchrodingerModel::point(long long index) const {
    std::vector<int> x(sp_.m());
    for (int i = 0; i < sp_.m(); ++i) {
        x[i] = (int)(index % F_->q());
        index /= F_->q();
    }
    return x;
}

long long SchrodingerModel::index_of(const std::vector<int>& x) const {
    long long idx = 0;
    for (int i = sp_.m() - 1; i >= 0; --i) idx = idx * F_->q() + x[i];
    return idx;
}

CycMatrix SchrodingerModel::op_heisenberg(const HeisElem& h) const {
    const int m = sp_.m();
    const int half = F_->inv(F_->from_int(2).index());
    std::vector<int> x(h.w.begin(), h.w.begin() + m);
    std::vector<int> xs(h.w.begin() + m, h.w.end());
    // <x, x*> in the X x X* pairing
    int xxs = 0;
    for (int i = 0; i < m; ++i) xxs = F_->add(xxs, F_->mul(x[i], xs[i]));
    const int k = F_->add(h.t, F_->neg(F_->mul(half, xxs)));
    CycMatrix out((int)dim_, (int)dim_);
    for (long long yi = 0; yi < dim_; ++yi) {
        const std::vector<int> y = point(yi);
        std::vector<int> xy(m);
        int phase = k;
        for (int i = 0; i < m; ++i) {
            xy[i] = F_->add(x[i], y[i]);
            phase = F_->add(phase, F_->mul(xy[i], xs[i]));
        }
        out.at((int)yi, (int)index_of(xy)) = psi(phase);
    }
    return out;
}

CycMatrix SchrodingerModel::op_token(const GenToken& t) const {
    const int m = sp_.m();
    CycMatrix out((int)dim_, (int)dim_);
    switch (t.kind) {
        case GenToken::U: {
            const int half = F_->inv(F_->from_int(2).index());
            for (long long yi = 0; yi < dim_; ++yi) {
                const std::vector<int> y = point(yi);
                int yby = 0;
                for (int j = 0; j < m; ++j) {
                    int ybj = 0;
                    for (int i = 0; i < m; ++i) ybj = F_->add(ybj, F_->mul(y[i], t.payload[i * m + j]));
                    yby = F_->add(yby, F_->mul(y[j], ybj));
                }
                out.at((int)yi, (int)yi) = psi(F_->mul(half, yby));
            }
            return out;
        }
        case GenToken::D: {
            FMatrix a(F_, m);
            a.a = t.payload;
            const int sign = F_->quadratic_character(field_det(a));
            const Cyclotomic val = sign == 1 ? Cyclotomic::one() : Cyclotomic(-1);
            for (long long yi = 0; yi < dim_; ++yi) {
                std::vector<int> ya(m, 0);
                const std::vector<int> y = point(yi);
                for (int j = 0; j < m; ++j)
                    for (int i = 0; i < m; ++i) ya[j] = F_->add(ya[j], F_->mul(y[i], a.at(i, j)));
                out.at((int)yi, (int)index_of(ya)) = val;
            }
            return out;
        }
        case GenToken::Omega: {
            const Cyclotomic scale = gauss_.pow(sp_.m()).inverse();
            for (long long yi = 0; yi < dim_; ++yi) {
                const std::vector<int> y = point(yi);
                for (long long xi = 0; xi < dim_; ++xi) {
                    const std::vector<int> x = point(xi);
                    int dot = 0;  // <x, y w> = -sum x_i y_i
                    for (int i = 0; i < m; ++i) dot = F_->add(dot, F_->mul(x[i], y[i]));
                    out.at((int)yi, (int)xi) = scale * psi(F_->neg(dot));
                }
            }
            return out;
        }
        case GenToken::H:
            throw std::runtime_error("H(t) has no operator in the isometry model");
    }
    throw std::logic_error("unknown token");
}

const CycMatrix& SchrodingerModel::op_sp(const SympF& g) const {
    auto it = sp_cache_.find(g.mat.a);
    if (it != sp_cache_.end()) return it->second;
    const GeneratorWord w = sp_.factorize(g);
    CycMatrix out = CycMatrix::identity((int)dim_);
    for (const auto& t : w) out = out * op_token(t);
    return sp_cache_.emplace(g.mat.a, std::move(out)).first->second;
}

CycMatrix SchrodingerModel::op_scalar(int a) const {
    if (F_->q() % 4 != 3) throw std::runtime_error("the scalar extension formula is the q = 3 mod 4 one");
    const int m = sp_.m();
    const int s = F_->mul(ms_->tau(F_->mul(a, a)), a);  // tau(a^2) a in {+-1}
    const int sign = F_->quadratic_character(F_->pow(a, m));
    const Cyclotomic val = sign == 1 ? Cyclotomic::one() : Cyclotomic(-1);
    CycMatrix out((int)dim_, (int)dim_);
    for (long long yi = 0; yi < dim_; ++yi) {
        const std::vector<int> y = point(yi);
        std::vector<int> sy(m);
        for (int i = 0; i < m; ++i) sy[i] = F_->mul(s, y[i]);
        out.at((int)yi, (int)index_of(sy)) = val;
    }
    return out;
}

CycMatrix SchrodingerModel::op_square_similitude(const SympF& g) const {
    if (!ms_->is_square(g.lambda)) throw std::runtime_error("similitude is not a square");
    // q = 3 mod 4: lambda lies in F^{x2} of odd order l; take its square root
    // there and split g = (a I) g0
    const long long l = (long long)ms_->squares().size();
    const int a = F_->pow(g.lambda, (l + 1) / 2);
    SympF g0 = g;
    const int ainv = F_->inv(a);
    for (int& v : g0.mat.a) v = F_->mul(ainv, v);
    g0.lambda = 1;
    return op_scalar(a) * op_sp(g0);
}

CycMatrix SchrodingerModel::op_l_similitude(const SympF& g) const {
    // q = 1 mod 4 with lambda in F_l: the action factors through tau(lambda) g
    const int s = ms_->tau(g.lambda);
    SympF g0 = g;
    for (int& v : g0.mat.a) v = F_->mul(s, v);
    g0.lambda = 1;
    return op_sp(g0);
}

Cyclotomic trace_of_product(const CycMatrix& a, const CycMatrix& b) {
    Cyclotomic out;
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Cyclotomic& x = a.at(i, k);
            if (x.is_zero()) continue;
            const Cyclotomic& y = b.at(k, i);
            if (!y.is_zero()) out += x * y;
        }
    return out;
}

namespace {

MatrixGroup materialize(const SymplecticSpace& sp, std::vector<SympF> elems) {
    MatrixGroup g;
    g.elements = std::move(elems);
    for (std::size_t i = 0; i < g.elements.size(); ++i) g.index_of.emplace(g.elements[i].mat.a, (int)i);
    auto elements = std::make_shared<std::vector<SympF>>(g.elements);
    auto index = std::make_shared<std::map<std::vector<int>, int>>(g.index_of);
    auto spc = std::make_shared<SymplecticSpace>(sp);
    g.group = make_from_oracle(
        (long long)g.elements.size(), g.index_of.at(sp.identity().mat.a),
        [spc, elements, index](int a, int b) { return index->at(spc->mul((*elements)[a], (*elements)[b]).mat.a); },
        {}, "Sp-like", true);
    return g;
}

}  // namespace

MatrixGroup materialize_sp(const SymplecticSpace& sp, long long budget) {
    return materialize(sp, sp.enumerate_sp(budget));
}

MatrixGroup materialize_gsp(const SymplecticSpace& sp, long long budget) {
    return materialize(sp, sp.enumerate_gsp(budget));
}

SubgroupMap subgroup_from_indices(GroupPtr amb, const std::vector<int>& indices, const std::string& name) {
    auto sorted = std::make_shared<std::vector<int>>(indices);
    std::sort(sorted->begin(), sorted->end());
    auto pos = std::make_shared<std::unordered_map<int, int>>();
    for (std::size_t i = 0; i < sorted->size(); ++i) pos->emplace((*sorted)[i], (int)i);
    auto it = pos->find(amb->identity);
    if (it == pos->end()) throw std::runtime_error("subgroup must contain the identity");
    auto ambp = amb;
    auto sub = make_from_oracle(
        (long long)sorted->size(), it->second,
        [ambp, sorted, pos](int a, int b) {
            const int y = ambp->mul((*sorted)[a], (*sorted)[b]);
            auto jt = pos->find(y);
            if (jt == pos->end()) throw std::runtime_error("index set is not closed under multiplication");
            return jt->second;
        },
        {}, name, sorted->size() <= 2048);
    SubgroupMap out;
    out.sub = sub;
    out.amb = amb;
    out.to_ambient = [sorted](int i) { return (*sorted)[i]; };
    out.from_ambient = [pos](int a) {
        auto jt = pos->find(a);
        return jt == pos->end() ? -1 : jt->second;
    };
    return out;
}

OddScenario::OddScenario(const GaloisField* F, int m, long long enum_budget)
    : F_(F), m_(m), budget_(enum_budget), sp_(F, m) {
    if (F->p() == 2) throw std::runtime_error("odd scenario needs odd q");
    ms_ = std::make_shared<MultiplicativeStructure>(F);
    hw_ = std::make_shared<HeisenbergGroup>(HeisenbergGroup::odd(sp_));
}

const MatrixGroup& OddScenario::sp() {
    if (!sp_g_) sp_g_ = materialize_sp(sp_, budget_);
    return *sp_g_;
}

const MatrixGroup& OddScenario::gsp() {
    if (!gsp_g_) gsp_g_ = materialize_gsp(sp_, budget_);
    return *gsp_g_;
}

std::shared_ptr<SchrodingerModel> OddScenario::model(int twist) {
    auto it = models_.find(twist);
    if (it == models_.end())
        it = models_.emplace(twist, std::make_shared<SchrodingerModel>(sp_, ms_, twist)).first;
    return it->second;
}

const std::vector<CycMatrix>& OddScenario::h_ops(int twist) {
    auto it = op_h_cache_.find(twist);
    if (it == op_h_cache_.end()) {
        auto mod = model(twist);
        std::vector<CycMatrix> ops(hw_->size());
        parallel_for(hw_->size(), [&](long long i) { ops[i] = mod->op_heisenberg(hw_->decode((int)i)); });
        it = op_h_cache_.emplace(twist, std::move(ops)).first;
    }
    return it->second;
}

const std::vector<CycMatrix>& OddScenario::sp_ops(int twist) {
    auto it = op_sp_cache_.find(twist);
    if (it == op_sp_cache_.end()) {
        auto mod = model(twist);
        const auto& s = sp();
        std::vector<CycMatrix> ops(s.elements.size());
        for (std::size_t i = 0; i < s.elements.size(); ++i) ops[i] = mod->op_sp(s.elements[i]);
        it = op_sp_cache_.emplace(twist, std::move(ops)).first;
    }
    return it->second;
}

GroupPtr OddScenario::sp_h() {
    if (!sp_h_) {
        const auto& s = sp();
        auto elements = std::make_shared<std::vector<SympF>>(s.elements);
        auto hw = hw_;
        auto act = hw_->action_table((long long)s.elements.size(), [elements, hw](const HeisElem& h, int g) {
            HeisElem r = h;
            r.w = apply_row(h.w, (*elements)[g].mat);
            return r;
        });
        sp_h_ = semidirect(s.group, hw_->group(), act, "Sp|xH");
    }
    return sp_h_;
}

MatrixRep OddScenario::pi_sp_h(int twist) {
    auto it = pi_sp_h_.find(twist);
    if (it != pi_sp_h_.end()) return it->second;
    auto grp = sp_h();
    const auto& spo = sp_ops(twist);
    const auto& ho = h_ops(twist);
    const long long nh = hw_->size();
    auto spop = std::make_shared<std::vector<CycMatrix>>(spo);
    auto hop = std::make_shared<std::vector<CycMatrix>>(ho);
    MatrixRep rep(
        grp, (int)model(twist)->dim(),
        [spop, hop, nh](int x) { return (*spop)[x / nh] * (*hop)[x % nh]; },
        "pi_psi^" + std::to_string(twist));
    rep.set_character_oracle([spop, hop, nh](int x) { return trace_of_product((*spop)[x / nh], (*hop)[x % nh]); });
    it = pi_sp_h_.emplace(twist, rep).first;
    return it->second;
}

MatrixRep OddScenario::pi_sp(int twist) {
    auto it = pi_sp_.find(twist);
    if (it != pi_sp_.end()) return it->second;
    const auto& spo = sp_ops(twist);
    auto spop = std::make_shared<std::vector<CycMatrix>>(spo);
    MatrixRep rep(sp().group, (int)model(twist)->dim(), [spop](int x) { return (*spop)[x]; },
                  "pi_psi^" + std::to_string(twist) + "|Sp");
    it = pi_sp_.emplace(twist, rep).first;
    return it->second;
}

const SubgroupMap& OddScenario::fxsp() {
    if (!fxsp_) {
        const auto& g = gsp();
        std::vector<int> idx;
        for (std::size_t i = 0; i < g.elements.size(); ++i)
            if (ms_->is_square(g.elements[i].lambda)) idx.push_back((int)i);
        fxsp_ = subgroup_from_indices(g.group, idx, "F^xSp");
    }
    return *fxsp_;
}

GroupPtr OddScenario::gsp_h_q3() {
    if (!gsp_h_q3_) {
        if (q() % 4 != 3) throw std::runtime_error("q3 layer needs q = 3 mod 4");
        const auto& g = gsp();
        auto elements = std::make_shared<std::vector<SympF>>(g.elements);
        auto ms = ms_;
        auto F = F_;
        auto act = hw_->action_table((long long)g.elements.size(), [elements, ms, F](const HeisElem& h, int gi) {
            const auto& g = (*elements)[gi];
            HeisElem r;
            const int tau = ms->tau(g.lambda);
            std::vector<int> v(h.w.size());
            for (std::size_t i = 0; i < h.w.size(); ++i) v[i] = F->mul(tau, h.w[i]);
            r.w = apply_row(v, g.mat);
            const int sign = F->quadratic_character(g.lambda);
            r.t = sign == 1 ? h.t : F->neg(h.t);
            return r;
        });
        gsp_h_q3_ = semidirect(g.group, hw_->group(), act, "GSp|xH");
    }
    return gsp_h_q3_;
}

const SubgroupMap& OddScenario::fxsp_h_q3() {
    if (!fxsp_h_) {
        auto amb = gsp_h_q3();
        const auto& g = gsp();
        const long long nh = hw_->size();
        std::vector<int> idx;
        for (std::size_t i = 0; i < g.elements.size(); ++i) {
            if (!ms_->is_square(g.elements[i].lambda)) continue;
            for (long long h = 0; h < nh; ++h) idx.push_back((int)(i * nh + h));
        }
        fxsp_h_ = subgroup_from_indices(amb, idx, "F^xSp|xH");
    }
    return *fxsp_h_;
}

MatrixRep OddScenario::pi_fxsp(int twist) {
    auto it = pi_fxsp_.find(twist);
    if (it != pi_fxsp_.end()) return it->second;
    const auto& sub = fxsp();
    auto mod = model(twist);
    const auto& g = gsp();
    auto ops = std::make_shared<std::vector<CycMatrix>>(sub.sub->size);
    for (long long i = 0; i < sub.sub->size; ++i)
        (*ops)[i] = mod->op_square_similitude(g.elements[sub.to_ambient((int)i)]);
    MatrixRep rep(sub.sub, (int)mod->dim(), [ops](int x) { return (*ops)[x]; }, "pi|F^xSp");
    it = pi_fxsp_.emplace(twist, rep).first;
    return it->second;
}

MatrixRep OddScenario::pi_fxsp_h(int twist) {
    auto it = pi_fxsp_h_.find(twist);
    if (it != pi_fxsp_h_.end()) return it->second;
    const auto& sub = fxsp_h_q3();
    auto mod = model(twist);
    const auto& g = gsp();
    const auto& ho = h_ops(twist);
    const long long nh = hw_->size();
    // cache the group part by fxsp position
    const auto& fx = fxsp();
    auto gops = std::make_shared<std::vector<CycMatrix>>(fx.sub->size);
    for (long long i = 0; i < fx.sub->size; ++i)
        (*gops)[i] = mod->op_square_similitude(g.elements[fx.to_ambient((int)i)]);
    auto hop = std::make_shared<std::vector<CycMatrix>>(ho);
    auto sub_to_amb = sub.to_ambient;
    auto fx_from_amb = fx.from_ambient;
    auto at = [gops, hop, nh, sub_to_amb, fx_from_amb](int x) {
        const int amb = sub_to_amb(x);
        const int gi = (int)(amb / nh), hi = (int)(amb % nh);
        return (*gops)[fx_from_amb(gi)] * (*hop)[hi];
    };
    MatrixRep rep(sub.sub, (int)mod->dim(), at, "pi|F^xSp|xH");
    rep.set_character_oracle([gops, hop, nh, sub_to_amb, fx_from_amb](int x) {
        const int amb = sub_to_amb(x);
        return trace_of_product((*gops)[fx_from_amb((int)(amb / nh))], (*hop)[amb % nh]);
    });
    it = pi_fxsp_h_.emplace(twist, rep).first;
    return it->second;
}

InducedRep& OddScenario::rho_q3() {
    if (!rho_q3_) {
        const auto& g = gsp();
        const int ha = g.find(sp_.make_h(ms_->xi()).mat);
        rho_q3_ = induce(fxsp(), pi_fxsp(1), {g.group->identity, ha});
    }
    return *rho_q3_;
}

InducedRep& OddScenario::rho_semidirect_q3() {
    if (!rho_semi_q3_) {
        const auto& g = gsp();
        const long long nh = hw_->size();
        const int ha = g.find(sp_.make_h(ms_->xi()).mat);
        rho_semi_q3_ = induce(fxsp_h_q3(), pi_fxsp_h(1),
                              {gsp_h_q3()->identity, (int)((long long)ha * nh)});
    }
    return *rho_semi_q3_;
}

PgspQuotient& OddScenario::pgsp_q3() {
    if (!pgsp_q3_) pgsp_q3_ = quotient_pgsp_q3(sp_, budget_);
    return *pgsp_q3_;
}

const SubgroupMap& OddScenario::flsp() {
    if (!flsp_) {
        const auto& g = gsp();
        const auto& fl = ms_->subgroup_l();
        std::vector<int> idx;
        for (std::size_t i = 0; i < g.elements.size(); ++i)
            if (std::find(fl.begin(), fl.end(), g.elements[i].lambda) != fl.end()) idx.push_back((int)i);
        flsp_ = subgroup_from_indices(g.group, idx, "F_lSp");
    }
    return *flsp_;
}

GroupPtr OddScenario::gsp_h_q1() {
    if (!gsp_h_q1_) {
        if (q() % 4 != 1) throw std::runtime_error("q1 layer needs q = 1 mod 4");
        const auto& g = gsp();
        auto elements = std::make_shared<std::vector<SympF>>(g.elements);
        auto ms = ms_;
        auto F = F_;
        auto act = hw_->action_table((long long)g.elements.size(), [elements, ms, F](const HeisElem& h, int gi) {
            const auto& g = (*elements)[gi];
            HeisElem r;
            const int tau = ms->tau(g.lambda);
            std::vector<int> v(h.w.size());
            for (std::size_t i = 0; i < h.w.size(); ++i) v[i] = F->mul(tau, h.w[i]);
            r.w = apply_row(v, g.mat);
            r.t = F->mul(ms->chi_plus(g.lambda), h.t);
            return r;
        });
        gsp_h_q1_ = semidirect(g.group, hw_->group(), act, "GSp|xH");
    }
    return gsp_h_q1_;
}

const SubgroupMap& OddScenario::flsp_h_q1() {
    if (!flsp_h_) {
        auto amb = gsp_h_q1();
        const auto& g = gsp();
        const auto& fl = ms_->subgroup_l();
        const long long nh = hw_->size();
        std::vector<int> idx;
        for (std::size_t i = 0; i < g.elements.size(); ++i) {
            if (std::find(fl.begin(), fl.end(), g.elements[i].lambda) == fl.end()) continue;
            for (long long h = 0; h < nh; ++h) idx.push_back((int)(i * nh + h));
        }
        flsp_h_ = subgroup_from_indices(amb, idx, "F_lSp|xH");
    }
    return *flsp_h_;
}

MatrixRep OddScenario::pi_flsp_h(int twist) {
    auto it = pi_flsp_h_.find(twist);
    if (it != pi_flsp_h_.end()) return it->second;
    const auto& sub = flsp_h_q1();
    auto mod = model(twist);
    const auto& g = gsp();
    const auto& fl = flsp();
    const auto& ho = h_ops(twist);
    const long long nh = hw_->size();
    auto gops = std::make_shared<std::vector<CycMatrix>>(fl.sub->size);
    for (long long i = 0; i < fl.sub->size; ++i)
        (*gops)[i] = mod->op_l_similitude(g.elements[fl.to_ambient((int)i)]);
    auto hop = std::make_shared<std::vector<CycMatrix>>(ho);
    auto sub_to_amb = sub.to_ambient;
    auto fl_from_amb = fl.from_ambient;
    MatrixRep rep(
        sub.sub, (int)mod->dim(),
        [gops, hop, nh, sub_to_amb, fl_from_amb](int x) {
            const int amb = sub_to_amb(x);
            return (*gops)[fl_from_amb((int)(amb / nh))] * (*hop)[amb % nh];
        },
        "pi|F_lSp|xH");
    rep.set_character_oracle([gops, hop, nh, sub_to_amb, fl_from_amb](int x) {
        const int amb = sub_to_amb(x);
        return trace_of_product((*gops)[fl_from_amb((int)(amb / nh))], (*hop)[amb % nh]);
    });
    it = pi_flsp_h_.emplace(twist, rep).first;
    return it->second;
}

const std::vector<int>& OddScenario::h_t_reps_q1() {
    if (h_t_reps_.empty()) {
        const auto& g = gsp();
        const long long nh = hw_->size();
        for (int t : ms_->subgroup_2n()) {
            const int gi = g.find(sp_.make_h(t).mat);
            h_t_reps_.push_back((int)((long long)gi * nh));
        }
    }
    return h_t_reps_;
}

InducedRep& OddScenario::rho_semidirect_q1() {
    if (!rho_semi_q1_) rho_semi_q1_ = induce(flsp_h_q1(), pi_flsp_h(1), h_t_reps_q1());
    return *rho_semi_q1_;
}

TildeTower& OddScenario::tower() {
    if (!tower_) tower_ = build_tilde_tower(F_, m_, budget_);
    return *tower_;
}

GroupPtr OddScenario::wide_h() {
    if (!wide_h_) {
        auto& T = tower();
        const int qm1 = q() - 1;
        auto elements = std::make_shared<std::vector<SympF>>(T.gsp_elements);
        auto tau = T.tau_tilde;
        auto proj = T.tgsp.proj;
        auto F = F_;
        auto act = hw_->action_table(T.wide.group->size, [elements, tau, proj, F, qm1](const HeisElem& h, int wi) {
            const int tg = wi / qm1;
            const int k = wi % qm1 + 1;  // field index of the central coordinate
            const auto& g = (*elements)[proj(tg)];
            const int s = F->mul(tau(tg), k);
            HeisElem r;
            std::vector<int> v(h.w.size());
            for (std::size_t i = 0; i < h.w.size(); ++i) v[i] = F->mul(s, h.w[i]);
            r.w = apply_row(v, g.mat);
            const int scale = F->mul(F->mul(tau(tg), tau(tg)), F->mul(g.lambda, F->mul(k, k)));
            r.t = F->mul(scale, h.t);
            return r;
        });
        wide_h_ = semidirect(T.wide.group, hw_->group(), act, "wide|xH");
    }
    return wide_h_;
}

const SubgroupMap& OddScenario::wide_kernel_h() {
    if (!wide_kernel_h_) {
        auto& T = tower();
        const int qm1 = q() - 1;
        const long long nh = hw_->size();
        const int neg1 = F_->neg(1);
        std::vector<int> idx;
        for (int tg : T.f2sp_in_tgsp)
            for (int k : {1, neg1})
                for (long long h = 0; h < nh; ++h)
                    idx.push_back((int)(((long long)tg * qm1 + (k - 1)) * nh + h));
        wide_kernel_h_ = subgroup_from_indices(wide_h(), idx, "[Z2x~F^{x2}Sp]|xH");
    }
    return *wide_kernel_h_;
}

int OddScenario::varsigma_wide(int wide_index) {
    auto& T = tower();
    const int qm1 = q() - 1;
    const int tg = wide_index / qm1;
    const int k = wide_index % qm1 + 1;
    const auto& g = T.gsp_elements[T.tgsp.proj(tg)];
    const int s = F_->mul(T.tau_tilde(tg), k);
    FMatrix mat = g.mat;
    for (int& v : mat.a) v = F_->mul(s, v);
    const int si = sp().find(mat);
    if (si < 0) throw std::logic_error("twisted factor-through image is not in Sp");
    return si;
}

MatrixRep OddScenario::pi_wide_kernel_h(int twist) {
    auto it = pi_wide_kernel_h_.find(twist);
    if (it != pi_wide_kernel_h_.end()) return it->second;
    const auto& sub = wide_kernel_h();
    auto mod = model(twist);
    const long long nh = hw_->size();
    const auto& spo = sp_ops(twist);
    const auto& ho = h_ops(twist);
    auto spop = std::make_shared<std::vector<CycMatrix>>(spo);
    auto hop = std::make_shared<std::vector<CycMatrix>>(ho);
    // cache the varsigma image per wide index appearing in the subgroup
    auto vs = std::make_shared<std::unordered_map<int, int>>();
    for (long long i = 0; i < sub.sub->size; ++i) {
        const int amb = sub.to_ambient((int)i);
        const int wi = (int)(amb / nh);
        if (!vs->count(wi)) vs->emplace(wi, varsigma_wide(wi));
    }
    auto sub_to_amb = sub.to_ambient;
    MatrixRep rep(
        sub.sub, (int)mod->dim(),
        [spop, hop, nh, sub_to_amb, vs](int x) {
            const int amb = sub_to_amb(x);
            return (*spop)[vs->at((int)(amb / nh))] * (*hop)[amb % nh];
        },
        "pi|kernel|xH");
    rep.set_character_oracle([spop, hop, nh, sub_to_amb, vs](int x) {
        const int amb = sub_to_amb(x);
        return trace_of_product((*spop)[vs->at((int)(amb / nh))], (*hop)[amb % nh]);
    });
    it = pi_wide_kernel_h_.emplace(twist, rep).first;
    return it->second;
}

InducedRep& OddScenario::rho_wide() {
    if (!rho_wide_) {
        auto& T = tower();
        const int qm1 = q() - 1;
        const long long nh = hw_->size();
        // coset representatives ([h_s, 1], k) for s in {1, xi}, k in {1, xi}
        std::vector<int> reps;
        for (int s : {1, ms_->xi()})
            for (int k : {1, ms_->xi()}) {
                const int gi = gsp().find(sp_.make_h(s).mat);
                const int tg = T.tgsp.make(gi, 0);
                reps.push_back((int)(((long long)tg * qm1 + (k - 1)) * nh));
            }
        rho_wide_ = induce(wide_kernel_h(), pi_wide_kernel_h(1), reps);
    }
    return *rho_wide_;
}

SubgroupMap OddScenario::sp_h_in_wide() {
    auto& T = tower();
    const int qm1 = q() - 1;
    const long long nh = hw_->size();
    const auto& s = sp();
    const auto& g = gsp();
    std::vector<int> idx;
    for (const auto& e : s.elements) {
        const int gi = g.find(e.mat);
        const int tg = T.tgsp.make(gi, 0);
        for (long long h = 0; h < nh; ++h) idx.push_back((int)(((long long)tg * qm1) * nh + h));
    }
    return subgroup_from_indices(wide_h(), idx, "Sp|xH in wide");
}

InducedRep& OddScenario::rho_pgsp_tower() {
    if (!rho_pgsp_tower_) {
        auto& T = tower();
        const auto& s = sp();
        const auto& g = gsp();
        // Sp embedded in the tower quotient
        std::vector<int> img(s.elements.size());
        std::vector<int> idx;
        for (std::size_t i = 0; i < s.elements.size(); ++i) {
            const int gi = g.find(s.elements[i].mat);
            img[i] = T.pgsp.proj(T.tgsp.make(gi, 0));
            idx.push_back(img[i]);
        }
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw std::logic_error("Sp does not embed in the tower quotient");
        auto sub = subgroup_from_indices(T.pgsp.group, idx, "Sp in PGSp+-");
        // rep on the subgroup: map back to Sp elements
        std::unordered_map<int, int> back;
        for (std::size_t i = 0; i < s.elements.size(); ++i) back.emplace(img[i], (int)i);
        const auto& spo = sp_ops(1);
        auto spop = std::make_shared<std::vector<CycMatrix>>(spo);
        auto backp = std::make_shared<std::unordered_map<int, int>>(std::move(back));
        auto to_amb = sub.to_ambient;
        MatrixRep sigma(sub.sub, (int)model(1)->dim(),
                        [spop, backp, to_amb](int x) { return (*spop)[backp->at(to_amb(x))]; }, "pi|Sp in PGSp+-");
        rho_pgsp_tower_ = induce(sub, sigma);
    }
    return *rho_pgsp_tower_;
}

}  // namespace weilrep
