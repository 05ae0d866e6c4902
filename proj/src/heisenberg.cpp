#include "weilrep/heisenberg.hpp"

#include <stdexcept>

namespace weilrep {

int HeisenbergGroup::Ctx::encode(const HeisElem& h) const {
    long long idx = 0;
    for (int i = nw - 1; i >= 0; --i) idx = idx * F->q() + h.w[i];
    return (int)(idx * tsize + h.t);
}

HeisElem HeisenbergGroup::Ctx::decode(int idx) const {
    HeisElem h;
    h.t = idx % tsize;
    long long rest = idx / tsize;
    h.w.resize(nw);
    for (int i = 0; i < nw; ++i) {
        h.w[i] = (int)(rest % F->q());
        rest /= F->q();
    }
    return h;
}

HeisElem HeisenbergGroup::Ctx::mul(const HeisElem& a, const HeisElem& b) const {
    HeisElem r;
    r.w.resize(nw);
    for (int i = 0; i < nw; ++i) r.w[i] = F->add(a.w[i], b.w[i]);
    r.t = t_add(t_add(a.t, b.t), form(a.w, b.w));
    return r;
}

HeisElem HeisenbergGroup::Ctx::inverse(const HeisElem& a) const {
    HeisElem r;
    r.w.resize(nw);
    for (int i = 0; i < nw; ++i) r.w[i] = F->neg(a.w[i]);
    r.t = t_add(t_neg(a.t), t_neg(form(a.w, r.w)));
    return r;
}

HeisenbergGroup::HeisenbergGroup(const GaloisField* coord_field, int ncoords, int center_size,
                                 std::function<int(int, int)> center_add, std::function<int(int)> center_neg,
                                 std::function<int(const std::vector<int>&, const std::vector<int>&)> form,
                                 const std::string& name) {
    ctx_ = std::make_shared<Ctx>();
    ctx_->F = coord_field;
    ctx_->nw = ncoords;
    ctx_->tsize = center_size;
    ctx_->t_add = std::move(center_add);
    ctx_->t_neg = std::move(center_neg);
    ctx_->form = std::move(form);
    long long n = center_size;
    for (int i = 0; i < ncoords; ++i) n *= coord_field->q();
    auto ctx = ctx_;
    ctx_->group = make_from_oracle(
        n, 0, [ctx](int a, int b) { return ctx->encode(ctx->mul(ctx->decode(a), ctx->decode(b))); }, {}, name,
        /*materialize=*/true);
    if (n > 2048) {
        auto g = std::const_pointer_cast<FiniteGroup>(ctx_->group);
        g->inv = [ctx](int a) { return ctx->encode(ctx->inverse(ctx->decode(a))); };
    }
}

HeisenbergGroup HeisenbergGroup::odd(const SymplecticSpace& sp) {
    const auto* F = sp.field();
    if (F->p() == 2) throw std::runtime_error("the odd law needs 1/2");
    const int half = F->inv(2 % F->p() == 0 ? 0 : F->from_int(2).index());
    SymplecticSpace spc = sp;
    return HeisenbergGroup(
        F, sp.dim(), F->q(), [F](int a, int b) { return F->add(a, b); }, [F](int a) { return F->neg(a); },
        [spc, F, half](const std::vector<int>& a, const std::vector<int>& b) {
            return F->mul(half, spc.pairing(a, b));
        },
        "H(W)");
}

HeisenbergGroup HeisenbergGroup::polarized(const SymplecticSpace& sp) {
    const auto* F = sp.field();
    const int m = sp.m();
    return HeisenbergGroup(
        F, sp.dim(), F->q(), [F](int a, int b) { return F->add(a, b); }, [F](int a) { return F->neg(a); },
        [F, m](const std::vector<int>& a, const std::vector<int>& b) {
            int s = 0;
            for (int i = 0; i < m; ++i) s = F->add(s, F->mul(a[i], b[m + i]));
            return s;
        },
        "H_B(W)");
}

std::function<int(int, int)> HeisenbergGroup::action_table(
    long long acting_size, const std::function<HeisElem(const HeisElem&, int)>& act) const {
    auto table = std::make_shared<std::vector<int>>(acting_size * size());
    for (long long g = 0; g < acting_size; ++g)
        for (long long h = 0; h < size(); ++h)
            (*table)[g * size() + h] = encode(act(decode((int)h), (int)g));
    const long long n = size();
    return [table, n](int h, int g) { return (*table)[(long long)g * n + h]; };
}

}  // namespace weilrep
