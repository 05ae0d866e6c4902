#pragma once

#include "weilrep/group.hpp"
#include "weilrep/symplectic.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace weilrep {

/// (w, t) with w a coordinate vector over the base field and t a central
/// coordinate in an abelian alphabet (field for the odd laws, Galois ring
/// for the characteristic-2 law).
struct HeisElem {
    std::vector<int> w;
    int t = 0;
};

/// Heisenberg-type group W x T with (w,t)(w',t') = (w+w', t+t'+form(w,w')).
/// The three laws in use differ only in the twisting form:
///   odd:        form(w, w') = <w, w'> / 2        (t in F, p odd)
///   polarized:  form(w, w') = <x, y*>            (t in F)
///   even_beta:  form(w, w') = beta(w, w')        (t in R = GR(4, d))
/// Copyable value type; the group state is shared.
class HeisenbergGroup {
public:
    HeisenbergGroup(const GaloisField* coord_field, int ncoords, int center_size,
                    std::function<int(int, int)> center_add, std::function<int(int)> center_neg,
                    std::function<int(const std::vector<int>&, const std::vector<int>&)> form,
                    const std::string& name);

    static HeisenbergGroup odd(const SymplecticSpace& sp);
    static HeisenbergGroup polarized(const SymplecticSpace& sp);

    const GroupPtr& group() const { return ctx_->group; }
    long long size() const { return ctx_->group->size; }
    int ncoords() const { return ctx_->nw; }
    int center_size() const { return ctx_->tsize; }

    int encode(const HeisElem& h) const { return ctx_->encode(h); }
    HeisElem decode(int idx) const { return ctx_->decode(idx); }

    HeisElem mul(const HeisElem& a, const HeisElem& b) const { return ctx_->mul(a, b); }
    HeisElem inverse(const HeisElem& a) const { return ctx_->inverse(a); }

    int form(const std::vector<int>& a, const std::vector<int>& b) const { return ctx_->form(a, b); }

    /// Index-level right action table from a typed action on elements.
    std::function<int(int, int)> action_table(long long acting_size,
                                              const std::function<HeisElem(const HeisElem&, int)>& act) const;

private:
    struct Ctx {
        const GaloisField* F;
        int nw, tsize;
        std::function<int(int, int)> t_add;
        std::function<int(int)> t_neg;
        std::function<int(const std::vector<int>&, const std::vector<int>&)> form;
        GroupPtr group;

        int encode(const HeisElem& h) const;
        HeisElem decode(int idx) const;
        HeisElem mul(const HeisElem& a, const HeisElem& b) const;
        HeisElem inverse(const HeisElem& a) const;
    };
    std::shared_ptr<Ctx> ctx_;
};

}  // namespace weilrep
