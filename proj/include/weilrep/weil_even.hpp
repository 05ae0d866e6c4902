#pragma once

#include "weilrep/galois_ring.hpp"
#include "weilrep/heisenberg.hpp"
#include "weilrep/rep.hpp"
#include "weilrep/symplectic.hpp"
#include "weilrep/weil_odd.hpp"

#include <optional>

namespace weilrep {

/// W = W~/2W~ over F = F_{2^d} under the free symplectic R-module W~,
/// R = GR(4, d), carrying the R-valued forms
///   <w, w'>_W = 2 <w~, w~'>    and    beta(w, w') = 2 beta~(w~, w~')
/// where beta~(x + x*, y + y*) = <x, y*>.  Both are well defined on W; the
/// construction checks that exhaustively for small sizes.
class EvenSymplecticSpace {
public:
    EvenSymplecticSpace(int d, int m);

    int d() const { return d_; }
    int m() const { return m_; }
    const GaloisRing* ring() const { return R_; }
    const GaloisField* field() const { return F_; }
    const SymplecticSpace& sp_f() const { return spF_; }
    const RingSymplecticSpace& sp_r() const { return spR_; }

    long long wsize() const { return wsize_; }
    std::vector<int> w_point(long long index) const;  // 2m field coordinates
    long long w_index(const std::vector<int>& w) const;

    /// Coordinate lift of a W point to W~.
    std::vector<int> lift_point(const std::vector<int>& w) const;

    int beta(long long w1, long long w2) const { return beta_[w1 * wsize_ + w2]; }
    int pairing_w(long long w1, long long w2) const;  // <.,.>_W = beta - beta^T

    /// The canonical member of Sigma_g built from a similitude lift:
    /// q(w) = beta~(w~ g~, w~ g~) - lambda_{g~} beta~(w~, w~).
    std::vector<int> sigma_q(const SympF& g) const;
    std::vector<int> sigma_q_from_lift(const SympR& lift) const;
    /// Membership test for Sigma_g (the lambda-twisted difference identity).
    bool sigma_member(const SympF& g, const std::vector<int>& q) const;

    /// H_beta(W) = W x R with (w,t)+(w',t') = (w+w', t+t'+beta(w,w')).
    const HeisenbergGroup& heisenberg() const { return *hb_; }

private:
    int d_, m_;
    const GaloisRing* R_;
    const GaloisField* F_;
    SymplecticSpace spF_;
    RingSymplecticSpace spR_;
    long long wsize_;
    std::vector<int> beta_;
    std::shared_ptr<HeisenbergGroup> hb_;
};

/// ASp(W) (over Sp) or AGSp(W) (over GSp): pairs (g, q) with q in Sigma_g,
/// enumerated as canonical-plus-additive offsets.  The multiplication
///   (g, q)(g', q') = (g g', w -> lambda' q(w) + q'(w g))
/// uses the multiplicative (Teichmueller) similitude lift, which is what
/// makes the law associative; every product is checked to land back in the
/// enumerated Sigma coset.
class AffineSymplecticGroup {
public:
    AffineSymplecticGroup(std::shared_ptr<EvenSymplecticSpace> space, bool similitude, long long budget = 1000000);

    const EvenSymplecticSpace& space() const { return *space_; }
    const MatrixGroup& base() const { return base_; }
    long long hom_count() const { return (long long)homs_.size(); }
    const std::vector<int>& hom_table(int i) const { return homs_[i]; }
    const GroupPtr& group() const { return group_; }

    long long size() const { return group_->size; }
    int encode(int base_index, int hom_index) const { return (int)((long long)base_index * homs_.size() + hom_index); }
    int base_part(int idx) const { return (int)(idx / (long long)homs_.size()); }
    int hom_part(int idx) const { return (int)(idx % (long long)homs_.size()); }
    /// Full value table of the quadratic function of an element.
    std::vector<int> q_table(int idx) const;
    /// Element from an explicit pair; throws when q is not in Sigma_g.
    int find(const SympF& g, const std::vector<int>& q) const;

    /// (w, t)(g, q) = (w g, t + q(w)); a right action on H_beta for the
    /// lambda = 1 group.
    HeisElem affine_act(const HeisElem& h, int idx) const;

private:
    std::shared_ptr<EvenSymplecticSpace> space_;
    bool similitude_;
    MatrixGroup base_;
    std::vector<std::vector<int>> canonical_;  // q tables of the transversal
    std::vector<std::vector<int>> homs_;       // additive W -> 2R tables
    std::map<std::vector<int>, int> hom_index_;
    GroupPtr group_;
};

/// The Heisenberg representation of H_beta(W) with central character psi,
/// induced from the abelian subgroup X* x R (or X x R).
MatrixRep heisenberg_rep_even(const EvenSymplecticSpace& space, bool from_dual = true);

/// The projective Weil family over ASp(W): per element the normalized
/// intertwiner P(x) with P(x) rho(h) = rho(h . x^{-1}) P(x); the scalar
/// defects form the mu_8-valued cocycle under study.
class EvenWeilFamily {
public:
    EvenWeilFamily(std::shared_ptr<EvenSymplecticSpace> space, std::shared_ptr<AffineSymplecticGroup> asp);

    const MatrixRep& heisenberg_rep() const { return rho_; }
    const CycMatrix& P(int asp_index) const { return P_[asp_index]; }
    const std::vector<int>& h_generators() const { return h_gens_; }

    /// Exponent of the defect scalar in mu_8: P(x) P(y) = zeta_8^e P(xy);
    /// checked entrywise, throws on a non-scalar defect.
    int cocycle_exp(int x, int y) const;
    ScalarCocycle cocycle() const;

private:
    std::shared_ptr<EvenSymplecticSpace> space_;
    std::shared_ptr<AffineSymplecticGroup> asp_;
    MatrixRep rho_;
    std::vector<CycMatrix> P_;
    std::vector<int> h_gens_;
};

}  // namespace weilrep
