#pragma once

#include "weilrep/cyc_matrix.hpp"
#include "weilrep/group_ext.hpp"
#include "weilrep/heisenberg.hpp"
#include "weilrep/rep.hpp"
#include "weilrep/symplectic.hpp"

#include <map>
#include <memory>
#include <optional>

namespace weilrep {

/// The Schroedinger realization on C[X], X = F_q^m, for the character
/// psi_a(x) = zeta_p^{Tr(a x)}.  Operators:
///   heisenberg (x,0)+(x*,0)+(0,k):  f(y) -> psi(k + <x+y, x*>) f(x+y)
///   U(b):                           f(y) -> psi(<y, yb>/2) f(y)
///   D(a):                           f(y) -> chi(det a) f(y a)
///   Omega:                          f(y) -> gamma^{-m} sum_x f(x) psi(<x, y w>)
/// plus the scalar extension for q = 3 mod 4:
///   a I:                            f(y) -> chi(a^m) f(tau(a^2) y a)
/// General Sp elements go through generator factorization; the operators
/// form a true representation, which the verification suites check rather
/// than assume.
class SchrodingerModel {
public:
    SchrodingerModel(const SymplecticSpace& sp, std::shared_ptr<MultiplicativeStructure> ms, int twist = 1);

    const SymplecticSpace& space() const { return sp_; }
    const GaloisField* field() const { return F_; }
    int twist() const { return twist_; }
    long long dim() const { return dim_; }
    const Cyclotomic& gauss_sum() const { return gauss_; }

    Cyclotomic psi(int x) const { return F_->psi(x, twist_); }

    /// X-point enumeration: index = sum_i x_i q^i.
    std::vector<int> point(long long index) const;
    long long index_of(const std::vector<int>& x) const;

    CycMatrix op_heisenberg(const HeisElem& h) const;
    CycMatrix op_token(const GenToken& t) const;
    /// lambda = 1 elements through factorization (memoized).
    const CycMatrix& op_sp(const SympF& g) const;
    /// The scalar extension formula (q = 3 mod 4 only).
    CycMatrix op_scalar(int a) const;
    /// Element with square similitude (q = 3 mod 4): split off the scalar.
    CycMatrix op_square_similitude(const SympF& g) const;
    /// Element with similitude in F_l (q = 1 mod 4): through tau(lambda) g.
    CycMatrix op_l_similitude(const SympF& g) const;

private:
    SymplecticSpace sp_;
    const GaloisField* F_;
    std::shared_ptr<MultiplicativeStructure> ms_;
    int twist_;
    long long dim_;
    Cyclotomic gauss_;
    mutable std::map<std::vector<int>, CycMatrix> sp_cache_;
};

Cyclotomic trace_of_product(const CycMatrix& a, const CycMatrix& b);

/// Materialized matrix group with typed elements and an index lookup.
struct MatrixGroup {
    std::vector<SympF> elements;
    GroupPtr group;
    std::map<std::vector<int>, int> index_of;

    int find(const FMatrix& m) const {
        auto it = index_of.find(m.a);
        return it == index_of.end() ? -1 : it->second;
    }
};

MatrixGroup materialize_sp(const SymplecticSpace& sp, long long budget);
MatrixGroup materialize_gsp(const SymplecticSpace& sp, long long budget);

SubgroupMap subgroup_from_indices(GroupPtr amb, const std::vector<int>& indices, const std::string& name);

/// Everything the odd-characteristic suites touch, per (q, m), built lazily.
class OddScenario {
public:
    OddScenario(const GaloisField* F, int m, long long enum_budget = 1000000);

    int q() const { return F_->q(); }
    int m() const { return m_; }
    int residue_case() const { return F_->q() % 4; }  // 3 or 1

    const GaloisField* F() const { return F_; }
    const SymplecticSpace& sp_space() const { return sp_; }
    const MultiplicativeStructure& ms() const { return *ms_; }
    const HeisenbergGroup& heisenberg() const { return *hw_; }

    const MatrixGroup& sp() ;
    const MatrixGroup& gsp();

    std::shared_ptr<SchrodingerModel> model(int twist = 1);

    /// Sp(W) |x H(W) with the untwisted action, and the Weil representation
    /// pi_{psi^twist} on it.
    GroupPtr sp_h();
    MatrixRep pi_sp_h(int twist = 1);
    /// pi as a representation of Sp(W) alone.
    MatrixRep pi_sp(int twist = 1);

    // --- q = 3 mod 4 layer ---
    /// F^x Sp(W) = {lambda in F^{x2}} as a subgroup of GSp.
    const SubgroupMap& fxsp();
    /// GSp |x H under the sign-twisted action, F^x Sp |x H inside it.
    GroupPtr gsp_h_q3();
    const SubgroupMap& fxsp_h_q3();
    /// pi extended to F^x Sp (group-only), and to F^x Sp |x H.
    MatrixRep pi_fxsp(int twist = 1);
    MatrixRep pi_fxsp_h(int twist = 1);
    /// rho = Ind pi from F^x Sp to GSp (group-only).
    InducedRep& rho_q3();
    /// rho' = Ind pi from F^x Sp |x H to GSp |x H.
    InducedRep& rho_semidirect_q3();
    PgspQuotient& pgsp_q3();

    // --- q = 1 mod 4, projection-twisted layer ---
    const SubgroupMap& flsp();
    GroupPtr gsp_h_q1();
    const SubgroupMap& flsp_h_q1();
    MatrixRep pi_flsp_h(int twist = 1);
    InducedRep& rho_semidirect_q1();
    /// Coset representatives h_t = diag(1, t), t in F_{2^n}.
    const std::vector<int>& h_t_reps_q1();

    // --- q = 1 mod 4, square-root tower layer ---
    TildeTower& tower();
    /// wide group |x H under the scalar-rescaling action.
    GroupPtr wide_h();
    /// the kernel subgroup {[g~, k] : g~ in ~F^{x2} Sp, k = +-1} |x H.
    const SubgroupMap& wide_kernel_h();
    /// sp element of the twisted factor-through map [g~, k] -> tau(g~) g k.
    int varsigma_wide(int wide_index);
    MatrixRep pi_wide_kernel_h(int twist = 1);
    InducedRep& rho_wide();
    /// Sp |x H embedded in wide |x H.
    SubgroupMap sp_h_in_wide();
    /// Sp embedded in PGSp+- (tower quotient) with the induced rho there.
    InducedRep& rho_pgsp_tower();

    long long enum_budget() const { return budget_; }

private:
    const GaloisField* F_;
    int m_;
    long long budget_;
    SymplecticSpace sp_;
    std::shared_ptr<MultiplicativeStructure> ms_;
    std::shared_ptr<HeisenbergGroup> hw_;

    std::optional<MatrixGroup> sp_g_, gsp_g_;
    std::map<int, std::shared_ptr<SchrodingerModel>> models_;
    GroupPtr sp_h_;
    std::map<int, MatrixRep> pi_sp_h_, pi_sp_, pi_fxsp_, pi_fxsp_h_, pi_flsp_h_, pi_wide_kernel_h_;
    std::map<int, std::vector<CycMatrix>> op_h_cache_;  // per twist, by H index
    std::map<int, std::vector<CycMatrix>> op_sp_cache_; // per twist, by Sp index

    std::optional<SubgroupMap> fxsp_, fxsp_h_, flsp_, flsp_h_, wide_kernel_h_;
    GroupPtr gsp_h_q3_, gsp_h_q1_, wide_h_;
    std::optional<InducedRep> rho_q3_, rho_semi_q3_, rho_semi_q1_, rho_wide_, rho_pgsp_tower_;
    std::optional<PgspQuotient> pgsp_q3_;
    std::optional<TildeTower> tower_;
    std::vector<int> h_t_reps_;

    const std::vector<CycMatrix>& h_ops(int twist);
    const std::vector<CycMatrix>& sp_ops(int twist);
};

}  // namespace weilrep
