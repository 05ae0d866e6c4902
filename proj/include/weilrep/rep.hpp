#pragma once

#include "weilrep/cyc_matrix.hpp"
#include "weilrep/group.hpp"
#include "weilrep/group_ext.hpp"

#include <optional>

namespace weilrep {

/// A matrix representation given by an oracle on element indices; the
/// character is cached on first use.
class MatrixRep {
public:
    MatrixRep() = default;
    MatrixRep(GroupPtr g, int dim, std::function<CycMatrix(int)> at, const std::string& name = "");

    const GroupPtr& group() const { return G_; }
    int dim() const { return dim_; }
    CycMatrix at(int g) const { return at_(g); }
    const std::string& name() const { return name_; }

    /// chi(g) for every element, computed in parallel on first call;
    /// only sensible for materializable group sizes.
    const std::vector<Cyclotomic>& character() const;

    /// Pointwise character value; prefers the cache, then the installed
    /// oracle, then the matrix trace.
    Cyclotomic character_at(int g) const;

    /// Install a precomputed character table (for induced characters that
    /// are cheaper through the coset formula than through matrices).
    void set_character(std::vector<Cyclotomic> chi) const;
    /// Install a pointwise character oracle.
    void set_character_oracle(std::function<Cyclotomic(int)> chi_at);

private:
    struct CharCache {
        bool ready = false;
        std::vector<Cyclotomic> v;
    };
    GroupPtr G_;
    int dim_ = 0;
    std::function<CycMatrix(int)> at_;
    std::function<Cyclotomic(int)> chi_at_;
    std::string name_;
    std::shared_ptr<CharCache> chi_;  // shared across copies
};

/// (1/|G|) sum over g of chi1(g) * conj(chi2(g)); exact, returned as a
/// cyclotomic (callers asserting rationality use .rational_value()).
Cyclotomic inner_product(const std::vector<Cyclotomic>& chi1, const std::vector<Cyclotomic>& chi2,
                         const FiniteGroup& g);

/// Pointwise character of the restriction along a subgroup embedding.
std::vector<Cyclotomic> restrict_character(const std::vector<Cyclotomic>& chi, const SubgroupMap& h);

struct InducedRep {
    MatrixRep rep;
    std::vector<int> coset_reps;  // ambient indices, reps[0] = identity's coset
};

/// Induction along H <= G with left cosets r H: block-monomial matrices
/// rho(g)_{ij} = sigma(r_i^{-1} g r_j) on membership, zero otherwise.
/// Preferred coset representatives are honored (verified distinct); the rest
/// are found by ascending scan.  The induced character is installed through
/// the coset formula, not the matrices.
InducedRep induce(const SubgroupMap& h, const MatrixRep& sigma, std::vector<int> preferred_reps = {});

/// The induced character evaluated on a single ambient element.
Cyclotomic induced_character_at(const SubgroupMap& h, const std::vector<Cyclotomic>& chi_sub,
                                const std::vector<int>& coset_reps, const std::vector<int>& coset_rep_invs, int g);

struct DecompositionResult {
    std::vector<Rat> multiplicities;
    Rat residual;  // <chi - sum m_i chi_i, same> over the subgroup
};

/// Multiplicities of candidate characters inside chi by exact inner
/// products, plus the norm of the unexplained remainder.
DecompositionResult decompose_against(const std::vector<Cyclotomic>& chi,
                                      const std::vector<std::vector<Cyclotomic>>& candidates, const FiniteGroup& g);

/// M with M rho1(g) = rho2(g) M for all g, determined through a generating
/// set and checked to be unique up to scalar.  Returns nullopt when the
/// representations are inequivalent.  The result is normalized: M unitary
/// (scaling by the square root of the positive rational M0 M0*) and the
/// first nonzero entry positive real.
std::optional<CycMatrix> solve_intertwiner(const MatrixRep& rho1, const MatrixRep& rho2,
                                           const std::vector<int>& generators);

/// Scalar defect table of a projective assignment: c(g,h) with
/// M(g) M(h) = c(g,h) M(gh); throws when a defect is not scalar.
struct ScalarCocycle {
    GroupPtr base;
    long long order = 1;                 // all values lie in mu_order
    std::function<int(int, int)> exponent;  // value = zeta_order^exponent
    std::function<Cyclotomic(int, int)> value;
};

ScalarCocycle extract_cocycle(GroupPtr g, const std::function<const CycMatrix&(int)>& assignment);

/// TwoCocycle view of a ScalarCocycle for the generic validator.
TwoCocycle as_two_cocycle(const ScalarCocycle& c);

/// Coboundary reduction: t: G -> mu_N with c(g,h) t(g) t(h) t(gh)^{-1} in
/// mu_M for all pairs, or nullopt when none exists.  The pair equations are
/// reduced mod N/M; a spanning tree over the generating set expresses every
/// unknown through the generator values, the residual linear system is
/// solved exactly over Z/(N/M), and the result is verified on the requested
/// pair set.  Verifying all (g, s) pairs with s in a generating set is
/// complete: the defect of a normalized 2-cocycle that vanishes on G x S
/// vanishes everywhere by the cocycle identity, induction on word length.
struct CocycleReduction {
    bool exists = false;
    std::vector<int> t_exponent;  // in Z/N, empty when !exists
};

CocycleReduction reduce_cocycle_order(const ScalarCocycle& c, long long target_m,
                                      const std::vector<int>& generators, bool verify_all_pairs);

}  // namespace weilrep
