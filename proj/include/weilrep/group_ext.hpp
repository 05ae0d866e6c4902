#pragma once

#include "weilrep/finite_field.hpp"
#include "weilrep/group.hpp"
#include "weilrep/symplectic.hpp"

#include <optional>

namespace weilrep {

/// 2-cocycle on a finite group with values in an abelian coefficient group,
/// both index-based.  Stored as a closed-form rule; a table can be
/// materialized for exhaustive validation.
struct TwoCocycle {
    GroupPtr base;
    GroupPtr coeff;  // abelian
    std::function<int(int, int)> value;

    /// When the rule factors through a quotient of the base (for pulled-back
    /// cocycles), the reduced base and reduction map allow exhaustive
    /// validation at the reduced level.
    GroupPtr reduced_base;
    std::function<int(int)> reduction;
    std::function<int(int, int)> reduced_value;
};

struct CocycleVerdict {
    bool ok = true;
    std::string witness;  // explanation on failure
};

/// Cocycle identity c(a,b) c(ab,c) = c(b,c) c(a,bc) and normalization
/// c(1,b) = c(b,1) = 1; exhaustive when |base|^3 <= budget, else the reduced
/// form (when present) is checked exhaustively and triples are sampled.
CocycleVerdict validate_cocycle(const TwoCocycle& c, long long budget = 20000000);

/// Central extension attached to a validated cocycle: elements [b, e] with
/// [b1,e1][b2,e2] = [b1 b2, c(b1,b2) e1 e2], index (b * |coeff| + e).
struct CentralExtension {
    GroupPtr group;
    GroupPtr base;
    GroupPtr coeff;
    std::function<int(int)> proj;                 // to base index
    std::function<int(int)> embed_coeff;          // coeff -> central element
    std::function<int(int, int)> make;            // (base, coeff) -> element
};

CentralExtension build_extension(const TwoCocycle& c, const std::string& name = "");

/// The square-root tower for q = 1 mod 4: the sign cocycle extension
/// tF2 = ~F^{x2}, the double-sign extension of F^x, the +-1 extension tGSp
/// of GSp, the similitude lift, the central F^x-extension attached to the
/// pulled-back class, and the quotient PGSp+-.
struct TildeTower {
    const GaloisField* F = nullptr;
    std::shared_ptr<MultiplicativeStructure> ms;

    GroupPtr fx;       // F^x as a group (indices 0..q-2 are not used; element index = field index - 1)
    CentralExtension tF2;   // extension of F^{x2} by {+-1} via the sqrt cocycle
    CentralExtension tFx;   // extension of F^x by {+-1} via c''' (the closed form)
    // GSp layer
    std::vector<SympF> gsp_elements;
    GroupPtr gsp;
    std::function<int(int)> gsp_lambda;   // element -> field index of the similitude
    CentralExtension tgsp;                // extension of GSp by {+-1}
    std::function<int(int)> tilde_lambda; // tGSp index -> tFx index
    std::vector<int> nu_image;            // central copy of tF2 inside tGSp
    std::function<int(int)> nu;           // tF2 index -> tGSp index
    QuotientGroup pgsp;                   // tGSp / nu(tF2)
    std::function<int(int)> tau_tilde;    // tGSp index -> field index of tau
    TwoCocycle tower_cocycle;             // F^x-valued cocycle c on tGSp
    CentralExtension wide;                // central F^x-extension of tGSp
    std::vector<int> sp_in_tgsp;          // embedded Sp(W), ascending tGSp indices
    std::vector<int> f2sp_in_tgsp;        // the index-2 kernel ~F^{x2} Sp(W)
};

/// The isomorphism ~F^{x2} -> F^x, [a, e] -> sqrt(a) e, checked to be a
/// bijective homomorphism; returns the map from extension indices to field
/// indices.
std::function<int(int)> sqrt_iso(const MultiplicativeStructure& ms, const CentralExtension& tF2);

/// c'(t1., t2.) = kappa(t1.) kappa(t2.) kappa(t1. t2.)^{-1} valued in F^{x2};
/// arguments and result are field indices (arguments only matter mod squares).
int c_prime(const MultiplicativeStructure& ms, int t1, int t2);

/// The closed form c'''(t1, t2) in {+1, -1} on F^x.
int c_triple_prime(const MultiplicativeStructure& ms, int t1, int t2);

TildeTower build_tilde_tower(const GaloisField* F, int m, long long budget = 1000000);

/// PGSp+- for q = 3 mod 4: GSp modulo the central scalars a I, a in F^{x2}.
struct PgspQuotient {
    std::vector<SympF> gsp_elements;
    GroupPtr gsp;
    QuotientGroup pgsp;
    std::vector<int> sp_indices;  // ascending GSp indices of Sp
};

PgspQuotient quotient_pgsp_q3(const SymplecticSpace& sp, long long budget = 1000000);

}  // namespace weilrep
