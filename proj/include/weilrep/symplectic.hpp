#pragma once

#include "weilrep/finite_field.hpp"
#include "weilrep/galois_ring.hpp"

#include <cstdint>
#include <vector>

namespace weilrep {

/// Square matrix over an index-arithmetic scalar context (GaloisField or
/// GaloisRing); entries are element indices.
template <class Ctx>
struct SqMatrix {
    const Ctx* ctx = nullptr;
    int n = 0;
    std::vector<int> a;  // row-major indices

    SqMatrix() = default;
    SqMatrix(const Ctx* c, int n_) : ctx(c), n(n_), a(std::size_t(n_) * n_, 0) {}

    int& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    int at(int i, int j) const { return a[std::size_t(i) * n + j]; }

    static SqMatrix identity(const Ctx* c, int n);
    SqMatrix operator*(const SqMatrix& o) const;
    SqMatrix transpose() const;
    bool operator==(const SqMatrix& o) const { return ctx == o.ctx && a == o.a; }
    bool operator!=(const SqMatrix& o) const { return !(*this == o); }
};

using FMatrix = SqMatrix<GaloisField>;
using RMatrix = SqMatrix<GaloisRing>;

/// Row-vector action: (w g)_j = sum_i w_i g_{ij}.
std::vector<int> apply_row(const std::vector<int>& w, const FMatrix& g);
std::vector<int> apply_row_ring(const std::vector<int>& w, const RMatrix& g);

int field_det(const FMatrix& a);

/// Element of GSp_{2m} with its similitude factor cached.  The basis is
/// e_1..e_m, e*_1..e*_m with <e_i, e*_j> = delta_ij and Gram matrix
/// J = [[0, I], [-I, 0]] in the row-vector convention w -> w g.
template <class Ctx>
struct SimilitudeElement {
    SqMatrix<Ctx> mat;
    int lambda = 1;  // scalar index in the context

    bool operator==(const SimilitudeElement& o) const { return mat == o.mat; }
};

using SympF = SimilitudeElement<GaloisField>;
using SympR = SimilitudeElement<GaloisRing>;

/// Generator-word tokens: U(b) upper unipotent with symmetric b, D(a) with
/// invertible a, the rotation Omega ((e_i)w = -e*_i, (e*_i)w = e_i) and the
/// similitude H(t) = diag(1_m, t 1_m).
struct GenToken {
    enum Kind { U, D, Omega, H } kind;
    std::vector<int> payload;  // m*m entries for U/D, single scalar for H, empty for Omega
};

using GeneratorWord = std::vector<GenToken>;

class SymplecticSpace {
public:
    SymplecticSpace(const GaloisField* F, int m) : F_(F), m_(m) {}

    const GaloisField* field() const { return F_; }
    int m() const { return m_; }
    int dim() const { return 2 * m_; }

    SympF make_u(const FMatrix& b) const;      // throws unless b symmetric
    SympF make_d(const FMatrix& a) const;      // throws unless a invertible
    SympF make_omega() const;
    SympF make_h(int t) const;                 // throws unless t is a unit
    SympF make_token(const GenToken& t) const;
    SympF identity() const;
    SympF from_matrix(const FMatrix& g) const;  // computes lambda; throws if not a similitude

    /// <u, v> with respect to the Gram matrix J.
    int pairing(const std::vector<int>& u, const std::vector<int>& v) const;

    /// The unique lambda with g J g^T = lambda J, or -1 if there is none.
    int similitude_of(const FMatrix& g) const;

    SympF mul(const SympF& x, const SympF& y) const;
    SympF inverse(const SympF& x) const;

    /// Factor g in Sp (lambda = 1) as a word in {U, D, Omega}: symplectic
    /// Gaussian elimination on the block decomposition, lower-unipotent
    /// pieces realized as Omega-conjugates of U.
    GeneratorWord factorize(const SympF& g) const;
    SympF evaluate(const GeneratorWord& w) const;

    /// All of Sp (or GSp) by closure of the generator set, sorted by entry
    /// vector; throws when the group order would exceed the budget.
    std::vector<SympF> enumerate_sp(long long budget = 1000000) const;
    std::vector<SympF> enumerate_gsp(long long budget = 1000000) const;

    long long sp_order() const;  // |Sp_{2m}(F_q)| by the product formula

private:
    const GaloisField* F_;
    int m_;
};

/// The even-characteristic companion space over R = GR(4, d) lying above a
/// SymplecticSpace over F_{2^d}.
class RingSymplecticSpace {
public:
    RingSymplecticSpace(const GaloisRing* R, int m) : R_(R), m_(m) {}

    const GaloisRing* ring() const { return R_; }
    int m() const { return m_; }

    RMatrix token_matrix(const GenToken& t, bool teichmueller_h = true) const;
    RMatrix identity() const;
    int similitude_of(const RMatrix& g) const;  // -1 if not a similitude

    /// beta(w, w') = <x-part of w, x*-part of w'> over R.
    int half_pairing(const std::vector<int>& w, const std::vector<int>& w2) const;
    int pairing(const std::vector<int>& u, const std::vector<int>& v) const;

    /// Lift g in GSp over F to GSp over R through a generator word; the
    /// similitude coordinate is lifted multiplicatively so that lifted
    /// similitudes compose.
    SympR lift(const SymplecticSpace& base, const SympF& g) const;

private:
    const GaloisRing* R_;
    int m_;
};

}  // namespace weilrep
