#pragma once

#include "weilrep/cyclotomic.hpp"
#include "weilrep/finite_field.hpp"

#include <vector>

namespace weilrep {

class GaloisRingElement;

/// R = GR(4, d), the degree-d unramified extension of Z/4, presented as
/// (Z/4)[x] modulo the Hensel lift of the F_2 modulus of the residue field
/// F_{2^d}.  Element indices encode coordinate vectors base 4.  The residue
/// field F = R/2R is the interned GaloisField(2, d).
class GaloisRing {
public:
    static const GaloisRing* get(int d);

    int d() const { return d_; }
    int size() const { return q_; }  // 4^d
    const GaloisField* residue_field() const { return F_; }

    GaloisRingElement element(int index) const;
    GaloisRingElement from_int(long long n) const;
    GaloisRingElement zero() const;
    GaloisRingElement one() const;
    GaloisRingElement two() const;

    int add(int a, int b) const { return add_[std::size_t(a) * q_ + b]; }
    int mul(int a, int b) const { return mul_[std::size_t(a) * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    bool is_unit(int a) const { return reduce(a) != 0; }
    int inv(int a) const;
    int pow(int a, long long e) const;

    /// Reduction R -> F = R/2R (coordinates mod 2).
    int reduce(int a) const { return red_[a]; }
    /// Coordinate section F -> R with coordinates in {0, 1}; a set section of
    /// reduce, not a ring map.
    int lift(int f) const { return lift_[f]; }
    /// Multiplicative (Teichmueller) lift F -> R: lift(a)^{2^d}; satisfies
    /// teichmueller(ab) = teichmueller(a) teichmueller(b).
    int teichmueller(int f) const { return teich_[f]; }

    /// Galois-ring trace T: R -> Z/4 (sum of Frobenius twists).
    int trace(int a) const { return trace_[a]; }
    /// The character psi(x) = i^{T(x)}; nontrivial on the ideal 2R, which is
    /// checked once at construction.
    Cyclotomic psi(int x) const { return Cyclotomic::root_of_unity(4, trace(x)); }

private:
    explicit GaloisRing(int d);

    int d_, q_;
    const GaloisField* F_;
    std::vector<int> modulus_;  // over Z/4
    std::vector<int> add_, mul_, neg_, red_, lift_, teich_, trace_;
};

class GaloisRingElement {
public:
    GaloisRingElement() : r_(nullptr), v_(0) {}
    GaloisRingElement(const GaloisRing* r, int v) : r_(r), v_(v) {}

    const GaloisRing* ring() const { return r_; }
    int index() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    GaloisRingElement operator+(GaloisRingElement o) const { return {same(o), r_->add(v_, o.v_)}; }
    GaloisRingElement operator-(GaloisRingElement o) const { return {same(o), r_->add(v_, r_->neg(o.v_))}; }
    GaloisRingElement operator*(GaloisRingElement o) const { return {same(o), r_->mul(v_, o.v_)}; }
    GaloisRingElement operator-() const { return {r_, r_->neg(v_)}; }
    GaloisRingElement inverse() const { return {r_, r_->inv(v_)}; }

    GaloisFieldElement reduced() const { return {r_->residue_field(), r_->reduce(v_)}; }

    bool operator==(GaloisRingElement o) const { return r_ == o.r_ && v_ == o.v_; }
    bool operator!=(GaloisRingElement o) const { return !(*this == o); }

private:
    const GaloisRing* same(GaloisRingElement o) const {
        if (r_ != o.r_) throw std::runtime_error("mixed ring descriptors");
        return r_;
    }
    const GaloisRing* r_;
    int v_;
};

}  // namespace weilrep
