#pragma once

#include "weilrep/cyclotomic.hpp"

#include <memory>
#include <vector>

namespace weilrep {

class GaloisFieldElement;

/// F_q, q = p^d, as a table-driven arithmetic context.  Elements are indices
/// 0..q-1 encoding coordinate vectors (c_0, ..., c_{d-1}) base p against the
/// fixed monic irreducible modulus; descriptors are interned so pointer
/// equality is descriptor equality.
class GaloisField {
public:
    /// Interned field with the built-in modulus table.
    static const GaloisField* get(int p, int d);
    /// Interned field with a caller-supplied monic irreducible modulus
    /// (coefficients c_0..c_d, c_d = 1); irreducibility is checked.
    static const GaloisField* with_modulus(int p, const std::vector<int>& modulus);

    int p() const { return p_; }
    int d() const { return d_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    GaloisFieldElement element(int index) const;
    GaloisFieldElement from_int(long long n) const;  // n mod p embedded via the prime field
    GaloisFieldElement zero() const;
    GaloisFieldElement one() const;

    int add(int a, int b) const { return add_[std::size_t(a) * q_ + b]; }
    int mul(int a, int b) const { return mul_[std::size_t(a) * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;
    int pow(int a, long long e) const;
    int trace(int a) const { return trace_[a]; }  // absolute trace, in 0..p-1

    /// The additive character psi^a with psi(x) = zeta_p^{Tr(x)}.
    Cyclotomic psi(int x, int a_twist = 1) const;

    /// a^{(q-1)/2} read in {+1,-1}, 0 for a = 0.
    int quadratic_character(int a) const;

    std::string str() const;

private:
    GaloisField(int p, const std::vector<int>& modulus);

    int p_, d_, q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_;
    std::vector<int> inv_;
    std::vector<int> trace_;
};

/// An element of an interned GaloisField; value semantics, operators check
/// that both operands carry the same descriptor.
class GaloisFieldElement {
public:
    GaloisFieldElement() : f_(nullptr), v_(0) {}
    GaloisFieldElement(const GaloisField* f, int v) : f_(f), v_(v) {}

    const GaloisField* field() const { return f_; }
    int index() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    GaloisFieldElement operator+(GaloisFieldElement o) const { return {same(o), f_->add(v_, o.v_)}; }
    GaloisFieldElement operator-(GaloisFieldElement o) const { return {same(o), f_->add(v_, f_->neg(o.v_))}; }
    GaloisFieldElement operator*(GaloisFieldElement o) const { return {same(o), f_->mul(v_, o.v_)}; }
    GaloisFieldElement operator/(GaloisFieldElement o) const { return {same(o), f_->mul(v_, f_->inv(o.v_))}; }
    GaloisFieldElement operator-() const { return {f_, f_->neg(v_)}; }
    GaloisFieldElement inverse() const { return {f_, f_->inv(v_)}; }
    GaloisFieldElement pow(long long e) const { return {f_, f_->pow(v_, e)}; }

    bool operator==(GaloisFieldElement o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(GaloisFieldElement o) const { return !(*this == o); }

private:
    const GaloisField* same(GaloisFieldElement o) const {
        if (f_ != o.f_) throw std::runtime_error("mixed field descriptors");
        return f_;
    }
    const GaloisField* f_;
    int v_;
};

/// Decomposition F^x = F_l x F_{2^n} (q odd, q-1 = 2^n l with l odd), with the
/// fixed generator, discrete logs, the square-root section and its sign
/// cocycle, and the tau / chi^+ structure maps.
class MultiplicativeStructure {
public:
    explicit MultiplicativeStructure(const GaloisField* F);

    const GaloisField* field() const { return F_; }
    int generator() const { return g_; }
    long long l() const { return l_; }
    int n() const { return n_; }
    int dlog(int a) const;  // a = g^dlog(a), a != 0

    bool is_square(int a) const;  // a != 0
    const std::vector<int>& squares() const { return squares_; }
    const std::vector<int>& subgroup_l() const { return F_l_; }
    const std::vector<int>& subgroup_2n() const { return F_2n_; }

    /// Section sqrt(g^{2j}) = g^j, 0 <= j < (q-1)/2; sqrt(1) = 1.
    int sqrt_section(int a) const;
    /// c(a,b) in {+1,-1} with sqrt(a)sqrt(b) = c(a,b)sqrt(ab), a, b squares.
    int sqrt_cocycle(int a, int b) const;

    /// tau on F^x.  For q = 3 mod 4 the defining domain is F^{x2} (extended
    /// trivially over {+-1}); for q = 1 mod 4 it is F_l (extended trivially
    /// over F_{2^n}).  On the domain, tau(w^{2k}) = w^{-k} for the fixed
    /// generator w of the domain.
    int tau(int a) const;
    /// Projection F^x -> F_{2^n} along F^x = F_l x F_{2^n} (q = 1 mod 4).
    int chi_plus(int a) const;

    /// The fixed nonsquare coset representative (the generator itself).
    int xi() const { return g_; }
    /// kappa: F^x/F^{x2} -> F^x as the section {1, xi}.
    int kappa_of(int a) const { return is_square(a) ? F_->one().index() : xi(); }

    /// a_t with t = a_t^2 * kappa(class of t), chosen through the sqrt section.
    int square_part_root(int t) const;

private:
    const GaloisField* F_;
    int g_;
    long long l_;
    int n_;
    std::vector<int> dlog_;
    std::vector<int> squares_, F_l_, F_2n_;
};

}  // namespace weilrep
