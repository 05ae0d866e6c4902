#pragma once

#include "weilrep/numbers.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace weilrep {

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Stored in the power basis 1, z, ..., z^{phi(n)-1} of Q(zeta_n), coefficients
/// reduced modulo the n-th cyclotomic polynomial, so equality of values is
/// coefficient equality once conductors are unified.  Conductors are unified
/// lazily by lifting both operands to Q(zeta_lcm); values never carry a larger
/// conductor than an operation forced on them.
class Cyclotomic {
public:
    Cyclotomic() : cond_(1), c_(1, Rat(0)) {}
    explicit Cyclotomic(const Rat& r) : cond_(1), c_(1, r) {}
    explicit Cyclotomic(long long n) : cond_(1), c_(1, Rat(n)) {}

    /// zeta_n^k (k may be negative).
    static Cyclotomic root_of_unity(long long n, long long k);
    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(Rat(1)); }

    long long conductor() const { return cond_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Value as a rational; throws if the element is irrational.
    Rat rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    /// Exact field division; throws on zero divisor.
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic inverse() const;
    Cyclotomic pow(long long e) const;

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Complex conjugation, zeta_n -> zeta_n^{-1}.
    Cyclotomic conj() const;
    /// Galois action zeta_n -> zeta_n^k for gcd(k, n) = 1.
    Cyclotomic galois(long long k) const;

    /// Re-express in Q(zeta_N) for cond | N.
    Cyclotomic lifted_to(long long N) const;

    /// (n, k) with value = zeta_n^k and n minimal, or nullopt when the value
    /// is not a root of unity.  Decided exactly: the roots of unity contained
    /// in Q(zeta_m) form mu_m (m even) resp. mu_2m (m odd).
    std::optional<std::pair<long long, long long>> as_root_of_unity() const;

    std::string str() const;

    /// Construct from raw parts (used by deserialization); reduces nothing,
    /// so the coefficient vector must already have length phi(n).
    static Cyclotomic from_parts(long long n, std::vector<Rat> coeffs);

    /// The n-th cyclotomic polynomial as its integer coefficient vector
    /// (degree phi(n), monic), cached per n.
    static const std::vector<BigInt>& cyclotomic_polynomial(long long n);

    static long long euler_phi(long long n);

    /// Exact square root of a positive rational as a cyclotomic value.
    /// Writes r = s^2 * f with f squarefree and represents sqrt(f) through
    /// quadratic Gauss sums, so the result lives in Q(zeta_{4f}).
    static Cyclotomic sqrt_of_rational(const Rat& r);

private:
    long long cond_;
    std::vector<Rat> c_;

    static Cyclotomic make(long long n, std::vector<Rat> poly);  // reduces mod Phi_n
    void unify(const Cyclotomic& o, Cyclotomic& a, Cyclotomic& b) const;
};

}  // namespace weilrep
