#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weilrep {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& z) { return z.str(); }

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// Throws unless r is an integer that fits in long long.
inline long long to_ll(const Rat& r) {
    if (!is_integer(r)) throw std::runtime_error("expected an integer, got " + r.str());
    return static_cast<long long>(rat_num(r));
}

inline long long mod_ll(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

inline long long gcd_ll(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

inline long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

/// a^e mod n for e >= 0.
inline long long pow_mod_ll(long long a, long long e, long long n) {
    long long r = 1 % n;
    a = mod_ll(a, n);
    while (e > 0) {
        if (e & 1) r = r * a % n;
        a = a * a % n;
        e >>= 1;
    }
    return r;
}

}  // namespace weilrep
