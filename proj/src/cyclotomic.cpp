#include "weilrep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace weilrep {

namespace {

// Exact division of integer polynomials, quotient of (x^n - 1) factors.
std::vector<BigInt> poly_div_exact(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num;
    std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
    for (long long k = (long long)quot.size() - 1; k >= 0; --k) {
        BigInt c = rem[k + den.size() - 1] / den.back();
        quot[k] = c;
        if (c != 0)
            for (std::size_t i = 0; i < den.size(); ++i) rem[k + i] -= c * den[i];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw std::logic_error("non-exact polynomial division");
    return quot;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> d;
    for (long long i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

long long Cyclotomic::euler_phi(long long n) {
    long long r = n;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d; caller holds the cache lock.
const std::vector<BigInt>& phi_poly_locked(std::map<long long, std::vector<BigInt>>& cache, long long n) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (long long d : divisors(n)) {
        if (d == n) continue;
        num = poly_div_exact(num, phi_poly_locked(cache, d));
    }
    return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<BigInt>& Cyclotomic::cyclotomic_polynomial(long long n) {
    static std::map<long long, std::vector<BigInt>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return phi_poly_locked(cache, n);
}

Cyclotomic Cyclotomic::make(long long n, std::vector<Rat> poly) {
    const auto& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;  // phi(n)
    // reduce poly mod Phi_n (monic), then trim/extend to length deg
    for (long long k = (long long)poly.size() - 1; k >= (long long)deg; --k) {
        Rat c = poly[k];
        if (c != 0) {
            for (std::size_t i = 0; i < phi.size(); ++i)
                poly[k - deg + i] -= c * Rat(phi[i]);
        }
    }
    poly.resize(deg);
    Cyclotomic out;
    out.cond_ = n;
    out.c_ = std::move(poly);
    return out;
}

Cyclotomic Cyclotomic::from_parts(long long n, std::vector<Rat> coeffs) {
    if ((long long)coeffs.size() != euler_phi(n)) throw std::runtime_error("coefficient count must be phi(n)");
    Cyclotomic out;
    out.cond_ = n;
    out.c_ = std::move(coeffs);
    return out;
}

Cyclotomic Cyclotomic::root_of_unity(long long n, long long k) {
    if (n < 1) throw std::runtime_error("root_of_unity: order must be positive");
    k = mod_ll(k, n);
    std::vector<Rat> poly(k + 1, Rat(0));
    poly[k] = 1;
    return make(n, std::move(poly));
}

bool Cyclotomic::is_zero() const {
    for (const Rat& r : c_)
        if (r != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::runtime_error("value is not rational: " + str());
    return c_[0];
}

Cyclotomic Cyclotomic::lifted_to(long long N) const {
    if (N == cond_) return *this;
    if (N % cond_ != 0) throw std::runtime_error("conductor lift must be a multiple");
    const long long step = N / cond_;
    std::vector<Rat> poly((c_.size() - 1) * step + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
    return make(N, std::move(poly));
}

void Cyclotomic::unify(const Cyclotomic& o, Cyclotomic& a, Cyclotomic& b) const {
    const long long N = lcm_ll(cond_, o.cond_);
    a = lifted_to(N);
    b = o.lifted_to(N);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic a, b;
    unify(o, a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic a, b;
    unify(o, a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic a = *this;
    for (Rat& r : a.c_) r = -r;
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    Cyclotomic a, b;
    unify(o, a, b);
    std::vector<Rat> poly(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) poly[i + j] += a.c_[i] * b.c_[j];
    }
    return make(a.cond_, std::move(poly));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::runtime_error("division by zero");
    if (is_rational()) {
        Cyclotomic r;
        r.cond_ = cond_;
        r.c_.assign(c_.size(), Rat(0));
        r.c_[0] = Rat(1) / c_[0];
        return r;
    }
    // extended Euclid in Q[x] against Phi_n (irreducible)
    std::vector<Rat> r0, r1 = c_, s0, s1;
    for (const BigInt& z : cyclotomic_polynomial(cond_)) r0.emplace_back(z);
    s0 = {};             // coefficient of target on r0
    s1 = {Rat(1)};       // on r1
    auto deg = [](const std::vector<Rat>& p) {
        for (long long i = (long long)p.size() - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return (long long)-1;
    };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rat> q(std::max<long long>(deg(r0) - deg(r1) + 1, 1), Rat(0));
        std::vector<Rat> rem = r0;
        const long long d1 = deg(r1);
        const Rat lead = r1[d1];
        for (long long k = deg(rem); k >= d1; --k) {
            if (rem[k] == 0) continue;
            Rat c = rem[k] / lead;
            q[k - d1] = c;
            for (long long i = 0; i <= d1; ++i) rem[k - d1 + i] -= c * r1[i];
        }
        // s_next = s0 - q*s1
        std::vector<Rat> sn(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) sn[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) sn[i + j] -= q[i] * s1[j];
        }
        r0 = r1;
        r1 = rem;
        while (!r1.empty() && r1.back() == 0) r1.pop_back();
        s0 = s1;
        s1 = sn;
    }
    if (deg(r1) != 0) throw std::logic_error("cyclotomic polynomial not coprime to element");
    const Rat unit = r1[0];
    for (Rat& x : s1) x /= unit;
    return make(cond_, std::move(s1));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

Cyclotomic Cyclotomic::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r = one(), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (cond_ == o.cond_) return c_ == o.c_;
    Cyclotomic a, b;
    unify(o, a, b);
    return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::galois(long long k) const {
    k = mod_ll(k, cond_);
    if (gcd_ll(k, cond_) != 1) throw std::runtime_error("Galois exponent must be prime to the conductor");
    std::vector<Rat> poly(std::max<std::size_t>((c_.size() - 1) * k + 1, 1), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * k] += c_[i];
    return make(cond_, std::move(poly));
}

Cyclotomic Cyclotomic::conj() const {
    if (cond_ == 1) return *this;
    return galois(cond_ - 1);
}

std::optional<std::pair<long long, long long>> Cyclotomic::as_root_of_unity() const {
    if (is_zero()) return std::nullopt;
    const long long M = cond_ % 2 == 0 ? cond_ : 2 * cond_;
    // order must divide M; find it by running powers
    Cyclotomic p = *this;
    long long order = -1;
    for (long long j = 1; j <= M; ++j) {
        if (p == one()) {
            order = j;
            break;
        }
        p = p * *this;
    }
    if (order < 0) return std::nullopt;
    const Cyclotomic z = root_of_unity(order, 1);
    Cyclotomic zp = one();
    for (long long k = 0; k < order; ++k) {
        if (*this == zp) return std::make_pair(order, k);
        zp = zp * z;
    }
    throw std::logic_error("order found but no matching power");
}

Cyclotomic Cyclotomic::sqrt_of_rational(const Rat& r) {
    if (r < 0) throw std::runtime_error("sqrt_of_rational: negative input");
    if (r == 0) return zero();
    // r = (a/b) = a*b / b^2; pull the square part of a*b out exactly
    BigInt ab = rat_num(r) * rat_den(r);
    BigInt sq = 1, free = 1;
    for (BigInt p = 2; p * p <= ab; ++p) {
        if (ab % p != 0) continue;
        int e = 0;
        while (ab % p == 0) {
            ab /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) sq *= p;
        if (e % 2) free *= p;
    }
    free *= ab;  // leftover prime
    Cyclotomic out(Rat(sq, rat_den(r)));
    // sqrt of the squarefree part, prime by prime: sqrt(2) in Q(zeta_8),
    // sqrt(p) for odd p via the quadratic Gauss sum in Q(zeta_{4p}).
    BigInt f = free;
    for (BigInt p = 2; p <= f; ++p) {
        if (f % p != 0) continue;
        f /= p;
        long long pl = static_cast<long long>(p);
        if (pl == 2) {
            out = out * (root_of_unity(8, 1) - root_of_unity(8, 3));
        } else {
            Cyclotomic g = zero();
            for (long long x = 0; x < pl; ++x) g += root_of_unity(pl, x * x % pl);
            if (pl % 4 == 3) g = g * root_of_unity(4, -1);  // g = i*sqrt(p) there
            out = out * g;
        }
    }
    return out;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].str();
        if (i >= 1) os << "*z" << cond_ << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace weilrep
