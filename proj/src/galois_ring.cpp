#include "weilrep/galois_ring.hpp"

#include <map>
#include <mutex>

namespace weilrep {

namespace {

std::vector<int> poly_mul_mod4(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& m) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % 4;
    const int dm = (int)m.size() - 1;
    for (int k = (int)c.size() - 1; k >= dm; --k) {
        int f = c[k] % 4;
        if (f)
            for (int i = 0; i <= dm; ++i) c[k - dm + i] = ((c[k - dm + i] - f * m[i]) % 4 + 4) % 4;
    }
    c.resize(dm);
    return c;
}

// Hensel lift of the F_2 modulus to Z/4: find monic f~ = f + 2*e (deg e < d)
// with f~ | x^{2^d - 1} - 1 ... for the small d in use, searching the
// correction term directly against the Teichmueller condition is simplest:
// we need x to satisfy x^{2^d - 1} = 1 in the quotient (d > 1).
std::vector<int> hensel_modulus(int d, const std::vector<int>& f2) {
    std::vector<int> base(f2.begin(), f2.end());
    if (d == 1) return base;  // x itself
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= 2;
    for (long long code = 0; code < total; ++code) {
        std::vector<int> m = base;
        long long c = code;
        for (int i = 0; i < d; ++i) {
            m[i] = (m[i] + 2 * (int)(c % 2)) % 4;
            c /= 2;
        }
        // test x^{2^d - 1} == 1 mod (m, 4)
        std::vector<int> x(d, 0);
        if (d > 1) x[1] = 1;
        std::vector<int> acc(d, 0);
        acc[0] = 1;
        int e = (1 << d) - 1;
        for (int i = 0; i < e; ++i) acc = poly_mul_mod4(acc, x, m);
        bool ok = acc[0] == 1;
        for (int i = 1; i < d; ++i) ok = ok && acc[i] == 0;
        if (ok) return m;
    }
    throw std::logic_error("no Hensel lift found");
}

}  // namespace

GaloisRing::GaloisRing(int d) : d_(d) {
    F_ = GaloisField::get(2, d);
    modulus_ = hensel_modulus(d, F_->modulus());
    q_ = 1;
    for (int i = 0; i < d_; ++i) q_ *= 4;

    auto decode = [&](int v) {
        std::vector<int> c(d_);
        for (int i = 0; i < d_; ++i) {
            c[i] = v % 4;
            v /= 4;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int v = 0;
        for (int i = d_ - 1; i >= 0; --i) v = v * 4 + c[i];
        return v;
    };

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    red_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        auto ca = decode(a);
        std::vector<int> cn(d_), cr(d_);
        for (int i = 0; i < d_; ++i) cn[i] = (4 - ca[i]) % 4;
        neg_[a] = encode(cn);
        int fv = 0;
        for (int i = d_ - 1; i >= 0; --i) fv = fv * 2 + ca[i] % 2;
        red_[a] = fv;
        for (int b = 0; b < q_; ++b) {
            auto cb = decode(b);
            std::vector<int> cs(d_);
            for (int i = 0; i < d_; ++i) cs[i] = (ca[i] + cb[i]) % 4;
            add_[std::size_t(a) * q_ + b] = encode(cs);
            mul_[std::size_t(a) * q_ + b] = encode(poly_mul_mod4(ca, cb, modulus_));
        }
    }
    lift_.resize(F_->q());
    for (int f = 0; f < F_->q(); ++f) {
        std::vector<int> c(d_);
        int v = f;
        for (int i = 0; i < d_; ++i) {
            c[i] = v % 2;
            v /= 2;
        }
        lift_[f] = encode(c);
    }
    teich_.resize(F_->q());
    for (int f = 0; f < F_->q(); ++f) {
        int t = lift_[f];
        for (int i = 0; i < d_; ++i) t = mul(t, t);  // t^{2^d}
        if (reduce(t) != f) throw std::logic_error("Teichmueller lift does not reduce correctly");
        teich_[f] = t;
    }
    // trace via the Frobenius sigma(x) = x^2 on the Teichmueller generator,
    // extended Z/4-linearly in the power basis
    std::vector<int> xsq(d_, 0);
    {
        std::vector<int> x(d_, 0);
        if (d_ > 1)
            x[1] = 1;
        else
            x[0] = 1;
        xsq = poly_mul_mod4(x, x, modulus_);
    }
    trace_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        auto ca = decode(a);
        int s = 0;
        // accumulate all Frobenius twists
        std::vector<int> cur = ca;
        for (int it = 0; it < d_; ++it) {
            s = add(s, encode(cur));
            // apply sigma: sum c_i * (x^2)^i
            std::vector<int> nxt(d_, 0);
            std::vector<int> p(d_, 0);
            p[0] = 1;
            for (int i = 0; i < d_; ++i) {
                if (cur[i]) {
                    for (int j = 0; j < d_; ++j) nxt[j] = (nxt[j] + cur[i] * p[j]) % 4;
                }
                p = poly_mul_mod4(p, xsq, modulus_);
            }
            cur = nxt;
        }
        // s must lie in the prime subring Z/4, i.e. have index < 4
        for (int i = 1; i < d_; ++i)
            if (decode(s)[i] != 0) throw std::logic_error("trace not in Z/4");
        trace_[a] = s % 4;
    }
    // the pairing requirement: psi restricted to 2R must be nontrivial
    bool nontrivial = false;
    for (int f = 1; f < F_->q() && !nontrivial; ++f) nontrivial = trace(mul(2 % q_, lift_[f])) % 4 != 0;
    if (d_ >= 1 && !nontrivial) throw std::logic_error("character is trivial on 2R");
}

int GaloisRing::inv(int a) const {
    if (!is_unit(a)) throw std::runtime_error("inverse of a non-unit in GR(4,d)");
    // unit group has order 4^d - 2^d... compute by search (tables are tiny)
    for (int b = 0; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw std::logic_error("unit without inverse");
}

int GaloisRing::pow(int a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    int r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

GaloisRingElement GaloisRing::element(int index) const { return {this, index}; }
GaloisRingElement GaloisRing::from_int(long long n) const { return {this, (int)mod_ll(n, 4)}; }
GaloisRingElement GaloisRing::zero() const { return {this, 0}; }
GaloisRingElement GaloisRing::one() const { return {this, 1}; }
GaloisRingElement GaloisRing::two() const { return {this, 2}; }

const GaloisRing* GaloisRing::get(int d) {
    static std::map<int, std::unique_ptr<GaloisRing>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, std::unique_ptr<GaloisRing>(new GaloisRing(d))).first;
    return it->second.get();
}

}  // namespace weilrep
