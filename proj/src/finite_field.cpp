#include "weilrep/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace weilrep {

namespace {

// polynomial arithmetic over F_p on coefficient vectors
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    const int dm = (int)m.size() - 1;
    for (int k = (int)a.size() - 1; k >= dm; --k) {
        int c = a[k] % p;
        if (c)
            for (int i = 0; i <= dm; ++i) a[k - dm + i] = ((a[k - dm + i] - c * m[i]) % p + p) % p;
    }
    a.resize(dm);
    return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& m, int p) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(c), m, p);
}

bool is_irreducible(const std::vector<int>& m, int p) {
    // brute force roots / factor search is fine at these sizes: test that no
    // element of F_{p^e}, e < d, is a root by checking gcd with x^{p^e} - x;
    // for d <= 3 a root test over F_p plus (for d = 3) quadratic factors works,
    // but the simplest uniform check is exhaustively trying monic divisors.
    const int d = (int)m.size() - 1;
    if (d == 1) return true;
    // enumerate monic divisor candidates of degree 1..d/2
    std::vector<int> counts;
    for (int deg = 1; deg <= d / 2; ++deg) {
        long long total = 1;
        for (int i = 0; i < deg; ++i) total *= p;
        for (long long code = 0; code < total; ++code) {
            std::vector<int> cand(deg + 1, 0);
            long long c = code;
            for (int i = 0; i < deg; ++i) {
                cand[i] = c % p;
                c /= p;
            }
            cand[deg] = 1;
            // divide m by cand over F_p, check zero remainder
            std::vector<int> rem = m;
            for (int k = (int)rem.size() - 1; k >= deg; --k) {
                int f = rem[k] % p;
                if (f)
                    for (int i = 0; i <= deg; ++i) rem[k - deg + i] = ((rem[k - deg + i] - f * cand[i]) % p + p) % p;
            }
            if (std::all_of(rem.begin(), rem.begin() + deg, [](int x) { return x == 0; })) return false;
        }
    }
    return true;
}

std::vector<int> builtin_modulus(int p, int d) {
    if (d == 1) return {0, 1};  // x
    if (p == 2 && d == 2) return {1, 1, 1};  // x^2 + x + 1
    if (p == 3 && d == 2) return {1, 0, 1};  // x^2 + 1
    // fall back to the lexicographically first irreducible monic polynomial
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long long code = 0; code < total; ++code) {
        std::vector<int> m(d + 1, 0);
        long long c = code;
        for (int i = 0; i < d; ++i) {
            m[i] = (int)(c % p);
            c /= p;
        }
        m[d] = 1;
        if (is_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

GaloisField::GaloisField(int p, const std::vector<int>& modulus) : p_(p), modulus_(modulus) {
    d_ = (int)modulus.size() - 1;
    q_ = 1;
    for (int i = 0; i < d_; ++i) q_ *= p;

    auto decode = [&](int v) {
        std::vector<int> c(d_);
        for (int i = 0; i < d_; ++i) {
            c[i] = v % p_;
            v /= p_;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int v = 0;
        for (int i = d_ - 1; i >= 0; --i) v = v * p_ + c[i];
        return v;
    };

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        auto ca = decode(a);
        std::vector<int> cn(d_);
        for (int i = 0; i < d_; ++i) cn[i] = (p_ - ca[i]) % p_;
        neg_[a] = encode(cn);
        for (int b = 0; b < q_; ++b) {
            auto cb = decode(b);
            std::vector<int> cs(d_);
            for (int i = 0; i < d_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
            add_[std::size_t(a) * q_ + b] = encode(cs);
            auto cm = poly_mul_mod(ca, cb, modulus_, p_);
            cm.resize(d_);
            mul_[std::size_t(a) * q_ + b] = encode(cm);
        }
    }
    inv_.assign(q_, -1);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
    // absolute trace: Tr(x) = sum of Frobenius powers x^{p^i}
    trace_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        int s = 0, x = a;
        for (int i = 0; i < d_; ++i) {
            s = add(s, x);
            x = pow(x, p_);
        }
        // the trace lands in the prime subfield, whose elements are the
        // indices 0..p-1 under the coordinate encoding
        if (s >= p_) throw std::logic_error("trace not in prime field");
        trace_[a] = s;
    }
}

int GaloisField::inv(int a) const {
    if (a == 0) throw std::runtime_error("division by zero in F_q");
    return inv_[a];
}

int GaloisField::pow(int a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    int r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Cyclotomic GaloisField::psi(int x, int a_twist) const {
    return Cyclotomic::root_of_unity(p_, trace(mul(a_twist, x)));
}

int GaloisField::quadratic_character(int a) const {
    if (a == 0) return 0;
    return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

GaloisFieldElement GaloisField::element(int index) const { return {this, index}; }
GaloisFieldElement GaloisField::from_int(long long n) const { return {this, (int)mod_ll(n, p_)}; }
GaloisFieldElement GaloisField::zero() const { return {this, 0}; }
GaloisFieldElement GaloisField::one() const { return {this, 1}; }

std::string GaloisField::str() const {
    std::ostringstream os;
    os << "F_" << q_;
    return os.str();
}

const GaloisField* GaloisField::get(int p, int d) { return with_modulus(p, builtin_modulus(p, d)); }

const GaloisField* GaloisField::with_modulus(int p, const std::vector<int>& modulus) {
    if (modulus.size() < 2 || modulus.back() != 1) throw std::runtime_error("modulus must be monic of degree >= 1");
    for (int c : modulus)
        if (c < 0 || c >= p) throw std::runtime_error("modulus coefficients must be reduced mod p");
    if (!is_irreducible(modulus, p)) throw std::runtime_error("modulus is reducible");
    static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<GaloisField>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, modulus);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<GaloisField>(new GaloisField(p, modulus))).first;
    return it->second.get();
}

MultiplicativeStructure::MultiplicativeStructure(const GaloisField* F) : F_(F) {
    if (F->p() == 2) throw std::runtime_error("multiplicative decomposition needs odd characteristic");
    const int q = F->q();
    l_ = q - 1;
    n_ = 0;
    while (l_ % 2 == 0) {
        l_ /= 2;
        ++n_;
    }
    g_ = -1;
    for (int a = 2; a < q; ++a) {
        int x = a;
        int order = 1;
        while (x != 1) {
            x = F->mul(x, a);
            ++order;
        }
        if (order == q - 1) {
            g_ = a;
            break;
        }
    }
    if (g_ < 0) throw std::logic_error("no generator found");
    dlog_.assign(q, -1);
    {
        int x = 1;
        for (int k = 0; k < q - 1; ++k) {
            dlog_[x] = k;
            x = F_->mul(x, g_);
        }
    }
    for (int a = 1; a < q; ++a)
        if (dlog_[a] % 2 == 0) squares_.push_back(a);
    const long long two_n = (q - 1) / l_;
    for (int a = 1; a < q; ++a) {
        if (dlog_[a] % two_n == 0) F_l_.push_back(a);  // <g^{2^n}>
        if (dlog_[a] % l_ == 0) F_2n_.push_back(a);    // <g^l>
    }
    std::sort(squares_.begin(), squares_.end());
    std::sort(F_l_.begin(), F_l_.end());
    std::sort(F_2n_.begin(), F_2n_.end());
}

int MultiplicativeStructure::dlog(int a) const {
    if (a == 0) throw std::runtime_error("dlog of zero");
    return dlog_[a];
}

bool MultiplicativeStructure::is_square(int a) const { return dlog(a) % 2 == 0; }

int MultiplicativeStructure::sqrt_section(int a) const {
    const int k = dlog(a);
    if (k % 2 != 0) throw std::runtime_error("sqrt of a nonsquare");
    return F_->pow(g_, k / 2);
}

int MultiplicativeStructure::sqrt_cocycle(int a, int b) const {
    const int sab = sqrt_section(F_->mul(a, b));
    const int prod = F_->mul(sqrt_section(a), sqrt_section(b));
    const int c = F_->mul(prod, F_->inv(sab));
    if (c != 1 && c != F_->neg(1)) throw std::logic_error("sqrt cocycle value outside {+-1}");
    return c == 1 ? 1 : -1;
}

int MultiplicativeStructure::tau(int a) const {
    const int q = F_->q();
    if (q % 4 == 3) {
        // domain F^{x2} = <g^2> of odd order l; trivial on -1
        int k = dlog(a);
        if (k % 2 != 0) k = mod_ll(k - (q - 1) / 2, q - 1);  // strip the sign part
        // a_sq = w^{2j} for w = g^2: 2k' = dlog base g of the square part
        // w = g^2, a_sq = g^k = w^{k/2}; tau(w^{2j}) = w^{-j}
        long long j2 = k / 2;  // exponent of w
        // need j with 2j = j2 mod l (l odd => divide by 2)
        long long inv2 = (l_ + 1) / 2;
        long long j = j2 * inv2 % l_;
        return F_->pow(F_->mul(g_, g_), mod_ll(-j, l_));
    }
    if (q % 4 == 1) {
        // domain F_l = <g^{2^n}>, trivial on F_{2^n}
        const long long two_n = (q - 1) / l_;
        long long k = dlog(a);
        // component in F_l: g^{two_n * u} with u = k * two_n^{-1} mod l
        long long tn_inv = 1;
        {
            long long t = mod_ll(two_n, l_);
            for (long long e = 1; e < l_; ++e)
                if (t * e % l_ == 1) {
                    tn_inv = e;
                    break;
                }
        }
        long long u = k % l_ * tn_inv % l_;
        // w = g^{two_n} generates F_l; component = w^u; tau(w^{2j}) = w^{-j}
        long long inv2 = (l_ + 1) / 2;
        long long j = u * inv2 % l_;
        return F_->pow(g_, mod_ll(-j * two_n, (long long)(q - 1)));
    }
    throw std::runtime_error("tau needs odd q");
}

int MultiplicativeStructure::chi_plus(int a) const {
    if (F_->q() % 4 != 1) throw std::runtime_error("chi_plus is defined for q = 1 mod 4");
    if (a == 0) throw std::runtime_error("chi_plus of zero");
    const long long two_n = (F_->q() - 1) / l_;
    long long k = dlog(a);
    // a = g^k = (F_l part) * (F_{2^n} part); the latter is g^{l*v} with
    // v = k * l^{-1} mod 2^n
    long long l_inv = 1;
    {
        long long t = mod_ll(l_, two_n);
        for (long long e = 1; e <= two_n; ++e)
            if (t * e % two_n == 1) {
                l_inv = e;
                break;
            }
    }
    long long v = k % two_n * l_inv % two_n;
    return F_->pow(g_, mod_ll(v * l_, (long long)(F_->q() - 1)));
}

int MultiplicativeStructure::square_part_root(int t) const {
    const int k = kappa_of(t);
    const int a2 = F_->mul(t, F_->inv(k));
    return sqrt_section(a2);
}

}  // namespace weilrep
