#include "weilrep/symplectic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace weilrep {

template <class Ctx>
SqMatrix<Ctx> SqMatrix<Ctx>::identity(const Ctx* c, int n) {
    SqMatrix<Ctx> m(c, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

template <class Ctx>
SqMatrix<Ctx> SqMatrix<Ctx>::operator*(const SqMatrix& o) const {
    SqMatrix r(ctx, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const int x = at(i, k);
            if (!x) continue;
            for (int j = 0; j < n; ++j)
                if (o.at(k, j)) r.at(i, j) = ctx->add(r.at(i, j), ctx->mul(x, o.at(k, j)));
        }
    return r;
}

template <class Ctx>
SqMatrix<Ctx> SqMatrix<Ctx>::transpose() const {
    SqMatrix r(ctx, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
}

template struct SqMatrix<GaloisField>;
template struct SqMatrix<GaloisRing>;

namespace {
int det_f_impl(const FMatrix& a);
}
int field_det(const FMatrix& a) { return det_f_impl(a); }

std::vector<int> apply_row(const std::vector<int>& w, const FMatrix& g) {
    std::vector<int> r(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        if (w[i])
            for (int j = 0; j < g.n; ++j) r[j] = g.ctx->add(r[j], g.ctx->mul(w[i], g.at(i, j)));
    return r;
}

std::vector<int> apply_row_ring(const std::vector<int>& w, const RMatrix& g) {
    std::vector<int> r(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        if (w[i])
            for (int j = 0; j < g.n; ++j) r[j] = g.ctx->add(r[j], g.ctx->mul(w[i], g.at(i, j)));
    return r;
}

namespace {

// determinant / inverse of an m x m block over a field, by elimination
int det_f_impl(const FMatrix& a) {
    FMatrix u = a;
    const auto* F = a.ctx;
    int det = 1;
    for (int c = 0; c < u.n; ++c) {
        int piv = -1;
        for (int r = c; r < u.n; ++r)
            if (u.at(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < u.n; ++j) std::swap(u.at(piv, j), u.at(c, j));
            det = F->neg(det);
        }
        det = F->mul(det, u.at(c, c));
        const int inv = F->inv(u.at(c, c));
        for (int r = c + 1; r < u.n; ++r) {
            if (!u.at(r, c)) continue;
            const int f = F->mul(u.at(r, c), inv);
            for (int j = c; j < u.n; ++j) u.at(r, j) = F->add(u.at(r, j), F->neg(F->mul(f, u.at(c, j))));
        }
    }
    return det;
}

FMatrix inv_f(const FMatrix& a) {
    const auto* F = a.ctx;
    FMatrix u = a, v = FMatrix::identity(F, a.n);
    for (int c = 0; c < u.n; ++c) {
        int piv = -1;
        for (int r = c; r < u.n; ++r)
            if (u.at(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::runtime_error("singular block");
        if (piv != c)
            for (int j = 0; j < u.n; ++j) {
                std::swap(u.at(piv, j), u.at(c, j));
                std::swap(v.at(piv, j), v.at(c, j));
            }
        const int inv = F->inv(u.at(c, c));
        for (int j = 0; j < u.n; ++j) {
            u.at(c, j) = F->mul(u.at(c, j), inv);
            v.at(c, j) = F->mul(v.at(c, j), inv);
        }
        for (int r = 0; r < u.n; ++r) {
            if (r == c || !u.at(r, c)) continue;
            const int f = u.at(r, c);
            for (int j = 0; j < u.n; ++j) {
                u.at(r, j) = F->add(u.at(r, j), F->neg(F->mul(f, u.at(c, j))));
                v.at(r, j) = F->add(v.at(r, j), F->neg(F->mul(f, v.at(c, j))));
            }
        }
    }
    return v;
}

FMatrix block(const FMatrix& g, int bi, int bj, int m) {
    FMatrix r(g.ctx, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r.at(i, j) = g.at(bi * m + i, bj * m + j);
    return r;
}

bool is_symmetric(const FMatrix& b) { return b == b.transpose(); }

}  // namespace

SympF SymplecticSpace::make_u(const FMatrix& b) const {
    if (!is_symmetric(b)) throw std::runtime_error("U(b) needs symmetric b");
    FMatrix g = FMatrix::identity(F_, dim());
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) g.at(i, m_ + j) = b.at(i, j);
    return {g, 1};
}

SympF SymplecticSpace::make_d(const FMatrix& a) const {
    if (det_f_impl(a) == 0) throw std::runtime_error("D(a) needs invertible a");
    const FMatrix ainvT = inv_f(a).transpose();
    FMatrix g(F_, dim());
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) {
            g.at(i, j) = a.at(i, j);
            g.at(m_ + i, m_ + j) = ainvT.at(i, j);
        }
    return {g, 1};
}

SympF SymplecticSpace::make_omega() const {
    FMatrix g(F_, dim());
    for (int i = 0; i < m_; ++i) {
        g.at(i, m_ + i) = F_->neg(1);
        g.at(m_ + i, i) = 1;
    }
    return {g, 1};
}

SympF SymplecticSpace::make_h(int t) const {
    if (t == 0) throw std::runtime_error("H(t) needs a unit t");
    FMatrix g = FMatrix::identity(F_, dim());
    for (int i = 0; i < m_; ++i) g.at(m_ + i, m_ + i) = t;
    return {g, t};
}

SympF SymplecticSpace::make_token(const GenToken& t) const {
    switch (t.kind) {
        case GenToken::U: {
            FMatrix b(F_, m_);
            b.a = t.payload;
            return make_u(b);
        }
        case GenToken::D: {
            FMatrix a(F_, m_);
            a.a = t.payload;
            return make_d(a);
        }
        case GenToken::Omega:
            return make_omega();
        case GenToken::H:
            return make_h(t.payload.at(0));
    }
    throw std::logic_error("unknown token");
}

SympF SymplecticSpace::identity() const { return {FMatrix::identity(F_, dim()), 1}; }

int SymplecticSpace::pairing(const std::vector<int>& u, const std::vector<int>& v) const {
    int s = 0;
    for (int i = 0; i < m_; ++i) {
        s = F_->add(s, F_->mul(u[i], v[m_ + i]));
        s = F_->add(s, F_->neg(F_->mul(u[m_ + i], v[i])));
    }
    return s;
}

int SymplecticSpace::similitude_of(const FMatrix& g) const {
    // evaluate <e_i g, e_j g> against lambda <e_i, e_j>
    int lambda = -1;
    std::vector<std::vector<int>> rows(dim());
    for (int i = 0; i < dim(); ++i) {
        rows[i].resize(dim());
        for (int j = 0; j < dim(); ++j) rows[i][j] = g.at(i, j);
    }
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            std::vector<int> ei(dim(), 0), ej(dim(), 0);
            ei[i] = 1;
            ej[j] = 1;
            const int lhs = pairing(rows[i], rows[j]);
            const int rhs = pairing(ei, ej);
            if (rhs == 0) {
                if (lhs != 0) return -1;
            } else {
                const int q = F_->mul(lhs, F_->inv(rhs));
                if (lambda < 0)
                    lambda = q;
                else if (lambda != q)
                    return -1;
            }
        }
    return lambda > 0 ? lambda : -1;
}

SympF SymplecticSpace::from_matrix(const FMatrix& g) const {
    const int lam = similitude_of(g);
    if (lam <= 0) throw std::runtime_error("matrix is not a symplectic similitude");
    return {g, lam};
}

SympF SymplecticSpace::mul(const SympF& x, const SympF& y) const {
    return {x.mat * y.mat, F_->mul(x.lambda, y.lambda)};
}

SympF SymplecticSpace::inverse(const SympF& x) const {
    // g^{-1} = lambda^{-1} J^{-1} g^T J for a similitude; elimination is as easy
    FMatrix inv = inv_f(x.mat);
    return {inv, F_->inv(x.lambda)};
}

GeneratorWord SymplecticSpace::factorize(const SympF& g) const {
    if (g.lambda != 1) throw std::runtime_error("factorize expects lambda = 1");
    GeneratorWord word;
    FMatrix cur = g.mat;

    auto emit_u = [&](const FMatrix& b, bool negate) {
        FMatrix bb = b;
        if (negate)
            for (int& x : bb.a) x = F_->neg(x);
        bool zero = std::all_of(bb.a.begin(), bb.a.end(), [](int v) { return v == 0; });
        if (!zero) word.push_back({GenToken::U, bb.a});
    };

    FMatrix A = block(cur, 0, 0, m_), C = block(cur, 1, 0, m_);
    if (det_f_impl(A) == 0) {
        if (det_f_impl(C) != 0) {
            // g = Omega (Omega^{-1} g); the swapped matrix has invertible top block
            word.push_back({GenToken::Omega, {}});
            const SympF w = make_omega();
            cur = (inv_f(w.mat) * cur);
            GeneratorWord rest = factorize({cur, 1});
            word.insert(word.end(), rest.begin(), rest.end());
            return word;
        }
        // find symmetric b0 with A + b0 C invertible, smallest coordinates first
        const int q = F_->q();
        long long total = 1;
        for (int i = 0; i < m_ * (m_ + 1) / 2; ++i) total *= q;
        bool found = false;
        for (long long code = 1; code < total && !found; ++code) {
            FMatrix b0(F_, m_);
            long long c = code;
            for (int i = 0; i < m_ && !found; ++i)
                for (int j = i; j < m_; ++j) {
                    b0.at(i, j) = (int)(c % q);
                    b0.at(j, i) = b0.at(i, j);
                    c /= q;
                }
            FMatrix cand = A;
            const FMatrix bc = b0 * C;
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j) cand.at(i, j) = F_->add(cand.at(i, j), bc.at(i, j));
            if (det_f_impl(cand) != 0) {
                // g = U(-b0) * (U(b0) g)
                emit_u(b0, true);
                cur = make_u(b0).mat * cur;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no unipotent makes the top block invertible");
        A = block(cur, 0, 0, m_);
        C = block(cur, 1, 0, m_);
    }

    // cur = L(c) D(A) U(b) with c = C A^{-1}, b = A^{-1} B; both symmetric for
    // a symplectic matrix with invertible top-left block
    const FMatrix B = block(cur, 0, 1, m_);
    const FMatrix Ainv = inv_f(A);
    const FMatrix cmat = C * Ainv;
    const FMatrix bmat = Ainv * B;
    if (!is_symmetric(cmat) || !is_symmetric(bmat)) throw std::runtime_error("matrix is not symplectic");

    // L(c) = Omega U(-c) Omega D(-1)
    bool czero = std::all_of(cmat.a.begin(), cmat.a.end(), [](int v) { return v == 0; });
    FMatrix a_final = A;
    if (!czero) {
        word.push_back({GenToken::Omega, {}});
        emit_u(cmat, true);
        word.push_back({GenToken::Omega, {}});
        // fold the trailing D(-1) into D(A): D(-1)D(A) = D(-A)
        for (int& x : a_final.a) x = F_->neg(x);
    }
    if (a_final != FMatrix::identity(F_, m_)) word.push_back({GenToken::D, a_final.a});
    emit_u(bmat, false);

    return word;
}

SympF SymplecticSpace::evaluate(const GeneratorWord& w) const {
    SympF r = identity();
    for (const auto& t : w) r = mul(r, make_token(t));
    return r;
}

long long SymplecticSpace::sp_order() const {
    // q^{m^2} prod_{i=1..m} (q^{2i} - 1)
    const long long q = F_->q();
    long long r = 1;
    for (int i = 0; i < m_ * m_; ++i) r *= q;
    long long p2 = 1;
    for (int i = 1; i <= m_; ++i) {
        p2 *= q * q;
        r *= p2 - 1;
    }
    return r;
}

namespace {

std::vector<SympF> closure(const SymplecticSpace& sp, const std::vector<SympF>& gens, long long budget) {
    std::map<std::vector<int>, int> seen;
    std::vector<SympF> out;
    std::vector<int> frontier;
    const SympF id = sp.identity();
    seen.emplace(id.mat.a, 0);
    out.push_back(id);
    frontier.push_back(0);
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int idx : frontier)
            for (const auto& g : gens) {
                SympF h = sp.mul(out[idx], g);
                auto [it, inserted] = seen.emplace(h.mat.a, (int)out.size());
                if (inserted) {
                    if ((long long)out.size() + 1 > budget) throw std::runtime_error("group enumeration budget exceeded");
                    next.push_back((int)out.size());
                    out.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const SympF& x, const SympF& y) { return x.mat.a < y.mat.a; });
    return out;
}

}  // namespace

std::vector<SympF> SymplecticSpace::enumerate_sp(long long budget) const {
    if (sp_order() > budget) throw std::runtime_error("group enumeration budget exceeded");
    std::vector<SympF> gens;
    const int q = F_->q();
    // all U(b), all D(a), Omega; D(a) for a invertible
    long long totalb = 1;
    for (int i = 0; i < m_ * (m_ + 1) / 2; ++i) totalb *= q;
    for (long long code = 0; code < totalb; ++code) {
        FMatrix b(F_, m_);
        long long c = code;
        for (int i = 0; i < m_; ++i)
            for (int j = i; j < m_; ++j) {
                b.at(i, j) = (int)(c % q);
                b.at(j, i) = b.at(i, j);
                c /= q;
            }
        gens.push_back(make_u(b));
    }
    long long totala = 1;
    for (int i = 0; i < m_ * m_; ++i) totala *= q;
    for (long long code = 0; code < totala; ++code) {
        FMatrix a(F_, m_);
        long long c = code;
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) {
                a.at(i, j) = (int)(c % q);
                c /= q;
            }
        if (det_f_impl(a) != 0) gens.push_back(make_d(a));
    }
    gens.push_back(make_omega());
    return closure(*this, gens, budget);
}

std::vector<SympF> SymplecticSpace::enumerate_gsp(long long budget) const {
    if (sp_order() * (F_->q() - 1) > budget) throw std::runtime_error("group enumeration budget exceeded");
    auto gens = enumerate_sp(budget);  // small-q shortcut: seed with all of Sp
    for (int t = 2; t < F_->q(); ++t) gens.push_back(make_h(t));
    return closure(*this, gens, budget);
}

RMatrix RingSymplecticSpace::token_matrix(const GenToken& t, bool teichmueller_h) const {
    const int n = 2 * m_;
    const auto* R = R_;
    const auto* F = R->residue_field();
    auto liftv = [&](int fv) { return R->lift(fv); };
    switch (t.kind) {
        case GenToken::U: {
            RMatrix g = RMatrix::identity(R, n);
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j) g.at(i, m_ + j) = liftv(t.payload[i * m_ + j]);
            return g;
        }
        case GenToken::D: {
            // lift a entrywise; the lifted inverse-transpose completes the block
            RMatrix a(R, m_);
            for (int i = 0; i < m_ * m_; ++i) a.a[i] = liftv(t.payload[i]);
            // invert a over R: lift of inverse over F corrected by one Hensel step
            FMatrix af(F, m_);
            af.a = t.payload;
            const FMatrix afinv = inv_f(af);
            RMatrix x(R, m_);
            for (int i = 0; i < m_ * m_; ++i) x.a[i] = liftv(afinv.a[i]);
            // x <- x (2 - a x)
            RMatrix ax = a * x;
            RMatrix corr(R, m_);
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j)
                    corr.at(i, j) = R->add(i == j ? 2 : 0, R->neg(ax.at(i, j)));
            x = x * corr;
            const RMatrix xT = x.transpose();
            RMatrix g(R, n);
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j) {
                    g.at(i, j) = a.at(i, j);
                    g.at(m_ + i, m_ + j) = xT.at(i, j);
                }
            return g;
        }
        case GenToken::Omega: {
            RMatrix g(R, n);
            for (int i = 0; i < m_; ++i) {
                g.at(i, m_ + i) = R->neg(1);
                g.at(m_ + i, i) = 1;
            }
            return g;
        }
        case GenToken::H: {
            RMatrix g = RMatrix::identity(R, n);
            const int t4 = teichmueller_h ? R->teichmueller(t.payload.at(0)) : liftv(t.payload.at(0));
            for (int i = 0; i < m_; ++i) g.at(m_ + i, m_ + i) = t4;
            return g;
        }
    }
    throw std::logic_error("unknown token");
}

RMatrix RingSymplecticSpace::identity() const { return RMatrix::identity(R_, 2 * m_); }

int RingSymplecticSpace::half_pairing(const std::vector<int>& w, const std::vector<int>& w2) const {
    int s = 0;
    for (int i = 0; i < m_; ++i) s = R_->add(s, R_->mul(w[i], w2[m_ + i]));
    return s;
}

int RingSymplecticSpace::pairing(const std::vector<int>& u, const std::vector<int>& v) const {
    int s = 0;
    for (int i = 0; i < m_; ++i) {
        s = R_->add(s, R_->mul(u[i], v[m_ + i]));
        s = R_->add(s, R_->neg(R_->mul(u[m_ + i], v[i])));
    }
    return s;
}

int RingSymplecticSpace::similitude_of(const RMatrix& g) const {
    const int n = 2 * m_;
    int lambda = -1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> ri(n), rj(n), ei(n, 0), ej(n, 0);
            for (int k = 0; k < n; ++k) {
                ri[k] = g.at(i, k);
                rj[k] = g.at(j, k);
            }
            ei[i] = 1;
            ej[j] = 1;
            const int lhs = pairing(ri, rj);
            const int rhs = pairing(ei, ej);
            if (rhs == 0) {
                if (lhs != 0) return -1;
            } else {
                // rhs is +-1 for basis vectors
                const int q = R_->mul(lhs, R_->inv(rhs));
                if (lambda < 0)
                    lambda = q;
                else if (lambda != q)
                    return -1;
            }
        }
    return lambda > 0 && R_->is_unit(lambda) ? lambda : -1;
}

SympR RingSymplecticSpace::lift(const SymplecticSpace& base, const SympF& g) const {
    // split off the similitude part, factor the Sp part, lift token by token
    const SympF g0 = base.mul(g, base.inverse(base.make_h(g.lambda)));
    GeneratorWord w = base.factorize(g0);
    RMatrix r = identity();
    for (const auto& t : w) r = r * token_matrix(t);
    r = r * token_matrix({GenToken::H, {g.lambda}});
    const int lam = similitude_of(r);
    if (lam < 0) throw std::logic_error("lift is not a similitude over R");
    return {r, lam};
}

}  // namespace weilrep
