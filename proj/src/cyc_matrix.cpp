#include "weilrep/cyc_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace weilrep {

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one();
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw std::runtime_error("matrix product shape mismatch");
    CycMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Cyclotomic& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Cyclotomic& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    CycMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    CycMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

CycMatrix CycMatrix::scaled(const Cyclotomic& s) const {
    CycMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!a_[i].is_zero()) r.a_[i] = a_[i] * s;
    return r;
}

CycMatrix CycMatrix::conj_transpose() const {
    CycMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

CycMatrix CycMatrix::inverse() const {
    if (rows_ != cols_) throw std::runtime_error("inverse of non-square matrix");
    const int n = rows_;
    CycMatrix a = *this, inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::runtime_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        const Cyclotomic d = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * d;
            inv.at(col, j) = inv.at(col, j) * d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            const Cyclotomic f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

CycMatrix CycMatrix::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycMatrix r = identity(rows_), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Cyclotomic CycMatrix::trace() const {
    Cyclotomic t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && at(i, j) != Cyclotomic::one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool CycMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<Cyclotomic> CycMatrix::scalar_ratio_to(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return std::nullopt;
    int pi = -1, pj = -1;
    for (int i = 0; i < rows_ && pi < 0; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!o.at(i, j).is_zero()) {
                pi = i;
                pj = j;
                break;
            }
    if (pi < 0) return std::nullopt;
    const Cyclotomic s = at(pi, pj) / o.at(pi, pj);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != s * o.at(i, j)) return std::nullopt;
    return s;
}

Cyclotomic CycMatrix::product_entry(const CycMatrix& o, int i, int j) const {
    Cyclotomic s;
    for (int k = 0; k < cols_; ++k) {
        const Cyclotomic& x = at(i, k);
        if (!x.is_zero()) {
            const Cyclotomic& y = o.at(k, j);
            if (!y.is_zero()) s += x * y;
        }
    }
    return s;
}

std::string CycMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << "[" << at(i, j).str() << "]";
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

}  // namespace weilrep
