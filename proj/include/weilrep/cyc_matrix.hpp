#pragma once

#include "weilrep/cyclotomic.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace weilrep {

/// Dense matrix over exact cyclotomic scalars.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static CycMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cyclotomic& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Cyclotomic& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix scaled(const Cyclotomic& s) const;
    CycMatrix conj_transpose() const;
    CycMatrix inverse() const;  // Gauss-Jordan; throws if singular
    CycMatrix pow(long long e) const;

    Cyclotomic trace() const;

    bool operator==(const CycMatrix& o) const;
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }

    bool is_identity() const;
    bool is_zero() const;

    /// If *this == s * o for a scalar s (o nonzero), returns s.
    std::optional<Cyclotomic> scalar_ratio_to(const CycMatrix& o) const;

    /// One entry of (*this * o), avoiding the full product.
    Cyclotomic product_entry(const CycMatrix& o, int i, int j) const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Cyclotomic> a_;
};

}  // namespace weilrep
