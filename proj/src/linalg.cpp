#include "lierigid/linalg.hpp"

#include "lierigid/errors.hpp"

#include <string>

namespace lierigid {

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols)
{
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionError("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                                 ", expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVector> columns, std::size_t rows)
{
    RatMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw DimensionError("column " + std::to_string(j) + " has length " +
                                 std::to_string(columns[j].size()) + ", expected " + std::to_string(rows));
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t i) const
{
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t j) const
{
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

bool RatMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RatVector RatMatrix::apply(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw DimensionError("vector length " + std::to_string(v.size()) + " does not match " +
                             std::to_string(cols_) + " columns");
    RatVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0)
                out[i] += (*this)(i, j) * v[j];
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix sum shape mismatch");
    RatMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        c.data_[k] += b.data_[k];
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix difference shape mismatch");
    RatMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        c.data_[k] -= b.data_[k];
    return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a)
{
    RatMatrix c = a;
    for (auto& x : c.data_)
        x *= s;
    return c;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b)
{
    return a * b - b * a;
}

std::vector<std::size_t> rref_in_place(RatMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Rational factor;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols(); ++j)
                swap(m(p, j), m(r, j));
        if (m(r, c) != 1) {
            const Rational inv = 1 / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0)
                    m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0)
                    m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m)
{
    RatMatrix w = m;
    return rref_in_place(w).size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m)
{
    RatMatrix w = m;
    const auto pivots = rref_in_place(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -w(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix inverse(const RatMatrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw DimensionError("inverse of a non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw DimensionError("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<RatVector> independent_subset(std::span<const RatVector> vectors, std::size_t ambient)
{
    // Column pivots of the matrix whose columns are the vectors.
    RatMatrix m = RatMatrix::from_columns(vectors, ambient);
    const auto pivots = rref_in_place(m);
    std::vector<RatVector> out;
    out.reserve(pivots.size());
    for (auto p : pivots)
        out.push_back(vectors[p]);
    return out;
}

std::vector<RatVector> intersect(std::span<const RatVector> a, std::span<const RatVector> b, std::size_t ambient)
{
    for (const auto& v : a)
        if (v.size() != ambient)
            throw DimensionError("intersect: vector of length " + std::to_string(v.size()) + " in a " +
                                 std::to_string(ambient) + "-dimensional space");
    for (const auto& v : b)
        if (v.size() != ambient)
            throw DimensionError("intersect: vector of length " + std::to_string(v.size()) + " in a " +
                                 std::to_string(ambient) + "-dimensional space");
    const auto basis_a = independent_subset(a, ambient);
    const auto basis_b = independent_subset(b, ambient);
    if (basis_a.empty() || basis_b.empty())
        return {};

    // Solve sum x_i a_i - sum y_j b_j = 0.
    RatMatrix m(ambient, basis_a.size() + basis_b.size());
    for (std::size_t i = 0; i < ambient; ++i) {
        for (std::size_t k = 0; k < basis_a.size(); ++k)
            m(i, k) = basis_a[k][i];
        for (std::size_t k = 0; k < basis_b.size(); ++k)
            m(i, basis_a.size() + k) = -basis_b[k][i];
    }
    std::vector<RatVector> out;
    for (const auto& z : kernel_basis(m)) {
        RatVector v(ambient);
        for (std::size_t k = 0; k < basis_a.size(); ++k)
            if (sgn(z[k]) != 0)
                for (std::size_t i = 0; i < ambient; ++i)
                    v[i] += z[k] * basis_a[k][i];
        out.push_back(std::move(v));
    }
    // basis_a is independent, so distinct kernel vectors give independent
    // intersection vectors.
    return out;
}

std::size_t quotient_dim(std::size_t ambient, std::span<const RatVector> subspace)
{
    std::vector<RatVector> padded;
    padded.reserve(subspace.size());
    for (const auto& v : subspace) {
        if (v.size() > ambient)
            throw DimensionError("quotient_dim: vector of length " + std::to_string(v.size()) +
                                 " exceeds ambient dimension " + std::to_string(ambient));
        RatVector p = v;
        p.resize(ambient);
        padded.push_back(std::move(p));
    }
    return ambient - rank(RatMatrix::from_rows(padded, ambient));
}

std::optional<RatVector> coordinates_in(std::span<const RatVector> basis, std::span<const Rational> v)
{
    const std::size_t ambient = v.size();
    RatMatrix m(ambient, basis.size() + 1);
    for (std::size_t i = 0; i < ambient; ++i) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].size() != ambient)
                throw DimensionError("coordinates_in: basis vector length mismatch");
            m(i, k) = basis[k][i];
        }
        m(i, basis.size()) = v[i];
    }
    const auto pivots = rref_in_place(m);
    if (!pivots.empty() && pivots.back() == basis.size())
        return std::nullopt;
    RatVector x(basis.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = m(r, basis.size());
    return x;
}

} // namespace lierigid
