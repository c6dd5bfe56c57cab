#pragma once

#include "lierigid/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lierigid {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    /// Matrix whose rows are the given vectors (all of length `cols`).
    static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static RatMatrix from_columns(std::span<const RatVector> columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector column(std::size_t j) const;
    bool is_zero() const;

    RatMatrix transpose() const;
    RatVector apply(std::span<const Rational> v) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Commutator ab - ba.
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

/// Reduced row echelon form with first-nonzero pivoting. Returns the pivot
/// column of each nonzero row, in order.
std::vector<std::size_t> rref_in_place(RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Exactly cols - rank(m) independent vectors spanning the null space.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Exact inverse; throws DimensionError for a non-square or singular matrix.
RatMatrix inverse(const RatMatrix& m);

/// Independent subset of `vectors` (first-occurrence order) with the same span.
std::vector<RatVector> independent_subset(std::span<const RatVector> vectors, std::size_t ambient);

/// Basis of span(a) ∩ span(b). Inputs may be dependent; all vectors must
/// have length `ambient`.
std::vector<RatVector> intersect(std::span<const RatVector> a, std::span<const RatVector> b, std::size_t ambient);

/// ambient - rank(subspace). Throws DimensionError if a vector is longer
/// than the ambient dimension; shorter vectors are zero-padded.
std::size_t quotient_dim(std::size_t ambient, std::span<const RatVector> subspace);

/// Coordinates of v in the basis `basis` (assumed independent), or nothing
/// if v is outside the span.
std::optional<RatVector> coordinates_in(std::span<const RatVector> basis, std::span<const Rational> v);

} // namespace lierigid
