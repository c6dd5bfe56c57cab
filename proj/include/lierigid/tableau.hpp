#pragma once

#include "lierigid/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace lierigid {

/// A subspace of W (x) V*, stored as a basis of dim_w x dim_v matrices.
struct Tableau {
    std::size_t dim_v = 0;
    std::size_t dim_w = 0;
    std::vector<RatMatrix> basis;

    /// Validates shapes and linear independence; throws InputError("basis").
    static Tableau make(std::size_t dim_v, std::size_t dim_w, std::vector<RatMatrix> basis);
    static Tableau full(std::size_t dim_v, std::size_t dim_w);
    static Tableau zero(std::size_t dim_v, std::size_t dim_w);
    /// {[[a, b], [-b, a]]}: the Cauchy-Riemann equations.
    static Tableau cauchy_riemann();

    std::size_t dim() const noexcept { return basis.size(); }
    /// Row-major flattening, index a * dim_v + i.
    std::vector<RatVector> flattened() const;
};

/// W-valued symmetric bilinear form on V: one symmetric dim_v x dim_v
/// matrix per coordinate of W.
using SymmetricForm = std::vector<RatMatrix>;

/// Basis of A^(1) = (A (x) V*) cap (W (x) S^2 V*).
std::vector<SymmetricForm> prolong(const Tableau& t);

/// Rank of delta: A (x) V* -> W (x) L^2 V*, from the skew-symmetrization
/// matrix directly.
std::size_t delta_rank(const Tableau& t);

/// dim A_j for j = 0..n-1, where A_j is the subspace of A killing the
/// first j vectors of the flag. Coordinate flags are searched exhaustively;
/// `random_flags` integer flags drawn from `seed` are also tried. The
/// lexicographically smallest sequence wins.
std::vector<std::size_t> cartan_characters(const Tableau& t, uint64_t seed = 0, std::size_t random_flags = 16);

struct InvolutivityReport {
    std::size_t dim_a = 0;
    std::vector<std::size_t> characters;
    std::size_t dim_prolongation = 0;
    std::size_t bound = 0;
    bool involutive = false;
    /// r with A_{r-1} != A_r = A_{r+1}; empty for A = 0.
    std::optional<std::size_t> character_of_generality;
};

InvolutivityReport is_involutive(const Tableau& t, uint64_t seed = 0);

/// dim W (x) L^2 V* / delta(A (x) V*).
std::size_t torsion_quotient_dim(const Tableau& t);

/// Second fundamental form F2 in S^2 T* (x) N (x) L with dim L = 1;
/// component(alpha, beta)[mu].
struct FubiniQuadric {
    std::size_t dim_t = 0;
    std::size_t dim_n = 0;
    /// entries[(alpha * dim_t + beta) * dim_n + mu]
    std::vector<Rational> entries;

    /// Throws DimensionError on a size mismatch and InputError("f2") if F2
    /// is not symmetric.
    static FubiniQuadric make(std::size_t dim_t, std::size_t dim_n, std::vector<Rational> entries);
    const Rational& operator()(std::size_t a, std::size_t b, std::size_t mu) const
    {
        return entries[(a * dim_t + b) * dim_n + mu];
    }
};

struct StabilizerPair {
    std::size_t block_dim = 0;
    std::size_t dim_r = 0;
    /// Basis of r inside gl(L) + gl(T) + gl(N), coordinates
    /// (x_L, X_T row-major, X_N row-major).
    std::vector<RatVector> r_basis;
    /// Basis of the trace-form complement of r.
    std::vector<RatVector> r_perp_basis;
    /// True when the trace form is degenerate on r, so r-perp meets r; the
    /// tableau is then the image of the whole action map.
    bool trace_form_degenerate = false;
    /// A = r-perp . F2 with V = L* (x) T and W = (L* (x) N) + (T* (x) N).
    Tableau tableau_r_perp;
};

/// Image of Y in gl(L) + gl(T) + gl(N) acting on F2, flattened like
/// FubiniQuadric::entries.
RatVector act_on_quadric(const FubiniQuadric& f2, const RatVector& y);

StabilizerPair stabilizer_and_tableau(const FubiniQuadric& f2);

struct ReducedProlongation {
    std::size_t dimension = 0;
    /// Rank of the part of the bracket image lying outside A^(1).
    std::size_t discarded_rank = 0;
};

/// A^(1) modulo its intersection with span(bracket_image). Vectors are in
/// W (x) V* (x) V* coordinates, index (a * n + i) * n + j, and must lie in
/// A (x) V*; throws InputError("bracket_image") otherwise.
ReducedProlongation reduced_prolongation_dim(const Tableau& t, const std::vector<RatVector>& bracket_image);

/// Flattening used by reduced_prolongation_dim.
RatVector flatten(const SymmetricForm& form);

} // namespace lierigid
