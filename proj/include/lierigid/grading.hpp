#pragma once

#include "lierigid/rational.hpp"
#include "lierigid/rootsys.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace lierigid {

/// Set I of marked simple roots (0-based global node indices, sorted).
struct ParabolicMarking {
    std::vector<std::size_t> nodes;

    /// From 1-based node numbers as written on the command line. Throws
    /// InputError for an empty set or an out-of-range node.
    static ParabolicMarking from_one_based(const RootSystem& rs, const std::vector<int64_t>& nodes);

    std::vector<bool> mask(std::size_t rank) const;
    bool contains(std::size_t node) const;
    std::vector<int64_t> one_based() const;

    friend bool operator==(const ParabolicMarking&, const ParabolicMarking&) = default;
};

/// Z_I = sum_{i in I} Z_i with Z_i(alpha_j) = delta_ij, as a functional on
/// weights: Z(nu) = sum_j nu^j sum_{i in I} (C^-1)_{j,i}.
class GradingElement {
public:
    GradingElement(const RootSystem& rs, const ParabolicMarking& marking);

    const RatVector& coefficients() const noexcept { return coeff_; }
    Rational operator()(const Weight& nu) const;
    /// Z on an element of the root lattice given in simple-root coordinates.
    int64_t on_root(const RootCoords& alpha) const;

private:
    RatVector coeff_;
    std::vector<bool> mask_;
};

GradingElement grading_element(const RootSystem& rs, const ParabolicMarking& marking);

/// Dimension of each graded piece. `depth` is k for the algebra (graded
/// -k..k) and f for a module (graded 0..-f after the shift).
struct GradedDims {
    std::map<int64_t, std::size_t> dims;
    int64_t depth = 0;

    std::size_t total() const;
    friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// g = sum_d g_d with g_0 containing the Cartan subalgebra.
GradedDims grade_algebra(const RootSystem& rs, const ParabolicMarking& marking);

/// U = V_lam graded by Z(nu) - Z(lam), so the highest weight line sits in
/// degree 0 and everything else is negative. lam must be supported on the
/// marked nodes so that the top piece is a line.
GradedDims grade_module(const RootSystem& rs, const ParabolicMarking& marking, const Weight& lam);

} // namespace lierigid
