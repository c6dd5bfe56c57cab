#pragma once

#include "lierigid/grading.hpp"
#include "lierigid/linalg.hpp"
#include "lierigid/repthy.hpp"
#include "lierigid/rootsys.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lierigid {

/// Degree-indexed dimensions; degrees are Z-eigenvalues of cochains.
using DegreeDims = std::map<Rational, std::size_t>;

/// One irreducible g_0-summand of H^1(g_-, Gamma).
struct H1Piece {
    /// Highest weight of the g_0-module (fundamental coordinates of g).
    Weight levi_highest_weight;
    Rational degree;
    std::size_t dimension = 0;
    /// 0-based marked node whose simple reflection produced the piece.
    std::size_t source_reflection = 0;
    /// Highest weight of the coefficient module Gamma.
    Weight component;

    friend bool operator==(const H1Piece&, const H1Piece&) = default;
};

/// H^1(g_-, Gamma) from the simple reflections at marked nodes. The
/// g_-version is obtained from the classical n_+ statement by duality: the
/// piece for node i is the dual of the Levi module with highest weight
/// s_i . lam*, and its degree is -Z(s_i . lam*). Dimensions include
/// gamma.multiplicity.
std::vector<H1Piece> kostant_h1(const RootSystem& rs, const ParabolicMarking& marking, const IrrComponent& gamma);

/// Basis {f_alpha : Z(alpha) > 0} of g_- with structure constants.
struct NegativeNilradical {
    std::vector<RootCoords> roots;
    /// Z(alpha) > 0; the basis vector f_alpha has degree -Z(alpha).
    std::vector<int64_t> depth;
    /// bracket[a][b] = (c, k): [f_a, f_b] = k f_c; absent when zero.
    std::vector<std::vector<std::optional<std::pair<std::size_t, Rational>>>> bracket;
    /// Position of each basis root in `all_roots`.
    std::vector<std::size_t> source;
    /// Every positive root; f_alpha = [f_i, f_beta] with recipe (i, beta).
    /// Simple roots carry beta == all_roots.size().
    std::vector<RootCoords> all_roots;
    std::vector<std::pair<std::size_t, std::size_t>> recipe;
};

/// Structure constants are read off a faithful representation (sum of the
/// adjoint modules of the simple factors).
NegativeNilradical negative_nilradical(const RootSystem& rs, const ParabolicMarking& marking);

/// Matrices of f_alpha (alpha in g_-) acting on `rep`, built with the same
/// bracket recipe as the structure constants.
std::vector<RatMatrix> nilradical_action(const NegativeNilradical& nil, const RepMatrices& rep);

/// C^0 = Gamma, C^1 = g_-^* (x) Gamma, C^2 = L^2 g_-^* (x) Gamma with the
/// differentials d0(X)(v) = v.X and
/// d1(a (x) X)(v ^ w) = a([v,w]) X + a(v) w.X - a(w) v.X.
struct CochainSpace {
    std::vector<Rational> c0_degrees;
    std::vector<Rational> c1_degrees;
    std::vector<Rational> c2_degrees;
    RatMatrix d0; // c1 x c0
    RatMatrix d1; // c2 x c1
};

CochainSpace build_cochains(const RepMatrices& rep, const GradingElement& z, const NegativeNilradical& nil,
                            const std::vector<RatMatrix>& action);

struct DirectCohomology {
    DegreeDims h0;
    DegreeDims h1;
};

/// Per-degree ranks of the graded slices of d0 and d1. Throws
/// InternalError if d1 o d0 != 0 in some slice or a differential mixes
/// degrees.
DirectCohomology direct_h1(const RepMatrices& rep, const GradingElement& z, const NegativeNilradical& nil);

/// Aggregate Kostant pieces by degree.
DegreeDims pieces_by_degree(const std::vector<H1Piece>& pieces);

enum class Verdict { Rigid, Inconclusive };
std::string to_string(Verdict v);

struct ComponentCohomology {
    IrrComponent gamma;
    std::vector<H1Piece> pieces;
};

struct CohomologyReport {
    int64_t p = -1;
    std::vector<ComponentCohomology> components;
    DegreeDims h1_by_degree;
    Verdict verdict = Verdict::Rigid;
    std::vector<H1Piece> offending;
};

/// Theorem-style rigidity test: RIGID if H^1_d(g_-, g-perp) = 0 for all
/// d >= p + 2.
CohomologyReport h1_report(const RootSystem& rs, const ParabolicMarking& marking, const Weight& lam, int64_t p);

} // namespace lierigid
