#include "lierigid/cohomology.hpp"

#include "lierigid/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace lierigid {

namespace {

int64_t height(const RootCoords& a)
{
    return std::accumulate(a.begin(), a.end(), int64_t{0});
}

RepMatrices direct_sum(const std::vector<RepMatrices>& parts, std::size_t rank)
{
    RepMatrices out;
    for (const auto& p : parts)
        out.dimension += p.dimension;
    out.e.assign(rank, RatMatrix(out.dimension, out.dimension));
    out.f.assign(rank, RatMatrix(out.dimension, out.dimension));
    out.h.assign(rank, RatMatrix(out.dimension, out.dimension));
    std::size_t off = 0;
    for (const auto& p : parts) {
        out.basis_weights.insert(out.basis_weights.end(), p.basis_weights.begin(), p.basis_weights.end());
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t r = 0; r < p.dimension; ++r)
                for (std::size_t c = 0; c < p.dimension; ++c) {
                    out.e[i](off + r, off + c) = p.e[i](r, c);
                    out.f[i](off + r, off + c) = p.f[i](r, c);
                    out.h[i](off + r, off + c) = p.h[i](r, c);
                }
        off += p.dimension;
    }
    return out;
}

std::vector<RatMatrix> all_root_vectors(const NegativeNilradical& nil, const RepMatrices& rep)
{
    const std::size_t n = nil.all_roots.size();
    std::vector<RatMatrix> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto [i, beta] = nil.recipe[k];
        out[k] = beta == n ? rep.f[i] : commutator(rep.f[i], out[beta]);
    }
    return out;
}

std::size_t pair_index(std::size_t p, std::size_t q, std::size_t m)
{
    // p < q, row-major over the strict upper triangle
    return p * m - p * (p + 1) / 2 + (q - p - 1);
}

RatMatrix submatrix(const RatMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    RatMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            out(r, c) = a(rows[r], cols[c]);
    return out;
}

void check_homogeneous(const RatMatrix& d, const std::vector<Rational>& row_deg, const std::vector<Rational>& col_deg,
                       const char* name)
{
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (sgn(d(r, c)) != 0 && row_deg[r] != col_deg[c])
                throw InternalError(std::string(name) + " does not preserve the grading");
}

std::vector<std::size_t> indices_of(const std::vector<Rational>& degrees, const Rational& d)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (degrees[k] == d)
            out.push_back(k);
    return out;
}

} // namespace

std::vector<H1Piece> kostant_h1(const RootSystem& rs, const ParabolicMarking& marking, const IrrComponent& gamma)
{
    const auto mask = marking.mask(rs.rank());
    const GradingElement z(rs, marking);
    const Weight dual = dual_weight(rs, gamma.highest_weight);
    std::vector<H1Piece> out;
    for (auto i : marking.nodes) {
        const Weight mu = affine_action(rs, i, dual);
        bool levi_dominant = true;
        for (std::size_t j = 0; j < rs.rank(); ++j)
            if (!mask[j] && mu[j] < 0)
                levi_dominant = false;
        if (!levi_dominant)
            continue;
        // highest weight of the dual Levi module: the Levi-dominant conjugate of -mu
        Weight nu = -1 * mu;
        for (bool moved = true; moved;) {
            moved = false;
            for (std::size_t j = 0; j < rs.rank(); ++j)
                if (!mask[j] && nu[j] < 0) {
                    nu = reflect(rs, j, nu);
                    moved = true;
                }
        }
        H1Piece piece;
        piece.levi_highest_weight = nu;
        piece.degree = z(nu);
        piece.dimension = levi_weyl_dim(rs, mask, mu) * gamma.multiplicity;
        piece.source_reflection = i;
        piece.component = gamma.highest_weight;
        out.push_back(std::move(piece));
    }
    return out;
}

NegativeNilradical negative_nilradical(const RootSystem& rs, const ParabolicMarking& marking)
{
    NegativeNilradical nil;
    nil.all_roots = rs.positive_roots();
    std::stable_sort(nil.all_roots.begin(), nil.all_roots.end(),
                     [](const RootCoords& a, const RootCoords& b) { return height(a) < height(b); });
    const std::size_t n = nil.all_roots.size();
    std::map<RootCoords, std::size_t> index;
    for (std::size_t k = 0; k < n; ++k)
        index[nil.all_roots[k]] = k;

    nil.recipe.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& alpha = nil.all_roots[k];
        if (height(alpha) == 1) {
            const auto i = static_cast<std::size_t>(std::find(alpha.begin(), alpha.end(), 1) - alpha.begin());
            nil.recipe[k] = {i, n};
            continue;
        }
        bool found = false;
        for (std::size_t i = 0; i < rs.rank() && !found; ++i) {
            if (alpha[i] == 0)
                continue;
            RootCoords beta = alpha;
            beta[i] -= 1;
            if (auto it = index.find(beta); it != index.end()) {
                nil.recipe[k] = {i, it->second};
                found = true;
            }
        }
        if (!found)
            throw InternalError("positive root is not reachable from a simple root");
    }

    const GradingElement z(rs, marking);
    std::map<std::size_t, std::size_t> position;
    for (std::size_t k = 0; k < n; ++k) {
        const int64_t d = z.on_root(nil.all_roots[k]);
        if (d > 0) {
            position[k] = nil.roots.size();
            nil.roots.push_back(nil.all_roots[k]);
            nil.depth.push_back(d);
            nil.source.push_back(k);
        }
    }

    std::vector<RepMatrices> adjoints;
    for (std::size_t f = 0; f < rs.factors().size(); ++f)
        adjoints.push_back(construct_rep(rs, rs.highest_root_weight(f), std::numeric_limits<std::size_t>::max()));
    const RepMatrices faithful = direct_sum(adjoints, rs.rank());
    const auto vectors = all_root_vectors(nil, faithful);

    const std::size_t m = nil.roots.size();
    nil.bracket.assign(m, std::vector<std::optional<std::pair<std::size_t, Rational>>>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b)
                continue;
            const RatMatrix c = commutator(vectors[nil.source[a]], vectors[nil.source[b]]);
            if (c.is_zero())
                continue;
            RootCoords sum = nil.roots[a];
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] += nil.roots[b][i];
            const auto it = index.find(sum);
            if (it == index.end())
                throw InternalError("bracket of root vectors lands outside the root system");
            const RatMatrix& target = vectors[it->second];
            Rational k;
            bool have = false;
            for (std::size_t r = 0; r < target.rows() && !have; ++r)
                for (std::size_t s = 0; s < target.cols() && !have; ++s)
                    if (sgn(target(r, s)) != 0) {
                        k = c(r, s) / target(r, s);
                        have = true;
                    }
            if (!have || !(c == k * target))
                throw InternalError("bracket is not proportional to the expected root vector");
            nil.bracket[a][b] = std::make_pair(position.at(it->second), k);
        }
    return nil;
}

std::vector<RatMatrix> nilradical_action(const NegativeNilradical& nil, const RepMatrices& rep)
{
    const auto vectors = all_root_vectors(nil, rep);
    std::vector<RatMatrix> out;
    out.reserve(nil.roots.size());
    for (auto k : nil.source)
        out.push_back(vectors[k]);
    return out;
}

CochainSpace build_cochains(const RepMatrices& rep, const GradingElement& z, const NegativeNilradical& nil,
                            const std::vector<RatMatrix>& action)
{
    const std::size_t n = rep.dimension;
    const std::size_t m = nil.roots.size();
    const std::size_t pairs = m * (m - (m ? 1 : 0)) / 2;
    CochainSpace cs;
    for (const auto& w : rep.basis_weights)
        cs.c0_degrees.push_back(z(w));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < n; ++b)
            cs.c1_degrees.push_back(cs.c0_degrees[b] + nil.depth[a]);
    cs.c2_degrees.resize(pairs * n);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q)
            for (std::size_t b = 0; b < n; ++b)
                cs.c2_degrees[pair_index(p, q, m) * n + b] = cs.c0_degrees[b] + nil.depth[p] + nil.depth[q];

    cs.d0 = RatMatrix(m * n, n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t b = 0; b < n; ++b)
                cs.d0(a * n + r, b) = action[a](r, b);

    cs.d1 = RatMatrix(pairs * n, m * n);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q) {
            const std::size_t pq = pair_index(p, q, m);
            if (const auto& br = nil.bracket[p][q])
                for (std::size_t b = 0; b < n; ++b)
                    cs.d1(pq * n + b, br->first * n + b) += br->second;
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t r = 0; r < n; ++r) {
                    cs.d1(pq * n + r, p * n + b) += action[q](r, b);
                    cs.d1(pq * n + r, q * n + b) -= action[p](r, b);
                }
        }
    return cs;
}

DirectCohomology direct_h1(const RepMatrices& rep, const GradingElement& z, const NegativeNilradical& nil)
{
    const auto action = nilradical_action(nil, rep);
    const CochainSpace cs = build_cochains(rep, z, nil, action);
    check_homogeneous(cs.d0, cs.c1_degrees, cs.c0_degrees, "d0");
    check_homogeneous(cs.d1, cs.c2_degrees, cs.c1_degrees, "d1");

    std::set<Rational> degrees(cs.c0_degrees.begin(), cs.c0_degrees.end());
    degrees.insert(cs.c1_degrees.begin(), cs.c1_degrees.end());
    DirectCohomology out;
    for (const auto& d : degrees) {
        const auto i0 = indices_of(cs.c0_degrees, d);
        const auto i1 = indices_of(cs.c1_degrees, d);
        const auto i2 = indices_of(cs.c2_degrees, d);
        const RatMatrix d0 = submatrix(cs.d0, i1, i0);
        const RatMatrix d1 = submatrix(cs.d1, i2, i1);
        if (!i0.empty() && !i1.empty() && !i2.empty() && !(d1 * d0).is_zero())
            throw InternalError("d1 o d0 is not zero");
        const std::size_t r0 = i1.empty() || i0.empty() ? 0 : rank(d0);
        const std::size_t r1 = i2.empty() || i1.empty() ? 0 : rank(d1);
        if (const std::size_t h0 = i0.size() - r0)
            out.h0[d] = h0;
        if (const std::size_t h1 = i1.size() - r1 - r0)
            out.h1[d] = h1;
    }
    return out;
}

DegreeDims pieces_by_degree(const std::vector<H1Piece>& pieces)
{
    DegreeDims out;
    for (const auto& p : pieces)
        out[p.degree] += p.dimension;
    return out;
}

std::string to_string(Verdict v)
{
    return v == Verdict::Rigid ? "RIGID" : "INCONCLUSIVE";
}

CohomologyReport h1_report(const RootSystem& rs, const ParabolicMarking& marking, const Weight& lam, int64_t p)
{
    if (lam.size() != rs.rank())
        throw InputError("weight", "expected " + std::to_string(rs.rank()) + " coordinates");
    for (std::size_t j = 0; j < rs.rank(); ++j)
        if (lam[j] != 0 && !marking.contains(j))
            throw InputError("weight", "highest weight must be supported on the marked nodes");
    CohomologyReport rep;
    rep.p = p;
    for (auto& gamma : gperp_decompose(rs, lam)) {
        ComponentCohomology cc{gamma, kostant_h1(rs, marking, gamma)};
        for (const auto& piece : cc.pieces) {
            rep.h1_by_degree[piece.degree] += piece.dimension;
            if (piece.degree >= p + 2)
                rep.offending.push_back(piece);
        }
        rep.components.push_back(std::move(cc));
    }
    rep.verdict = rep.offending.empty() ? Verdict::Rigid : Verdict::Inconclusive;
    return rep;
}

} // namespace lierigid
