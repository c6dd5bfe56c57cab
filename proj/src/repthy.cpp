#include "lierigid/repthy.hpp"

#include "lierigid/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace lierigid {

namespace {

bool below_in_root_order(const RootSystem& rs, const Weight& top, const Weight& mu)
{
    for (const auto& x : rs.weight_to_root_coords(top - mu))
        if (!is_integer(x) || sgn(x) < 0)
            return false;
    return true;
}

// mu is a weight of V_lam iff its dominant conjugate lies below lam.
bool is_weight_of(const RootSystem& rs, const Weight& lam, const Weight& mu)
{
    return below_in_root_order(rs, lam, make_dominant(rs, mu).weight);
}

void check_weight(const RootSystem& rs, const Weight& lam, const char* field)
{
    if (lam.size() != rs.rank())
        throw InputError(field, "expected " + std::to_string(rs.rank()) + " coordinates, got " +
                                    std::to_string(lam.size()));
    if (!is_dominant(lam))
        throw InputError(field, "weight is not dominant");
}

} // namespace

WeightSystem weight_multiplicities(const RootSystem& rs, const Weight& lam)
{
    check_weight(rs, lam, "weight");
    const std::size_t r = rs.rank();
    const auto& roots = rs.positive_roots();

    // (nu, alpha) = sum_j c_j nu^j (alpha_j, alpha_j) / 2
    std::vector<RatVector> pairing(roots.size(), RatVector(r));
    std::vector<Weight> root_weights;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        for (std::size_t j = 0; j < r; ++j)
            pairing[k][j] = roots[k][j] * rs.gram()(j, j) / 2;
        root_weights.push_back(rs.root_to_weight(roots[k]));
    }
    auto pair_with_root = [&](const Weight& nu, std::size_t k) {
        Rational s = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (nu[j])
                s += nu[j] * pairing[k][j];
        return s;
    };

    const Weight rho = rs.weyl_vector();
    const Rational top_norm = rs.inner(lam + rho, lam + rho);

    WeightSystem mult;
    mult[lam] = 1;
    std::vector<Weight> layer{lam};
    while (!layer.empty()) {
        std::set<Weight> candidates;
        for (const auto& nu : layer)
            for (std::size_t i = 0; i < r; ++i)
                candidates.insert(nu - rs.simple_root_weight(i));
        std::vector<Weight> next;
        for (const auto& mu : candidates) {
            if (!is_weight_of(rs, lam, mu))
                continue;
            Rational acc = 0;
            for (std::size_t k = 0; k < roots.size(); ++k) {
                Weight shifted = mu + root_weights[k];
                for (auto it = mult.find(shifted); it != mult.end(); it = mult.find(shifted)) {
                    acc += it->second * pair_with_root(shifted, k);
                    shifted = shifted + root_weights[k];
                }
            }
            const Rational denom = top_norm - rs.inner(mu + rho, mu + rho);
            if (sgn(denom) == 0)
                throw InternalError("Freudenthal denominator vanished at a weight of the module");
            const Rational m = 2 * acc / denom;
            if (!is_integer(m) || sgn(m) <= 0)
                throw InternalError("Freudenthal produced multiplicity " + to_string(m));
            mult[mu] = static_cast<std::size_t>(to_int64(m));
            next.push_back(mu);
        }
        layer = std::move(next);
    }

    std::size_t total = 0;
    for (const auto& [w, m] : mult)
        total += m;
    if (total != weyl_dim(rs, lam))
        throw InternalError("weight multiplicities do not sum to the Weyl dimension");
    return mult;
}

std::vector<IrrComponent> tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu)
{
    check_weight(rs, lam, "weight");
    check_weight(rs, mu, "weight");
    const std::size_t dim_lam = weyl_dim(rs, lam);
    const std::size_t dim_mu = weyl_dim(rs, mu);
    // Expand the smaller factor into weights.
    const Weight& top = dim_lam >= dim_mu ? lam : mu;
    const Weight& expanded = dim_lam >= dim_mu ? mu : lam;

    const Weight rho = rs.weyl_vector();
    std::map<Weight, int64_t> signed_mult;
    for (const auto& [nu, m] : weight_multiplicities(rs, expanded)) {
        const auto conj = make_dominant(rs, top + nu + rho);
        if (std::any_of(conj.weight.begin(), conj.weight.end(), [](int64_t x) { return x == 0; }))
            continue;
        const auto contribution = static_cast<int64_t>(m);
        signed_mult[conj.weight - rho] += conj.odd ? -contribution : contribution;
    }

    std::vector<IrrComponent> out;
    std::size_t total = 0;
    for (auto it = signed_mult.rbegin(); it != signed_mult.rend(); ++it) {
        if (it->second < 0)
            throw InternalError("negative multiplicity in Brauer-Klimyk sum");
        if (it->second == 0)
            continue;
        const auto m = static_cast<std::size_t>(it->second);
        out.push_back({it->first, m});
        total += m * weyl_dim(rs, it->first);
    }
    if (total != dim_lam * dim_mu)
        throw InternalError("tensor product dimensions do not add up");
    return out;
}

std::vector<IrrComponent> gperp_decompose(const RootSystem& rs, const Weight& lam)
{
    check_weight(rs, lam, "weight");
    const std::size_t dim_u = weyl_dim(rs, lam);
    if (dim_u < 2)
        throw InputError("weight", "module must have dimension at least 2");

    auto parts = tensor_decompose(rs, dual_weight(rs, lam), lam);
    auto remove_one = [&](const Weight& w, const std::string& what) {
        auto it = std::find_if(parts.begin(), parts.end(), [&](const IrrComponent& c) { return c.highest_weight == w; });
        if (it == parts.end())
            throw InputError("weight", what + " does not occur in U* (x) U");
        if (--it->multiplicity == 0)
            parts.erase(it);
    };
    remove_one(Weight(rs.rank(), 0), "trivial summand");
    for (std::size_t f = 0; f < rs.factors().size(); ++f)
        remove_one(rs.highest_root_weight(f),
                   "adjoint summand of factor " + std::to_string(f + 1) + " (" + to_string(rs.factors()[f]) + ")");

    std::size_t total = 0;
    for (const auto& c : parts)
        total += c.multiplicity * weyl_dim(rs, c.highest_weight);
    if (total != dim_u * dim_u - 1 - rs.dimension())
        throw InternalError("g-perp dimension bookkeeping failed");
    return parts;
}

std::size_t default_oracle_bound()
{
    if (const char* env = std::getenv("ORACLE_DIM_MAX")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 30;
}

RepMatrices construct_rep(const RootSystem& rs, const Weight& lam, std::size_t bound)
{
    check_weight(rs, lam, "weight");
    const std::size_t dim = weyl_dim(rs, lam);
    if (dim > bound)
        throw InputError("oracle_bound", "module of dimension " + std::to_string(dim) +
                                             " exceeds the explicit-representation bound " + std::to_string(bound));
    const std::size_t r = rs.rank();

    struct Space {
        std::size_t offset = 0;
        std::size_t dim = 0;
        // e_blocks[j]: V_mu -> V_{mu + alpha_j}, columns indexed by basis of V_mu.
        std::vector<RatMatrix> e_blocks;
        // f_blocks[i]: V_{mu + alpha_i} -> V_mu.
        std::vector<RatMatrix> f_blocks;
    };
    std::map<Weight, Space> spaces;
    std::vector<Weight> basis_weights;

    Space top;
    top.dim = 1;
    top.e_blocks.assign(r, RatMatrix());
    top.f_blocks.assign(r, RatMatrix());
    spaces.emplace(lam, std::move(top));
    basis_weights.push_back(lam);

    auto dim_of = [&](const Weight& w) -> std::size_t {
        auto it = spaces.find(w);
        return it == spaces.end() ? 0 : it->second.dim;
    };

    std::vector<Weight> layer{lam};
    while (!layer.empty()) {
        std::set<Weight> candidates_weights;
        for (const auto& nu : layer)
            for (std::size_t i = 0; i < r; ++i)
                candidates_weights.insert(nu - rs.simple_root_weight(i));

        std::vector<Weight> next;
        for (const auto& mu : candidates_weights) {
            std::vector<Weight> up(r);
            std::size_t image_len = 0;
            std::vector<std::size_t> image_offset(r);
            for (std::size_t j = 0; j < r; ++j) {
                up[j] = mu + rs.simple_root_weight(j);
                image_offset[j] = image_len;
                image_len += dim_of(up[j]);
            }

            // Candidate vectors f_i b, b a basis vector of V_{mu + alpha_i}.
            struct Candidate {
                std::size_t i;
                std::size_t b;
            };
            std::vector<Candidate> cands;
            std::vector<RatVector> images;
            for (std::size_t i = 0; i < r; ++i) {
                const auto src = spaces.find(up[i]);
                if (src == spaces.end())
                    continue;
                for (std::size_t b = 0; b < src->second.dim; ++b) {
                    RatVector img(image_len);
                    for (std::size_t j = 0; j < r; ++j) {
                        const std::size_t dj = dim_of(up[j]);
                        if (dj == 0)
                            continue;
                        // e_j f_i b = f_i e_j b + delta_ij h_i b
                        const Weight mid = up[i] + rs.simple_root_weight(j);
                        const auto mid_it = spaces.find(mid);
                        if (mid_it != spaces.end()) {
                            const RatMatrix& ej = src->second.e_blocks[j];
                            const RatMatrix& fi = spaces.at(up[j]).f_blocks[i];
                            for (std::size_t m = 0; m < mid_it->second.dim; ++m) {
                                const Rational& c = ej(m, b);
                                if (sgn(c) == 0)
                                    continue;
                                for (std::size_t t = 0; t < dj; ++t)
                                    img[image_offset[j] + t] += c * fi(t, m);
                            }
                        }
                        if (i == j)
                            img[image_offset[j] + b] += up[i][i];
                    }
                    cands.push_back({i, b});
                    images.push_back(std::move(img));
                }
            }
            if (cands.empty())
                continue;

            RatMatrix cols = RatMatrix::from_columns(images, image_len);
            RatMatrix reduced = cols;
            const auto pivots = rref_in_place(reduced);
            if (pivots.empty())
                continue;

            Space sp;
            sp.offset = basis_weights.size();
            sp.dim = pivots.size();
            for (std::size_t k = 0; k < sp.dim; ++k)
                basis_weights.push_back(mu);

            sp.e_blocks.assign(r, RatMatrix());
            for (std::size_t j = 0; j < r; ++j) {
                const std::size_t dj = dim_of(up[j]);
                if (dj == 0)
                    continue;
                RatMatrix ej(dj, sp.dim);
                for (std::size_t k = 0; k < sp.dim; ++k)
                    for (std::size_t t = 0; t < dj; ++t)
                        ej(t, k) = images[pivots[k]][image_offset[j] + t];
                sp.e_blocks[j] = std::move(ej);
            }
            // The reduced echelon form expresses every candidate in terms of
            // the pivot candidates: column c of `reduced` holds its coordinates.
            sp.f_blocks.assign(r, RatMatrix());
            for (std::size_t i = 0; i < r; ++i) {
                const std::size_t di = dim_of(up[i]);
                if (di > 0)
                    sp.f_blocks[i] = RatMatrix(sp.dim, di);
            }
            for (std::size_t c = 0; c < cands.size(); ++c)
                for (std::size_t k = 0; k < sp.dim; ++k)
                    sp.f_blocks[cands[c].i](k, cands[c].b) = reduced(k, c);

            spaces.emplace(mu, std::move(sp));
            next.push_back(mu);
        }
        layer = std::move(next);
    }

    RepMatrices rep;
    rep.dimension = basis_weights.size();
    if (rep.dimension != dim)
        throw InternalError("constructed module has dimension " + std::to_string(rep.dimension) + ", expected " +
                            std::to_string(dim));
    rep.basis_weights = basis_weights;
    rep.e.assign(r, RatMatrix(dim, dim));
    rep.f.assign(r, RatMatrix(dim, dim));
    rep.h.assign(r, RatMatrix(dim, dim));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            rep.h[i](k, k) = basis_weights[k][i];
    for (const auto& [mu, sp] : spaces) {
        for (std::size_t j = 0; j < r; ++j) {
            const Weight upj = mu + rs.simple_root_weight(j);
            const auto it = spaces.find(upj);
            if (it == spaces.end())
                continue;
            const Space& target = it->second;
            if (sp.e_blocks[j].rows() > 0)
                for (std::size_t a = 0; a < target.dim; ++a)
                    for (std::size_t b = 0; b < sp.dim; ++b)
                        rep.e[j](target.offset + a, sp.offset + b) = sp.e_blocks[j](a, b);
            if (sp.f_blocks[j].rows() > 0)
                for (std::size_t a = 0; a < sp.dim; ++a)
                    for (std::size_t b = 0; b < target.dim; ++b)
                        rep.f[j](sp.offset + a, target.offset + b) = sp.f_blocks[j](a, b);
        }
    }
    return rep;
}

} // namespace lierigid
