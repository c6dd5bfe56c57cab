#include "lierigid/tableau.hpp"

#include "lierigid/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace lierigid {

namespace {

// dim of {c : sum_k c_k B_k v = 0 for every v in vs}
std::size_t killed_dim(const Tableau& t, const std::vector<RatVector>& vs)
{
    if (vs.empty() || t.dim() == 0)
        return t.dim();
    RatMatrix m(vs.size() * t.dim_w, t.dim());
    for (std::size_t s = 0; s < vs.size(); ++s)
        for (std::size_t k = 0; k < t.dim(); ++k) {
            const RatVector img = t.basis[k].apply(vs[s]);
            for (std::size_t a = 0; a < t.dim_w; ++a)
                m(s * t.dim_w + a, k) = img[a];
        }
    return t.dim() - rank(m);
}

RatVector unit(std::size_t n, std::size_t i)
{
    RatVector v(n);
    v[i] = 1;
    return v;
}

std::vector<RatVector> units(std::size_t n)
{
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(unit(n, i));
    return out;
}

std::vector<std::size_t> flag_dims(const Tableau& t, const std::vector<RatVector>& flag)
{
    std::vector<std::size_t> out{t.dim()};
    std::vector<RatVector> prefix;
    for (std::size_t j = 1; j < t.dim_v; ++j) {
        prefix.push_back(flag[j - 1]);
        out.push_back(killed_dim(t, prefix));
    }
    return out;
}

class CoordinateSearch {
public:
    explicit CoordinateSearch(const Tableau& t) : t_(t) {}

    // Lexicographically smallest continuation of dims after the subset `mask`.
    const std::vector<std::size_t>& tail(uint64_t mask, std::size_t size)
    {
        if (auto it = memo_.find(mask); it != memo_.end())
            return it->second;
        std::vector<std::size_t> best;
        bool have = false;
        if (size + 1 < t_.dim_v) {
            for (std::size_t i = 0; i < t_.dim_v; ++i) {
                if (mask & (uint64_t{1} << i))
                    continue;
                const uint64_t next = mask | (uint64_t{1} << i);
                std::vector<std::size_t> cand{dim_of(next)};
                const auto& rest = tail(next, size + 1);
                cand.insert(cand.end(), rest.begin(), rest.end());
                if (!have || cand < best) {
                    best = std::move(cand);
                    have = true;
                }
            }
        }
        return memo_.emplace(mask, std::move(best)).first->second;
    }

private:
    std::size_t dim_of(uint64_t mask)
    {
        if (auto it = dims_.find(mask); it != dims_.end())
            return it->second;
        std::vector<RatVector> vs;
        for (std::size_t i = 0; i < t_.dim_v; ++i)
            if (mask & (uint64_t{1} << i))
                vs.push_back(unit(t_.dim_v, i));
        return dims_[mask] = killed_dim(t_, vs);
    }

    const Tableau& t_;
    std::map<uint64_t, std::size_t> dims_;
    std::map<uint64_t, std::vector<std::size_t>> memo_;
};

// Coordinate flags beyond this many V-directions use a greedy ordering.
constexpr std::size_t kExhaustiveLimit = 14;

std::vector<std::size_t> greedy_coordinate(const Tableau& t)
{
    std::vector<std::size_t> out{t.dim()};
    std::vector<RatVector> chosen;
    std::vector<bool> used(t.dim_v, false);
    for (std::size_t j = 1; j < t.dim_v; ++j) {
        std::size_t best_i = 0;
        std::size_t best = t.dim() + 1;
        for (std::size_t i = 0; i < t.dim_v; ++i) {
            if (used[i])
                continue;
            chosen.push_back(unit(t.dim_v, i));
            const std::size_t d = killed_dim(t, chosen);
            chosen.pop_back();
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        used[best_i] = true;
        chosen.push_back(unit(t.dim_v, best_i));
        out.push_back(best);
    }
    return out;
}

} // namespace

Tableau Tableau::make(std::size_t dim_v, std::size_t dim_w, std::vector<RatMatrix> basis)
{
    for (const auto& m : basis)
        if (m.rows() != dim_w || m.cols() != dim_v)
            throw InputError("basis", "each basis element must be " + std::to_string(dim_w) + " x " +
                                          std::to_string(dim_v));
    Tableau t{dim_v, dim_w, std::move(basis)};
    const auto flat = t.flattened();
    if (independent_subset(flat, dim_v * dim_w).size() != flat.size())
        throw InputError("basis", "basis elements are linearly dependent");
    return t;
}

Tableau Tableau::full(std::size_t dim_v, std::size_t dim_w)
{
    Tableau t{dim_v, dim_w, {}};
    for (std::size_t a = 0; a < dim_w; ++a)
        for (std::size_t i = 0; i < dim_v; ++i) {
            RatMatrix m(dim_w, dim_v);
            m(a, i) = 1;
            t.basis.push_back(std::move(m));
        }
    return t;
}

Tableau Tableau::zero(std::size_t dim_v, std::size_t dim_w)
{
    return Tableau{dim_v, dim_w, {}};
}

Tableau Tableau::cauchy_riemann()
{
    RatMatrix a(2, 2);
    a(0, 0) = 1;
    a(1, 1) = 1;
    RatMatrix b(2, 2);
    b(0, 1) = 1;
    b(1, 0) = -1;
    return Tableau{2, 2, {a, b}};
}

std::vector<RatVector> Tableau::flattened() const
{
    std::vector<RatVector> out;
    out.reserve(basis.size());
    for (const auto& m : basis) {
        RatVector v(dim_w * dim_v);
        for (std::size_t a = 0; a < dim_w; ++a)
            for (std::size_t i = 0; i < dim_v; ++i)
                v[a * dim_v + i] = m(a, i);
        out.push_back(std::move(v));
    }
    return out;
}

RatVector flatten(const SymmetricForm& form)
{
    if (form.empty())
        return {};
    const std::size_t n = form.front().rows();
    RatVector v(form.size() * n * n);
    for (std::size_t a = 0; a < form.size(); ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                v[(a * n + i) * n + j] = form[a](i, j);
    return v;
}

namespace {

std::vector<RatVector> a_tensor_vstar(const Tableau& t)
{
    const std::size_t n = t.dim_v;
    std::vector<RatVector> out;
    for (const auto& b : t.basis)
        for (std::size_t j = 0; j < n; ++j) {
            RatVector v(t.dim_w * n * n);
            for (std::size_t a = 0; a < t.dim_w; ++a)
                for (std::size_t i = 0; i < n; ++i)
                    v[(a * n + i) * n + j] = b(a, i);
            out.push_back(std::move(v));
        }
    return out;
}

} // namespace

std::vector<SymmetricForm> prolong(const Tableau& t)
{
    const std::size_t n = t.dim_v;
    const std::size_t ambient = t.dim_w * n * n;
    std::vector<RatVector> sym;
    for (std::size_t a = 0; a < t.dim_w; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                RatVector v(ambient);
                v[(a * n + i) * n + j] = 1;
                v[(a * n + j) * n + i] = 1;
                sym.push_back(std::move(v));
            }
    std::vector<SymmetricForm> out;
    for (const auto& v : intersect(a_tensor_vstar(t), sym, ambient)) {
        SymmetricForm f(t.dim_w, RatMatrix(n, n));
        for (std::size_t a = 0; a < t.dim_w; ++a)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    f[a](i, j) = v[(a * n + i) * n + j];
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t delta_rank(const Tableau& t)
{
    const std::size_t n = t.dim_v;
    if (n < 2 || t.dim() == 0)
        return 0;
    // column (k, j) is B_k (x) e^j; row (a, i < l) is its skew part
    std::size_t pairs = n * (n - 1) / 2;
    RatMatrix m(t.dim_w * pairs, t.dim() * n);
    for (std::size_t k = 0; k < t.dim(); ++k)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t col = k * n + j;
            std::size_t p = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t l = i + 1; l < n; ++l, ++p)
                    for (std::size_t a = 0; a < t.dim_w; ++a) {
                        Rational v = 0;
                        if (j == l)
                            v += t.basis[k](a, i);
                        if (j == i)
                            v -= t.basis[k](a, l);
                        m(a * pairs + p, col) = v;
                    }
        }
    return rank(m);
}

std::vector<std::size_t> cartan_characters(const Tableau& t, uint64_t seed, std::size_t random_flags)
{
    if (t.dim_v == 0)
        return {};
    std::vector<std::size_t> best;
    if (t.dim_v <= kExhaustiveLimit) {
        CoordinateSearch search(t);
        best = {t.dim()};
        const auto& rest = search.tail(0, 0);
        best.insert(best.end(), rest.begin(), rest.end());
    } else {
        best = greedy_coordinate(t);
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (std::size_t r = 0; r < random_flags; ++r) {
        std::vector<RatVector> flag;
        do {
            flag.assign(t.dim_v, RatVector(t.dim_v));
            for (auto& v : flag)
                for (auto& x : v)
                    x = entry(rng);
        } while (rank(RatMatrix::from_rows(flag, t.dim_v)) != t.dim_v);
        auto dims = flag_dims(t, flag);
        if (dims < best)
            best = std::move(dims);
    }
    return best;
}

InvolutivityReport is_involutive(const Tableau& t, uint64_t seed)
{
    InvolutivityReport r;
    r.dim_a = t.dim();
    r.characters = cartan_characters(t, seed);
    r.dim_prolongation = prolong(t).size();
    for (auto d : r.characters)
        r.bound += d;
    r.involutive = r.dim_prolongation == r.bound;
    if (r.dim_a != 0) {
        auto at = [&](std::size_t j) { return j < r.characters.size() ? r.characters[j] : std::size_t{0}; };
        for (std::size_t j = 1; j <= t.dim_v; ++j)
            if (at(j - 1) != at(j) && at(j) == at(j + 1)) {
                r.character_of_generality = j;
                break;
            }
    }
    return r;
}

std::size_t torsion_quotient_dim(const Tableau& t)
{
    const std::size_t n = t.dim_v;
    return t.dim_w * n * (n - (n ? 1 : 0)) / 2 - delta_rank(t);
}

FubiniQuadric FubiniQuadric::make(std::size_t dim_t, std::size_t dim_n, std::vector<Rational> entries)
{
    if (entries.size() != dim_t * dim_t * dim_n)
        throw DimensionError("f2 has " + std::to_string(entries.size()) + " entries, expected dim_T^2 * dim_N = " +
                             std::to_string(dim_t * dim_t * dim_n));
    FubiniQuadric f{dim_t, dim_n, std::move(entries)};
    for (std::size_t a = 0; a < dim_t; ++a)
        for (std::size_t b = a + 1; b < dim_t; ++b)
            for (std::size_t mu = 0; mu < dim_n; ++mu)
                if (f(a, b, mu) != f(b, a, mu))
                    throw InputError("f2", "F2 must be symmetric in its two T* slots");
    return f;
}

RatVector act_on_quadric(const FubiniQuadric& f2, const RatVector& y)
{
    const std::size_t n = f2.dim_t;
    const std::size_t a = f2.dim_n;
    const Rational& xl = y[0];
    auto xt = [&](std::size_t r, std::size_t c) -> const Rational& { return y[1 + r * n + c]; };
    auto xn = [&](std::size_t r, std::size_t c) -> const Rational& { return y[1 + n * n + r * a + c]; };
    RatVector out(n * n * a);
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = 0; be < n; ++be)
            for (std::size_t mu = 0; mu < a; ++mu) {
                Rational v = xl * f2(al, be, mu);
                for (std::size_t nu = 0; nu < a; ++nu)
                    v += xn(mu, nu) * f2(al, be, nu);
                for (std::size_t g = 0; g < n; ++g)
                    v -= xt(g, al) * f2(g, be, mu) + xt(g, be) * f2(al, g, mu);
                out[(al * n + be) * a + mu] = v;
            }
    return out;
}

StabilizerPair stabilizer_and_tableau(const FubiniQuadric& f2)
{
    const std::size_t n = f2.dim_t;
    const std::size_t a = f2.dim_n;
    StabilizerPair sp;
    sp.block_dim = 1 + n * n + a * a;

    std::vector<RatVector> images;
    for (const auto& y : units(sp.block_dim))
        images.push_back(act_on_quadric(f2, y));
    const RatMatrix action = RatMatrix::from_columns(images, n * n * a);
    sp.r_basis = kernel_basis(action);
    sp.dim_r = sp.r_basis.size();
    for (const auto& y : sp.r_basis)
        for (const auto& v : act_on_quadric(f2, y))
            if (sgn(v) != 0)
                throw InternalError("stabilizer element does not annihilate F2");

    // trace form: x_L x'_L + tr(X_T X'_T) + tr(X_N X'_N)
    auto pair_with = [&](const RatVector& y) {
        RatVector row(sp.block_dim);
        row[0] = y[0];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                row[1 + r * n + c] = y[1 + c * n + r];
        for (std::size_t r = 0; r < a; ++r)
            for (std::size_t c = 0; c < a; ++c)
                row[1 + n * n + r * a + c] = y[1 + n * n + c * a + r];
        return row;
    };
    std::vector<RatVector> functionals;
    for (const auto& y : sp.r_basis)
        functionals.push_back(pair_with(y));
    const auto everything = units(sp.block_dim);
    sp.r_perp_basis =
        functionals.empty() ? everything : kernel_basis(RatMatrix::from_rows(functionals, sp.block_dim));
    sp.trace_form_degenerate = !intersect(sp.r_basis, sp.r_perp_basis, sp.block_dim).empty();

    const std::size_t dim_w = a + n * a;
    auto to_matrix = [&](const RatVector& y) {
        const RatVector g = act_on_quadric(f2, y);
        RatMatrix m(dim_w, n);
        for (std::size_t be = 0; be < n; ++be)
            for (std::size_t mu = 0; mu < a; ++mu)
                for (std::size_t al = 0; al < n; ++al)
                    m(a + be * a + mu, al) = g[(al * n + be) * a + mu];
        return m;
    };
    const auto& source = sp.trace_form_degenerate ? everything : sp.r_perp_basis;
    Tableau raw{n, dim_w, {}};
    for (const auto& y : source)
        raw.basis.push_back(to_matrix(y));
    const auto flat = raw.flattened();
    Tableau t{n, dim_w, {}};
    RatMatrix probe = RatMatrix::from_columns(flat, dim_w * n);
    for (auto p : rref_in_place(probe))
        t.basis.push_back(raw.basis[p]);
    sp.tableau_r_perp = std::move(t);
    if (sp.dim_r + sp.tableau_r_perp.dim() != sp.block_dim)
        throw InternalError("stabilizer and tableau dimensions do not add up");
    return sp;
}

ReducedProlongation reduced_prolongation_dim(const Tableau& t, const std::vector<RatVector>& bracket_image)
{
    const std::size_t n = t.dim_v;
    const std::size_t ambient = t.dim_w * n * n;
    const auto avs = a_tensor_vstar(t);
    for (const auto& v : bracket_image) {
        if (v.size() != ambient)
            throw InputError("bracket_image", "vector of length " + std::to_string(v.size()) + ", expected " +
                                                  std::to_string(ambient));
        if (!coordinates_in(avs, v))
            throw InputError("bracket_image", "vector does not lie in A (x) V*");
    }
    std::vector<RatVector> prolongation;
    for (const auto& f : prolong(t))
        prolongation.push_back(flatten(f));
    ReducedProlongation out;
    const auto common = intersect(prolongation, bracket_image, ambient);
    out.dimension = prolongation.size() - common.size();
    out.discarded_rank = independent_subset(bracket_image, ambient).size() - common.size();
    return out;
}

} // namespace lierigid
