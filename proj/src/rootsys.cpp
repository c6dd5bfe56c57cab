#include "lierigid/rootsys.hpp"

#include "lierigid/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace lierigid {

namespace {

char family_letter(Family f)
{
    return "ABCDEFG"[static_cast<int>(f)];
}

// Edges of the Dynkin diagram (0-based) and squared root lengths, long = 2.
struct DiagramData {
    std::vector<Rational> length2;
    std::vector<std::pair<int, int>> edges;
};

DiagramData diagram(const SimpleFactor& f)
{
    const int n = f.rank;
    DiagramData d;
    d.length2.assign(static_cast<std::size_t>(n), Rational(2));
    switch (f.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
        for (int i = 0; i + 1 < n; ++i)
            d.edges.emplace_back(i, i + 1);
        break;
    case Family::D:
        for (int i = 0; i + 2 < n; ++i)
            d.edges.emplace_back(i, i + 1);
        d.edges.emplace_back(n - 3, n - 1);
        break;
    case Family::E:
        d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
        for (int i = 4; i + 1 < n; ++i)
            d.edges.emplace_back(i, i + 1);
        break;
    case Family::G:
        d.edges = {{0, 1}};
        break;
    }
    switch (f.family) {
    case Family::B:
        d.length2[static_cast<std::size_t>(n - 1)] = 1;
        break;
    case Family::C:
        for (int i = 0; i + 1 < n; ++i)
            d.length2[static_cast<std::size_t>(i)] = 1;
        break;
    case Family::F:
        d.length2[2] = 1;
        d.length2[3] = 1;
        break;
    case Family::G:
        d.length2[0] = Rational(2, 3);
        break;
    default:
        break;
    }
    return d;
}

// For every edge the inner product is -(longer squared length)/2, which
// gives -1 for all Bourbaki diagrams except short-short C_n edges (-1/2),
// F4's short edge (-1/2) and G2 (-1).
RatMatrix factor_gram(const SimpleFactor& f)
{
    const auto d = diagram(f);
    const auto n = static_cast<std::size_t>(f.rank);
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        g(i, i) = d.length2[i];
    for (auto [a, b] : d.edges) {
        const auto i = static_cast<std::size_t>(a);
        const auto j = static_cast<std::size_t>(b);
        Rational v = -std::max(d.length2[i], d.length2[j]) / 2;
        if (f.family == Family::G)
            v = -1;
        g(i, j) = v;
        g(j, i) = v;
    }
    return g;
}

// Involution of the diagram induced by -w0, 0-based.
std::vector<std::size_t> dual_permutation(const SimpleFactor& f)
{
    const auto n = static_cast<std::size_t>(f.rank);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    switch (f.family) {
    case Family::A:
        std::reverse(perm.begin(), perm.end());
        break;
    case Family::D:
        if (n % 2 == 1)
            std::swap(perm[n - 2], perm[n - 1]);
        break;
    case Family::E:
        if (n == 6) {
            std::swap(perm[0], perm[5]);
            std::swap(perm[2], perm[4]);
        }
        break;
    default:
        break;
    }
    return perm;
}

} // namespace

SimpleFactor make_factor(Family family, int rank)
{
    bool ok = false;
    switch (family) {
    case Family::A:
        ok = rank >= 1;
        break;
    case Family::B:
    case Family::C:
        ok = rank >= 2;
        break;
    case Family::D:
        ok = rank >= 3;
        break;
    case Family::E:
        ok = rank >= 6 && rank <= 8;
        break;
    case Family::F:
        ok = rank == 4;
        break;
    case Family::G:
        ok = rank == 2;
        break;
    }
    if (!ok)
        throw InputError("type", std::string("rank ") + std::to_string(rank) + " is not admissible for family " +
                                     family_letter(family));
    return SimpleFactor{family, rank};
}

SimpleFactor parse_factor(std::string_view text)
{
    if (text.size() < 2)
        throw InputError("type", "malformed simple factor '" + std::string(text) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
    const std::string_view letters = "ABCDEFG";
    const auto pos = letters.find(letter);
    if (pos == std::string_view::npos)
        throw InputError("type", "unknown family letter '" + std::string(1, text.front()) + "'");
    int rank = 0;
    for (char c : text.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000)
            throw InputError("type", "malformed rank in '" + std::string(text) + "'");
        rank = rank * 10 + (c - '0');
    }
    return make_factor(static_cast<Family>(pos), rank);
}

std::vector<SimpleFactor> parse_algebra(std::string_view text)
{
    std::vector<SimpleFactor> factors;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == 'x' || text[i] == 'X' || text[i] == ',' || text[i] == '*') {
            factors.push_back(parse_factor(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return factors;
}

std::string to_string(const SimpleFactor& f)
{
    return std::string(1, family_letter(f.family)) + std::to_string(f.rank);
}

std::string to_string(const std::vector<SimpleFactor>& factors)
{
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            s += 'x';
        s += to_string(factors[i]);
    }
    return s;
}

RootSystem RootSystem::build(std::vector<SimpleFactor> factors)
{
    if (factors.empty())
        throw InputError("type", "at least one simple factor is required");
    RootSystem rs;
    for (const auto& f : factors)
        make_factor(f.family, f.rank);
    rs.factors_ = std::move(factors);

    for (std::size_t f = 0; f < rs.factors_.size(); ++f) {
        rs.offsets_.push_back(rs.rank_);
        rs.rank_ += static_cast<std::size_t>(rs.factors_[f].rank);
        rs.node_factor_.resize(rs.rank_, f);
    }
    const std::size_t r = rs.rank_;

    rs.gram_ = RatMatrix(r, r);
    for (std::size_t f = 0; f < rs.factors_.size(); ++f) {
        const auto g = factor_gram(rs.factors_[f]);
        const auto o = rs.offsets_[f];
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                rs.gram_(o + i, o + j) = g(i, j);
    }
    rs.cartan_ = RatMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            rs.cartan_(i, j) = 2 * rs.gram_(i, j) / rs.gram_(j, j);
    rs.inverse_cartan_ = inverse(rs.cartan_);
    rs.weight_gram_ = RatMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            rs.weight_gram_(i, j) = rs.inverse_cartan_(i, j) * rs.gram_(j, j) / 2;

    // Positive roots by height, extending alpha_i-strings: for a root beta
    // with string beta - p alpha_i, ..., beta + q alpha_i we have
    // p - q = <beta, alpha_i^vee>.
    std::set<RootCoords> known;
    std::vector<RootCoords> layer;
    for (std::size_t i = 0; i < r; ++i) {
        RootCoords a(r, 0);
        a[i] = 1;
        known.insert(a);
        layer.push_back(a);
    }
    std::vector<int64_t> int_cartan(r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            int_cartan[i * r + j] = to_int64(rs.cartan_(i, j));

    while (!layer.empty()) {
        rs.positive_roots_.insert(rs.positive_roots_.end(), layer.begin(), layer.end());
        std::set<RootCoords> next;
        for (const auto& beta : layer) {
            for (std::size_t i = 0; i < r; ++i) {
                int64_t pairing = 0;
                for (std::size_t j = 0; j < r; ++j)
                    pairing += beta[j] * int_cartan[j * r + i];
                int64_t p = 0;
                RootCoords down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down))
                        break;
                    ++p;
                }
                if (p - pairing > 0) {
                    RootCoords up = beta;
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        known.insert(layer.begin(), layer.end());
    }

    for (const auto& alpha : rs.positive_roots_) {
        Rational len2 = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (alpha[i] && alpha[j])
                    len2 += alpha[i] * alpha[j] * rs.gram_(i, j);
        RootCoords co(r);
        for (std::size_t j = 0; j < r; ++j)
            co[j] = to_int64(Rational(alpha[j]) * rs.gram_(j, j) / len2);
        rs.coroots_.push_back(std::move(co));
    }

    for (std::size_t f = 0; f < rs.factors_.size(); ++f) {
        const auto lo = rs.offsets_[f];
        const auto hi = lo + static_cast<std::size_t>(rs.factors_[f].rank);
        const RootCoords* best = nullptr;
        int64_t best_height = -1;
        for (const auto& alpha : rs.positive_roots_) {
            int64_t h = 0;
            for (std::size_t i = lo; i < hi; ++i)
                h += alpha[i];
            if (h > best_height) {
                best_height = h;
                best = &alpha;
            }
        }
        rs.highest_roots_.push_back(*best);
    }
    return rs;
}

Weight RootSystem::simple_root_weight(std::size_t i) const
{
    Weight w(rank_);
    for (std::size_t j = 0; j < rank_; ++j)
        w[j] = to_int64(cartan_(i, j));
    return w;
}

Weight RootSystem::root_to_weight(const RootCoords& root) const
{
    Weight w(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
        if (root[i])
            for (std::size_t j = 0; j < rank_; ++j)
                w[j] += root[i] * to_int64(cartan_(i, j));
    return w;
}

RatVector RootSystem::weight_to_root_coords(const Weight& mu) const
{
    RatVector x(rank_);
    for (std::size_t j = 0; j < rank_; ++j)
        if (mu[j])
            for (std::size_t i = 0; i < rank_; ++i)
                x[i] += mu[j] * inverse_cartan_(j, i);
    return x;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const
{
    Rational s = 0;
    for (std::size_t i = 0; i < rank_; ++i)
        if (a[i])
            for (std::size_t j = 0; j < rank_; ++j)
                if (b[j])
                    s += a[i] * b[j] * weight_gram_(i, j);
    return s;
}

int64_t RootSystem::coroot_pairing(const Weight& mu, std::size_t k) const
{
    int64_t s = 0;
    for (std::size_t j = 0; j < rank_; ++j)
        s += mu[j] * coroots_[k][j];
    return s;
}

bool is_dominant(const Weight& mu)
{
    return std::all_of(mu.begin(), mu.end(), [](int64_t x) { return x >= 0; });
}

Weight operator+(const Weight& a, const Weight& b)
{
    Weight c = a;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b[i];
    return c;
}

Weight operator-(const Weight& a, const Weight& b)
{
    Weight c = a;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= b[i];
    return c;
}

Weight operator*(int64_t s, const Weight& a)
{
    Weight c = a;
    for (auto& x : c)
        x *= s;
    return c;
}

Weight reflect(const RootSystem& rs, std::size_t i, const Weight& mu)
{
    if (i >= rs.rank())
        throw InputError("reflection", "simple reflection index " + std::to_string(i + 1) + " out of range");
    const int64_t m = mu[i];
    if (m == 0)
        return mu;
    return mu - m * rs.simple_root_weight(i);
}

Weight affine_action(const RootSystem& rs, std::size_t i, const Weight& mu)
{
    const Weight rho = rs.weyl_vector();
    return reflect(rs, i, mu + rho) - rho;
}

Rational weyl_dim_exact(const RootSystem& rs, const Weight& lam)
{
    if (lam.size() != rs.rank())
        throw InputError("weight", "expected " + std::to_string(rs.rank()) + " coordinates, got " +
                                       std::to_string(lam.size()));
    if (!is_dominant(lam))
        throw InputError("weight", "weight is not dominant");
    const Weight shifted = lam + rs.weyl_vector();
    mpz_class num = 1;
    mpz_class den = 1;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
        num *= rs.coroot_pairing(shifted, k);
        den *= rs.coroot_pairing(rs.weyl_vector(), k);
    }
    Rational d(num, den);
    d.canonicalize();
    return d;
}

std::size_t weyl_dim(const RootSystem& rs, const Weight& lam)
{
    const Rational d = weyl_dim_exact(rs, lam);
    if (!is_integer(d))
        throw InternalError("Weyl dimension " + to_string(d) + " is not an integer");
    return static_cast<std::size_t>(to_int64(d));
}

std::size_t levi_weyl_dim(const RootSystem& rs, const std::vector<bool>& marked, const Weight& mu)
{
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (!marked[i] && mu[i] < 0)
            throw InputError("weight", "weight is not dominant for the Levi subalgebra");
    const Weight rho = rs.weyl_vector();
    const Weight shifted = mu + rho;
    mpz_class num = 1;
    mpz_class den = 1;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
        const auto& alpha = rs.positive_roots()[k];
        bool in_levi = true;
        for (std::size_t i = 0; i < rs.rank() && in_levi; ++i)
            if (marked[i] && alpha[i] != 0)
                in_levi = false;
        if (!in_levi)
            continue;
        num *= rs.coroot_pairing(shifted, k);
        den *= rs.coroot_pairing(rho, k);
    }
    Rational d(num, den);
    d.canonicalize();
    return static_cast<std::size_t>(to_int64(d));
}

Rational casimir(const RootSystem& rs, const Weight& lam)
{
    const Weight rho = rs.weyl_vector();
    return rs.inner(lam, lam + 2 * rho);
}

Weight dual_weight(const RootSystem& rs, const Weight& lam)
{
    Weight out(rs.rank());
    for (std::size_t f = 0; f < rs.factors().size(); ++f) {
        const auto perm = dual_permutation(rs.factors()[f]);
        const auto o = rs.factor_offset(f);
        for (std::size_t i = 0; i < perm.size(); ++i)
            out[o + perm[i]] = lam[o + i];
    }
    return out;
}

DominantConjugate make_dominant(const RootSystem& rs, Weight mu)
{
    DominantConjugate out;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (mu[i] < 0) {
                mu = reflect(rs, i, mu);
                out.odd = !out.odd;
                changed = true;
            }
        }
    }
    out.weight = std::move(mu);
    return out;
}

} // namespace lierigid
