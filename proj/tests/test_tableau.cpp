#include "lierigid/errors.hpp"
#include "lierigid/tableau.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace lierigid;

namespace {

Tableau random_tableau(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> small(1, 5);
    std::uniform_int_distribution<int> entry(-2, 2);
    const std::size_t n = small(rng);
    const std::size_t w = small(rng);
    const std::size_t cap = std::min<std::size_t>(12, n * w);
    const std::size_t want = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
    std::vector<RatVector> flat;
    for (std::size_t k = 0; k < want; ++k) {
        RatVector v(w * n);
        for (auto& x : v)
            x = entry(rng);
        flat.push_back(v);
    }
    std::vector<RatMatrix> basis;
    for (const auto& v : independent_subset(flat, w * n)) {
        RatMatrix m(w, n);
        for (std::size_t a = 0; a < w; ++a)
            for (std::size_t i = 0; i < n; ++i)
                m(a, i) = v[a * n + i];
        basis.push_back(m);
    }
    return Tableau::make(n, w, std::move(basis));
}

} // namespace

TEST_CASE("full tableau")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t w = 1; w <= 3; ++w) {
            const auto t = Tableau::full(n, w);
            CHECK(t.dim() == n * w);
            CHECK(prolong(t).size() == w * n * (n + 1) / 2);
            std::vector<std::size_t> expected;
            for (std::size_t j = 0; j < n; ++j)
                expected.push_back(w * (n - j));
            CHECK(cartan_characters(t) == expected);
            const auto r = is_involutive(t);
            CHECK(r.involutive);
            CHECK(r.bound == r.dim_prolongation);
            CHECK(r.character_of_generality == n);
            CHECK(torsion_quotient_dim(t) == 0);
        }
}

TEST_CASE("zero tableau")
{
    const auto t = Tableau::zero(3, 2);
    CHECK(prolong(t).empty());
    CHECK(cartan_characters(t) == std::vector<std::size_t>{0, 0, 0});
    const auto r = is_involutive(t);
    CHECK(r.involutive);
    CHECK_FALSE(r.character_of_generality.has_value());
    CHECK(torsion_quotient_dim(t) == 2 * 3);
}

TEST_CASE("Cauchy-Riemann tableau")
{
    const auto t = Tableau::cauchy_riemann();
    CHECK(t.dim() == 2);
    CHECK(prolong(t).size() == 2);
    CHECK(cartan_characters(t) == std::vector<std::size_t>{2, 0});
    const auto r = is_involutive(t);
    CHECK(r.involutive);
    CHECK(r.bound == 2);
    CHECK(r.character_of_generality == 1);
    CHECK(torsion_quotient_dim(t) == 0);
    CHECK(delta_rank(t) == 2);
    for (const auto& form : prolong(t))
        for (const auto& m : form)
            CHECK(m == m.transpose());
}

TEST_CASE("rank-one tableau in two variables")
{
    RatMatrix m(1, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    const auto t = Tableau::make(2, 1, {m});
    CHECK(cartan_characters(t) == std::vector<std::size_t>{1, 0});
    CHECK(prolong(t).size() == 1);
    CHECK(is_involutive(t).involutive);
}

TEST_CASE("prolongation agrees with direct solution on random tableaux")
{
    std::mt19937_64 rng(7);
    for (int k = 0; k < 60; ++k) {
        const auto t = random_tableau(rng);
        CAPTURE(t.dim_v);
        CAPTURE(t.dim_w);
        CAPTURE(t.dim());
        const auto p = prolong(t);
        CHECK(p.size() == oracle::naive_prolongation_dim(t));
        CHECK(delta_rank(t) + p.size() == t.dim_v * t.dim());
        const auto chars = cartan_characters(t, 3);
        CHECK(chars.size() == t.dim_v);
        if (!chars.empty())
            CHECK(chars[0] == t.dim());
        for (std::size_t j = 1; j < chars.size(); ++j)
            CHECK(chars[j] <= chars[j - 1]);
        CHECK(p.size() <= std::accumulate(chars.begin(), chars.end(), std::size_t{0}));
        CHECK(torsion_quotient_dim(t) == t.dim_w * t.dim_v * (t.dim_v - 1) / 2 - delta_rank(t));
    }
}

TEST_CASE("tableau validation")
{
    RatMatrix m(2, 2);
    m(0, 0) = 1;
    CHECK_THROWS_AS(Tableau::make(2, 2, {m, m}), InputError);
    CHECK_THROWS_AS(Tableau::make(3, 2, {m}), InputError);
}

TEST_CASE("stabilizer of the zero quadric")
{
    const auto f = FubiniQuadric::make(2, 1, std::vector<Rational>(4, 0));
    const auto s = stabilizer_and_tableau(f);
    CHECK(s.block_dim == 6);
    CHECK(s.dim_r == 6);
    CHECK(s.tableau_r_perp.dim() == 0);
}

TEST_CASE("stabilizer of the quadric surface xy")
{
    std::vector<Rational> e(4, 0);
    e[1] = e[2] = 1;
    const auto f = FubiniQuadric::make(2, 1, e);
    const auto s = stabilizer_and_tableau(f);
    CHECK(s.block_dim == 6);
    CHECK(s.dim_r == 3);
    CHECK(s.dim_r + s.tableau_r_perp.dim() == 6);
    CHECK_FALSE(s.trace_form_degenerate);
    for (const auto& y : s.r_basis)
        for (const auto& x : act_on_quadric(f, y))
            CHECK(sgn(x) == 0);
    CHECK(s.tableau_r_perp.dim_v == 2);
    CHECK(s.tableau_r_perp.dim_w == 3);
}

TEST_CASE("stabilizer of a rank-one quadric on a line")
{
    const auto f = FubiniQuadric::make(1, 1, {Rational(1)});
    const auto s = stabilizer_and_tableau(f);
    CHECK(s.block_dim == 3);
    CHECK(s.dim_r == 2);
    CHECK(s.tableau_r_perp.dim() == 1);
}

TEST_CASE("quadric validation")
{
    CHECK_THROWS_AS(FubiniQuadric::make(2, 1, {1, 0, 0}), DimensionError);
    CHECK_THROWS_AS(FubiniQuadric::make(2, 1, {0, 1, 0, 0}), InputError);
}

TEST_CASE("reduced prolongation")
{
    const auto t = Tableau::full(2, 1);
    const auto p = prolong(t);
    CHECK(reduced_prolongation_dim(t, {}).dimension == 3);
    const auto one = reduced_prolongation_dim(t, {flatten(p[0])});
    CHECK(one.dimension == 2);
    CHECK(one.discarded_rank == 0);
    std::vector<RatVector> all;
    for (const auto& f : p)
        all.push_back(flatten(f));
    CHECK(reduced_prolongation_dim(t, all).dimension == 0);

    // a skew element of A (x) V* is not in A^(1) and is discarded
    RatVector skew(4);
    skew[1] = 1;
    skew[2] = -1;
    const auto r = reduced_prolongation_dim(t, {skew});
    CHECK(r.dimension == 3);
    CHECK(r.discarded_rank == 1);

    const auto cr = Tableau::cauchy_riemann();
    RatVector outside(8);
    outside[0] = 1;
    CHECK_THROWS_AS(reduced_prolongation_dim(cr, {outside}), InputError);
}
