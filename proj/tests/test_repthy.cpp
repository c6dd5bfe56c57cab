#include "lierigid/errors.hpp"
#include "lierigid/repthy.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace lierigid;

namespace {

RootSystem rs_of(const char* s)
{
    return RootSystem::build(parse_algebra(s));
}

std::map<Weight, std::size_t> as_map(const std::vector<IrrComponent>& cs)
{
    std::map<Weight, std::size_t> out;
    for (const auto& c : cs)
        out[c.highest_weight] += c.multiplicity;
    return out;
}

void check_rep(const RootSystem& rs, const RepMatrices& r)
{
    const std::size_t n = rs.rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const RatMatrix ef = commutator(r.e[i], r.f[j]);
            if (i == j)
                CHECK(ef == r.h[i]);
            else
                CHECK(ef.is_zero());
            CHECK(commutator(r.h[i], r.e[j]) == rs.cartan()(j, i) * r.e[j]);
            CHECK(commutator(r.h[i], r.f[j]) == -rs.cartan()(j, i) * r.f[j]);
        }
}

} // namespace

TEST_CASE("weight multiplicities")
{
    const auto a1 = weight_multiplicities(rs_of("A1"), {3});
    CHECK(a1 == WeightSystem{{{-3}, 1}, {{-1}, 1}, {{1}, 1}, {{3}, 1}});
    CHECK(weight_multiplicities(rs_of("A2"), {0, 0}) == WeightSystem{{{0, 0}, 1}});
    const auto adj = weight_multiplicities(rs_of("A2"), {1, 1});
    CHECK(adj.size() == 7);
    CHECK(adj.at({0, 0}) == 2);
    // E8 adjoint: zero weight has multiplicity 8
    const auto e8 = rs_of("E8");
    CHECK(weight_multiplicities(e8, e8.highest_root_weight(0)).at(Weight(8, 0)) == 8);
}

TEST_CASE("weight systems are invariant under simple reflections")
{
    for (const char* alg : {"A3", "B3", "C3", "G2", "D4"}) {
        const auto rs = rs_of(alg);
        Weight lam(rs.rank(), 0);
        lam[0] = 1;
        lam[rs.rank() - 1] += 1;
        const auto ws = weight_multiplicities(rs, lam);
        std::size_t total = 0;
        for (const auto& [w, m] : ws) {
            total += m;
            for (std::size_t i = 0; i < rs.rank(); ++i)
                CHECK(ws.at(reflect(rs, i, w)) == m);
        }
        CHECK(total == weyl_dim(rs, lam));
    }
}

TEST_CASE("tensor products")
{
    const auto a1 = rs_of("A1");
    CHECK(as_map(tensor_decompose(a1, {1}, {1})) == std::map<Weight, std::size_t>{{{2}, 1}, {{0}, 1}});
    CHECK(as_map(tensor_decompose(a1, {5}, {0})) == std::map<Weight, std::size_t>{{{5}, 1}});
    const auto a2 = rs_of("A2");
    CHECK(as_map(tensor_decompose(a2, {1, 1}, {1, 1})) ==
          std::map<Weight, std::size_t>{{{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 2}, {{0, 0}, 1}});
}

TEST_CASE("Klimyk agrees with character peeling")
{
    struct Case {
        const char* alg;
        Weight a, b;
    };
    const Case cases[] = {{"A2", {2, 1}, {1, 2}}, {"B2", {1, 1}, {0, 2}}, {"G2", {1, 0}, {1, 1}},
                          {"C3", {1, 0, 1}, {0, 1, 0}}, {"A1xA2", {2, 1, 0}, {1, 1, 1}}, {"D4", {0, 1, 0, 0}, {1, 0, 0, 1}}};
    for (const auto& c : cases) {
        CAPTURE(c.alg);
        const auto rs = rs_of(c.alg);
        CHECK(as_map(tensor_decompose(rs, c.a, c.b)) == oracle::tensor_by_characters(rs, c.a, c.b));
    }
}

TEST_CASE("g-perp decompositions")
{
    CHECK(gperp_decompose(rs_of("A1"), {1}).empty());
    CHECK(as_map(gperp_decompose(rs_of("A1"), {2})) == std::map<Weight, std::size_t>{{{4}, 1}});
    const auto a2 = rs_of("A2");
    const auto g = gperp_decompose(a2, {1, 1});
    CHECK(as_map(g) == std::map<Weight, std::size_t>{{{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 1}});
    std::size_t total = 0;
    for (const auto& c : g)
        total += c.multiplicity * weyl_dim(a2, c.highest_weight);
    CHECK(total == 55);
}

TEST_CASE("g-perp dimension bookkeeping")
{
    struct Case {
        const char* alg;
        Weight lam;
    };
    const Case cases[] = {{"A3", {0, 1, 0}}, {"A1xA1", {1, 1}}, {"A2xA2", {1, 0, 1, 0}}, {"C3", {1, 0, 0}},
                          {"G2", {1, 0}},    {"B3", {0, 0, 1}}, {"E6", {1, 0, 0, 0, 0, 0}}};
    for (const auto& c : cases) {
        CAPTURE(c.alg);
        const auto rs = rs_of(c.alg);
        const std::size_t d = weyl_dim(rs, c.lam);
        std::size_t total = 0;
        for (const auto& comp : gperp_decompose(rs, c.lam))
            total += comp.multiplicity * weyl_dim(rs, comp.highest_weight);
        CHECK(total == d * d - 1 - rs.dimension());
    }
}

TEST_CASE("explicit representations")
{
    const auto a1 = rs_of("A1");
    const auto std2 = construct_rep(a1, {1});
    CHECK(std2.dimension == 2);
    check_rep(a1, std2);
    const auto adj = construct_rep(a1, {2});
    CHECK(adj.dimension == 3);
    check_rep(a1, adj);
    const auto a2 = rs_of("A2");
    const auto def = construct_rep(a2, {1, 0});
    CHECK(def.dimension == 3);
    check_rep(a2, def);
    for (std::size_t i = 0; i < 2; ++i) {
        // a single nonzero entry equal to 1 up to basis scaling
        std::size_t nonzero = 0;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                nonzero += sgn(def.e[i](r, c)) != 0;
        CHECK(nonzero == 1);
    }
    for (const char* alg : {"G2", "B2", "A1xA1"}) {
        const auto rs = rs_of(alg);
        Weight lam(rs.rank(), 1);
        check_rep(rs, construct_rep(rs, lam, 100));
    }
    CHECK_THROWS_AS(construct_rep(rs_of("A2"), {2, 2}, 20), InputError);
}
