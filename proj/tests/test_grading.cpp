#include "lierigid/errors.hpp"
#include "lierigid/grading.hpp"
#include "lierigid/repthy.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace lierigid;

namespace {

RootSystem rs_of(const char* s)
{
    return RootSystem::build(parse_algebra(s));
}

ParabolicMarking marked(const RootSystem& rs, std::vector<int64_t> nodes)
{
    return ParabolicMarking::from_one_based(rs, nodes);
}

} // namespace

TEST_CASE("grading element values")
{
    const auto a1 = rs_of("A1");
    const GradingElement z1(a1, marked(a1, {1}));
    CHECK(z1({3}) == Rational(3, 2));
    const auto a2 = rs_of("A2");
    const GradingElement z(a2, marked(a2, {1}));
    CHECK(z({1, 0}) == Rational(2, 3));
    CHECK(z({0, 1}) == Rational(1, 3));
    for (const char* alg : {"E7", "F4", "A2xG2"}) {
        const auto rs = rs_of(alg);
        const auto m = marked(rs, {1, 2});
        const GradingElement zz(rs, m);
        for (std::size_t i = 0; i < rs.rank(); ++i)
            CHECK(zz(rs.simple_root_weight(i)) == (m.contains(i) ? 1 : 0));
    }
}

TEST_CASE("algebra gradings")
{
    const auto a1 = rs_of("A1");
    CHECK(grade_algebra(a1, marked(a1, {1})).dims == std::map<int64_t, std::size_t>{{-1, 1}, {0, 1}, {1, 1}});
    const auto a2 = rs_of("A2");
    const auto g = grade_algebra(a2, marked(a2, {1, 2}));
    CHECK(g.dims == std::map<int64_t, std::size_t>{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}});
    CHECK(g.depth == 2);
    const auto a3 = rs_of("A3");
    const auto gr = grade_algebra(a3, marked(a3, {2}));
    CHECK(gr.dims == std::map<int64_t, std::size_t>{{-1, 4}, {0, 7}, {1, 4}});
    CHECK(gr.depth == 1);
}

TEST_CASE("module gradings")
{
    const auto a1 = rs_of("A1");
    CHECK(grade_module(a1, marked(a1, {1}), {2}).dims == std::map<int64_t, std::size_t>{{-2, 1}, {-1, 1}, {0, 1}});
    const auto a3 = rs_of("A3");
    const auto u = grade_module(a3, marked(a3, {2}), {0, 1, 0});
    CHECK(u.dims == std::map<int64_t, std::size_t>{{-2, 1}, {-1, 4}, {0, 1}});
    CHECK(u.depth == 2);
    CHECK(grade_module(a3, marked(a3, {2}), {0, 0, 0}).dims == std::map<int64_t, std::size_t>{{0, 1}});
    CHECK_THROWS_AS(grade_module(a3, marked(a3, {2}), {1, 0, 0}), InputError);
}

TEST_CASE("module gradings agree with the weights of an explicit basis")
{
    struct Case {
        const char* alg;
        std::vector<int64_t> nodes;
        Weight lam;
    };
    const Case cases[] = {{"A3", {2}, {0, 1, 0}}, {"C3", {1}, {2, 0, 0}}, {"G2", {2}, {0, 1}}, {"A1xA1", {1, 2}, {2, 1}}};
    for (const auto& c : cases) {
        const auto rs = rs_of(c.alg);
        const auto m = marked(rs, c.nodes);
        const GradingElement z(rs, m);
        const auto rep = construct_rep(rs, c.lam, 200);
        std::map<int64_t, std::size_t> dims;
        for (const auto& w : rep.basis_weights)
            dims[to_int64(z(w) - z(c.lam))] += 1;
        const auto u = grade_module(rs, m, c.lam);
        CHECK(u.dims == dims);
        CHECK(u.total() == weyl_dim(rs, c.lam));
        CHECK(u.dims.at(0) == 1);
        for (int64_t d = 0; d >= -u.depth; --d)
            CHECK(u.dims.count(d) == 1);
    }
}

TEST_CASE("every single-node grading up to rank 6")
{
    for (const auto& f : oracle::simple_types(6)) {
        const auto rs = RootSystem::build({f});
        const auto marks = oracle::highest_root_marks(f.family, f.rank);
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            CAPTURE(to_string(f));
            CAPTURE(i);
            const auto g = grade_algebra(rs, ParabolicMarking{{i}});
            CHECK(g.total() == rs.dimension());
            for (const auto& [d, n] : g.dims)
                CHECK(g.dims.at(-d) == n);
            CHECK(g.depth == marks[i]);
        }
    }
}

TEST_CASE("marking validation")
{
    const auto a2 = rs_of("A2");
    CHECK_THROWS_AS(marked(a2, {}), InputError);
    CHECK_THROWS_AS(marked(a2, {3}), InputError);
    CHECK(marked(a2, {2, 1, 2}).nodes == std::vector<std::size_t>{0, 1});
}
