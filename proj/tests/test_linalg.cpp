#include "lierigid/errors.hpp"
#include "lierigid/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace lierigid;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t cols = rows.begin()->size();
    RatMatrix m(rows.size(), cols);
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (auto x : r)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

RatVector e(std::size_t n, std::size_t i)
{
    RatVector v(n);
    v[i] = 1;
    return v;
}

std::vector<RatVector> random_vectors(std::mt19937_64& rng, std::size_t count, std::size_t n)
{
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<RatVector> out(count, RatVector(n));
    for (auto& v : out)
        for (auto& x : v)
            x = Rational(d(rng), 1 + (d(rng) + 3) % 3);
    return out;
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rank examples")
{
    CHECK(rank(RatMatrix::identity(2)) == 2);
    CHECK(rank(RatMatrix(3, 4)) == 0);
    CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples")
{
    CHECK(kernel_basis(RatMatrix::identity(3)).empty());
    CHECK(kernel_basis(RatMatrix(2, 3)).size() == 3);
    const RatMatrix m = mat({{1, 1, 0}});
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) {
        const auto img = m.apply(v);
        CHECK(sgn(img[0]) == 0);
    }
}

TEST_CASE("intersection examples")
{
    std::vector<RatVector> a{e(3, 0), e(3, 1)};
    std::vector<RatVector> b{e(3, 1), e(3, 2)};
    const auto c = intersect(a, b, 3);
    REQUIRE(c.size() == 1);
    CHECK(sgn(c[0][0]) == 0);
    CHECK(sgn(c[0][2]) == 0);
    CHECK(sgn(c[0][1]) != 0);
    CHECK(intersect(a, a, 3).size() == 2);
    CHECK_THROWS_AS(intersect(a, std::vector<RatVector>{RatVector(4)}, 3), DimensionError);
}

TEST_CASE("quotient dimension examples")
{
    CHECK(quotient_dim(5, std::vector<RatVector>{e(5, 0), e(5, 3)}) == 3);
    std::vector<RatVector> all;
    for (std::size_t i = 0; i < 4; ++i)
        all.push_back(e(4, i));
    CHECK(quotient_dim(4, all) == 0);
    RatVector s = e(6, 0);
    s[1] = 1;
    CHECK(quotient_dim(6, std::vector<RatVector>{e(6, 0), e(6, 1), s}) == 4);
}

TEST_CASE("inverse and coordinates")
{
    const RatMatrix m = mat({{2, -1}, {-1, 2}});
    const RatMatrix inv = inverse(m);
    CHECK(inv(0, 0) == Rational(2, 3));
    CHECK(inv(0, 1) == Rational(1, 3));
    CHECK(m * inv == RatMatrix::identity(2));
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), DimensionError);
    std::vector<RatVector> basis{e(3, 0), e(3, 1)};
    RatVector v{Rational(1, 2), 3, 0};
    const auto x = coordinates_in(basis, v);
    REQUIRE(x);
    CHECK((*x)[0] == Rational(1, 2));
    CHECK_FALSE(coordinates_in(basis, e(3, 2)));
}

TEST_CASE("rank-nullity and exact kernels on random matrices")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = dim(rng);
        const std::size_t c = dim(rng);
        const auto rows = random_vectors(rng, r, c);
        const RatMatrix m = RatMatrix::from_rows(rows, c);
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == c);
        for (const auto& v : k)
            for (const auto& x : m.apply(v))
                CHECK(sgn(x) == 0);
    }
}

TEST_CASE("dim(A cap B) + dim(A + B) = dim A + dim B")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(0, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 6;
        auto a = random_vectors(rng, dim(rng), n);
        auto b = random_vectors(rng, dim(rng), n);
        if (trial % 5 == 0 && !a.empty())
            b.push_back(a.front());
        const std::size_t da = independent_subset(a, n).size();
        const std::size_t db = independent_subset(b, n).size();
        std::vector<RatVector> sum = a;
        sum.insert(sum.end(), b.begin(), b.end());
        const std::size_t ds = independent_subset(sum, n).size();
        CHECK(intersect(a, b, n).size() + ds == da + db);
    }
}
