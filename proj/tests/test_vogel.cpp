#include "lierigid/errors.hpp"
#include "lierigid/rootsys.hpp"
#include "lierigid/vogel.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace lierigid;

namespace {

struct Row {
    VogelParams params;
    const char* algebra;
    long dim;
};

std::vector<Row> exceptional_rows()
{
    return {{{-2, 4, 4}, "D4", 28},
            {{-2, 5, 6}, "F4", 52},
            {{-2, 6, 8}, "E6", 78},
            {{-2, 8, 12}, "E7", 133},
            {{-2, 12, 20}, "E8", 248}};
}

// so(n) as a simple factor: B_m for n = 2m + 1, D_m for n = 2m (D3 = A3).
std::string so_type(int n)
{
    return (n % 2 ? "B" : "D") + std::to_string(n / 2);
}

std::size_t cartan_power_dim(const char* alg, std::size_t k)
{
    const auto rs = RootSystem::build(parse_algebra(alg));
    return weyl_dim(rs, static_cast<int64_t>(k) * rs.highest_root_weight(0));
}

VogelParams random_point(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 7);
    for (;;) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        c.canonicalize();
        if (sgn(a) * sgn(b) * sgn(c) != 0)
            return VogelParams(a, b, c);
    }
}

} // namespace

TEST_CASE("rational binomials")
{
    CHECK(rational_binomial(Rational(7, 3), 0) == 1);
    CHECK(rational_binomial(3, 2) == 10);
    CHECK(rational_binomial(Rational(-1, 2), 2) == Rational(3, 8));
    CHECK(rational_binomial(-2, 3) == 0);
    // agrees with C(x + y, y) at nonnegative integers
    CHECK(rational_binomial(5, 3) == 56);
}

TEST_CASE("t is the sum of the parameters")
{
    const VogelParams p(Rational(1, 2), -3, Rational(7, 5));
    CHECK(p.t() == Rational(1, 2) - 3 + Rational(7, 5));
    CHECK(p.swapped(1).alpha() == -3);
    CHECK(p.swapped(2).gamma() == Rational(1, 2));
    CHECK(p.scaled(2).t() == 2 * p.t());
}

TEST_CASE("exceptional series dimensions")
{
    for (const auto& row : exceptional_rows()) {
        CAPTURE(row.algebra);
        CHECK(dim_g(row.params) == row.dim);
        for (std::size_t k = 1; k <= 3; ++k)
            CHECK(dim_yk(row.params, k) == cartan_power_dim(row.algebra, k));
        CHECK(dim_y2(row.params) == cartan_power_dim(row.algebra, 2));
        CHECK(dim_y2(row.params) == dim_yk(row.params, 2));
        CHECK(dim_y3(row.params) == cartan_power_dim(row.algebra, 3));
    }
    const VogelParams d4(-2, 4, 4);
    CHECK(dim_yk(d4, 4) == cartan_power_dim("D4", 4));
}

TEST_CASE("orthogonal series")
{
    for (int n = 5; n <= 12; ++n) {
        CAPTURE(n);
        const VogelParams p(-2, 4, n - 4);
        CHECK(dim_g(p) == n * (n - 1) / 2);
        const auto type = so_type(n);
        for (std::size_t k = 1; k <= 3; ++k)
            CHECK(dim_yk(p, k) == cartan_power_dim(type.c_str(), k));
    }
}

TEST_CASE("degenerate points name the vanishing factor")
{
    try {
        dim_g(VogelParams(0, 1, 2));
        FAIL("expected an error");
    } catch (const DegenerateError& e) {
        CHECK(e.factor() == "alpha");
    }
    CHECK_THROWS_AS(dim_y2(VogelParams(1, 1, 3)), DegenerateError);
    CHECK_THROWS_AS(dim_yk(VogelParams(-2, -2, 5), 2), DegenerateError);
    // beta + t = 0 with every denominator nonzero
    CHECK(dim_y2(VogelParams(-2, 3, -4)) == 0);
}

TEST_CASE("homogeneity, symmetry and Y_1")
{
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int k = 0; k < 200 && checked < 60; ++k) {
        const auto p = random_point(rng);
        long num = static_cast<long>(rng() % 9) - 4;
        if (num == 0)
            num = 3;
        Rational s(num, static_cast<long>(rng() % 5) + 1);
        s.canonicalize();
        try {
            const Rational g = dim_g(p);
            CHECK(dim_g(p.scaled(s)) == g);
            CHECK(dim_g(p.swapped(1)) == g);
            CHECK(dim_g(p.swapped(2)) == g);
            CHECK(dim_yk(p, 1) == g);
            const Rational y2 = dim_yk(p, 2);
            CHECK(dim_yk(p.scaled(s), 2) == y2);
            CHECK(dim_yk(VogelParams(p.alpha(), p.gamma(), p.beta()), 2) == y2);
            CHECK(dim_y2(p) == y2);
            CHECK(dim_y3(p.scaled(s)) == dim_y3(p));
            ++checked;
        } catch (const DegenerateError&) {
        }
    }
    CHECK(checked >= 30);
}
