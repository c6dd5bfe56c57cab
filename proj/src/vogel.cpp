#include "lierigid/vogel.hpp"

#include "lierigid/errors.hpp"

#include <string>
#include <utility>

namespace lierigid {

namespace {

Rational checked_divide(const Rational& num, const Rational& den, const char* factor)
{
    if (sgn(den) == 0)
        throw DegenerateError(factor, std::string("denominator factor ") + factor + " vanishes");
    return num / den;
}

} // namespace

VogelParams::VogelParams(Rational alpha, Rational beta, Rational gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)), t_(alpha_ + beta_ + gamma_)
{
}

VogelParams VogelParams::swapped(int which) const
{
    if (which == 1)
        return VogelParams(beta_, alpha_, gamma_);
    if (which == 2)
        return VogelParams(gamma_, beta_, alpha_);
    return *this;
}

VogelParams VogelParams::scaled(const Rational& s) const
{
    return VogelParams(s * alpha_, s * beta_, s * gamma_);
}

Rational rational_binomial(const Rational& x, std::size_t y)
{
    Rational num = 1;
    Rational fact = 1;
    for (std::size_t j = 1; j <= y; ++j) {
        num *= x + static_cast<long>(j);
        fact *= static_cast<long>(j);
    }
    return num / fact;
}

Rational dim_g(const VogelParams& p)
{
    const Rational& a = p.alpha();
    const Rational& b = p.beta();
    const Rational& c = p.gamma();
    const Rational& t = p.t();
    const Rational num = (a - 2 * t) * (b - 2 * t) * (c - 2 * t);
    if (sgn(a) == 0)
        return checked_divide(num, a, "alpha");
    if (sgn(b) == 0)
        return checked_divide(num, b, "beta");
    return checked_divide(num, a * b * c, "gamma");
}

Rational dim_y2(const VogelParams& p)
{
    const Rational& a = p.alpha();
    const Rational& b = p.beta();
    const Rational& c = p.gamma();
    const Rational& t = p.t();
    const Rational num = -t * (b - 2 * t) * (c - 2 * t) * (b + t) * (c + t) * (3 * a - 2 * t);
    Rational den = 1;
    const std::pair<Rational, const char*> factors[] = {
        {a, "alpha"}, {b, "beta"}, {c, "gamma"}, {a - b, "alpha-beta"}, {a - c, "alpha-gamma"}};
    for (const auto& [f, name] : factors) {
        if (sgn(f) == 0)
            return checked_divide(num, f, name);
        den *= f;
    }
    return num / (den * a);
}

Rational dim_y3(const VogelParams& p)
{
    const Rational& a = p.alpha();
    const Rational& b = p.beta();
    const Rational& c = p.gamma();
    const Rational& t = p.t();
    const Rational num = -t * (a - 2 * t) * (b - 2 * t) * (c - 2 * t) * (b + t) * (c + t) * (t + b - a) *
                         (t + c - a) * (5 * a - 2 * t);
    Rational den = 1;
    const std::pair<Rational, const char*> factors[] = {
        {a, "alpha"},           {b, "beta"},          {c, "gamma"},
        {a - b, "alpha-beta"},  {a - c, "alpha-gamma"}, {2 * a - b, "2alpha-beta"},
        {2 * a - c, "2alpha-gamma"}};
    for (const auto& [f, name] : factors) {
        if (sgn(f) == 0)
            return checked_divide(num, f, name);
        den *= f;
    }
    // the factor 3 makes this agree with dim_yk(p, 3)
    return num / (3 * den * a * a);
}

Rational dim_yk(const VogelParams& p, std::size_t k)
{
    const Rational& a = p.alpha();
    const Rational& b = p.beta();
    const Rational& c = p.gamma();
    const Rational& t = p.t();
    if (k == 0)
        return 1;
    if (sgn(a) == 0)
        throw DegenerateError("alpha", "denominator factor alpha vanishes");
    const auto kk = static_cast<long>(k);
    const Rational lead = checked_divide(t - (kk - Rational(1, 2)) * a, t + a / 2, "t+alpha/2");
    const Rational top = rational_binomial(-2 * t / a - 2, k) * rational_binomial((b - 2 * t) / a - 1, k) *
                         rational_binomial((c - 2 * t) / a - 1, k);
    const Rational db = rational_binomial(-b / a - 1, k);
    const Rational dc = rational_binomial(-c / a - 1, k);
    if (sgn(db) == 0)
        throw DegenerateError("binom(-beta/alpha-1+k,k)", "denominator binomial in beta vanishes");
    return lead * checked_divide(top, db * dc, "binom(-gamma/alpha-1+k,k)");
}

} // namespace lierigid
