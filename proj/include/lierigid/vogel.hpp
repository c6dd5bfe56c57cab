#pragma once

#include "lierigid/rational.hpp"

#include <cstddef>

namespace lierigid {

class VogelParams {
public:
    VogelParams(Rational alpha, Rational beta, Rational gamma);

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }
    const Rational& gamma() const noexcept { return gamma_; }
    /// t = alpha + beta + gamma.
    const Rational& t() const noexcept { return t_; }

    /// Exchange alpha with beta (which = 1) or with gamma (which = 2).
    VogelParams swapped(int which) const;
    VogelParams scaled(const Rational& s) const;

private:
    Rational alpha_, beta_, gamma_, t_;
};

/// (1 + x)(2 + x)...(y + x) / y!
Rational rational_binomial(const Rational& x, std::size_t y);

// All of these throw DegenerateError naming the first vanishing denominator.
Rational dim_g(const VogelParams& p);
Rational dim_y2(const VogelParams& p);
Rational dim_y3(const VogelParams& p);
/// Cartan power g^(k); dim_yk(p, 1) == dim_g(p).
Rational dim_yk(const VogelParams& p, std::size_t k);

} // namespace lierigid
