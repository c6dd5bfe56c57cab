#pragma once

#include "lierigid/linalg.hpp"
#include "lierigid/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lierigid {

enum class Family { A, B, C, D, E, F, G };

/// One simple ideal of a semisimple algebra, e.g. E6.
struct SimpleFactor {
    Family family = Family::A;
    int rank = 1;

    friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Throws InputError unless the rank is admissible for the family
/// (A>=1, B,C>=2, D>=3, E in {6,7,8}, F=4, G=2).
SimpleFactor make_factor(Family family, int rank);

/// "A3", "e8" ...
SimpleFactor parse_factor(std::string_view text);

/// Factors separated by 'x' or ',': "A1xA1", "A2,A2".
std::vector<SimpleFactor> parse_algebra(std::string_view text);

std::string to_string(const SimpleFactor& f);
std::string to_string(const std::vector<SimpleFactor>& factors);

/// Integral weight in the fundamental-weight basis (Bourbaki numbering,
/// factors concatenated in declaration order).
using Weight = std::vector<int64_t>;

/// Element of the root lattice in simple-root coordinates.
using RootCoords = std::vector<int64_t>;

/// Root data of a semisimple algebra in Bourbaki conventions.
///
/// Node numbering per simple factor (1-based, as printed by the CLI):
///   A_n  1 - 2 - ... - n
///   B_n  1 - ... - (n-1) => n        (alpha_n short)
///   C_n  1 - ... - (n-1) <= n        (alpha_n long)
///   D_n  1 - ... - (n-2) - (n-1), and (n-2) - n
///   E_n  1 - 3 - 4 - 5 - 6 (- 7 - 8), with 2 attached to 4
///   F_4  1 - 2 => 3 - 4              (alpha_1, alpha_2 long)
///   G_2  1 <= 2                      (alpha_1 short)
///
/// The invariant form is normalized so that long roots have squared length
/// 2 in every factor. cartan()(i, j) = <alpha_i, alpha_j^vee>, so row i is
/// alpha_i written in fundamental weights.
class RootSystem {
public:
    static RootSystem build(std::vector<SimpleFactor> factors);

    const std::vector<SimpleFactor>& factors() const noexcept { return factors_; }
    std::size_t rank() const noexcept { return rank_; }
    /// Global index of the first node of factor f.
    std::size_t factor_offset(std::size_t f) const { return offsets_[f]; }
    std::size_t factor_of_node(std::size_t node) const { return node_factor_[node]; }

    const RatMatrix& cartan() const noexcept { return cartan_; }
    const RatMatrix& inverse_cartan() const noexcept { return inverse_cartan_; }
    /// Gram matrix of simple roots under the normalized invariant form.
    const RatMatrix& gram() const noexcept { return gram_; }

    const std::vector<RootCoords>& positive_roots() const noexcept { return positive_roots_; }
    /// Coroot of positive_roots()[k] in simple-coroot coordinates, so that
    /// <mu, alpha^vee> = sum_j mu[j] * coroots()[k][j].
    const std::vector<RootCoords>& coroots() const noexcept { return coroots_; }

    Weight weyl_vector() const { return Weight(rank_, 1); }
    /// Highest root of factor f in simple-root coordinates (global length).
    const RootCoords& highest_root(std::size_t f) const { return highest_roots_[f]; }
    /// Highest root of factor f in fundamental-weight coordinates.
    Weight highest_root_weight(std::size_t f) const { return root_to_weight(highest_roots_[f]); }

    /// dim g = rank + 2 |Phi^+|.
    std::size_t dimension() const noexcept { return rank_ + 2 * positive_roots_.size(); }

    /// Fundamental coordinates of alpha_i (row i of the Cartan matrix).
    Weight simple_root_weight(std::size_t i) const;
    Weight root_to_weight(const RootCoords& root) const;
    /// Simple-root coordinates of a weight, via the inverse Cartan matrix.
    RatVector weight_to_root_coords(const Weight& mu) const;

    /// Normalized invariant form on weights.
    Rational inner(const Weight& a, const Weight& b) const;
    /// <mu, alpha^vee> for alpha = positive_roots()[positive_root_index].
    int64_t coroot_pairing(const Weight& mu, std::size_t positive_root_index) const;

private:
    std::vector<SimpleFactor> factors_;
    std::size_t rank_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> node_factor_;
    RatMatrix gram_;
    RatMatrix cartan_;
    RatMatrix inverse_cartan_;
    RatMatrix weight_gram_;
    std::vector<RootCoords> positive_roots_;
    std::vector<RootCoords> coroots_;
    std::vector<RootCoords> highest_roots_;
};

bool is_dominant(const Weight& mu);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(int64_t s, const Weight& a);

/// Linear reflection s_i(mu) = mu - mu[i] alpha_i.
Weight reflect(const RootSystem& rs, std::size_t i, const Weight& mu);

/// Dot action s_i . mu = s_i(mu + rho) - rho.
Weight affine_action(const RootSystem& rs, std::size_t i, const Weight& mu);

/// Weyl dimension formula. Throws InputError for a non-dominant weight.
Rational weyl_dim_exact(const RootSystem& rs, const Weight& lam);
std::size_t weyl_dim(const RootSystem& rs, const Weight& lam);

/// Weyl dimension for the Levi subalgebra whose simple roots are the
/// unmarked nodes. `mu` must be dominant on those nodes.
std::size_t levi_weyl_dim(const RootSystem& rs, const std::vector<bool>& marked, const Weight& mu);

/// <lam, lam + 2 rho> in the normalized form.
Rational casimir(const RootSystem& rs, const Weight& lam);

/// Highest weight of the dual module, -w0(lam), from the diagram
/// involution of each factor.
Weight dual_weight(const RootSystem& rs, const Weight& lam);

/// Reflect mu into the dominant chamber using simple reflections.
/// Returns the dominant weight and the parity of the number of reflections.
struct DominantConjugate {
    Weight weight;
    bool odd = false;
};
DominantConjugate make_dominant(const RootSystem& rs, Weight mu);

} // namespace lierigid
