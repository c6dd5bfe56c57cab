#pragma once

#include "lierigid/linalg.hpp"
#include "lierigid/rootsys.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace lierigid {

/// Irreducible summand V_lambda appearing `multiplicity` times.
struct IrrComponent {
    Weight highest_weight;
    std::size_t multiplicity = 1;

    friend bool operator==(const IrrComponent&, const IrrComponent&) = default;
};

/// Weight -> multiplicity for one irreducible module.
using WeightSystem = std::map<Weight, std::size_t>;

/// Freudenthal's recursion, weights processed by increasing depth below
/// the highest weight.
WeightSystem weight_multiplicities(const RootSystem& rs, const Weight& lam);

/// Decomposition of V_lam (x) V_mu by the Brauer-Klimyk rule, sorted by
/// highest weight (descending lexicographic). Checks the dimension identity.
std::vector<IrrComponent> tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu);

/// Complement of g inside sl(U) for U = V_lam: U* (x) U minus one trivial
/// summand and one adjoint summand per simple factor.
std::vector<IrrComponent> gperp_decompose(const RootSystem& rs, const Weight& lam);

/// Chevalley generators acting on a weight basis of V_lam.
struct RepMatrices {
    std::size_t dimension = 0;
    /// Weight of each basis vector.
    std::vector<Weight> basis_weights;
    std::vector<RatMatrix> e;
    std::vector<RatMatrix> f;
    std::vector<RatMatrix> h;
};

/// Dimension bound for explicit representations: ORACLE_DIM_MAX from the
/// environment when set to a positive integer, otherwise 30.
std::size_t default_oracle_bound();

/// Builds V_lam one weight space at a time. A vector f_i b of weight mu is
/// identified by its images under all e_j, which is faithful on the
/// irreducible quotient because only the highest weight line is killed by
/// every e_j. Throws InputError if weyl_dim(lam) exceeds `bound`.
RepMatrices construct_rep(const RootSystem& rs, const Weight& lam, std::size_t bound);
inline RepMatrices construct_rep(const RootSystem& rs, const Weight& lam)
{
    return construct_rep(rs, lam, default_oracle_bound());
}

} // namespace lierigid
