#pragma once

#include "lierigid/cohomology.hpp"
#include "lierigid/grading.hpp"
#include "lierigid/repthy.hpp"
#include "lierigid/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lierigid {

struct ScenarioSpec {
    std::string name;
    std::vector<SimpleFactor> algebra;
    ParabolicMarking marked;
    Weight highest_weight;
    int64_t p = -1;
    bool oracle = false;

    friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

/// Outcome of the direct cross-check for one g-perp component.
struct OracleComponent {
    Weight highest_weight;
    std::size_t dimension = 0;
    /// "agreed" or "skipped": the component exceeds the bound and the
    /// Kostant computation stands alone.
    std::string status;
    DegreeDims direct;

    friend bool operator==(const OracleComponent&, const OracleComponent&) = default;
};

struct OracleSummary {
    std::size_t bound = 0;
    std::vector<OracleComponent> components;
    bool kostant_only = false;

    friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct RigidityVerdict {
    std::string name;
    std::string algebra;
    std::vector<int64_t> marked;
    Weight highest_weight;
    int64_t p = -1;
    int64_t threshold = 1;
    Verdict verdict = Verdict::Rigid;
    std::vector<H1Piece> offending_pieces;
    std::vector<IrrComponent> gperp_summary;
    std::vector<H1Piece> h1_pieces;
    DegreeDims h1_by_degree;
    GradedDims algebra_grading;
    GradedDims module_grading;
    std::optional<OracleSummary> oracle;
    std::vector<std::string> notes;

    friend bool operator==(const RigidityVerdict&, const RigidityVerdict&) = default;
};

/// Throws InputError for p < -1, a non-dominant weight, or a weight not
/// supported on the marked nodes; InternalError if the oracle disagrees
/// with the Kostant computation.
RigidityVerdict run_scenario(const ScenarioSpec& s, std::size_t oracle_bound);
inline RigidityVerdict run_scenario(const ScenarioSpec& s)
{
    return run_scenario(s, default_oracle_bound());
}

/// Adjoint variety of a simple algebra at p = -1. Rejects A1.
ScenarioSpec adjoint_scenario(const SimpleFactor& g);

/// Names of the bundled fixtures, in a fixed order.
std::vector<std::string> fixture_names();
/// Throws InputError("scenario") for an unknown name.
ScenarioSpec fixture(const std::string& name);

} // namespace lierigid
