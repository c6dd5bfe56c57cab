#include "lierigid/rigidity.hpp"

#include "lierigid/errors.hpp"

#include <algorithm>
#include <cctype>

namespace lierigid {

RigidityVerdict run_scenario(const ScenarioSpec& s, std::size_t oracle_bound)
{
    if (s.p < -1)
        throw InputError("p", "p must be at least -1");
    const RootSystem rs = RootSystem::build(s.algebra);
    if (s.highest_weight.size() != rs.rank())
        throw InputError("weight", "expected " + std::to_string(rs.rank()) + " coordinates");
    if (!is_dominant(s.highest_weight))
        throw InputError("weight", "highest weight must be dominant");
    if (s.marked.nodes.empty())
        throw InputError("marked", "at least one node must be marked");
    for (auto n : s.marked.nodes)
        if (n >= rs.rank())
            throw InputError("marked", "node " + std::to_string(n + 1) + " is out of range");

    RigidityVerdict v;
    v.name = s.name;
    v.algebra = to_string(s.algebra);
    v.marked = s.marked.one_based();
    v.highest_weight = s.highest_weight;
    v.p = s.p;
    v.threshold = s.p + 2;
    v.algebra_grading = grade_algebra(rs, s.marked);
    v.module_grading = grade_module(rs, s.marked, s.highest_weight);

    const CohomologyReport report = h1_report(rs, s.marked, s.highest_weight, s.p);
    for (const auto& c : report.components) {
        v.gperp_summary.push_back(c.gamma);
        v.h1_pieces.insert(v.h1_pieces.end(), c.pieces.begin(), c.pieces.end());
    }
    v.h1_by_degree = report.h1_by_degree;
    v.offending_pieces = report.offending;
    v.verdict = report.verdict;

    if (s.oracle) {
        OracleSummary o;
        o.bound = oracle_bound;
        const GradingElement z(rs, s.marked);
        const NegativeNilradical nil = negative_nilradical(rs, s.marked);
        for (const auto& c : report.components) {
            OracleComponent oc;
            oc.highest_weight = c.gamma.highest_weight;
            oc.dimension = weyl_dim(rs, c.gamma.highest_weight);
            if (oc.dimension > oracle_bound) {
                oc.status = "skipped";
                o.kostant_only = true;
                o.components.push_back(std::move(oc));
                continue;
            }
            const DirectCohomology direct = direct_h1(construct_rep(rs, c.gamma.highest_weight, oracle_bound), z, nil);
            for (const auto& [d, n] : direct.h1)
                oc.direct[d] = n * c.gamma.multiplicity;
            if (oc.direct != pieces_by_degree(c.pieces))
                throw InternalError("Kostant and direct H^1 disagree for a g-perp component");
            oc.status = "agreed";
            o.components.push_back(std::move(oc));
        }
        if (o.kostant_only)
            v.notes.push_back("kostant-only: some g-perp components exceed the oracle bound of " +
                              std::to_string(oracle_bound) + "; the verdict rests on the Kostant computation for them");
        else
            v.notes.push_back("oracle: Kostant and direct H^1 dimensions agree in every degree");
        v.oracle = std::move(o);
    }
    return v;
}

ScenarioSpec adjoint_scenario(const SimpleFactor& g)
{
    if (g.family == Family::A && g.rank == 1)
        throw InputError("type", "A1 has no adjoint scenario: v2(P1) is the conic, rigid only at order five (Monge)");
    const RootSystem rs = RootSystem::build({g});
    ScenarioSpec s;
    std::string name = to_string(g);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    s.name = "adjoint-" + name;
    s.algebra = {g};
    s.highest_weight = rs.highest_root_weight(0);
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (s.highest_weight[i] != 0)
            s.marked.nodes.push_back(i);
    s.p = -1;
    s.oracle = true;
    return s;
}

namespace {

ScenarioSpec make(const std::string& name, const std::string& algebra, std::vector<int64_t> marked, Weight lam,
                  int64_t p)
{
    ScenarioSpec s;
    s.name = name;
    s.algebra = parse_algebra(algebra);
    const RootSystem rs = RootSystem::build(s.algebra);
    s.marked = ParabolicMarking::from_one_based(rs, marked);
    s.highest_weight = std::move(lam);
    s.p = p;
    s.oracle = true;
    return s;
}

} // namespace

std::vector<std::string> fixture_names()
{
    return {"adjoint-a2", "adjoint-g2",  "adjoint-c2", "segre-1-1",
            "segre-2-2",  "veronese-a1", "grassmannian-a3-p2"};
}

ScenarioSpec fixture(const std::string& name)
{
    if (name == "adjoint-a2")
        return make(name, "A2", {1, 2}, {1, 1}, -1);
    if (name == "adjoint-g2")
        return make(name, "G2", {2}, {0, 1}, -1);
    if (name == "adjoint-c2")
        return make(name, "C2", {1}, {2, 0}, -1);
    if (name == "segre-1-1")
        return make(name, "A1xA1", {1, 2}, {1, 1}, 0);
    if (name == "segre-2-2")
        return make(name, "A2xA2", {1, 3}, {1, 0, 1, 0}, 0);
    if (name == "veronese-a1")
        return make(name, "A1", {1}, {2}, -1);
    if (name == "grassmannian-a3-p2")
        return make(name, "A3", {2}, {0, 1, 0}, -1);
    throw InputError("scenario", "unknown fixture '" + name + "'");
}

} // namespace lierigid
