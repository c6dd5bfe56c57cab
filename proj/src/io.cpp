#include "lierigid/io.hpp"

#include <sstream>

void nlohmann::adl_serializer<mpq_class>::to_json(nlohmann::json& j, const mpq_class& q)
{
    j = lierigid::to_string(q);
}

void nlohmann::adl_serializer<mpq_class>::from_json(const nlohmann::json& j, mpq_class& q)
{
    if (j.is_string())
        q = lierigid::parse_rational(j.get<std::string>());
    else if (j.is_number_integer())
        q = mpq_class(j.get<long>());
    else
        throw std::invalid_argument("expected a rational as a \"p/q\" string or an integer");
}

namespace lierigid {

const json& require(const json& j, const std::string& key)
{
    if (!j.is_object())
        throw InputError(key, "expected a JSON object containing '" + key + "'");
    const auto it = j.find(key);
    if (it == j.end())
        throw InputError(key, "missing field");
    return *it;
}

void to_json(json& j, const GradedDims& g)
{
    json dims = json::array();
    for (const auto& [d, n] : g.dims)
        dims.push_back({{"degree", d}, {"dim", n}});
    j = {{"depth", g.depth}, {"dims", dims}};
}

void from_json(const json& j, GradedDims& g)
{
    g = {};
    g.depth = field<int64_t>(j, "depth");
    for (const auto& e : require(j, "dims"))
        g.dims[field<int64_t>(e, "degree")] = field<std::size_t>(e, "dim");
}

void to_json(json& j, const IrrComponent& c)
{
    j = {{"highest_weight", c.highest_weight}, {"multiplicity", c.multiplicity}};
}

void from_json(const json& j, IrrComponent& c)
{
    c.highest_weight = field<Weight>(j, "highest_weight");
    c.multiplicity = field<std::size_t>(j, "multiplicity");
}

void to_json(json& j, const H1Piece& p)
{
    j = {{"levi_highest_weight", p.levi_highest_weight},
         {"degree", p.degree},
         {"dimension", p.dimension},
         {"source_reflection", p.source_reflection + 1},
         {"component", p.component}};
}

void from_json(const json& j, H1Piece& p)
{
    p.levi_highest_weight = field<Weight>(j, "levi_highest_weight");
    p.degree = field<Rational>(j, "degree");
    p.dimension = field<std::size_t>(j, "dimension");
    const auto node = field<std::size_t>(j, "source_reflection");
    if (node == 0)
        throw InputError("source_reflection", "nodes are numbered from 1");
    p.source_reflection = node - 1;
    p.component = field<Weight>(j, "component");
}

json degree_dims_to_json(const DegreeDims& d)
{
    json out = json::array();
    for (const auto& [deg, n] : d)
        out.push_back({{"degree", deg}, {"dim", n}});
    return out;
}

DegreeDims degree_dims_from_json(const json& j)
{
    DegreeDims out;
    for (const auto& e : j)
        out[field<Rational>(e, "degree")] = field<std::size_t>(e, "dim");
    return out;
}

void to_json(json& j, const OracleComponent& c)
{
    j = {{"highest_weight", c.highest_weight},
         {"dimension", c.dimension},
         {"status", c.status},
         {"direct_h1", degree_dims_to_json(c.direct)}};
}

void from_json(const json& j, OracleComponent& c)
{
    c.highest_weight = field<Weight>(j, "highest_weight");
    c.dimension = field<std::size_t>(j, "dimension");
    c.status = field<std::string>(j, "status");
    c.direct = degree_dims_from_json(require(j, "direct_h1"));
}

void to_json(json& j, const OracleSummary& o)
{
    j = {{"bound", o.bound}, {"kostant_only", o.kostant_only}, {"components", o.components}};
}

void from_json(const json& j, OracleSummary& o)
{
    o.bound = field<std::size_t>(j, "bound");
    o.kostant_only = field<bool>(j, "kostant_only");
    o.components = field<std::vector<OracleComponent>>(j, "components");
}

void to_json(json& j, const ScenarioSpec& s)
{
    j = {{"name", s.name},
         {"algebra", to_string(s.algebra)},
         {"marked", s.marked.one_based()},
         {"highest_weight", s.highest_weight},
         {"p", s.p},
         {"oracle", s.oracle}};
}

void from_json(const json& j, ScenarioSpec& s)
{
    s = {};
    s.name = j.contains("name") ? field<std::string>(j, "name") : std::string("scenario");
    const json& alg = require(j, "algebra");
    if (alg.is_string()) {
        s.algebra = parse_algebra(alg.get<std::string>());
    } else if (alg.is_array()) {
        for (const auto& f : alg) {
            if (!f.is_string())
                throw InputError("algebra", "factors must be strings such as \"A2\"");
            s.algebra.push_back(parse_factor(f.get<std::string>()));
        }
    } else {
        throw InputError("algebra", "expected a string such as \"A1xA1\" or a list of factors");
    }
    const RootSystem rs = RootSystem::build(s.algebra);
    s.marked = ParabolicMarking::from_one_based(rs, field<std::vector<int64_t>>(j, "marked"));
    s.highest_weight = field<Weight>(j, "highest_weight");
    if (s.highest_weight.size() != rs.rank())
        throw InputError("highest_weight", "expected " + std::to_string(rs.rank()) + " coordinates");
    s.p = field<int64_t>(j, "p");
    s.oracle = j.contains("oracle") ? field<bool>(j, "oracle") : false;
}

void to_json(json& j, const RigidityVerdict& v)
{
    j = {{"name", v.name},
         {"algebra", v.algebra},
         {"marked", v.marked},
         {"highest_weight", v.highest_weight},
         {"p", v.p},
         {"threshold", v.threshold},
         {"verdict", to_string(v.verdict)},
         {"offending_pieces", v.offending_pieces},
         {"gperp_summary", v.gperp_summary},
         {"h1_pieces", v.h1_pieces},
         {"h1_by_degree", degree_dims_to_json(v.h1_by_degree)},
         {"algebra_grading", v.algebra_grading},
         {"module_grading", v.module_grading},
         {"notes", v.notes}};
    j["oracle"] = v.oracle ? json(*v.oracle) : json(nullptr);
}

void from_json(const json& j, RigidityVerdict& v)
{
    v = {};
    v.name = field<std::string>(j, "name");
    v.algebra = field<std::string>(j, "algebra");
    v.marked = field<std::vector<int64_t>>(j, "marked");
    v.highest_weight = field<Weight>(j, "highest_weight");
    v.p = field<int64_t>(j, "p");
    v.threshold = field<int64_t>(j, "threshold");
    const auto verdict = field<std::string>(j, "verdict");
    if (verdict == "RIGID")
        v.verdict = Verdict::Rigid;
    else if (verdict == "INCONCLUSIVE")
        v.verdict = Verdict::Inconclusive;
    else
        throw InputError("verdict", "expected RIGID or INCONCLUSIVE");
    v.offending_pieces = field<std::vector<H1Piece>>(j, "offending_pieces");
    v.gperp_summary = field<std::vector<IrrComponent>>(j, "gperp_summary");
    v.h1_pieces = field<std::vector<H1Piece>>(j, "h1_pieces");
    v.h1_by_degree = degree_dims_from_json(require(j, "h1_by_degree"));
    v.algebra_grading = field<GradedDims>(j, "algebra_grading");
    v.module_grading = field<GradedDims>(j, "module_grading");
    v.notes = field<std::vector<std::string>>(j, "notes");
    if (const json& o = require(j, "oracle"); !o.is_null())
        v.oracle = o.get<OracleSummary>();
}

void to_json(json& j, const Tableau& t)
{
    json basis = json::array();
    for (const auto& v : t.flattened())
        basis.push_back(v);
    j = {{"dim_V", t.dim_v}, {"dim_W", t.dim_w}, {"basis", basis}};
}

void from_json(const json& j, Tableau& t)
{
    const auto n = field<std::size_t>(j, "dim_V");
    const auto w = field<std::size_t>(j, "dim_W");
    std::vector<RatMatrix> basis;
    for (const auto& row : require(j, "basis")) {
        RatVector flat;
        try {
            flat = row.get<RatVector>();
        } catch (const std::exception& e) {
            throw InputError("basis", e.what());
        }
        if (flat.size() != n * w)
            throw InputError("basis", "each element needs dim_W * dim_V = " + std::to_string(n * w) + " entries");
        RatMatrix m(w, n);
        for (std::size_t a = 0; a < w; ++a)
            for (std::size_t i = 0; i < n; ++i)
                m(a, i) = flat[a * n + i];
        basis.push_back(std::move(m));
    }
    t = Tableau::make(n, w, std::move(basis));
}

void to_json(json& j, const InvolutivityReport& r)
{
    j = {{"dim_A", r.dim_a},
         {"characters", r.characters},
         {"dim_prolongation", r.dim_prolongation},
         {"bound", r.bound},
         {"involutive", r.involutive}};
    j["character_of_generality"] = r.character_of_generality ? json(*r.character_of_generality) : json(nullptr);
}

void from_json(const json& j, InvolutivityReport& r)
{
    r.dim_a = field<std::size_t>(j, "dim_A");
    r.characters = field<std::vector<std::size_t>>(j, "characters");
    r.dim_prolongation = field<std::size_t>(j, "dim_prolongation");
    r.bound = field<std::size_t>(j, "bound");
    r.involutive = field<bool>(j, "involutive");
    const json& g = require(j, "character_of_generality");
    r.character_of_generality = g.is_null() ? std::nullopt : std::optional<std::size_t>(g.get<std::size_t>());
}

void to_json(json& j, const FubiniQuadric& f)
{
    j = {{"dim_T", f.dim_t}, {"dim_N", f.dim_n}, {"entries", f.entries}};
}

void from_json(const json& j, FubiniQuadric& f)
{
    f = FubiniQuadric::make(field<std::size_t>(j, "dim_T"), field<std::size_t>(j, "dim_N"),
                            field<std::vector<Rational>>(j, "entries"));
}

void to_json(json& j, const StabilizerPair& s)
{
    j = {{"block_dim", s.block_dim},
         {"dim_r", s.dim_r},
         {"r_basis", s.r_basis},
         {"r_perp_basis", s.r_perp_basis},
         {"trace_form_degenerate", s.trace_form_degenerate},
         {"tableau_r_perp", s.tableau_r_perp}};
}

void from_json(const json& j, StabilizerPair& s)
{
    s.block_dim = field<std::size_t>(j, "block_dim");
    s.dim_r = field<std::size_t>(j, "dim_r");
    s.r_basis = field<std::vector<RatVector>>(j, "r_basis");
    s.r_perp_basis = field<std::vector<RatVector>>(j, "r_perp_basis");
    s.trace_form_degenerate = field<bool>(j, "trace_form_degenerate");
    s.tableau_r_perp = field<Tableau>(j, "tableau_r_perp");
}

void to_json(json& j, const ReducedProlongation& r)
{
    j = {{"dimension", r.dimension}, {"discarded_rank", r.discarded_rank}};
}

void from_json(const json& j, ReducedProlongation& r)
{
    r.dimension = field<std::size_t>(j, "dimension");
    r.discarded_rank = field<std::size_t>(j, "discarded_rank");
}

void to_json(json& j, const CohomologyReport& r)
{
    json comps = json::array();
    for (const auto& c : r.components)
        comps.push_back({{"gamma", c.gamma}, {"pieces", c.pieces}});
    j = {{"p", r.p},
         {"components", comps},
         {"h1_by_degree", degree_dims_to_json(r.h1_by_degree)},
         {"verdict", to_string(r.verdict)},
         {"offending", r.offending}};
}

VogelParams parse_vogel_params(const std::string& text)
{
    std::vector<Rational> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            vals.push_back(parse_rational(item));
        } catch (const std::exception& e) {
            throw InputError("params", e.what());
        }
    }
    if (vals.size() != 3)
        throw InputError("params", "expected three comma-separated rationals alpha,beta,gamma");
    return VogelParams(vals[0], vals[1], vals[2]);
}

} // namespace lierigid
