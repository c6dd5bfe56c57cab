#include "lierigid/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lierigid;

namespace {

std::vector<int64_t> parse_int_list(const std::string& text, const std::string& name)
{
    std::vector<int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError(name, "'" + item + "' is not an integer");
        }
    }
    if (out.empty())
        throw InputError(name, "expected a comma-separated list of integers");
    return out;
}

json read_json_file(const std::string& path, const std::string& name)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(name, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(name, e.what());
    }
}

std::string weight_str(const Weight& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::string dims_str(const GradedDims& g)
{
    std::string s;
    for (auto it = g.dims.rbegin(); it != g.dims.rend(); ++it)
        s += (s.empty() ? "" : "  ") + std::to_string(it->first) + ":" + std::to_string(it->second);
    return s;
}

std::string degree_str(const DegreeDims& d)
{
    std::string s;
    for (const auto& [deg, n] : d)
        s += (s.empty() ? "" : "  ") + to_string(deg) + ":" + std::to_string(n);
    return s.empty() ? "0" : s;
}

void print_pieces(std::ostream& os, const std::vector<H1Piece>& pieces)
{
    for (const auto& p : pieces)
        os << "  Gamma" << weight_str(p.component) << "  node " << p.source_reflection + 1 << "  degree "
           << to_string(p.degree) << "  dim " << p.dimension << "  g0-weight " << weight_str(p.levi_highest_weight)
           << "\n";
}

void print_verdict_table(std::ostream& os, const RigidityVerdict& v)
{
    os << "scenario   " << v.name << "\n"
       << "algebra    " << v.algebra << "  marked " << json(v.marked).dump() << "  lambda "
       << weight_str(v.highest_weight) << "\n"
       << "g grading  " << dims_str(v.algebra_grading) << "  (depth " << v.algebra_grading.depth << ")\n"
       << "U grading  " << dims_str(v.module_grading) << "  (depth " << v.module_grading.depth << ")\n"
       << "g-perp    ";
    for (const auto& c : v.gperp_summary)
        os << " " << weight_str(c.highest_weight) << (c.multiplicity > 1 ? "x" + std::to_string(c.multiplicity) : "");
    os << "\nH^1        " << degree_str(v.h1_by_degree) << "\n";
    print_pieces(os, v.h1_pieces);
    os << "p = " << v.p << ", threshold d >= " << v.threshold << "\n";
    if (!v.offending_pieces.empty()) {
        os << "offending pieces:\n";
        print_pieces(os, v.offending_pieces);
    }
    for (const auto& n : v.notes)
        os << "note: " << n << "\n";
    os << "verdict    " << to_string(v.verdict) << "\n";
}

void emit(const json& j, bool as_json, const std::function<void()>& table)
{
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        table();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rigidity of homogeneous varieties via Lie algebra cohomology"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

    std::string type, marked, weight, scenario, input, f2, params;
    int64_t p = -1;
    bool oracle = false;
    std::size_t oracle_bound = 0;
    uint64_t flag_seed = 0;
    std::size_t k = 1;
    bool list = false;
    bool p_given = false;

    auto* grading = app.add_subcommand("grading", "Graded dimensions of g and, with --weight, of U");
    grading->add_option("--type", type, "Algebra, e.g. A3 or A1xA1")->required();
    grading->add_option("--marked", marked, "Marked nodes, 1-based, comma-separated")->required();
    grading->add_option("--weight", weight, "Highest weight of U in fundamental coordinates");

    auto* gperp = app.add_subcommand("gperp", "Decompose the complement of g in sl(U)");
    gperp->add_option("--type", type)->required();
    gperp->add_option("--weight", weight)->required();

    auto* cohom = app.add_subcommand("cohomology", "H^1(g_-, g-perp) by degree");
    cohom->add_option("--type", type)->required();
    cohom->add_option("--marked", marked)->required();
    cohom->add_option("--weight", weight)->required();
    cohom->add_option("--p", p, "Filtration index p >= -1");

    auto* rigid = app.add_subcommand("rigidity", "Run a scenario: a JSON file or a bundled fixture name");
    rigid->add_option("--scenario", scenario);
    rigid->add_flag("--list", list, "List bundled fixtures");
    auto* rigid_p = rigid->add_option("--p", p, "Override p");

    auto* adjoint = app.add_subcommand("adjoint", "Adjoint variety of a simple algebra at p = -1");
    adjoint->add_option("--type", type)->required();
    auto* adjoint_p = adjoint->add_option("--p", p, "Override p");

    for (auto* sub : {cohom, rigid, adjoint}) {
        sub->add_flag("--oracle", oracle, "Cross-check with explicit cochain matrices");
        sub->add_option("--oracle-bound", oracle_bound, "Largest module built explicitly (default ORACLE_DIM_MAX or 30)");
    }

    auto* tab = app.add_subcommand("tableau", "Cartan test for a tableau, or for the F2 stabilizer tableau");
    tab->add_option("--input", input, "Tableau JSON");
    tab->add_option("--f2", f2, "Second fundamental form JSON");
    tab->add_option("--flag-seed", flag_seed, "Seed for random flags");

    auto* vogel = app.add_subcommand("vogel", "Vogel dimension formulas");
    vogel->add_option("--params", params, "alpha,beta,gamma")->required();
    vogel->add_option("--k", k, "Cartan power");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    p_given = rigid_p->count() > 0 || adjoint_p->count() > 0;
    const bool as_json = format == "json";
    if (oracle_bound == 0)
        oracle_bound = default_oracle_bound();

    try {
        if (grading->parsed()) {
            const auto factors = parse_algebra(type);
            const RootSystem rs = RootSystem::build(factors);
            const auto m = ParabolicMarking::from_one_based(rs, parse_int_list(marked, "marked"));
            json j = {{"algebra", to_string(factors)}, {"marked", m.one_based()}};
            const GradedDims g = grade_algebra(rs, m);
            j["algebra_grading"] = g;
            std::optional<GradedDims> u;
            if (!weight.empty()) {
                const Weight lam = parse_int_list(weight, "weight");
                if (lam.size() != rs.rank())
                    throw InputError("weight", "expected " + std::to_string(rs.rank()) + " coordinates");
                u = grade_module(rs, m, lam);
                j["highest_weight"] = lam;
                j["module_grading"] = *u;
            }
            emit(j, as_json, [&] {
                std::cout << "g  " << dims_str(g) << "  (depth " << g.depth << ")\n";
                if (u)
                    std::cout << "U  " << dims_str(*u) << "  (depth " << u->depth << ")\n";
            });
        } else if (gperp->parsed()) {
            const auto factors = parse_algebra(type);
            const RootSystem rs = RootSystem::build(factors);
            const Weight lam = parse_int_list(weight, "weight");
            const auto comps = gperp_decompose(rs, lam);
            json j = {{"algebra", to_string(factors)}, {"highest_weight", lam}, {"components", comps}};
            json dims = json::array();
            for (const auto& c : comps)
                dims.push_back(weyl_dim(rs, c.highest_weight));
            j["dimensions"] = dims;
            emit(j, as_json, [&] {
                for (const auto& c : comps)
                    std::cout << weight_str(c.highest_weight) << "  x" << c.multiplicity << "  dim "
                              << weyl_dim(rs, c.highest_weight) << "\n";
            });
        } else if (cohom->parsed()) {
            ScenarioSpec s;
            s.name = "cohomology";
            s.algebra = parse_algebra(type);
            const RootSystem rs = RootSystem::build(s.algebra);
            s.marked = ParabolicMarking::from_one_based(rs, parse_int_list(marked, "marked"));
            s.highest_weight = parse_int_list(weight, "weight");
            s.p = p;
            s.oracle = oracle;
            const RigidityVerdict v = run_scenario(s, oracle_bound);
            emit(json(v), as_json, [&] { print_verdict_table(std::cout, v); });
        } else if (rigid->parsed()) {
            if (list) {
                json j = json::array();
                for (const auto& n : fixture_names())
                    j.push_back(fixture(n));
                emit(j, as_json, [&] {
                    for (const auto& n : fixture_names())
                        std::cout << n << "\n";
                });
                return 0;
            }
            if (scenario.empty())
                throw InputError("scenario", "give a scenario file or fixture name");
            ScenarioSpec s;
            if (std::ifstream probe(scenario); probe) {
                s = read_json_file(scenario, "scenario").get<ScenarioSpec>();
            } else {
                std::string name = scenario;
                if (const auto slash = name.find_last_of('/'); slash != std::string::npos)
                    name = name.substr(slash + 1);
                if (name.size() > 5 && name.ends_with(".json"))
                    name.resize(name.size() - 5);
                s = fixture(name);
            }
            if (p_given)
                s.p = p;
            if (oracle)
                s.oracle = true;
            const RigidityVerdict v = run_scenario(s, oracle_bound);
            emit(json(v), as_json, [&] { print_verdict_table(std::cout, v); });
        } else if (adjoint->parsed()) {
            const auto factors = parse_algebra(type);
            if (factors.size() != 1)
                throw InputError("type", "adjoint scenarios need a simple algebra");
            ScenarioSpec s = adjoint_scenario(factors.front());
            if (p_given)
                s.p = p;
            s.oracle = oracle;
            const RigidityVerdict v = run_scenario(s, oracle_bound);
            emit(json(v), as_json, [&] { print_verdict_table(std::cout, v); });
        } else if (tab->parsed()) {
            if (input.empty() == f2.empty())
                throw InputError("input", "give exactly one of --input or --f2");
            json j;
            Tableau t;
            std::optional<StabilizerPair> sp;
            if (!f2.empty()) {
                sp = stabilizer_and_tableau(read_json_file(f2, "f2").get<FubiniQuadric>());
                t = sp->tableau_r_perp;
                j["stabilizer"] = *sp;
            } else {
                t = read_json_file(input, "input").get<Tableau>();
            }
            const InvolutivityReport r = is_involutive(t, flag_seed);
            const std::size_t torsion = torsion_quotient_dim(t);
            j["involutivity"] = r;
            j["torsion_quotient_dim"] = torsion;
            j["delta_rank"] = delta_rank(t);
            emit(j, as_json, [&] {
                if (sp)
                    std::cout << "dim r " << sp->dim_r << "  dim r-perp tableau " << t.dim() << "  (block "
                              << sp->block_dim << ")\n";
                std::cout << "dim A " << r.dim_a << "  characters " << json(r.characters).dump() << "  dim A(1) "
                          << r.dim_prolongation << "  bound " << r.bound << "\n"
                          << (r.involutive ? "involutive" : "not involutive");
                if (r.character_of_generality)
                    std::cout << "  (character of generality " << *r.character_of_generality << ")";
                std::cout << "\ntorsion quotient " << torsion << "\n";
            });
        } else if (vogel->parsed()) {
            const VogelParams vp = parse_vogel_params(params);
            if (k == 0)
                throw InputError("k", "k must be at least 1");
            const Rational d = dim_yk(vp, k);
            json j = {{"alpha", vp.alpha()}, {"beta", vp.beta()}, {"gamma", vp.gamma()},
                      {"t", vp.t()},         {"k", k},             {"dim_yk", d}};
            if (k == 1)
                j["dim_g"] = dim_g(vp);
            emit(j, as_json, [&] { std::cout << to_string(d) << "\n"; });
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateError& e) {
        std::cerr << "error: params: degenerate point, " << e.what() << " (" << e.factor() << ")\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "error: dimensions: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
