#pragma once

#include "lierigid/cohomology.hpp"
#include "lierigid/errors.hpp"
#include "lierigid/grading.hpp"
#include "lierigid/repthy.hpp"
#include "lierigid/rigidity.hpp"
#include "lierigid/tableau.hpp"
#include "lierigid/vogel.hpp"

#include <json.hpp>

#include <string>

// Rationals travel as strings ("p/q", or "p" when integral). Integers are
// also accepted on input; floating point never is.
template <>
struct nlohmann::adl_serializer<mpq_class> {
    static void to_json(nlohmann::json& j, const mpq_class& q);
    static void from_json(const nlohmann::json& j, mpq_class& q);
};

namespace lierigid {

using nlohmann::json;

/// j[key] or InputError(key) when absent.
const json& require(const json& j, const std::string& key);

/// Converts j[key], turning any parse failure into InputError(key).
template <class T>
T field(const json& j, const std::string& key)
{
    const json& v = require(j, key);
    try {
        return v.get<T>();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(key, e.what());
    }
}

void to_json(json& j, const GradedDims& g);
void from_json(const json& j, GradedDims& g);

void to_json(json& j, const IrrComponent& c);
void from_json(const json& j, IrrComponent& c);

void to_json(json& j, const H1Piece& p);
void from_json(const json& j, H1Piece& p);

json degree_dims_to_json(const DegreeDims& d);
DegreeDims degree_dims_from_json(const json& j);

void to_json(json& j, const OracleComponent& c);
void from_json(const json& j, OracleComponent& c);
void to_json(json& j, const OracleSummary& o);
void from_json(const json& j, OracleSummary& o);

void to_json(json& j, const ScenarioSpec& s);
void from_json(const json& j, ScenarioSpec& s);

void to_json(json& j, const RigidityVerdict& v);
void from_json(const json& j, RigidityVerdict& v);

/// {"dim_V": n, "dim_W": w, "basis": [[w*n row-major rationals], ...]}
void to_json(json& j, const Tableau& t);
void from_json(const json& j, Tableau& t);

void to_json(json& j, const InvolutivityReport& r);
void from_json(const json& j, InvolutivityReport& r);

/// {"dim_T": n, "dim_N": a, "entries": [n*n*a rationals, index (alpha*n+beta)*a+mu]}
void to_json(json& j, const FubiniQuadric& f);
void from_json(const json& j, FubiniQuadric& f);

void to_json(json& j, const StabilizerPair& s);
void from_json(const json& j, StabilizerPair& s);

void to_json(json& j, const ReducedProlongation& r);
void from_json(const json& j, ReducedProlongation& r);

void to_json(json& j, const CohomologyReport& r);

/// "a,b,c" -> VogelParams; throws InputError("params").
VogelParams parse_vogel_params(const std::string& text);

} // namespace lierigid
