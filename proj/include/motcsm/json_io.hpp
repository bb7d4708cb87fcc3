/*
 * json_io.hpp
 * -----------
 * JSON encodings shared by the CLI, the Python module and the tests.
 *
 *   class     {"numerator": "1 + 1*L", "denominator": [1, 2]}
 *             (input also accepts a bare polynomial string, an integer, or a
 *             coefficient array for the numerator)
 *   rational  "p/q" or an integer
 *   system    {"ambient_dim": n, "divisors": [{"id": s, "mu": m}],
 *              "strata": [{"subset": [ids], "class": class}],
 *              "loci": [{"name": s, "strata": [...]}], "total": class?}
 *   program   {"initial": system, "steps": [{"codim": d, "containing": [ids],
 *              "center_strata": [...], "locus_defaults": {name: rule},
 *              "locus_strata": {name: [...]}}]}
 *   surface   {"events": [{"type": "generic"|"on_curve"|"intersection",
 *              "curve": j, "pair": [a, b]}]}
 *   function  {"stage": m, "weights": [{"stratum": [] | [j] | [a, b],
 *              "weight": rational}]}
 *
 * Parse failures throw InputError.
 */
#pragma once

#include <json.hpp>

#include <vector>

#include "motcsm/blowup.hpp"
#include "motcsm/constructible.hpp"
#include "motcsm/modification_system.hpp"
#include "motcsm/motivic.hpp"
#include "motcsm/surface.hpp"

namespace motcsm {

using Json = nlohmann::json;

Json to_json(const MotivicClass& c);
MotivicClass class_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const ChowClass& c);

Json to_json(const ModificationSystem& system);
ModificationSystem system_from_json(const Json& j);

BlowupProgram program_from_json(const Json& j);

Json to_json(const std::vector<SurfaceEvent>& events);
std::vector<SurfaceEvent> surface_events_from_json(const Json& j);

Json to_json(const ConstructibleFunction& f);
ConstructibleFunction function_from_json(const Json& j);

Json to_json(const BaseFunction& f);

}  // namespace motcsm
