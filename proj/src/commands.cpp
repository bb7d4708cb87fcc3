#include "motcsm/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "motcsm/errors.hpp"
#include "motcsm/sampling.hpp"

namespace motcsm {

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report start(const std::string& command, const Json& inputs) {
  Report r;
  r.command = command;
  r.inputs_digest = inputs_digest(command, inputs);
  return r;
}

Json violations_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) out.push_back({{"subset", v.subset_ids}, {"message", v.message}});
  return out;
}

std::vector<unsigned> stages_for(const SurfaceModel& s, std::optional<unsigned> stage) {
  if (stage) {
    if (*stage > s.blowups())
      throw InputError("stage " + std::to_string(*stage) + " exceeds the " +
                       std::to_string(s.blowups()) + " blow-ups of the surface");
    return {*stage};
  }
  std::vector<unsigned> all;
  for (unsigned m = 0; m <= s.blowups(); ++m) all.push_back(m);
  return all;
}

bool same_strata(const StrataMap& a, const StrataMap& b) {
  auto nonzero = [](const StrataMap& m) {
    StrataMap out;
    for (const auto& [s, c] : m)
      if (!c.is_zero()) out.emplace(s, c);
    return out;
  };
  const StrataMap x = nonzero(a), y = nonzero(b);
  if (x.size() != y.size()) return false;
  for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

}  // namespace

Json Report::to_json(bool include_timings) const {
  Json out = {{"command", command},
              {"inputs_digest", inputs_digest},
              {"results", results},
              {"status", pass ? "pass" : "fail"}};
  out["seed"] = seed ? Json(*seed) : Json(nullptr);
  if (include_timings) out["timings"] = {{"elapsed_ms", elapsed_ms}};
  return out;
}

SweepBounds parse_sweep_bounds(std::string_view text, SweepBounds base) {
  auto trim = [](std::string v) {
    const auto b = v.find_first_not_of(" \t");
    const auto e = v.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : v.substr(b, e - b + 1);
  };
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("sweep bound '" + item + "' is not key=value");
    const std::string key = trim(item.substr(0, eq));
    const std::string digits = trim(item.substr(eq + 1));
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("sweep bound '" + item + "' needs a nonnegative integer");
    const auto value = static_cast<unsigned>(std::stoul(digits));
    if (key == "d_max") base.d_max = value;
    else if (key == "mu_max") base.mu_max = value;
    else if (key == "cases") base.cases = value;
    else if (key == "max_divisors") base.max_divisors = value;
    else if (key == "surface_events") base.surface_events = value;
    else if (key == "surface_count") base.surface_count = value;
    else throw InputError("unknown sweep bound '" + key + "'");
  }
  if (base.d_max < 1) throw InputError("d_max must be at least 1");
  if (base.max_divisors > kMaxDivisors - 1) throw InputError("max_divisors too large");
  return base;
}

std::string inputs_digest(const std::string& command, const Json& inputs) {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  feed(command);
  feed("\n");
  feed(inputs.dump());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report cmd_verify_identities(FiberIdentity which, unsigned d_max, unsigned mu_max, int mu0_offset) {
  const Stopwatch clock;
  const std::string name = which == FiberIdentity::Simplex ? "verify simplex" : "verify simplexcor";
  if (d_max < 1) throw InputError("d_max must be at least 1");
  Report r = start(name, {{"d_max", d_max}, {"mu_max", mu_max}, {"mu0_offset", mu0_offset}});
  const FiberSweep sweep = sweep_fiber_identity(which, d_max, mu_max, mu0_offset);
  r.results["cases"] = sweep.cases;
  if (sweep.counterexample) {
    r.pass = false;
    const auto& ce = *sweep.counterexample;
    const FiberFrame frame(ce.dim, static_cast<unsigned>(ce.mu.size()));
    const auto sides = which == FiberIdentity::Simplex ? simplex_sides(frame, ce.mu, mu0_offset)
                                                       : simplexcor_sides(frame, ce.mu, mu0_offset);
    r.results["counterexample"] = {{"d", ce.dim},
                                   {"k", ce.mu.size()},
                                   {"mu", ce.mu},
                                   {"lhs", to_json(sides.lhs)},
                                   {"rhs", to_json(sides.rhs)}};
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report cmd_verify_invariance(std::uint64_t seed, unsigned cases, unsigned max_divisors) {
  const Stopwatch clock;
  if (max_divisors > kMaxDivisors - 1) throw InputError("max_divisors too large");
  Report r = start("verify invariance", {{"seed", seed}, {"cases", cases}, {"max_divisors", max_divisors}});
  r.seed = seed;
  Rng rng(seed);
  SystemShape shape;
  shape.max_divisors = max_divisors;
  std::size_t loci_checked = 0;
  for (unsigned i = 0; i < cases; ++i) {
    const ModificationSystem system = random_system(rng, shape);
    const BlowupCenter center = random_center(rng, system);
    const ModificationSystem after = blow_up(system, center);
    bool ok = total_class_bookkeeping_holds(system, center, after);
    for (const auto& check : invariance_checks(system, center)) {
      ++loci_checked;
      ok = ok && check.holds();
    }
    if (!ok && r.pass) {
      r.pass = false;
      r.results["first_failure"] = {{"case", i}, {"system", to_json(system)}};
    }
  }
  r.results["cases"] = cases;
  r.results["loci_checked"] = loci_checked;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report cmd_blowup_run(const Json& program_json, bool emit_snapshots) {
  const Stopwatch clock;
  Report r = start("blowup run", program_json);
  const BlowupProgram program = program_from_json(program_json);
  if (auto v = validate(program.initial); !v.empty()) {
    throw InputError("initial system is invalid: " + v.front().message);
  }
  ModificationSystem current = program.initial;
  Json steps = Json::array();
  for (std::size_t i = 0; i < program.steps.size(); ++i) {
    const BlowupCenter& center = program.steps[i];
    if (auto v = validate_center(current, center); !v.empty())
      throw BlowupStepError(i + 1, "invalid center: " + v.front().message);
    const ModificationSystem after = blow_up(current, center);
    Json checks = Json::array();
    bool step_ok = total_class_bookkeeping_holds(current, center, after);
    for (const auto& c : invariance_checks(current, center)) {
      checks.push_back({{"locus", c.locus}, {"before", to_json(c.before)}, {"after", to_json(c.after)},
                        {"holds", c.holds()}});
      step_ok = step_ok && c.holds();
    }
    Json step = {{"step", i + 1},
                 {"new_divisor", after.divisors.back().id},
                 {"mu", after.divisors.back().mu},
                 {"bookkeeping", total_class_bookkeeping_holds(current, center, after)},
                 {"invariance", checks},
                 {"pass", step_ok}};
    if (emit_snapshots) step["snapshot"] = to_json(after);
    steps.push_back(std::move(step));
    r.pass = r.pass && step_ok;
    current = after;
  }
  r.results["steps"] = steps;
  r.results["final_system"] = to_json(current);
  r.results["final_chi"] = to_json(chi(current, full_locus(current)));
  r.results["final_euler_chi"] = to_json(euler_chi(current, full_locus(current)));
  r.results["violations"] = violations_json(validate(current));
  r.pass = r.pass && validate(current).empty();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

bool same_system(const ModificationSystem& a, const ModificationSystem& b) {
  if (a.ambient_dim != b.ambient_dim || a.divisors.size() != b.divisors.size()) return false;
  for (std::size_t i = 0; i < a.divisors.size(); ++i)
    if (a.divisors[i].id != b.divisors[i].id || a.divisors[i].mu != b.divisors[i].mu) return false;
  if (!same_strata(a.strata, b.strata)) return false;
  if (a.declared_total.has_value() != b.declared_total.has_value()) return false;
  if (a.declared_total && !(*a.declared_total == *b.declared_total)) return false;
  if (a.loci.size() != b.loci.size()) return false;
  for (const auto& locus : a.loci) {
    const MarkedLocus* other = b.find_locus(locus.name);
    if (!other || !same_strata(locus.strata, other->strata)) return false;
  }
  return true;
}

StageVerification verify_stage(const SurfaceModel& surface, unsigned stage) {
  StageVerification v;
  const SurfaceModel base = surface.stage(stage);
  const ChowClass pushed = pushforward(stringy_class(surface, stage), stage);
  const ChowClass expected = chern_class(base);
  v.main_identity = pushed == expected;
  v.chern_numbers = pushed.points() == expected.points() && pushed.top() == expected.top();

  const auto arr = relative_arrangement(surface, stage);
  v.fiber_profiles = fiber_euler_profile(surface, "generic", stage) == 1;
  for (unsigned p = 1; p <= arr.base_points; ++p)
    v.fiber_profiles = v.fiber_profiles && fiber_euler_profile(surface, base_point_name(p), stage) == 1;

  v.unit_pushforward = verify_unit_pushforward(surface, stage);

  const ModificationSystem exported = export_modification_system(surface, stage);
  v.export_chi = validate(exported).empty() &&
                 chi(exported, full_locus(exported)) == stage_class(stage) &&
                 euler_chi(exported, full_locus(exported)) == Rational(3 + stage);
  for (const auto& locus : exported.loci) v.export_chi = v.export_chi && chi(exported, locus) == 1;

  const ProgramRun run = run_program(to_blowup_program(surface, stage));
  v.engine_agreement = same_system(run.result, exported);
  return v;
}

Report cmd_surface_verify(const Json& surface_json, std::optional<unsigned> stage) {
  const Stopwatch clock;
  Json inputs = {{"surface", surface_json}};
  inputs["stage"] = stage ? Json(*stage) : Json(nullptr);
  Report r = start("surface verify-main", inputs);
  const SurfaceModel surface = SurfaceModel::from_events(surface_events_from_json(surface_json));
  Json stages = Json::array();
  for (unsigned m : stages_for(surface, stage)) {
    const StageVerification v = verify_stage(surface, m);
    stages.push_back({{"stage", m},
                      {"main_identity", v.main_identity},
                      {"chern_numbers", v.chern_numbers},
                      {"fiber_profiles", v.fiber_profiles},
                      {"unit_pushforward", v.unit_pushforward},
                      {"export_chi", v.export_chi},
                      {"engine_agreement", v.engine_agreement},
                      {"pushforward", to_json(pushforward(stringy_class(surface, m), m))},
                      {"chern_class", to_json(chern_class(surface.stage(m)))}});
    r.pass = r.pass && v.all();
  }
  r.results["blowups"] = surface.blowups();
  r.results["stages"] = stages;

  if (surface_json.is_object() && surface_json.contains("alternate_events")) {
    const SurfaceModel alt =
        SurfaceModel::from_events(surface_events_from_json(surface_json.at("alternate_events")));
    const ChowClass a = pushforward(stringy_class(surface, 0), 0);
    const ChowClass b = pushforward(stringy_class(alt, 0), 0);
    const bool equal = a == b;
    r.results["alternate"] = {{"pushforward", to_json(b)}, {"equal", equal}};
    r.results["notes"] = Json::array({equal ? "push-forwards equal" : "push-forwards differ"});
    r.pass = r.pass && equal && verify_stage(alt, 0).all();
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report cmd_surface_report(const Json& surface_json, std::optional<unsigned> stage) {
  const Stopwatch clock;
  Json inputs = {{"surface", surface_json}};
  inputs["stage"] = stage ? Json(*stage) : Json(nullptr);
  Report r = start("surface report", inputs);
  const SurfaceModel surface = SurfaceModel::from_events(surface_events_from_json(surface_json));

  Json curves = Json::array();
  for (unsigned j = 1; j <= surface.blowups(); ++j) {
    const auto& c = surface.curve(j);
    curves.push_back({{"id", j},
                      {"event", to_string(surface.events()[j - 1])},
                      {"class", to_json(c.proper_transform)},
                      {"mu", c.mu},
                      {"anchor", c.anchor}});
  }
  Json incidences = Json::array();
  for (const auto& [a, b] : surface.incidences()) incidences.push_back({a, b});
  r.results["curves"] = curves;
  r.results["incidences"] = incidences;
  r.results["chern_class"] = to_json(chern_class(surface));

  Json stages = Json::array();
  for (unsigned m : stages_for(surface, stage)) {
    const auto arr = relative_arrangement(surface, m);
    const ChowClass c = stringy_class(surface, m);
    Json discrepancies = Json::object();
    for (unsigned j : arr.curves) discrepancies[std::to_string(j)] = arr.mu.at(j);
    const ChowClass pushed = pushforward(c, m);
    const ChowClass expected = chern_class(surface.stage(m));
    stages.push_back({{"stage", m},
                      {"stringy_class", to_json(c)},
                      {"pushforward", to_json(pushed)},
                      {"chern_class_of_stage", to_json(expected)},
                      {"relative_discrepancies", discrepancies},
                      {"identity_holds", pushed == expected}});
    r.pass = r.pass && pushed == expected;
  }
  r.results["stages"] = stages;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report cmd_cfun_push(const Json& surface_json, const Json& function_json) {
  const Stopwatch clock;
  Report r = start("cfun push", {{"surface", surface_json}, {"function", function_json}});
  const SurfaceModel surface = SurfaceModel::from_events(surface_events_from_json(surface_json));
  const ConstructibleFunction f = function_from_json(function_json);
  if (f.stage > surface.blowups()) throw InputError("function stage exceeds the surface's blow-ups");
  const BaseFunction pushed = pushforward(surface, f);
  r.results["function"] = to_json(f);
  r.results["pushforward"] = to_json(pushed);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report cmd_motivic_eval(const Json& cls_json, std::optional<long> at) {
  const Stopwatch clock;
  Json inputs = {{"class", cls_json}};
  inputs["at"] = at ? Json(*at) : Json(nullptr);
  Report r = start("motivic eval", inputs);
  const MotivicClass c = class_from_json(cls_json);
  r.results["class"] = to_json(c);
  r.results["reduced"] = to_json(c.reduced());
  r.results["text"] = c.to_string();
  r.results["euler"] = to_json(euler_specialize(c));
  if (at) r.results["value"] = to_json(eval_at(c, Integer(std::to_string(*at))));
  const auto quotient = as_polynomial(c);
  r.results["is_polynomial"] = quotient.has_value();
  if (quotient) r.results["quotient"] = quotient->to_string();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace motcsm
