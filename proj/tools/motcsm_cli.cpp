// motcsm: command-line front end for the verification commands.
//
//   motcsm verify simplex|simplexcor [--d-max N] [--mu-max N] [--mu0-offset N]
//   motcsm verify invariance [--seed S] [--cases N] [--max-divisors N]
//   motcsm blowup run --program FILE [--emit-snapshots]
//   motcsm surface verify-main|report --program FILE [--stage M]
//   motcsm cfun push --program SURFACE --function FUNCTION
//   motcsm motivic eval --class TEXT [--den MU,...] [--at Q]
//
// Every input file may be either the bare payload or a scenario object
// {"kind": ..., "payload": ..., "metadata": {...}} passed with --scenario.
// Exit codes: 0 pass, 1 verification failure, 2 input error.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "motcsm/commands.hpp"
#include "motcsm/errors.hpp"

namespace {

using motcsm::InputError;
using motcsm::Json;

struct Scenario {
  std::string kind;
  Json payload;
  Json metadata = Json::object();
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Scenario load_scenario(const std::string& path, const std::string& expected_kind) {
  Json j = read_json_file(path);
  Scenario s;
  if (j.is_object() && j.contains("kind") && j.contains("payload")) {
    s.kind = j.at("kind").get<std::string>();
    s.payload = j.at("payload");
    if (j.contains("metadata")) s.metadata = j.at("metadata");
  } else {
    s.kind = expected_kind;
    s.payload = std::move(j);
  }
  if (s.kind == "system" && expected_kind == "program") {
    s.payload = Json{{"initial", s.payload}, {"steps", Json::array()}};
    s.kind = "program";
  }
  if (s.kind != expected_kind)
    throw InputError("scenario kind '" + s.kind + "' where '" + expected_kind + "' was expected");
  return s;
}

void print(const motcsm::Report& report, bool as_json, bool timings) {
  if (as_json) {
    std::cout << report.to_json(timings).dump(2) << "\n";
    return;
  }
  std::cout << report.command << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& [key, value] : report.results.items()) {
    if (value.is_primitive()) std::cout << "  " << key << " = " << value.dump() << "\n";
  }
  if (report.results.contains("counterexample"))
    std::cout << "  counterexample = " << report.results["counterexample"].dump() << "\n";
  if (report.results.contains("notes"))
    for (const auto& n : report.results["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
  if (timings) std::cout << "  elapsed_ms = " << report.elapsed_ms << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact motivic and Chern-Schwartz-MacPherson identity checks", "motcsm"};
  app.require_subcommand(1);

  bool as_json = false;
  bool timings = false;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> stage;
  std::string scenario_path;
  std::string function_path;

  motcsm::SweepBounds bounds;
  std::optional<unsigned> d_max, mu_max, cases, max_divisors;
  int mu0_offset = 0;
  bool emit_snapshots = false;
  std::string class_text;
  std::vector<unsigned> den;
  std::optional<long> at;

  app.add_flag("--json", as_json, "Emit the report as JSON");
  app.add_flag("--timings", timings, "Include wall-clock timings in the report");

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Emit the report as JSON");
    sub->add_flag("--timings", timings, "Include wall-clock timings in the report");
  };
  auto add_input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--scenario,--program", scenario_path, "Scenario or payload JSON file")
                    ->check(CLI::ExistingFile);
    if (required) opt->required();
  };

  auto* verify = app.add_subcommand("verify", "Exhaustive and randomized identity sweeps");
  verify->require_subcommand(1);
  auto* v_simplex = verify->add_subcommand("simplex", "Hyperplane stratum identity in P^(d-1)");
  auto* v_simplexcor = verify->add_subcommand("simplexcor", "Localized form of the stratum identity");
  for (auto* sub : {v_simplex, v_simplexcor}) {
    sub->add_option("--d-max", d_max, "Largest fiber dimension d")->check(CLI::Range(1u, 12u));
    sub->add_option("--mu-max", mu_max, "Largest multiplicity")->check(CLI::Range(0u, 16u));
    sub->add_option("--mu0-offset", mu0_offset, "Perturb the exceptional multiplicity (harness hook)");
    add_common(sub);
  }
  auto* v_invariance = verify->add_subcommand("invariance", "Randomized blow-up invariance of chi");
  v_invariance->add_option("--seed", seed, "RNG seed");
  v_invariance->add_option("--cases", cases, "Number of random blow-ups");
  v_invariance->add_option("--max-divisors", max_divisors, "Largest |J|")->check(CLI::Range(0u, 61u));
  add_common(v_invariance);

  auto* blowup = app.add_subcommand("blowup", "Blow-up programs on modification systems");
  blowup->require_subcommand(1);
  auto* b_run = blowup->add_subcommand("run", "Run a program and check invariance per step");
  add_input(b_run, true);
  b_run->add_flag("--emit-snapshots", emit_snapshots, "Include the system after every step");
  add_common(b_run);

  auto* surface = app.add_subcommand("surface", "Iterated point blow-ups of the plane");
  surface->require_subcommand(1);
  auto* s_verify = surface->add_subcommand("verify-main", "Check v_*(C) = c(TV) at each stage");
  auto* s_report = surface->add_subcommand("report", "Emit C, c(TZ), push-forwards, discrepancies");
  for (auto* sub : {s_verify, s_report}) {
    add_input(sub, true);
    sub->add_option("--stage", stage, "Stage m (default: every stage)");
    add_common(sub);
  }

  auto* cfun = app.add_subcommand("cfun", "Constructible functions");
  cfun->require_subcommand(1);
  auto* c_push = cfun->add_subcommand("push", "Push a constructible function forward to the base");
  add_input(c_push, true);
  c_push->add_option("--function", function_path, "Constructible function JSON")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(c_push);

  auto* motivic = app.add_subcommand("motivic", "Motivic class arithmetic");
  motivic->require_subcommand(1);
  auto* m_eval = motivic->add_subcommand("eval", "Specializations of a localized class");
  m_eval->add_option("--class", class_text, "Numerator polynomial, e.g. '1 + 1*L + 1*L^2'");
  m_eval->add_option("--den", den, "Denominator multiset of mu values")->delimiter(',');
  m_eval->add_option("--at", at, "Evaluate at L = q (q >= 2)");
  add_input(m_eval, false);
  add_common(m_eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (const char* env = std::getenv("MC_SWEEP_BOUNDS")) bounds = motcsm::parse_sweep_bounds(env, bounds);
    if (d_max) bounds.d_max = *d_max;
    if (mu_max) bounds.mu_max = *mu_max;
    if (cases) bounds.cases = *cases;
    if (max_divisors) bounds.max_divisors = *max_divisors;

    motcsm::Report report;
    if (v_simplex->parsed() || v_simplexcor->parsed()) {
      const auto which = v_simplex->parsed() ? motcsm::FiberIdentity::Simplex : motcsm::FiberIdentity::SimplexCor;
      report = motcsm::cmd_verify_identities(which, bounds.d_max, bounds.mu_max, mu0_offset);
    } else if (v_invariance->parsed()) {
      report = motcsm::cmd_verify_invariance(seed.value_or(1), bounds.cases, bounds.max_divisors);
    } else if (b_run->parsed()) {
      report = motcsm::cmd_blowup_run(load_scenario(scenario_path, "program").payload, emit_snapshots);
    } else if (s_verify->parsed()) {
      report = motcsm::cmd_surface_verify(load_scenario(scenario_path, "surface").payload, stage);
    } else if (s_report->parsed()) {
      report = motcsm::cmd_surface_report(load_scenario(scenario_path, "surface").payload, stage);
    } else if (c_push->parsed()) {
      report = motcsm::cmd_cfun_push(load_scenario(scenario_path, "surface").payload,
                                     read_json_file(function_path));
    } else if (m_eval->parsed()) {
      Json cls;
      if (!scenario_path.empty()) {
        cls = read_json_file(scenario_path);
      } else {
        if (class_text.empty()) throw InputError("motivic eval needs --class or --scenario");
        cls = Json{{"numerator", class_text}, {"denominator", den}};
      }
      report = motcsm::cmd_motivic_eval(cls, at);
    }
    print(report, as_json, timings);
    return report.exit_code();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
