/*
 * commands.hpp
 * ------------
 * The verification commands behind the motcsm CLI. Each returns a Report
 * whose JSON form is deterministic for fixed inputs and seed; timings are only
 * emitted on request.
 *
 * Exit-code contract: 0 pass, 1 verification failure, 2 input error
 * (InputError propagates out of these functions).
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "motcsm/fiber_strata.hpp"
#include "motcsm/json_io.hpp"

namespace motcsm {

struct Report {
  std::string command;
  std::string inputs_digest;
  std::optional<std::uint64_t> seed;
  Json results = Json::object();
  bool pass = true;
  double elapsed_ms = 0;

  Json to_json(bool include_timings = false) const;
  int exit_code() const { return pass ? 0 : 1; }
};

struct SweepBounds {
  unsigned d_max = 6;
  unsigned mu_max = 4;
  unsigned cases = 200;
  unsigned max_divisors = 8;
  unsigned surface_events = 6;
  unsigned surface_count = 500;
};

// Overrides from a "key=value,key=value" string (keys as in SweepBounds).
SweepBounds parse_sweep_bounds(std::string_view text, SweepBounds base = {});

// 64-bit FNV-1a over the command name and the canonical dump of its inputs.
std::string inputs_digest(const std::string& command, const Json& inputs);

Report cmd_verify_identities(FiberIdentity which, unsigned d_max, unsigned mu_max, int mu0_offset = 0);
Report cmd_verify_invariance(std::uint64_t seed, unsigned cases, unsigned max_divisors);
Report cmd_blowup_run(const Json& program, bool emit_snapshots);
Report cmd_surface_verify(const Json& surface, std::optional<unsigned> stage);
Report cmd_surface_report(const Json& surface, std::optional<unsigned> stage);
Report cmd_cfun_push(const Json& surface, const Json& function);
Report cmd_motivic_eval(const Json& cls, std::optional<long> at);

// Checks of one verify-main stage, shared with the acceptance suite.
struct StageVerification {
  bool main_identity = false;      // v_*(C) == c(TV_m) ∩ [V_m]
  bool chern_numbers = false;      // degree-0 and degree-2 parts agree
  bool fiber_profiles = false;     // every base point profile is 1
  bool unit_pushforward = false;   // v_*(weighted unit) == 1
  bool export_chi = false;         // chi(export, full) == [V_m], Euler 3 + m
  bool engine_agreement = false;   // export == blow-up engine route

  bool all() const {
    return main_identity && chern_numbers && fiber_profiles && unit_pushforward && export_chi &&
           engine_agreement;
  }
};

StageVerification verify_stage(const SurfaceModel& surface, unsigned stage);

// Strata, multiplicities and ids agree, classes compared cross-multiplicatively.
bool same_system(const ModificationSystem& a, const ModificationSystem& b);

}  // namespace motcsm
