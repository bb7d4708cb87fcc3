#include "motcsm/blowup.hpp"

#include <algorithm>

#include "motcsm/fiber_strata.hpp"

namespace motcsm {

namespace {

MotivicClass stratum_of(const StrataMap& map, Subset s) {
  auto it = map.find(s);
  return it == map.end() ? MotivicClass{} : it->second;
}

const StrataMap& locus_center_strata(const BlowupCenter& center, const LocusCenterData& data,
                                     const StrataMap& empty) {
  switch (data.rule) {
    case LocusRule::ContainsCenter:
      return center.center_strata;
    case LocusRule::DisjointFromCenter:
      return empty;
    case LocusRule::Explicit:
      break;
  }
  return data.strata;
}

// Strata of pi^-1(T) given [E_I° ∩ T] and [E_I° ∩ S ∩ T].
StrataMap transform_strata(const StrataMap& old_strata, const StrataMap& on_center, Subset containing,
                           unsigned codim, std::size_t fresh_index) {
  const unsigned k = subset_size(containing);
  const FiberFrame frame(codim, k);
  std::vector<MotivicClass> fiber;
  for (unsigned i = 0; i <= k; ++i) fiber.push_back(hyperplane_stratum_class(frame, i));
  const Subset fresh = singleton(fresh_index);

  StrataMap out = old_strata;
  for (const auto& [s, c] : on_center) out[s] -= c;
  for (const auto& [s, c] : on_center) {
    if (c.is_zero()) continue;
    const Subset transverse = s & ~containing;
    // Divisors through S cut hyperplanes in each fiber; the others contain it.
    for (Subset sub = containing;; sub = (sub - 1) & containing) {
      const MotivicClass& f = fiber[subset_size(sub)];
      if (!f.is_zero()) out[transverse | sub | fresh] += c * f;
      if (sub == 0) break;
    }
  }
  for (auto& [s, c] : out) c = c.reduced();
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

void check_center_map(const ModificationSystem& system, const BlowupCenter& center,
                      const StrataMap& map, const std::string& what, std::vector<Violation>& out) {
  const Subset all = system.all_divisors();
  const long spare = static_cast<long>(system.ambient_dim) - static_cast<long>(center.codim);
  for (const auto& [s, c] : map) {
    if (c.is_zero()) continue;
    auto report = [&](const std::string& msg) {
      out.push_back({s, is_subset_of(s, all) ? system.ids_of(s) : std::vector<std::string>{},
                     what + ": " + msg});
    };
    if (!is_subset_of(s, all)) {
      report("refers to an unknown divisor");
    } else if (!is_subset_of(center.containing, s)) {
      report("nonzero on a stratum that misses a divisor containing the center");
    } else if (system.stratum(s).is_zero()) {
      report("nonzero on an empty stratum");
    } else if (static_cast<long>(subset_size(s & ~center.containing)) > spare) {
      report("center cannot meet this many transverse divisors with normal crossings");
    }
  }
}

}  // namespace

MotivicClass BlowupCenter::center_class() const {
  MotivicClass total;
  for (const auto& [s, c] : center_strata) total += c;
  return total.reduced();
}

std::vector<Violation> validate_center(const ModificationSystem& system, const BlowupCenter& center) {
  std::vector<Violation> out;
  auto fail = [&](std::string msg) { out.push_back({0, {}, std::move(msg)}); };
  if (center.codim < 1) fail("center codimension must be at least 1");
  if (center.codim > system.ambient_dim)
    fail("center codimension " + std::to_string(center.codim) + " exceeds ambient dimension " +
         std::to_string(system.ambient_dim));
  if (system.divisors.size() + 1 > kMaxDivisors) fail("blow-up would exceed the divisor limit");
  if (!is_subset_of(center.containing, system.all_divisors()))
    fail("containing set refers to an unknown divisor");
  if (subset_size(center.containing) > center.codim)
    fail("center lies on " + std::to_string(subset_size(center.containing)) +
         " divisors but has codimension " + std::to_string(center.codim));
  if (!out.empty()) return out;

  check_center_map(system, center, center.center_strata, "center stratum", out);

  for (const auto& locus : system.loci) {
    auto it = center.locus_data.find(locus.name);
    if (it == center.locus_data.end()) {
      out.push_back({0, {}, "no center data for marked locus '" + locus.name + "'"});
      continue;
    }
    if (it->second.rule != LocusRule::Explicit) continue;
    check_center_map(system, center, it->second.strata, "locus '" + locus.name + "' center stratum",
                     out);
    for (const auto& [s, c] : it->second.strata)
      if (!c.is_zero() && stratum_of(center.center_strata, s).is_zero())
        out.push_back({s, system.ids_of(s),
                       "locus '" + locus.name + "' meets the center where the center is empty"});
  }
  for (const auto& [name, data] : center.locus_data)
    if (!system.find_locus(name)) out.push_back({0, {}, "center data for unknown locus '" + name + "'"});
  return out;
}

std::string fresh_divisor_id(std::span<const Divisor> divisors, unsigned step) {
  auto taken = [&](const std::string& id) {
    return std::any_of(divisors.begin(), divisors.end(), [&](const Divisor& d) { return d.id == id; });
  };
  std::string id = "exc" + std::to_string(step);
  for (unsigned suffix = 1; taken(id); ++suffix)
    id = "exc" + std::to_string(step) + "." + std::to_string(suffix);
  return id;
}

unsigned exceptional_multiplicity(const ModificationSystem& system, const BlowupCenter& center) {
  unsigned mu0 = center.codim - 1;
  for (std::size_t j = 0; j < system.divisors.size(); ++j)
    if (center.containing >> j & 1) mu0 += system.divisors[j].mu;
  return mu0;
}

ModificationSystem blow_up(const ModificationSystem& system, const BlowupCenter& center) {
  if (auto violations = validate_center(system, center); !violations.empty())
    throw InputError("invalid blow-up center: " + violations.front().message);

  const std::size_t fresh = system.divisors.size();
  ModificationSystem out = system;
  out.blowups = system.blowups + 1;
  out.divisors.push_back({fresh_divisor_id(system.divisors, out.blowups),
                          exceptional_multiplicity(system, center)});
  out.strata = transform_strata(system.strata, center.center_strata, center.containing, center.codim,
                                fresh);
  const StrataMap empty;
  for (auto& locus : out.loci) {
    const auto& data = center.locus_data.at(locus.name);
    locus.strata = transform_strata(locus.strata, locus_center_strata(center, data, empty),
                                    center.containing, center.codim, fresh);
  }
  if (out.declared_total) {
    const MotivicClass growth = center.center_class() * (projective_class(center.codim - 1) - 1);
    out.declared_total = (*out.declared_total + growth).reduced();
  }
  return out;
}

BlowupStepError::BlowupStepError(std::size_t step, const std::string& what)
    : InputError("step " + std::to_string(step) + ": " + what), step_(step) {}

ProgramRun run_program(const BlowupProgram& program) {
  ProgramRun run{program.initial, {program.initial}};
  for (std::size_t i = 0; i < program.steps.size(); ++i) {
    try {
      run.result = blow_up(run.result, program.steps[i]);
    } catch (const InputError& e) {
      throw BlowupStepError(i + 1, e.what());
    }
    run.snapshots.push_back(run.result);
  }
  return run;
}

std::vector<InvarianceCheck> invariance_checks(const ModificationSystem& system,
                                               const BlowupCenter& center) {
  const ModificationSystem after = blow_up(system, center);
  std::vector<InvarianceCheck> checks;
  checks.push_back({"full", chi(system, full_locus(system)), chi(after, full_locus(after))});
  for (std::size_t i = 0; i < system.loci.size(); ++i)
    checks.push_back({system.loci[i].name, chi(system, system.loci[i]), chi(after, after.loci[i])});
  return checks;
}

bool verify_invariance(const ModificationSystem& system, const BlowupCenter& center) {
  const auto checks = invariance_checks(system, center);
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
}

bool total_class_bookkeeping_holds(const ModificationSystem& before, const BlowupCenter& center,
                                   const ModificationSystem& after) {
  const MotivicClass growth = center.center_class() * (projective_class(center.codim - 1) - 1);
  if (!(after.strata_total() == before.strata_total() + growth)) return false;
  // The new strata containing the fresh divisor fiber over S with fiber P^(d-1).
  const Subset fresh = singleton(before.divisors.size());
  MotivicClass over_center;
  for (const auto& [s, c] : after.strata)
    if (s & fresh) over_center += c;
  return over_center == center.center_class() * projective_class(center.codim - 1);
}

}  // namespace motcsm
