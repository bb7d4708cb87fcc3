#pragma once

#include <map>
#include <string>
#include <vector>

#include "motcsm/errors.hpp"
#include "motcsm/modification_system.hpp"

namespace motcsm {

// How a marked locus T meets the center S.
enum class LocusRule {
  ContainsCenter,      // [E_I° ∩ S ∩ T] = [E_I° ∩ S]
  DisjointFromCenter,  // [E_I° ∩ S ∩ T] = 0
  Explicit,            // classes supplied in `strata`
};

struct LocusCenterData {
  LocusRule rule = LocusRule::Explicit;
  StrataMap strata;
};

// A smooth center S of codimension d meeting the arrangement with normal
// crossings, given by the classes [E_I° ∩ S]. `containing` is the set K0 of
// divisors that contain S; normal crossings is the caller's assertion.
struct BlowupCenter {
  unsigned codim = 1;
  Subset containing = 0;
  StrataMap center_strata;
  std::map<std::string, LocusCenterData> locus_data;

  MotivicClass center_class() const;
};

std::vector<Violation> validate_center(const ModificationSystem& system, const BlowupCenter& center);

// Id for the next exceptional divisor: "exc<n>", with a numeric suffix if
// that id is taken.
std::string fresh_divisor_id(std::span<const Divisor> divisors, unsigned step);

// Multiplicity of the new exceptional divisor: sum_{j in K0} mu_j + d - 1.
unsigned exceptional_multiplicity(const ModificationSystem& system, const BlowupCenter& center);

// The fresh divisor is appended, so existing subset keys keep their meaning.
// Throws InputError when the center violates its invariants.
ModificationSystem blow_up(const ModificationSystem& system, const BlowupCenter& center);

struct BlowupProgram {
  ModificationSystem initial;
  std::vector<BlowupCenter> steps;
};

struct ProgramRun {
  ModificationSystem result;
  // snapshots[0] is the initial system, snapshots[i] the system after step i.
  std::vector<ModificationSystem> snapshots;
};

class BlowupStepError : public InputError {
 public:
  BlowupStepError(std::size_t step, const std::string& what);
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

ProgramRun run_program(const BlowupProgram& program);

struct InvarianceCheck {
  std::string locus;
  MotivicClass before;
  MotivicClass after;
  bool holds() const { return before == after; }
};

// chi of every marked locus and of the full locus, before and after blowing
// up `center`.
std::vector<InvarianceCheck> invariance_checks(const ModificationSystem& system,
                                               const BlowupCenter& center);
bool verify_invariance(const ModificationSystem& system, const BlowupCenter& center);

// sum of the new strata equals the old sum plus [S]([P^(d-1)] - 1).
bool total_class_bookkeeping_holds(const ModificationSystem& before, const BlowupCenter& center,
                                   const ModificationSystem& after);

}  // namespace motcsm
