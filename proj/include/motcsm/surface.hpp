/*
 * surface.hpp
 * -----------
 * Iterated point blow-ups of the projective plane.
 *
 * Chow groups use the total-transform basis: [Z] in dimension 2; h (pullback
 * of a line) and e_1..e_k (total transform of the i-th exceptional curve) in
 * dimension 1; [pt] in dimension 0. Exceptional curves are numbered 1..k in
 * creation order, and curve i is created at stage i. Pushing forward to
 * stage m deletes the coordinates e_i with i > m.
 *
 * Only three kinds of centers exist: a general point of the surface, a general
 * point of one exceptional curve, and the intersection point of two meeting
 * exceptional curves. Normal crossings of the exceptional arrangement holds by
 * construction: every pair of curves meets at most once and there are no
 * triple points.
 */
#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "motcsm/blowup.hpp"
#include "motcsm/modification_system.hpp"
#include "motcsm/motivic.hpp"

namespace motcsm {

enum class EventKind { Generic, OnCurve, Intersection };

struct SurfaceEvent {
  EventKind kind = EventKind::Generic;
  unsigned curve = 0;  // OnCurve: the curve; Intersection: the first curve
  unsigned other = 0;  // Intersection: the second curve

  static SurfaceEvent generic() { return {}; }
  static SurfaceEvent on_curve(unsigned j) { return {EventKind::OnCurve, j, 0}; }
  static SurfaceEvent intersection(unsigned a, unsigned b) { return {EventKind::Intersection, a, b}; }

  friend bool operator==(const SurfaceEvent&, const SurfaceEvent&) = default;
};

std::string to_string(const SurfaceEvent& event);

class ChowClass {
 public:
  ChowClass() : curves_(1) {}
  explicit ChowClass(unsigned blowups) : curves_(blowups + 1) {}

  unsigned blowups() const { return static_cast<unsigned>(curves_.size() - 1); }

  Rational& top() { return top_; }
  const Rational& top() const { return top_; }
  Rational& h() { return curves_[0]; }
  const Rational& h() const { return curves_[0]; }
  // 1-based: e(i) is the coefficient of e_i.
  Rational& e(unsigned i) { return curves_.at(i); }
  const Rational& e(unsigned i) const { return curves_.at(i); }
  Rational& points() { return points_; }
  const Rational& points() const { return points_; }

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  ChowClass& operator*=(const Rational& scale);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const Rational& s) { return a *= s; }
  friend ChowClass operator*(const Rational& s, ChowClass a) { return a *= s; }
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  std::string to_string() const;

 private:
  Rational top_;
  std::vector<Rational> curves_;
  Rational points_;
};

struct ExceptionalCurve {
  ChowClass proper_transform;  // dimension-1 part only
  unsigned mu = 0;             // discrepancy over P^2
  unsigned anchor = 0;         // which original plane point it lies over (1-based)
};

class SurfaceModel {
 public:
  SurfaceModel() = default;
  static SurfaceModel from_events(std::span<const SurfaceEvent> events);

  // Throws InputError for an unknown curve or a pair that does not meet.
  SurfaceModel apply(const SurfaceEvent& event) const;

  unsigned blowups() const { return static_cast<unsigned>(curves_.size()); }
  unsigned anchors() const { return anchors_; }
  const std::vector<SurfaceEvent>& events() const { return events_; }
  const ExceptionalCurve& curve(unsigned id) const;
  bool meets(unsigned a, unsigned b) const;
  const std::set<std::pair<unsigned, unsigned>>& incidences() const { return incidences_; }
  // The surface after its first m events.
  SurfaceModel stage(unsigned m) const;
  long euler_characteristic() const { return 3 + static_cast<long>(blowups()); }

 private:
  std::vector<SurfaceEvent> events_;
  std::vector<ExceptionalCurve> curves_;
  std::set<std::pair<unsigned, unsigned>> incidences_;
  unsigned anchors_ = 0;
};

inline SurfaceModel apply_event(const SurfaceModel& surface, const SurfaceEvent& event) {
  return surface.apply(event);
}

// The exceptional arrangement of Z -> V_m: curves created after stage m, with
// discrepancies recomputed so that curves of V_m carry multiplicity 0, and the
// points of V_m that the new curves lie over.
struct RelativeArrangement {
  unsigned stage = 0;
  unsigned blowups = 0;
  std::vector<unsigned> curves;
  std::map<unsigned, unsigned> mu;
  std::map<unsigned, unsigned> neighbours;
  std::vector<std::pair<unsigned, unsigned>> pairs;
  std::map<unsigned, unsigned> base_point;  // curve -> base point (1-based)
  unsigned base_points = 0;

  bool contains(unsigned curve) const { return mu.count(curve) != 0; }
};

RelativeArrangement relative_arrangement(const SurfaceModel& surface, unsigned stage);

std::string base_point_name(unsigned index);
// Throws InputError unless `name` is "p<n>" for an existing base point.
unsigned parse_base_point(const RelativeArrangement& arrangement, std::string_view name);

// A stratum of the exceptional arrangement: the open complement (no curves),
// the interior of a curve, or the intersection point of a meeting pair.
struct Stratum {
  unsigned first = 0;
  unsigned second = 0;

  static Stratum open() { return {}; }
  static Stratum curve(unsigned j) { return {j, 0}; }
  static Stratum pair(unsigned a, unsigned b) { return a < b ? Stratum{a, b} : Stratum{b, a}; }
  unsigned size() const { return (first != 0) + (second != 0); }
  friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

std::string to_string(const Stratum& stratum);

// All strata of the relative arrangement, open stratum first.
std::vector<Stratum> strata_of(const RelativeArrangement& arrangement);
// Throws InputError when `stratum` is not part of the arrangement.
void check_stratum(const RelativeArrangement& arrangement, const Stratum& stratum);

// c(TZ) ∩ [Z] = [Z] + (3h - sum e_i) + (3 + k)[pt].
ChowClass chern_class(const SurfaceModel& surface);

// c_SM of a stratum of the arrangement relative to `stage`.
ChowClass csm_stratum(const SurfaceModel& surface, const Stratum& stratum, unsigned stage = 0);

// sum over relative strata of c_SM(E_I°) / prod_{i in I} (mu_i + 1).
ChowClass stringy_class(const SurfaceModel& surface, unsigned stage);

// Proper push-forward to stage m, written in the stage-m basis.
ChowClass pushforward(const ChowClass& cls, unsigned stage);

// Strata classes of the relative arrangement, with loci "fiber:p<n>" for each
// base point. Divisor ids are exc1.. in the order the curves were created.
ModificationSystem export_modification_system(const SurfaceModel& surface, unsigned stage);

// The same geometry as a program for the blow-up engine, starting from the
// trivial system on V_m. An independent route to export_modification_system.
BlowupProgram to_blowup_program(const SurfaceModel& surface, unsigned stage);

// sum_I chi(E_I° ∩ v^-1(p)) / prod (mu_i + 1) at a base point "p<n>" of
// stage m, or at "generic".
Rational fiber_euler_profile(const SurfaceModel& surface, std::string_view base_point,
                             unsigned stage = 0);

// Class of V_m in the Grothendieck ring: [P^2] + m L.
MotivicClass stage_class(unsigned stage);

// Breadth-first enumeration of event programs up to max_events, all event
// choices at every step, thinned deterministically per level so at most
// max_surfaces programs are returned.
std::vector<std::vector<SurfaceEvent>> enumerate_surface_programs(unsigned max_events,
                                                                  std::size_t max_surfaces);

// Every event admissible on `surface`.
std::vector<SurfaceEvent> admissible_events(const SurfaceModel& surface);

}  // namespace motcsm
