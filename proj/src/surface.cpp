#include "motcsm/surface.hpp"

#include <algorithm>

#include "motcsm/errors.hpp"

namespace motcsm {

std::string to_string(const SurfaceEvent& event) {
  switch (event.kind) {
    case EventKind::Generic:
      return "generic";
    case EventKind::OnCurve:
      return "on_curve(" + std::to_string(event.curve) + ")";
    case EventKind::Intersection:
      return "intersection(" + std::to_string(event.curve) + "," + std::to_string(event.other) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// ChowClass

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  if (other.blowups() != blowups()) throw std::invalid_argument("Chow classes of different surfaces");
  top_ += other.top_;
  for (std::size_t i = 0; i < curves_.size(); ++i) curves_[i] += other.curves_[i];
  points_ += other.points_;
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  if (other.blowups() != blowups()) throw std::invalid_argument("Chow classes of different surfaces");
  top_ -= other.top_;
  for (std::size_t i = 0; i < curves_.size(); ++i) curves_[i] -= other.curves_[i];
  points_ -= other.points_;
  return *this;
}

ChowClass& ChowClass::operator*=(const Rational& scale) {
  top_ *= scale;
  for (auto& c : curves_) c *= scale;
  points_ *= scale;
  return *this;
}

std::string ChowClass::to_string() const {
  std::string out;
  auto term = [&](const Rational& c, const std::string& basis) {
    if (c == 0) return;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    if (a != 1 || basis.empty()) out += motcsm::to_string(a);
    if (a != 1 && !basis.empty()) out += "*";
    out += basis;
  };
  term(top_, "[Z]");
  term(curves_[0], "h");
  for (std::size_t i = 1; i < curves_.size(); ++i) term(curves_[i], "e" + std::to_string(i));
  term(points_, "[pt]");
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// SurfaceModel

SurfaceModel SurfaceModel::from_events(std::span<const SurfaceEvent> events) {
  SurfaceModel s;
  for (const auto& e : events) s = s.apply(e);
  return s;
}

const ExceptionalCurve& SurfaceModel::curve(unsigned id) const {
  if (id < 1 || id > curves_.size())
    throw InputError("no exceptional curve " + std::to_string(id) + " (surface has " +
                     std::to_string(curves_.size()) + ")");
  return curves_[id - 1];
}

bool SurfaceModel::meets(unsigned a, unsigned b) const {
  if (a > b) std::swap(a, b);
  return incidences_.count({a, b}) != 0;
}

SurfaceModel SurfaceModel::apply(const SurfaceEvent& event) const {
  SurfaceModel out = *this;
  const unsigned fresh = blowups() + 1;
  std::vector<unsigned> through;
  ExceptionalCurve created;
  switch (event.kind) {
    case EventKind::Generic:
      created.anchor = ++out.anchors_;
      break;
    case EventKind::OnCurve:
      created.anchor = curve(event.curve).anchor;
      through = {event.curve};
      break;
    case EventKind::Intersection: {
      curve(event.curve);
      curve(event.other);
      if (!meets(event.curve, event.other))
        throw InputError("curves " + std::to_string(event.curve) + " and " +
                         std::to_string(event.other) + " do not meet");
      const auto [a, b] = std::minmax(event.curve, event.other);
      out.incidences_.erase({a, b});
      created.anchor = curve(a).anchor;
      through = {a, b};
      break;
    }
  }
  created.mu = 1;
  for (unsigned j : through) created.mu += curve(j).mu;

  for (auto& c : out.curves_) {
    ChowClass grown(fresh);
    grown.h() = c.proper_transform.h();
    for (unsigned i = 1; i < fresh; ++i) grown.e(i) = c.proper_transform.e(i);
    c.proper_transform = std::move(grown);
  }
  created.proper_transform = ChowClass(fresh);
  created.proper_transform.e(fresh) = 1;
  for (unsigned j : through) {
    out.curves_[j - 1].proper_transform.e(fresh) -= 1;
    out.incidences_.insert({j, fresh});
  }
  out.curves_.push_back(std::move(created));
  out.events_.push_back(event);
  return out;
}

SurfaceModel SurfaceModel::stage(unsigned m) const {
  if (m > blowups())
    throw InputError("stage " + std::to_string(m) + " exceeds the " + std::to_string(blowups()) +
                     " blow-ups of the surface");
  return from_events(std::span(events_).first(m));
}

// ---------------------------------------------------------------------------
// Relative arrangement

RelativeArrangement relative_arrangement(const SurfaceModel& surface, unsigned stage) {
  const unsigned k = surface.blowups();
  if (stage > k)
    throw InputError("stage " + std::to_string(stage) + " exceeds the " + std::to_string(k) +
                     " blow-ups of the surface");
  RelativeArrangement arr;
  arr.stage = stage;
  arr.blowups = k;
  auto rel_mu = [&](unsigned j) { return j > stage ? arr.mu.at(j) : 0u; };
  for (unsigned id = stage + 1; id <= k; ++id) {
    const SurfaceEvent& ev = surface.events()[id - 1];
    unsigned mu = 1;
    unsigned bp = 0;
    switch (ev.kind) {
      case EventKind::Generic:
        break;
      case EventKind::OnCurve:
        mu += rel_mu(ev.curve);
        if (ev.curve > stage) bp = arr.base_point.at(ev.curve);
        break;
      case EventKind::Intersection:
        mu += rel_mu(ev.curve) + rel_mu(ev.other);
        if (ev.curve > stage) bp = arr.base_point.at(ev.curve);
        else if (ev.other > stage) bp = arr.base_point.at(ev.other);
        break;
    }
    // A center off the relative curves lies over a new point of V_m.
    if (bp == 0) bp = ++arr.base_points;
    arr.curves.push_back(id);
    arr.mu[id] = mu;
    arr.base_point[id] = bp;
    arr.neighbours[id] = 0;
  }
  for (const auto& [a, b] : surface.incidences()) {
    if (a <= stage || b <= stage) continue;
    arr.pairs.emplace_back(a, b);
    ++arr.neighbours[a];
    ++arr.neighbours[b];
  }
  return arr;
}

std::string base_point_name(unsigned index) { return "p" + std::to_string(index); }

unsigned parse_base_point(const RelativeArrangement& arrangement, std::string_view name) {
  if (name.size() >= 2 && name[0] == 'p' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const unsigned long idx = std::stoul(std::string(name.substr(1)));
    if (idx >= 1 && idx <= arrangement.base_points) return static_cast<unsigned>(idx);
  }
  throw InputError("unknown base point '" + std::string(name) + "'");
}

std::string to_string(const Stratum& stratum) {
  switch (stratum.size()) {
    case 0:
      return "open";
    case 1:
      return "E" + std::to_string(stratum.first);
    default:
      return "E" + std::to_string(stratum.first) + "^E" + std::to_string(stratum.second);
  }
}

std::vector<Stratum> strata_of(const RelativeArrangement& arrangement) {
  std::vector<Stratum> out{Stratum::open()};
  for (unsigned j : arrangement.curves) out.push_back(Stratum::curve(j));
  for (const auto& [a, b] : arrangement.pairs) out.push_back(Stratum::pair(a, b));
  return out;
}

void check_stratum(const RelativeArrangement& arr, const Stratum& s) {
  if (s.first == 0 && s.second != 0) throw InputError("malformed stratum");
  if (s.size() >= 1 && !arr.contains(s.first))
    throw InputError("curve " + std::to_string(s.first) + " is not exceptional over stage " +
                     std::to_string(arr.stage));
  if (s.size() == 2) {
    if (!arr.contains(s.second))
      throw InputError("curve " + std::to_string(s.second) + " is not exceptional over stage " +
                       std::to_string(arr.stage));
    if (std::find(arr.pairs.begin(), arr.pairs.end(), std::pair{s.first, s.second}) ==
        arr.pairs.end())
      throw InputError("curves " + std::to_string(s.first) + " and " + std::to_string(s.second) +
                       " do not meet");
  }
}

// ---------------------------------------------------------------------------
// Characteristic classes

ChowClass chern_class(const SurfaceModel& surface) {
  const unsigned k = surface.blowups();
  ChowClass c(k);
  c.top() = 1;
  c.h() = 3;
  for (unsigned i = 1; i <= k; ++i) c.e(i) = -1;
  c.points() = surface.euler_characteristic();
  return c;
}

namespace {

ChowClass point_class(unsigned k) {
  ChowClass p(k);
  p.points() = 1;
  return p;
}

ChowClass csm_in(const SurfaceModel& surface, const RelativeArrangement& arr, const Stratum& s) {
  const unsigned k = surface.blowups();
  switch (s.size()) {
    case 2:
      return point_class(k);
    case 1: {
      ChowClass c = surface.curve(s.first).proper_transform;
      c.points() = 2 - static_cast<long>(arr.neighbours.at(s.first));
      return c;
    }
    default: {
      // 1_open = 1_Z - sum 1_{closure E_j} + sum 1_{pairs}.
      ChowClass c = chern_class(surface);
      for (unsigned j : arr.curves) {
        c -= surface.curve(j).proper_transform;
        c.points() -= 2;
      }
      c.points() += static_cast<long>(arr.pairs.size());
      return c;
    }
  }
}

Rational stratum_weight(const RelativeArrangement& arr, const Stratum& s) {
  Rational w = 1;
  if (s.first) w *= Rational(arr.mu.at(s.first) + 1);
  if (s.second) w *= Rational(arr.mu.at(s.second) + 1);
  return w;
}

}  // namespace

ChowClass csm_stratum(const SurfaceModel& surface, const Stratum& stratum, unsigned stage) {
  const auto arr = relative_arrangement(surface, stage);
  check_stratum(arr, stratum);
  return csm_in(surface, arr, stratum);
}

ChowClass stringy_class(const SurfaceModel& surface, unsigned stage) {
  const auto arr = relative_arrangement(surface, stage);
  ChowClass total(surface.blowups());
  for (const auto& s : strata_of(arr)) {
    ChowClass c = csm_in(surface, arr, s);
    c *= 1 / stratum_weight(arr, s);
    total += c;
  }
  return total;
}

ChowClass pushforward(const ChowClass& cls, unsigned stage) {
  if (stage > cls.blowups())
    throw InputError("cannot push forward to stage " + std::to_string(stage) + " from a surface with " +
                     std::to_string(cls.blowups()) + " blow-ups");
  ChowClass out(stage);
  out.top() = cls.top();
  out.h() = cls.h();
  for (unsigned i = 1; i <= stage; ++i) out.e(i) = cls.e(i);
  out.points() = cls.points();
  return out;
}

MotivicClass stage_class(unsigned stage) {
  return MotivicClass(LPolynomial(std::vector<Integer>{1, Integer(stage + 1), 1}));
}

ModificationSystem export_modification_system(const SurfaceModel& surface, unsigned stage) {
  const auto arr = relative_arrangement(surface, stage);
  const unsigned k = surface.blowups();
  ModificationSystem system;
  system.label = "surface k=" + std::to_string(k) + " over stage " + std::to_string(stage);
  system.ambient_dim = 2;
  system.blowups = k - stage;
  auto bit = [&](unsigned curve) { return singleton(curve - stage - 1); };
  for (unsigned j : arr.curves)
    system.divisors.push_back({"exc" + std::to_string(j - stage), arr.mu.at(j)});

  const MotivicClass total = stage_class(k);
  const MotivicClass line = projective_class(1);
  MotivicClass open = total + static_cast<long>(arr.pairs.size());
  for (unsigned j : arr.curves) {
    open -= line;
    system.strata[bit(j)] = line - static_cast<long>(arr.neighbours.at(j));
  }
  for (const auto& [a, b] : arr.pairs) system.strata[bit(a) | bit(b)] = 1;
  system.strata[0] = open;
  std::erase_if(system.strata, [](const auto& kv) { return kv.second.is_zero(); });
  system.declared_total = total;

  for (unsigned p = 1; p <= arr.base_points; ++p) {
    MarkedLocus fiber{"fiber:" + base_point_name(p), {}};
    for (unsigned j : arr.curves)
      if (arr.base_point.at(j) == p) fiber.strata[bit(j)] = system.stratum(bit(j));
    for (const auto& [a, b] : arr.pairs)
      if (arr.base_point.at(a) == p) fiber.strata[bit(a) | bit(b)] = 1;
    system.loci.push_back(std::move(fiber));
  }
  return system;
}

BlowupProgram to_blowup_program(const SurfaceModel& surface, unsigned stage) {
  const auto arr = relative_arrangement(surface, stage);
  BlowupProgram program;
  program.initial = ModificationSystem::trivial(2, stage_class(stage), "stage " + std::to_string(stage));
  for (unsigned p = 1; p <= arr.base_points; ++p)
    program.initial.loci.push_back({"fiber:" + base_point_name(p), {{0, MotivicClass(1)}}});

  auto bit = [&](unsigned curve) { return singleton(curve - stage - 1); };
  for (unsigned id = stage + 1; id <= surface.blowups(); ++id) {
    const SurfaceEvent& ev = surface.events()[id - 1];
    BlowupCenter center;
    center.codim = 2;
    if (ev.kind == EventKind::OnCurve && ev.curve > stage) center.containing = bit(ev.curve);
    if (ev.kind == EventKind::Intersection) {
      if (ev.curve > stage) center.containing |= bit(ev.curve);
      if (ev.other > stage) center.containing |= bit(ev.other);
    }
    center.center_strata[center.containing] = 1;
    for (unsigned p = 1; p <= arr.base_points; ++p) {
      const bool here = arr.base_point.at(id) == p;
      center.locus_data["fiber:" + base_point_name(p)] = {
          here ? LocusRule::ContainsCenter : LocusRule::DisjointFromCenter, {}};
    }
    program.steps.push_back(std::move(center));
  }
  return program;
}

Rational fiber_euler_profile(const SurfaceModel& surface, std::string_view base_point,
                             unsigned stage) {
  const auto arr = relative_arrangement(surface, stage);
  // Away from the base points the fiber is a single point of the open stratum.
  if (base_point == "generic") return 1;
  const unsigned p = parse_base_point(arr, base_point);
  Rational sum = 0;
  for (unsigned j : arr.curves)
    if (arr.base_point.at(j) == p)
      sum += Rational(2 - static_cast<long>(arr.neighbours.at(j))) / Rational(arr.mu.at(j) + 1);
  for (const auto& [a, b] : arr.pairs)
    if (arr.base_point.at(a) == p)
      sum += 1 / (Rational(arr.mu.at(a) + 1) * Rational(arr.mu.at(b) + 1));
  return sum;
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<SurfaceEvent> admissible_events(const SurfaceModel& surface) {
  std::vector<SurfaceEvent> out{SurfaceEvent::generic()};
  for (unsigned j = 1; j <= surface.blowups(); ++j) out.push_back(SurfaceEvent::on_curve(j));
  for (const auto& [a, b] : surface.incidences()) out.push_back(SurfaceEvent::intersection(a, b));
  return out;
}

std::vector<std::vector<SurfaceEvent>> enumerate_surface_programs(unsigned max_events,
                                                                  std::size_t max_surfaces) {
  std::vector<std::vector<SurfaceEvent>> result;
  if (max_surfaces == 0) return result;
  std::vector<SurfaceModel> frontier{SurfaceModel{}};
  result.push_back({});
  for (unsigned level = 1; level <= max_events && result.size() < max_surfaces; ++level) {
    std::vector<SurfaceModel> children;
    for (const auto& s : frontier)
      for (const auto& ev : admissible_events(s)) children.push_back(s.apply(ev));
    const std::size_t remaining = max_surfaces - result.size();
    const std::size_t quota = std::max<std::size_t>(1, remaining / (max_events - level + 1));
    std::vector<SurfaceModel> kept;
    if (children.size() <= quota) {
      kept = std::move(children);
    } else {
      for (std::size_t i = 0; i < quota; ++i) kept.push_back(children[i * children.size() / quota]);
    }
    for (const auto& s : kept) result.push_back(s.events());
    frontier = std::move(kept);
  }
  return result;
}

}  // namespace motcsm
