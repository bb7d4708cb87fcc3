#include "motcsm/constructible.hpp"

#include <algorithm>

#include "motcsm/errors.hpp"

namespace motcsm {

ConstructibleFunction& ConstructibleFunction::operator+=(const ConstructibleFunction& other) {
  if (other.stage != stage) throw InputError("constructible functions over different stages");
  for (const auto& [s, w] : other.weights) weights[s] += w;
  std::erase_if(weights, [](const auto& kv) { return kv.second == 0; });
  return *this;
}

ConstructibleFunction& ConstructibleFunction::operator*=(const Rational& scale) {
  for (auto& [s, w] : weights) w *= scale;
  std::erase_if(weights, [](const auto& kv) { return kv.second == 0; });
  return *this;
}

Rational BaseFunction::value_at(std::string_view base_point) const {
  auto it = corrections.find(std::string(base_point));
  return it == corrections.end() ? generic_value : generic_value + it->second;
}

bool BaseFunction::is_constant(const Rational& value) const {
  return generic_value == value &&
         std::all_of(corrections.begin(), corrections.end(), [](const auto& kv) { return kv.second == 0; });
}

namespace {

// The base point a non-open stratum lies over.
unsigned base_of(const RelativeArrangement& arr, const Stratum& s) { return arr.base_point.at(s.first); }

}  // namespace

BaseFunction pushforward(const SurfaceModel& surface, const ConstructibleFunction& f) {
  const auto arr = relative_arrangement(surface, f.stage);
  BaseFunction out;
  std::vector<Rational> at_point(arr.base_points + 1, Rational(0));
  for (const auto& [s, w] : f.weights) {
    check_stratum(arr, s);
    switch (s.size()) {
      case 0:
        // Every fiber over a base point lies in the exceptional curves.
        out.generic_value += w;
        break;
      case 1:
        at_point[base_of(arr, s)] += w * (2 - static_cast<long>(arr.neighbours.at(s.first)));
        break;
      default:
        at_point[base_of(arr, s)] += w;
        break;
    }
  }
  for (unsigned p = 1; p <= arr.base_points; ++p)
    out.corrections[base_point_name(p)] = at_point[p] - out.generic_value;
  return out;
}

ConstructibleFunction indicator(const Stratum& stratum, unsigned stage) {
  ConstructibleFunction f;
  f.stage = stage;
  f.weights[stratum] = 1;
  return f;
}

ConstructibleFunction closure_indicator(const SurfaceModel& surface, unsigned curve, unsigned stage) {
  const auto arr = relative_arrangement(surface, stage);
  check_stratum(arr, Stratum::curve(curve));
  ConstructibleFunction f = indicator(Stratum::curve(curve), stage);
  for (const auto& [a, b] : arr.pairs)
    if (a == curve || b == curve) f.weights[Stratum::pair(a, b)] = 1;
  return f;
}

ConstructibleFunction weighted_unit(const SurfaceModel& surface, unsigned stage) {
  const auto arr = relative_arrangement(surface, stage);
  ConstructibleFunction f;
  f.stage = stage;
  for (const auto& s : strata_of(arr)) {
    Rational w = 1;
    if (s.first) w /= Rational(arr.mu.at(s.first) + 1);
    if (s.second) w /= Rational(arr.mu.at(s.second) + 1);
    f.weights[s] = w;
  }
  return f;
}

ConstructibleFunction restrict_to_fiber(const SurfaceModel& surface, const ConstructibleFunction& f,
                                        std::string_view base_point) {
  const auto arr = relative_arrangement(surface, f.stage);
  const unsigned p = parse_base_point(arr, base_point);
  ConstructibleFunction out;
  out.stage = f.stage;
  for (const auto& [s, w] : f.weights) {
    check_stratum(arr, s);
    if (s.size() > 0 && base_of(arr, s) == p) out.weights[s] = w;
  }
  return out;
}

bool verify_unit_pushforward(const SurfaceModel& surface, unsigned stage) {
  return pushforward(surface, weighted_unit(surface, stage)).is_constant(1);
}

}  // namespace motcsm
