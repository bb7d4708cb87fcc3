#pragma once

#include <map>
#include <string>
#include <string_view>

#include "motcsm/surface.hpp"

namespace motcsm {

// Rational combination of indicator functions of the strata of the
// exceptional arrangement of Z over stage `stage`.
struct ConstructibleFunction {
  unsigned stage = 0;
  std::map<Stratum, Rational> weights;

  ConstructibleFunction& operator+=(const ConstructibleFunction& other);
  ConstructibleFunction& operator*=(const Rational& scale);
  friend ConstructibleFunction operator+(ConstructibleFunction a, const ConstructibleFunction& b) {
    return a += b;
  }
  friend ConstructibleFunction operator*(const Rational& s, ConstructibleFunction f) { return f *= s; }
};

// A function on V_m that is constant away from finitely many base points.
struct BaseFunction {
  Rational generic_value;
  std::map<std::string, Rational> corrections;  // value = generic + correction

  Rational value_at(std::string_view base_point) const;
  bool is_constant(const Rational& value) const;
  friend bool operator==(const BaseFunction&, const BaseFunction&) = default;
};

// v_*(f)(p) = sum_S f_S chi(S ∩ v^-1(p)). Throws InputError on strata not in
// the arrangement.
BaseFunction pushforward(const SurfaceModel& surface, const ConstructibleFunction& f);

ConstructibleFunction indicator(const Stratum& stratum, unsigned stage);
// 1 on the closed curve E_j: its interior plus its intersection points.
ConstructibleFunction closure_indicator(const SurfaceModel& surface, unsigned curve, unsigned stage);

// sum_I 1_{E_I°} / prod_{i in I} (mu_i + 1).
ConstructibleFunction weighted_unit(const SurfaceModel& surface, unsigned stage);

// f restricted to v^-1(p).
ConstructibleFunction restrict_to_fiber(const SurfaceModel& surface, const ConstructibleFunction& f,
                                        std::string_view base_point);

// v_*(weighted_unit) == 1 on V_m.
bool verify_unit_pushforward(const SurfaceModel& surface, unsigned stage);

}  // namespace motcsm
