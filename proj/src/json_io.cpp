#include "motcsm/json_io.hpp"

#include <set>

#include "motcsm/errors.hpp"

namespace motcsm {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(what) + " is missing required field '" + key + "'");
  return j.at(key);
}

unsigned nonnegative(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(std::string(what) + " must be a nonnegative integer, got " + j.dump());
  return j.get<unsigned>();
}

std::vector<std::string> id_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of ids");
  std::vector<std::string> ids;
  for (const auto& e : j) {
    if (e.is_string()) ids.push_back(e.get<std::string>());
    else if (e.is_number_integer()) ids.push_back(std::to_string(e.get<long long>()));
    else throw InputError(std::string(what) + " entries must be strings");
  }
  return ids;
}

StrataMap strata_from_json(const Json& j, const std::vector<Divisor>& divisors, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  ModificationSystem lookup;
  lookup.divisors = divisors;
  StrataMap out;
  for (const auto& entry : j) {
    const Subset s = lookup.subset_of(id_list(require(entry, "subset", what), what));
    if (out.count(s)) throw InputError(std::string(what) + " lists a subset twice");
    out[s] = class_from_json(require(entry, "class", what));
  }
  return out;
}

Json strata_to_json(const StrataMap& strata, const ModificationSystem& system) {
  Json arr = Json::array();
  for (const auto& [s, c] : strata) {
    if (c.is_zero()) continue;
    arr.push_back({{"subset", system.ids_of(s)}, {"class", to_json(c)}});
  }
  return arr;
}

}  // namespace

Json to_json(const MotivicClass& c) {
  return {{"numerator", c.numerator().to_string()}, {"denominator", c.denominator()}};
}

MotivicClass class_from_json(const Json& j) {
  return guarded("class", [&] {
    auto numerator = [](const Json& n) -> LPolynomial {
      if (n.is_string()) return LPolynomial::parse(n.get<std::string>());
      if (n.is_number_integer()) return LPolynomial(n.get<long>());
      if (n.is_array()) {
        std::vector<Integer> c;
        for (const auto& e : n) {
          if (e.is_number_integer()) c.emplace_back(e.get<long>());
          else if (e.is_string()) c.emplace_back(e.get<std::string>());
          else throw InputError("coefficient must be an integer");
        }
        return LPolynomial(std::move(c));
      }
      throw InputError("numerator must be a string, integer or coefficient array");
    };
    if (!j.is_object()) return MotivicClass(numerator(j));
    std::vector<unsigned> den;
    if (j.contains("denominator"))
      for (const auto& e : j.at("denominator")) den.push_back(nonnegative(e, "denominator entry"));
    return MotivicClass(numerator(require(j, "numerator", "class")), std::move(den));
  });
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("rational must be an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const ChowClass& c) {
  Json e = Json::array();
  for (unsigned i = 1; i <= c.blowups(); ++i) e.push_back(to_json(c.e(i)));
  return {{"top", to_json(c.top())}, {"h", to_json(c.h())}, {"e", e}, {"pt", to_json(c.points())},
          {"text", c.to_string()}};
}

Json to_json(const ModificationSystem& system) {
  Json divisors = Json::array();
  for (const auto& d : system.divisors) divisors.push_back({{"id", d.id}, {"mu", d.mu}});
  Json loci = Json::array();
  for (const auto& l : system.loci)
    loci.push_back({{"name", l.name}, {"strata", strata_to_json(l.strata, system)}});
  Json out = {{"label", system.label},
              {"ambient_dim", system.ambient_dim},
              {"divisors", divisors},
              {"strata", strata_to_json(system.strata, system)},
              {"loci", loci}};
  if (system.declared_total) out["total"] = to_json(*system.declared_total);
  return out;
}

ModificationSystem system_from_json(const Json& j) {
  return guarded("system", [&] {
    ModificationSystem s;
    if (j.contains("label")) s.label = j.at("label").get<std::string>();
    s.ambient_dim = nonnegative(require(j, "ambient_dim", "system"), "ambient_dim");
    if (j.contains("divisors")) {
      for (const auto& d : j.at("divisors")) {
        s.divisors.push_back({require(d, "id", "divisor").get<std::string>(),
                              nonnegative(require(d, "mu", "divisor"), "mu")});
      }
    }
    if (s.divisors.size() > kMaxDivisors) throw InputError("too many divisors");
    std::set<std::string> ids;
    for (const auto& d : s.divisors)
      if (!ids.insert(d.id).second) throw InputError("duplicate divisor id '" + d.id + "'");
    s.strata = strata_from_json(require(j, "strata", "system"), s.divisors, "strata");
    if (j.contains("total")) s.declared_total = class_from_json(j.at("total"));
    if (j.contains("blowups")) s.blowups = nonnegative(j.at("blowups"), "blowups");
    if (j.contains("loci")) {
      for (const auto& l : j.at("loci"))
        s.loci.push_back({require(l, "name", "locus").get<std::string>(),
                          strata_from_json(require(l, "strata", "locus"), s.divisors, "locus strata")});
    }
    return s;
  });
}

BlowupProgram program_from_json(const Json& j) {
  return guarded("program", [&] {
    BlowupProgram program;
    program.initial = system_from_json(require(j, "initial", "program"));
    // Fresh ids are deterministic, so later steps can name earlier exceptional divisors.
    std::vector<Divisor> divisors = program.initial.divisors;
    unsigned blowups = program.initial.blowups;
    const Json& steps = j.contains("steps") ? j.at("steps") : Json::array();
    std::size_t index = 0;
    for (const auto& step : steps) {
      ++index;
      try {
        BlowupCenter c;
        ModificationSystem lookup;
        lookup.divisors = divisors;
        c.codim = nonnegative(require(step, "codim", "step"), "codim");
        if (step.contains("containing"))
          c.containing = lookup.subset_of(id_list(step.at("containing"), "containing"));
        c.center_strata = strata_from_json(require(step, "center_strata", "step"), divisors,
                                           "center_strata");
        if (step.contains("locus_defaults")) {
          for (const auto& [name, rule] : step.at("locus_defaults").items()) {
            const auto r = rule.get<std::string>();
            if (r == "contains_center") c.locus_data[name] = {LocusRule::ContainsCenter, {}};
            else if (r == "disjoint_from_center") c.locus_data[name] = {LocusRule::DisjointFromCenter, {}};
            else throw InputError("unknown locus rule '" + r + "'");
          }
        }
        if (step.contains("locus_strata")) {
          for (const auto& [name, strata] : step.at("locus_strata").items()) {
            if (c.locus_data.count(name))
              throw InputError("locus '" + name + "' has both a default and explicit strata");
            c.locus_data[name] = {LocusRule::Explicit, strata_from_json(strata, divisors, "locus_strata")};
          }
        }
        ++blowups;
        divisors.push_back({fresh_divisor_id(divisors, blowups), 0});
        program.steps.push_back(std::move(c));
      } catch (const InputError& e) {
        throw BlowupStepError(index, e.what());
      }
    }
    return program;
  });
}

Json to_json(const std::vector<SurfaceEvent>& events) {
  Json arr = Json::array();
  for (const auto& e : events) {
    switch (e.kind) {
      case EventKind::Generic:
        arr.push_back({{"type", "generic"}});
        break;
      case EventKind::OnCurve:
        arr.push_back({{"type", "on_curve"}, {"curve", e.curve}});
        break;
      case EventKind::Intersection:
        arr.push_back({{"type", "intersection"}, {"pair", {e.curve, e.other}}});
        break;
    }
  }
  return {{"events", arr}};
}

std::vector<SurfaceEvent> surface_events_from_json(const Json& j) {
  return guarded("surface program", [&] {
    const Json& events = j.is_array() ? j : require(j, "events", "surface program");
    std::vector<SurfaceEvent> out;
    for (const auto& e : events) {
      const auto type = require(e, "type", "event").get<std::string>();
      if (type == "generic") {
        out.push_back(SurfaceEvent::generic());
      } else if (type == "on_curve") {
        out.push_back(SurfaceEvent::on_curve(nonnegative(require(e, "curve", "on_curve event"), "curve")));
      } else if (type == "intersection") {
        const Json& pair = require(e, "pair", "intersection event");
        if (!pair.is_array() || pair.size() != 2) throw InputError("pair must list two curves");
        out.push_back(SurfaceEvent::intersection(nonnegative(pair[0], "curve"), nonnegative(pair[1], "curve")));
      } else {
        throw InputError("unknown event type '" + type + "'");
      }
    }
    return out;
  });
}

Json to_json(const ConstructibleFunction& f) {
  Json weights = Json::array();
  for (const auto& [s, w] : f.weights) {
    Json stratum = Json::array();
    if (s.first) stratum.push_back(s.first);
    if (s.second) stratum.push_back(s.second);
    weights.push_back({{"stratum", stratum}, {"weight", to_json(w)}});
  }
  return {{"stage", f.stage}, {"weights", weights}};
}

ConstructibleFunction function_from_json(const Json& j) {
  return guarded("constructible function", [&] {
    ConstructibleFunction f;
    if (j.contains("stage")) f.stage = nonnegative(j.at("stage"), "stage");
    for (const auto& entry : require(j, "weights", "constructible function")) {
      const Json& s = require(entry, "stratum", "weight entry");
      if (!s.is_array() || s.size() > 2) throw InputError("stratum must list at most two curves");
      Stratum key;
      if (s.size() == 1) key = Stratum::curve(nonnegative(s[0], "curve"));
      if (s.size() == 2) key = Stratum::pair(nonnegative(s[0], "curve"), nonnegative(s[1], "curve"));
      if (s.size() >= 1 && key.first == 0) throw InputError("curve ids start at 1");
      f.weights[key] += rational_from_json(require(entry, "weight", "weight entry"));
    }
    return f;
  });
}

Json to_json(const BaseFunction& f) {
  Json corrections = Json::object();
  Json values = Json::object();
  for (const auto& [p, c] : f.corrections) {
    corrections[p] = to_json(c);
    values[p] = to_json(f.generic_value + c);
  }
  return {{"generic", to_json(f.generic_value)}, {"corrections", corrections}, {"values", values}};
}

}  // namespace motcsm
