#include "motcsm/modification_system.hpp"

#include <set>
#include <stdexcept>

#include "motcsm/errors.hpp"

namespace motcsm {

namespace {

std::string describe(const ModificationSystem& system, Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 64; ++i) {
    if (!(s >> i & 1)) continue;
    if (!first) out += ",";
    first = false;
    out += i < system.divisors.size() ? system.divisors[i].id : "#" + std::to_string(i);
  }
  return out + "}";
}

std::vector<unsigned> weights_of(const ModificationSystem& system, Subset s) {
  std::vector<unsigned> mu;
  for (std::size_t i = 0; i < system.divisors.size(); ++i)
    if (s >> i & 1) mu.push_back(system.divisors[i].mu);
  return mu;
}

}  // namespace

MotivicClass MarkedLocus::stratum(Subset s) const {
  auto it = strata.find(s);
  return it == strata.end() ? MotivicClass{} : it->second;
}

ModificationSystem ModificationSystem::trivial(unsigned dim, MotivicClass ambient,
                                               std::string label) {
  ModificationSystem system;
  system.label = std::move(label);
  system.ambient_dim = dim;
  system.strata[0] = ambient;
  system.declared_total = std::move(ambient);
  return system;
}

MotivicClass ModificationSystem::stratum(Subset s) const {
  auto it = strata.find(s);
  return it == strata.end() ? MotivicClass{} : it->second;
}

MotivicClass ModificationSystem::strata_total() const {
  MotivicClass total;
  for (const auto& [s, c] : strata) total += c;
  return total;
}

std::optional<std::size_t> ModificationSystem::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (divisors[i].id == id) return i;
  return std::nullopt;
}

Subset ModificationSystem::subset_of(std::span<const std::string> ids) const {
  Subset s = 0;
  for (const auto& id : ids) {
    auto idx = index_of(id);
    if (!idx) throw InputError("unknown divisor id '" + id + "'");
    if (s & singleton(*idx)) throw InputError("divisor id '" + id + "' repeated in subset");
    s |= singleton(*idx);
  }
  return s;
}

std::vector<std::string> ModificationSystem::ids_of(Subset s) const {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (s >> i & 1) ids.push_back(divisors[i].id);
  return ids;
}

const MarkedLocus* ModificationSystem::find_locus(std::string_view name) const {
  for (const auto& locus : loci)
    if (locus.name == name) return &locus;
  return nullptr;
}

std::vector<Violation> validate(const ModificationSystem& system) {
  std::vector<Violation> out;
  auto report = [&](Subset s, std::string message) {
    out.push_back({s, system.ids_of(s), describe(system, s) + ": " + std::move(message)});
  };

  if (system.ambient_dim == 0) out.push_back({0, {}, "ambient dimension must be positive"});
  if (system.divisors.size() > kMaxDivisors) {
    out.push_back({0, {}, "more than " + std::to_string(kMaxDivisors) + " divisors"});
    return out;
  }
  std::set<std::string> seen;
  for (const auto& d : system.divisors)
    if (!seen.insert(d.id).second) out.push_back({0, {}, "duplicate divisor id '" + d.id + "'"});

  const Subset all = system.all_divisors();
  for (const auto& [s, c] : system.strata) {
    if (c.is_zero()) continue;
    if (!is_subset_of(s, all)) report(s, "stratum refers to an unknown divisor");
    else if (subset_size(s) > system.ambient_dim)
      report(s, "nonzero stratum of codimension " + std::to_string(subset_size(s)) +
                    " exceeds ambient dimension " + std::to_string(system.ambient_dim));
  }
  if (system.declared_total && !(system.strata_total() == *system.declared_total))
    out.push_back({0, {}, "strata sum " + system.strata_total().to_string() +
                              " differs from declared total " + system.declared_total->to_string()});

  std::set<std::string> locus_names;
  for (const auto& locus : system.loci) {
    if (!locus_names.insert(locus.name).second)
      out.push_back({0, {}, "duplicate locus name '" + locus.name + "'"});
    for (const auto& [s, c] : locus.strata) {
      if (c.is_zero()) continue;
      if (!is_subset_of(s, all)) report(s, "locus '" + locus.name + "' refers to an unknown divisor");
      else if (system.stratum(s).is_zero())
        report(s, "locus '" + locus.name + "' is nonzero on an empty stratum");
    }
  }
  return out;
}

MarkedLocus full_locus(const ModificationSystem& system) {
  return MarkedLocus{"full", system.strata};
}

MotivicClass chi(const ModificationSystem& system, const MarkedLocus& locus) {
  MotivicClass sum;
  for (const auto& [s, c] : locus.strata) {
    if (c.is_zero()) continue;
    std::vector<unsigned> den = c.denominator();
    const auto mu = weights_of(system, s);
    den.insert(den.end(), mu.begin(), mu.end());
    sum += MotivicClass(c.numerator(), std::move(den));
  }
  return sum.reduced();
}

Rational euler_chi(const ModificationSystem& system, const MarkedLocus& locus) {
  Rational sum = 0;
  for (const auto& [s, c] : locus.strata) {
    Rational w = 1;
    for (unsigned mu : weights_of(system, s)) w *= Rational(mu + 1);
    sum += euler_specialize(c) / w;
  }
  if (sum != euler_specialize(chi(system, locus)))
    throw std::logic_error("euler_chi disagrees with the specialization of chi for locus '" +
                           locus.name + "'");
  return sum;
}

MarkedLocus combine(const Integer& a, const MarkedLocus& t1, const Integer& b,
                    const MarkedLocus& t2, std::string name) {
  MarkedLocus out{std::move(name), {}};
  const MotivicClass ca(LPolynomial(std::vector<Integer>{a}));
  const MotivicClass cb(LPolynomial(std::vector<Integer>{b}));
  for (const auto& [s, c] : t1.strata) out.strata[s] += ca * c;
  for (const auto& [s, c] : t2.strata) out.strata[s] += cb * c;
  std::erase_if(out.strata, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace motcsm
