/*
 * modification_system.hpp
 * ------------------------
 * Combinatorial model of a proper birational morphism Z -> V whose
 * exceptional divisor has normal crossings with components E_j, j in J.
 *
 * The model is extensional: for every subset I of J it stores the class of the
 * stratum E_I° (points on exactly the E_i, i in I), plus the multiplicity mu_j
 * of each component in the Jacobian divisor. Subsets are bitmasks over the
 * position of a divisor in `divisors`.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "motcsm/motivic.hpp"

namespace motcsm {

using Subset = std::uint64_t;
inline constexpr std::size_t kMaxDivisors = 62;

inline unsigned subset_size(Subset s) { return static_cast<unsigned>(std::popcount(s)); }
inline bool is_subset_of(Subset small, Subset big) { return (small & ~big) == 0; }
inline Subset singleton(std::size_t index) { return Subset{1} << index; }

// Absent keys are zero classes.
using StrataMap = std::map<Subset, MotivicClass>;

struct Divisor {
  std::string id;
  unsigned mu = 0;
};

// Classes [E_I° ∩ v^-1(U)] for a locus U of the base.
struct MarkedLocus {
  std::string name;
  StrataMap strata;

  MotivicClass stratum(Subset s) const;
};

struct ModificationSystem {
  std::string label;
  unsigned ambient_dim = 0;
  std::vector<Divisor> divisors;
  StrataMap strata;
  // Class of Z when given independently of the strata.
  std::optional<MotivicClass> declared_total;
  std::vector<MarkedLocus> loci;
  // Number of blow-ups applied so far; seeds fresh divisor ids.
  unsigned blowups = 0;

  // The trivial system on an ambient variety with class `ambient`.
  static ModificationSystem trivial(unsigned dim, MotivicClass ambient, std::string label = {});

  MotivicClass stratum(Subset s) const;
  MotivicClass strata_total() const;
  Subset all_divisors() const { return divisors.size() >= 64 ? ~Subset{0} : singleton(divisors.size()) - 1; }

  std::optional<std::size_t> index_of(std::string_view id) const;
  // Throws InputError on unknown ids.
  Subset subset_of(std::span<const std::string> ids) const;
  std::vector<std::string> ids_of(Subset s) const;
  const MarkedLocus* find_locus(std::string_view name) const;
};

struct Violation {
  Subset subset = 0;
  std::vector<std::string> subset_ids;
  std::string message;
};

std::vector<Violation> validate(const ModificationSystem& system);

MarkedLocus full_locus(const ModificationSystem& system);

// sum_I [E_I° ∩ T] / prod_{i in I} [P^mu_i].
MotivicClass chi(const ModificationSystem& system, const MarkedLocus& locus);

// sum_I chi_top(E_I° ∩ T) / prod_{i in I} (mu_i + 1), summed over rationals
// and cross-checked against euler_specialize(chi(...)); a disagreement throws
// std::logic_error.
Rational euler_chi(const ModificationSystem& system, const MarkedLocus& locus);

// Stratum-wise a*T1 + b*T2.
MarkedLocus combine(const Integer& a, const MarkedLocus& t1, const Integer& b,
                    const MarkedLocus& t2, std::string name = {});

}  // namespace motcsm
