// Seeded generators for the randomized sweeps and property tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "motcsm/blowup.hpp"
#include "motcsm/modification_system.hpp"
#include "motcsm/motivic.hpp"
#include "motcsm/surface.hpp"

namespace motcsm {

using Rng = std::mt19937_64;

// Coefficients uniform in [lo, hi], degree at most max_degree.
LPolynomial random_polynomial(Rng& rng, unsigned max_degree, long lo, long hi);

// Random signed numerator over up to max_factors projective factors [P^mu],
// 1 <= mu <= max_mu.
MotivicClass random_class(Rng& rng, unsigned max_degree, unsigned max_factors, unsigned max_mu);

struct SystemShape {
  unsigned max_divisors = 8;
  unsigned min_dim = 2;
  unsigned max_dim = 4;
  unsigned max_mu = 4;
  unsigned loci = 2;
};

// A system with effective pure-dimensional strata, a declared total and
// `shape.loci` random marked loci.
ModificationSystem random_system(Rng& rng, const SystemShape& shape);

// A center satisfying validate_center: |K0| <= min(|J|, d), center strata of
// degree bounded by the dimension they can have, random data per locus.
BlowupCenter random_center(Rng& rng, const ModificationSystem& system);

std::vector<SurfaceEvent> random_surface_program(Rng& rng, unsigned events);

// Events over a single new plane point: a generic blow-up followed by
// blow-ups of points on the curves it creates. Curve ids are local (1-based).
std::vector<SurfaceEvent> random_branch(Rng& rng, unsigned events);

// Interleaves branches with local curve ids. order[i] names the branch whose
// next event comes i-th; each branch must appear exactly branch.size() times.
std::vector<SurfaceEvent> interleave(const std::vector<std::vector<SurfaceEvent>>& branches,
                                     const std::vector<unsigned>& order);

}  // namespace motcsm
