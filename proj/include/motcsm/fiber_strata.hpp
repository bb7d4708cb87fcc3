#pragma once

#include <optional>
#include <span>
#include <vector>

#include "motcsm/motivic.hpp"

namespace motcsm {

// k linearly independent hyperplanes H_1..H_k in the fiber P^(d-1).
struct FiberFrame {
  unsigned dim;          // d >= 1
  unsigned hyperplanes;  // 0 <= k <= d

  FiberFrame(unsigned d, unsigned k);
};

// Class of H_I°, the points on exactly the hyperplanes indexed by I, as a
// function of |I| = i. Throws InputError for i > k.
MotivicClass hyperplane_stratum_class(const FiberFrame& frame, unsigned i);

struct IdentitySides {
  MotivicClass lhs;
  MotivicClass rhs;
  bool holds() const { return lhs == rhs; }
};

// sum_I [H_I°] prod_{i not in I} [P^mu_i]  vs  [P^mu0], mu0 = sum mu + d - 1.
IdentitySides simplex_sides(const FiberFrame& frame, std::span<const unsigned> mu,
                            int mu0_offset = 0);

// sum_I [H_I°] / ([P^mu0] prod_{i in I} [P^mu_i])  vs  1 / prod_j [P^mu_j],
// with mu0 = sum mu + d - 1 + mu0_offset. A nonzero offset exists only so the
// sweep harness can demonstrate that the identity needs the exact mu0.
IdentitySides simplexcor_sides(const FiberFrame& frame, std::span<const unsigned> mu,
                               int mu0_offset = 0);

bool verify_simplex(const FiberFrame& frame, std::span<const unsigned> mu);
bool verify_simplexcor(const FiberFrame& frame, std::span<const unsigned> mu);

struct EulerSides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

// The L = 1 shadow of simplexcor, summed directly over rationals.
EulerSides simplexcor_euler_sides(const FiberFrame& frame, std::span<const unsigned> mu,
                                  int mu0_offset = 0);

enum class FiberIdentity { Simplex, SimplexCor };

struct FiberCase {
  unsigned dim;
  std::vector<unsigned> mu;
};

struct FiberSweep {
  std::size_t cases = 0;
  std::optional<FiberCase> counterexample;
};

// All frames 1 <= d <= d_max, 0 <= k <= d, mu in {0..mu_max}^k. Stops at the
// first failure. For SimplexCor both the ring identity and its Euler shadow
// are checked.
FiberSweep sweep_fiber_identity(FiberIdentity which, unsigned d_max, unsigned mu_max,
                                int mu0_offset = 0);

}  // namespace motcsm
