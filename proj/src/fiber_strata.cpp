#include "motcsm/fiber_strata.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "motcsm/errors.hpp"

namespace motcsm {

FiberFrame::FiberFrame(unsigned d, unsigned k) : dim(d), hyperplanes(k) {
  if (d < 1) throw InputError("fiber frame needs d >= 1");
  if (k > d)
    throw InputError("fiber frame needs k <= d, got k=" + std::to_string(k) +
                     " d=" + std::to_string(d));
}

MotivicClass hyperplane_stratum_class(const FiberFrame& frame, unsigned i) {
  const unsigned d = frame.dim;
  const unsigned k = frame.hyperplanes;
  if (i > k) throw InputError("stratum size " + std::to_string(i) + " exceeds k=" + std::to_string(k));
  if (i < k) return torus_class(k - i - 1) * affine_class(d - k);
  // |I| = k: the linear subspace P^(d-k-1), empty when d = k.
  if (d == k) return {};
  return projective_class(d - k - 1);
}

namespace {

void check_arity(const FiberFrame& frame, std::span<const unsigned> mu) {
  if (mu.size() != frame.hyperplanes)
    throw InputError("expected " + std::to_string(frame.hyperplanes) + " multiplicities, got " +
                     std::to_string(mu.size()));
}

unsigned mu_zero(const FiberFrame& frame, std::span<const unsigned> mu, int offset) {
  const long base = std::accumulate(mu.begin(), mu.end(), 0L) + frame.dim - 1 + offset;
  return base < 0 ? 0u : static_cast<unsigned>(base);
}

}  // namespace

namespace {

// complement[I] = prod_{j in K \ I} [P^mu_j] for every subset I of K.
std::vector<LPolynomial> complement_products(std::span<const unsigned> mu) {
  const unsigned k = static_cast<unsigned>(mu.size());
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  std::vector<LPolynomial> out(full + 1);
  out[full] = 1;
  for (std::uint64_t subset = full; subset-- > 0;) {
    const unsigned j = static_cast<unsigned>(std::countr_one(subset));
    out[subset] = times_projective(out[subset | (std::uint64_t{1} << j)], mu[j]);
  }
  return out;
}

// Sum of the subset terms with |I| = i; [H_I°] depends on |I| only.
LPolynomial sum_by_size(const std::vector<LPolynomial>& per_subset, unsigned i) {
  LPolynomial total;
  for (std::uint64_t subset = 0; subset < per_subset.size(); ++subset)
    if (static_cast<unsigned>(std::popcount(subset)) == i) total += per_subset[subset];
  return total;
}

}  // namespace

IdentitySides simplex_sides(const FiberFrame& frame, std::span<const unsigned> mu,
                            int mu0_offset) {
  check_arity(frame, mu);
  const unsigned k = frame.hyperplanes;
  std::vector<LPolynomial> by_size;
  for (unsigned i = 0; i <= k; ++i) by_size.push_back(hyperplane_stratum_class(frame, i).numerator());

  const auto complement = complement_products(mu);
  LPolynomial lhs;
  for (unsigned i = 0; i <= k; ++i) lhs += by_size[i] * sum_by_size(complement, i);
  return {MotivicClass(std::move(lhs)), projective_class(mu_zero(frame, mu, mu0_offset))};
}

IdentitySides simplexcor_sides(const FiberFrame& frame, std::span<const unsigned> mu,
                               int mu0_offset) {
  check_arity(frame, mu);
  const unsigned k = frame.hyperplanes;
  const unsigned mu0 = mu_zero(frame, mu, mu0_offset);
  std::vector<LPolynomial> by_size;
  for (unsigned i = 0; i <= k; ++i) by_size.push_back(hyperplane_stratum_class(frame, i).numerator());

  // Over the common denominator [P^mu0] prod_j [P^mu_j], the term for I has
  // numerator [H_I°] prod_{j not in I} [P^mu_j].
  const auto complement = complement_products(mu);
  LPolynomial numerator;
  for (unsigned i = 0; i <= k; ++i) numerator += by_size[i] * sum_by_size(complement, i);
  std::vector<unsigned> den(mu.begin(), mu.end());
  den.push_back(mu0);
  MotivicClass lhs(std::move(numerator), std::move(den));
  MotivicClass rhs(1, std::vector<unsigned>(mu.begin(), mu.end()));
  return {std::move(lhs), std::move(rhs)};
}

bool verify_simplex(const FiberFrame& frame, std::span<const unsigned> mu) {
  return simplex_sides(frame, mu).holds();
}

bool verify_simplexcor(const FiberFrame& frame, std::span<const unsigned> mu) {
  return simplexcor_sides(frame, mu).holds();
}

EulerSides simplexcor_euler_sides(const FiberFrame& frame, std::span<const unsigned> mu,
                                  int mu0_offset) {
  check_arity(frame, mu);
  const unsigned k = frame.hyperplanes;
  const Rational w0(mu_zero(frame, mu, mu0_offset) + 1);
  std::vector<Rational> chi_by_size;
  for (unsigned i = 0; i <= k; ++i)
    chi_by_size.push_back(euler_specialize(hyperplane_stratum_class(frame, i)));

  Rational lhs = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
    Rational w = w0;
    for (unsigned j = 0; j < k; ++j)
      if (subset >> j & 1) w *= Rational(mu[j] + 1);
    lhs += chi_by_size[std::popcount(subset)] / w;
  }
  Rational rhs = 1;
  for (unsigned m : mu) rhs /= Rational(m + 1);
  return {lhs, rhs};
}

FiberSweep sweep_fiber_identity(FiberIdentity which, unsigned d_max, unsigned mu_max,
                                int mu0_offset) {
  FiberSweep sweep;
  for (unsigned d = 1; d <= d_max; ++d) {
    for (unsigned k = 0; k <= d; ++k) {
      const FiberFrame frame(d, k);
      std::vector<unsigned> mu(k, 0);
      while (true) {
        ++sweep.cases;
        bool ok;
        if (which == FiberIdentity::Simplex) {
          ok = simplex_sides(frame, mu, mu0_offset).holds();
        } else {
          ok = simplexcor_sides(frame, mu, mu0_offset).holds() &&
               simplexcor_euler_sides(frame, mu, mu0_offset).holds();
        }
        if (!ok) {
          sweep.counterexample = FiberCase{d, mu};
          return sweep;
        }
        // Odometer over {0..mu_max}^k.
        unsigned pos = 0;
        while (pos < k && mu[pos] == mu_max) mu[pos++] = 0;
        if (pos == k) break;
        ++mu[pos];
      }
    }
  }
  return sweep;
}

}  // namespace motcsm
