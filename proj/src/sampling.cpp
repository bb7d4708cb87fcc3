#include "motcsm/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace motcsm {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

LPolynomial nonzero_effective(Rng& rng, unsigned max_degree, long hi) {
  LPolynomial p;
  while (p.is_zero()) p = random_polynomial(rng, max_degree, 0, hi);
  return p;
}

// Leading coefficient at least 1: a class of pure dimension `degree`.
LPolynomial pure_dimensional(Rng& rng, unsigned degree, long hi) {
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = uniform(rng, 0, hi);
  c.back() = uniform(rng, 1, hi);
  return LPolynomial(std::move(c));
}

}  // namespace

LPolynomial random_polynomial(Rng& rng, unsigned max_degree, long lo, long hi) {
  const auto degree = static_cast<std::size_t>(uniform(rng, 0, max_degree));
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = uniform(rng, lo, hi);
  return LPolynomial(std::move(c));
}

MotivicClass random_class(Rng& rng, unsigned max_degree, unsigned max_factors, unsigned max_mu) {
  std::vector<unsigned> den(static_cast<std::size_t>(uniform(rng, 0, max_factors)));
  for (auto& mu : den) mu = static_cast<unsigned>(uniform(rng, 1, max_mu));
  return MotivicClass(random_polynomial(rng, max_degree, -5, 5), std::move(den));
}

ModificationSystem random_system(Rng& rng, const SystemShape& shape) {
  ModificationSystem s;
  s.ambient_dim = static_cast<unsigned>(uniform(rng, shape.min_dim, shape.max_dim));
  const auto n_div = static_cast<std::size_t>(uniform(rng, 0, shape.max_divisors));
  for (std::size_t j = 0; j < n_div; ++j)
    s.divisors.push_back({"D" + std::to_string(j + 1), static_cast<unsigned>(uniform(rng, 0, shape.max_mu))});
  s.label = "random";

  for (Subset sub = 0; sub <= s.all_divisors(); ++sub) {
    const unsigned size = subset_size(sub);
    if (size > s.ambient_dim) continue;
    if (sub != 0 && !coin(rng, 0.6)) continue;
    s.strata[sub] = MotivicClass(pure_dimensional(rng, s.ambient_dim - size, 3));
  }
  s.declared_total = s.strata_total();

  for (unsigned i = 0; i < shape.loci; ++i) {
    MarkedLocus locus{"locus" + std::to_string(i + 1), {}};
    for (const auto& [sub, c] : s.strata) {
      if (!coin(rng, 0.5)) continue;
      locus.strata[sub] =
          MotivicClass(nonzero_effective(rng, static_cast<unsigned>(c.numerator().degree()), 2));
    }
    s.loci.push_back(std::move(locus));
  }
  return s;
}

BlowupCenter random_center(Rng& rng, const ModificationSystem& system) {
  const unsigned n = system.ambient_dim;
  const auto n_div = static_cast<unsigned>(system.divisors.size());
  for (;;) {
    BlowupCenter c;
    c.codim = static_cast<unsigned>(uniform(rng, 1, n));
    const unsigned k = static_cast<unsigned>(uniform(rng, 0, std::min(n_div, c.codim)));
    std::vector<unsigned> idx(n_div);
    for (unsigned i = 0; i < n_div; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (unsigned i = 0; i < k; ++i) c.containing |= singleton(idx[i]);

    std::vector<Subset> candidates;
    for (const auto& [sub, cls] : system.strata) {
      if (cls.is_zero() || !is_subset_of(c.containing, sub)) continue;
      if (subset_size(sub & ~c.containing) + c.codim > n) continue;
      candidates.push_back(sub);
    }
    if (candidates.empty()) continue;

    if (subset_size(c.containing) == c.codim) {
      // S is a whole component of the intersection of the divisors in K0.
      for (Subset sub : candidates) c.center_strata[sub] = system.strata.at(sub);
      for (const auto& locus : system.loci) {
        LocusCenterData data{LocusRule::Explicit, {}};
        for (const auto& [sub, cls] : locus.strata)
          if (is_subset_of(c.containing, sub) && !cls.is_zero()) data.strata[sub] = cls;
        c.locus_data[locus.name] = std::move(data);
      }
      return c;
    }
    const Subset forced = candidates[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(candidates.size()) - 1))];
    for (Subset sub : candidates) {
      if (sub != forced && !coin(rng, 0.5)) continue;
      const unsigned dim = n - c.codim - subset_size(sub & ~c.containing);
      c.center_strata[sub] = MotivicClass(nonzero_effective(rng, dim, 2));
    }

    for (const auto& locus : system.loci) {
      const long rule = uniform(rng, 0, 2);
      if (rule == 0) {
        c.locus_data[locus.name] = {LocusRule::ContainsCenter, {}};
      } else if (rule == 1) {
        c.locus_data[locus.name] = {LocusRule::DisjointFromCenter, {}};
      } else {
        LocusCenterData data{LocusRule::Explicit, {}};
        for (const auto& [sub, cls] : c.center_strata)
          if (coin(rng, 0.5))
            data.strata[sub] =
                MotivicClass(nonzero_effective(rng, static_cast<unsigned>(cls.numerator().degree()), 1));
        c.locus_data[locus.name] = std::move(data);
      }
    }
    return c;
  }
}

std::vector<SurfaceEvent> random_surface_program(Rng& rng, unsigned events) {
  SurfaceModel s;
  for (unsigned i = 0; i < events; ++i) {
    const auto options = admissible_events(s);
    s = s.apply(options[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(options.size()) - 1))]);
  }
  return s.events();
}

std::vector<SurfaceEvent> random_branch(Rng& rng, unsigned events) {
  if (events == 0) return {};
  SurfaceModel s = SurfaceModel{}.apply(SurfaceEvent::generic());
  for (unsigned i = 1; i < events; ++i) {
    auto options = admissible_events(s);
    options.erase(options.begin());  // drop the generic event
    s = s.apply(options[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(options.size()) - 1))]);
  }
  return s.events();
}

std::vector<SurfaceEvent> interleave(const std::vector<std::vector<SurfaceEvent>>& branches,
                                     const std::vector<unsigned>& order) {
  std::vector<std::size_t> next(branches.size(), 0);
  std::vector<std::vector<unsigned>> global_id(branches.size());
  std::vector<SurfaceEvent> out;
  for (unsigned b : order) {
    if (b >= branches.size() || next[b] >= branches[b].size())
      throw std::invalid_argument("interleaving order does not match the branches");
    SurfaceEvent ev = branches[b][next[b]++];
    auto remap = [&](unsigned local) { return local == 0 ? 0u : global_id[b].at(local - 1); };
    ev.curve = remap(ev.curve);
    ev.other = remap(ev.other);
    out.push_back(ev);
    global_id[b].push_back(static_cast<unsigned>(out.size()));
  }
  for (std::size_t b = 0; b < branches.size(); ++b)
    if (next[b] != branches[b].size())
      throw std::invalid_argument("interleaving order does not match the branches");
  return out;
}

}  // namespace motcsm
