#pragma once

// Seeded random instances. Every draw goes through one std::mt19937_64, so a
// seed alone reproduces a whole campaign.
//
// Random posets: shuffle the n element indices, then make each pair that is
// in increasing shuffled order a cover with probability 1/2, and take the
// transitive closure. Incidence values are uniform on [-5, 5] over a <= b.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "posetdet/identities.hpp"
#include "posetdet/lgv.hpp"
#include "posetdet/poset.hpp"
#include "posetdet/ring.hpp"

namespace posetdet {

using Rng = std::mt19937_64;

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return uniform_int(rng, 0, 1) == 1; }

inline Poset random_poset(Rng& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) covers.emplace_back(order[i], order[j]);
    }
  }
  return poset_from_covers(n, covers);
}

inline IncidenceFunction random_incidence(Rng& rng, const Poset& p, long long lo = -5, long long hi = 5) {
  IncidenceFunction f(p);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(a, b)) f.set(a, b, Integer(uniform_int(rng, lo, hi)));
    }
  }
  return f;
}

inline PointFunction random_point_function(Rng& rng, std::size_t n, long long lo = -5, long long hi = 5) {
  PointFunction f;
  for (std::size_t i = 0; i < n; ++i) f.emplace_back(Integer(uniform_int(rng, lo, hi)));
  return f;
}

/// A random poset with a forced minimum, redrawn until it is a meet semilattice.
inline Poset random_meet_semilattice(Rng& rng, std::size_t n) {
  for (;;) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t j = 1; j < n; ++j) covers.emplace_back(order[0], order[j]);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (coin(rng)) covers.emplace_back(order[i], order[j]);
      }
    }
    Poset p = poset_from_covers(n, covers);
    if (is_meet_semilattice(p)) return p;
  }
}

struct PfgCase {
  std::size_t index;
  Poset poset;
  IncidenceFunction f;
  IncidenceFunction g;
};

/// Random instances of the main identity: poset size uniform on [1, max_size].
inline std::vector<PfgCase> random_pfg_cases(std::uint64_t seed, std::size_t cases, std::size_t max_size) {
  Rng rng(seed);
  std::vector<PfgCase> out;
  for (std::size_t i = 0; i < cases; ++i) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long long>(max_size)));
    Poset p = random_poset(rng, n);
    auto f = random_incidence(rng, p);
    auto g = random_incidence(rng, p);
    out.push_back(PfgCase{i, std::move(p), std::move(f), std::move(g)});
  }
  return out;
}

struct LindstromCase {
  std::size_t index;
  Poset lattice;
  IncidenceFunction f;
};

inline std::vector<LindstromCase> random_lindstrom_cases(std::uint64_t seed, std::size_t cases,
                                                         std::size_t max_size) {
  Rng rng(seed);
  std::vector<LindstromCase> out;
  for (std::size_t i = 0; i < cases; ++i) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long long>(max_size)));
    Poset l = random_meet_semilattice(rng, n);
    auto f = random_incidence(rng, l);
    out.push_back(LindstromCase{i, std::move(l), std::move(f)});
  }
  return out;
}

struct MeetClosedCase {
  std::uint64_t modulus;
  std::vector<std::uint64_t> values;  // divisors of modulus, element i is values[i]
  Poset lattice;
  Subset subset;
  IncidenceFunction f;
};

/// Divisor lattice of N (N uniform on [1, max_modulus]), the meet closure of a
/// random nonempty subset, and random integer f on the lattice.
inline MeetClosedCase random_meet_closed_case(Rng& rng, std::uint64_t max_modulus = 60) {
  const auto modulus = static_cast<std::uint64_t>(uniform_int(rng, 1, static_cast<long long>(max_modulus)));
  auto values = divisors(modulus);
  Poset l = divisor_poset(values);
  Subset s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (coin(rng)) s.push_back(i);
  }
  if (s.empty()) s.push_back(static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(values.size()) - 1)));
  s = meet_closure(l, s);
  auto f = random_incidence(rng, l);
  return MeetClosedCase{modulus, std::move(values), std::move(l), std::move(s), std::move(f)};
}

/// Divisor closure of 1..4 random seeds drawn from [1, max_seed].
inline std::vector<std::uint64_t> random_factor_closed(Rng& rng, std::uint64_t max_seed = 60) {
  std::vector<std::uint64_t> seeds;
  const auto count = uniform_int(rng, 1, 4);
  for (long long i = 0; i < count; ++i) {
    seeds.push_back(static_cast<std::uint64_t>(uniform_int(rng, 1, static_cast<long long>(max_seed))));
  }
  return divisor_closure(seeds);
}

/// Increasing sample of k distinct values from [0, bound).
inline std::vector<std::size_t> random_increasing(Rng& rng, std::size_t k, std::size_t bound) {
  std::vector<std::size_t> all(bound);
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

/// Planar grid digraph with at most max_vertices vertices, 1..3 terminal
/// pairs and arc weights uniform on [-5, 5].
inline WeightedDigraph random_grid_digraph(Rng& rng, std::size_t max_vertices = 10) {
  std::size_t rows = 0, cols = 0;
  do {
    rows = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    cols = static_cast<std::size_t>(uniform_int(rng, 1, 5));
  } while (rows * cols > max_vertices);
  const auto k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long long>(std::min<std::size_t>(3, cols))));
  const auto src = random_increasing(rng, k, cols);
  const auto dst = random_increasing(rng, k, cols);
  return grid_digraph(rows, cols, src, dst, [&](std::size_t, std::size_t) { return RingValue(Integer(uniform_int(rng, -5, 5))); });
}

}  // namespace posetdet
