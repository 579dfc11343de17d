#pragma once

// Matrix families built from posets and the closed-form products their
// determinants are predicted to equal. Every verify_* routine computes both
// sides independently; the prediction is never trusted on its own.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "posetdet/det.hpp"
#include "posetdet/errors.hpp"
#include "posetdet/poset.hpp"
#include "posetdet/report.hpp"
#include "posetdet/ring.hpp"

namespace posetdet {

/// A one-argument function P -> R, stored by element index.
using PointFunction = std::vector<RingValue>;

namespace detail {

inline void require_host(const Poset& p, const IncidenceFunction& f, const char* what) {
  if (!(f.host() == p)) throw InputError(std::string(what) + ": incidence function lives on a different poset");
}

inline void require_same_tag(const IncidenceFunction& f, const IncidenceFunction& g, const char* what) {
  if (f.tag() != g.tag()) throw InputError(std::string(what) + ": incidence functions have different ring tags");
}

}  // namespace detail

/// Matrix of F under the linear extension: row c, column a holds F(c, a).
inline SquareMatrix incidence_matrix(const IncidenceFunction& f) {
  const auto& ext = f.host().linear_extension();
  SquareMatrix m(f.size(), f.tag());
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (std::size_t j = 0; j < ext.size(); ++j) m.set(i, j, f(ext[i], ext[j]));
  }
  return m;
}

/// Entries p_ab = sum_c F(c,a) G(c,b), indexed by the linear extension.
inline SquareMatrix build_pfg(const Poset& p, const IncidenceFunction& f, const IncidenceFunction& g) {
  detail::require_host(p, f, "build_pfg");
  detail::require_host(p, g, "build_pfg");
  detail::require_same_tag(f, g, "build_pfg");
  const auto& ext = p.linear_extension();
  const std::size_t n = p.size();
  SquareMatrix m(n, f.tag());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RingValue s = RingValue::zero(f.tag());
      for (std::size_t c = 0; c < n; ++c) {
        // Only common lower bounds contribute.
        if (p.leq(c, ext[i]) && p.leq(c, ext[j])) s += f(c, ext[i]) * g(c, ext[j]);
      }
      m.set(i, j, std::move(s));
    }
  }
  return m;
}

inline RingValue predicted_det_pfg(const Poset& p, const IncidenceFunction& f, const IncidenceFunction& g) {
  detail::require_host(p, f, "predicted_det_pfg");
  detail::require_host(p, g, "predicted_det_pfg");
  detail::require_same_tag(f, g, "predicted_det_pfg");
  RingValue prod = RingValue::one(f.tag());
  for (std::size_t a = 0; a < p.size(); ++a) prod *= f(a, a) * g(a, a);
  return prod;
}

/// F(a,b) * w(a) for every ordered pair.
inline IncidenceFunction scale_rows(const IncidenceFunction& f, const PointFunction& w) {
  if (w.size() != f.size()) throw InputError("pointwise function has wrong length");
  const Poset& p = f.host();
  IncidenceFunction out(p, f.tag());
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(a, b)) out.set(a, b, f(a, b) * w[a]);
    }
  }
  return out;
}

/// Entries sum_c F(c,a) f(c) G(c,b) g(c), by substitution into build_pfg.
inline SquareMatrix build_weighted_pfg(const Poset& p, const IncidenceFunction& big_f, const PointFunction& f,
                                       const IncidenceFunction& big_g, const PointFunction& g) {
  detail::require_host(p, big_f, "build_weighted_pfg");
  detail::require_host(p, big_g, "build_weighted_pfg");
  return build_pfg(p, scale_rows(big_f, f), scale_rows(big_g, g));
}

inline RingValue predicted_det_weighted(const Poset& p, const IncidenceFunction& big_f, const PointFunction& f,
                                        const IncidenceFunction& big_g, const PointFunction& g) {
  detail::require_host(p, big_f, "predicted_det_weighted");
  detail::require_host(p, big_g, "predicted_det_weighted");
  return predicted_det_pfg(p, scale_rows(big_f, f), scale_rows(big_g, g));
}

inline PointFunction constant_point_function(std::size_t n, const RingValue& v) { return PointFunction(n, v); }

// ---------------------------------------------------------------------------
// Divisor-order specializations

namespace detail {

inline std::vector<std::uint64_t> first_n(std::uint64_t n) {
  std::vector<std::uint64_t> s(n);
  std::iota(s.begin(), s.end(), std::uint64_t{1});
  return s;
}

/// G(a,b) = h(b/a) on the divisor order of s.
template <typename H>
IncidenceFunction quotient_function(const Poset& p, std::span<const std::uint64_t> s, H&& h) {
  IncidenceFunction out(p);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (p.leq(a, b)) out.set(a, b, RingValue(h(s[b] / s[a])));
    }
  }
  return out;
}

}  // namespace detail

/// Configuration of the weighted identity on P_n that yields Ramanujan sums:
/// F = zeta, f(a) = a, G(a,b) = mu(b/a), g = 1.
struct ApostolConfig {
  Poset poset;
  IncidenceFunction big_f;
  PointFunction f;
  IncidenceFunction big_g;
  PointFunction g;
};

inline ApostolConfig apostol_config(std::uint64_t n) {
  if (n == 0) throw InputError("apostol: n must be at least 1");
  const auto s = detail::first_n(n);
  Poset p = divisor_poset(s);
  PointFunction f;
  for (std::uint64_t a : s) f.emplace_back(Integer(a));
  auto big_g = detail::quotient_function(p, s, [](std::uint64_t m) { return Integer(mobius_nt(m)); });
  return ApostolConfig{p, zeta(p), std::move(f), std::move(big_g), constant_point_function(n, 1)};
}

/// Ramanujan-sum matrix (c(a,b)) on P_n. Entries are checked against the
/// independent divisor-sum evaluation of c(a,b).
inline SquareMatrix apostol_matrix(std::uint64_t n) {
  const auto cfg = apostol_config(n);
  SquareMatrix m = build_weighted_pfg(cfg.poset, cfg.big_f, cfg.f, cfg.big_g, cfg.g);
  const auto& ext = cfg.poset.linear_extension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t a = ext[i] + 1, b = ext[j] + 1;
      if (!(m(i, j) == RingValue(Integer(ramanujan_sum(a, b))))) {
        throw InternalError("apostol_matrix: entry (" + std::to_string(a) + "," + std::to_string(b) +
                            ") disagrees with Ramanujan's sum");
      }
    }
  }
  return m;
}

/// m^(1/k) when m is a perfect k-th power, 0 otherwise.
inline std::uint64_t omega_k(std::uint64_t m, unsigned k) {
  if (k == 0) throw InputError("omega_k: k must be at least 1");
  if (m == 0) throw InputError("omega_k: argument must be positive");
  for (std::uint64_t r = 1;; ++r) {
    Integer power = boost::multiprecision::pow(Integer(r), k);
    if (power == m) return r;
    if (power > m) return 0;
  }
}

struct DaniloffConfig {
  Poset poset;
  IncidenceFunction big_f;
  PointFunction f;
  IncidenceFunction big_g;
  PointFunction g;
};

/// F = G = Omega_k(b/a) on P_n with g = 1; f is supplied by the caller.
inline DaniloffConfig daniloff_config(std::uint64_t n, unsigned k, PointFunction f) {
  if (n == 0) throw InputError("daniloff: n must be at least 1");
  if (k == 0) throw InputError("daniloff: k must be at least 1");
  if (f.size() != n) throw InputError("daniloff: f must have n values");
  const auto s = detail::first_n(n);
  Poset p = divisor_poset(s);
  auto omega = detail::quotient_function(p, s, [k](std::uint64_t m) { return Integer(omega_k(m, k)); });
  return DaniloffConfig{p, omega, std::move(f), omega, constant_point_function(n, 1)};
}

inline SquareMatrix daniloff_matrix(std::uint64_t n, unsigned k, PointFunction f) {
  const auto cfg = daniloff_config(n, k, std::move(f));
  return build_weighted_pfg(cfg.poset, cfg.big_f, cfg.f, cfg.big_g, cfg.g);
}

inline bool is_factor_closed(std::span<const std::uint64_t> s) {
  for (std::uint64_t a : s) {
    for (std::uint64_t d : divisors(a)) {
      if (std::find(s.begin(), s.end(), d) == s.end()) return false;
    }
  }
  return true;
}

/// All divisors of all seeds, ascending.
inline std::vector<std::uint64_t> divisor_closure(std::span<const std::uint64_t> seeds) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : seeds) {
    for (std::uint64_t d : divisors(a)) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// GCD matrix (gcd(a_i, a_j)) in the given order.
inline SquareMatrix smith_gcd_matrix(std::span<const std::uint64_t> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) throw InputError("smith: entries must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (s[i] == s[j]) throw InputError("smith: duplicate entry " + std::to_string(s[i]));
    }
  }
  SquareMatrix m(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) m.set(i, j, Integer(std::gcd(s[i], s[j])));
  }
  return m;
}

/// Product of Euler's totient over s.
inline RingValue smith_predicted(std::span<const std::uint64_t> s) {
  Integer prod = 1;
  for (std::uint64_t a : s) prod *= euler_phi(a);
  return prod;
}

/// f(a,b) = value of a, on the divisor poset of s.
inline IncidenceFunction smith_function(const Poset& p, std::span<const std::uint64_t> s) {
  IncidenceFunction out(p);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (p.leq(a, b)) out.set(a, b, Integer(s[a]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Meet semilattices

/// Entries l_ab = f(a ^ b, a), indexed by the linear extension.
inline SquareMatrix build_lindstrom(const Poset& l, const IncidenceFunction& f) {
  detail::require_host(l, f, "build_lindstrom");
  if (!is_meet_semilattice(l)) throw InputError("build_lindstrom: poset is not a meet semilattice");
  const auto& ext = l.linear_extension();
  SquareMatrix m(l.size(), f.tag());
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (std::size_t j = 0; j < ext.size(); ++j) m.set(i, j, f(meet(l, ext[i], ext[j]), ext[i]));
  }
  return m;
}

/// prod_a sum_c mu(c,a) f(c,a).
inline RingValue predicted_det_lindstrom(const Poset& l, const IncidenceFunction& f) {
  detail::require_host(l, f, "predicted_det_lindstrom");
  if (!is_meet_semilattice(l)) throw InputError("predicted_det_lindstrom: poset is not a meet semilattice");
  const auto mu = mobius(l, f.tag());
  RingValue prod = RingValue::one(f.tag());
  for (std::size_t a = 0; a < l.size(); ++a) {
    RingValue factor = RingValue::zero(f.tag());
    for (std::size_t c : l.lower_set(a)) factor += mu(c, a) * f(c, a);
    prod *= factor;
  }
  return prod;
}

/// F(a,b) = sum_{c <= a} mu(c,a) f(c,b) for a <= b. By Moebius inversion
/// f(a,b) = sum_{c <= a} F(c,b).
inline IncidenceFunction mobius_inversion(const IncidenceFunction& f) {
  const Poset& p = f.host();
  const auto mu = mobius(p, f.tag());
  IncidenceFunction out(p, f.tag());
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      RingValue s = RingValue::zero(f.tag());
      for (std::size_t c : p.lower_set(a)) s += mu(c, a) * f(c, b);
      out.set(a, b, std::move(s));
    }
  }
  return out;
}

/// Restriction of f to an induced subposet built by induced_subposet.
inline IncidenceFunction restrict_to(const IncidenceFunction& f, const Poset& sub) {
  const auto& host = sub.host_indices();
  if (host.size() != sub.size()) throw InputError("restrict_to: target is not an induced subposet");
  IncidenceFunction out(sub, f.tag());
  for (std::size_t a = 0; a < sub.size(); ++a) {
    for (std::size_t b = 0; b < sub.size(); ++b) {
      if (sub.leq(a, b)) out.set(a, b, f(host[a], host[b]));
    }
  }
  return out;
}

/// Members of s listed in the linear-extension order of the host.
inline Subset ordered_by_extension(const Poset& l, Subset s) {
  std::sort(s.begin(), s.end(), [&](std::size_t x, std::size_t y) { return l.position(x) < l.position(y); });
  return s;
}

/// For each d in L, the index i of the earliest a_i (in extension order)
/// with d <= a_i, or -1 when d lies below no member of s.
inline std::vector<long> assign_to_earliest(const Poset& l, const Subset& ordered) {
  std::vector<long> owner(l.size(), -1);
  for (std::size_t d = 0; d < l.size(); ++d) {
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      if (l.leq(d, ordered[i])) {
        owner[d] = static_cast<long>(i);
        break;
      }
    }
  }
  return owner;
}

namespace detail {

inline void require_meet_closed(const Poset& l, const Subset& s, const char* what) {
  if (s.empty()) throw InputError(std::string(what) + ": empty subset");
  if (!is_meet_semilattice(l)) throw InputError(std::string(what) + ": host is not a meet semilattice");
  if (!is_meet_closed(l, s)) throw InputError(std::string(what) + ": subset is not meet closed");
}

}  // namespace detail

/// Entries f(a_i ^ a_j, a_i) for a meet-closed s in L, meets taken in L,
/// rows and columns in the extension order of s.
inline SquareMatrix build_meet_closed(const Poset& l, const Subset& s, const IncidenceFunction& f) {
  detail::require_host(l, f, "build_meet_closed");
  detail::require_meet_closed(l, s, "build_meet_closed");
  const Subset a = ordered_by_extension(l, s);
  SquareMatrix m(a.size(), f.tag());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m.set(i, j, f(meet(l, a[i], a[j]), a[i]));
  }
  return m;
}

/// prod_i sum_{d assigned to a_i} sum_c mu_L(c,d) f(c,a_i).
inline RingValue predicted_det_meet_closed(const Poset& l, const Subset& s, const IncidenceFunction& f) {
  detail::require_host(l, f, "predicted_det_meet_closed");
  detail::require_meet_closed(l, s, "predicted_det_meet_closed");
  const Subset a = ordered_by_extension(l, s);
  const auto owner = assign_to_earliest(l, a);
  const auto mu = mobius(l, f.tag());
  RingValue prod = RingValue::one(f.tag());
  for (std::size_t i = 0; i < a.size(); ++i) {
    RingValue factor = RingValue::zero(f.tag());
    for (std::size_t d = 0; d < l.size(); ++d) {
      if (owner[d] != static_cast<long>(i)) continue;
      for (std::size_t c : l.lower_set(d)) factor += mu(c, d) * f(c, a[i]);
    }
    prod *= factor;
  }
  return prod;
}

/// Subset of L closed under meets in L that contains s.
inline Subset meet_closure(const Poset& l, Subset s) {
  bool grown = true;
  while (grown) {
    grown = false;
    const Subset snapshot = s;
    for (std::size_t x : snapshot) {
      for (std::size_t y : snapshot) {
        const std::size_t m = meet(l, x, y);
        if (std::find(s.begin(), s.end(), m) == s.end()) {
          s.push_back(m);
          grown = true;
        }
      }
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

// ---------------------------------------------------------------------------
// Invertibility and positive definiteness

inline bool is_invertible_pfg(const Poset& p, const IncidenceFunction& f, const IncidenceFunction& g) {
  detail::require_host(p, f, "is_invertible_pfg");
  detail::require_host(p, g, "is_invertible_pfg");
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (f(a, a).is_zero() || g(a, a).is_zero()) return false;
  }
  return true;
}

/// Decided from the diagonal products F(a,a)G(a,a). Only defined for exactly
/// symmetric integer or rational instances; anything else is an InputError.
inline bool is_positive_definite_pfg(const Poset& p, const IncidenceFunction& f, const IncidenceFunction& g) {
  detail::require_host(p, f, "is_positive_definite_pfg");
  detail::require_host(p, g, "is_positive_definite_pfg");
  if (f.tag() == RingTag::polynomial || g.tag() == RingTag::polynomial) {
    throw InputError("is_positive_definite_pfg: needs integer or rational values");
  }
  if (!build_pfg(p, f, g).is_symmetric()) throw InputError("is_positive_definite_pfg: matrix is not symmetric");
  for (std::size_t a = 0; a < p.size(); ++a) {
    if ((f(a, a) * g(a, a)).sign() <= 0) return false;
  }
  return true;
}

/// Sylvester's criterion on exact leading principal minors.
inline bool positive_definite_by_minors(const SquareMatrix& m) {
  if (!m.is_symmetric()) throw InputError("positive_definite_by_minors: matrix is not symmetric");
  for (const auto& minor : leading_principal_minors(m)) {
    if (minor.sign() <= 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Reports

inline IdentityReport verify_pfg(const Poset& p, const IncidenceFunction& f, const IncidenceFunction& g) {
  const auto t0 = std::chrono::steady_clock::now();
  return make_report("main", p.description(), p.size(), det_bareiss(build_pfg(p, f, g)), predicted_det_pfg(p, f, g),
                     t0);
}

inline IdentityReport verify_weighted(const Poset& p, const IncidenceFunction& big_f, const PointFunction& f,
                                      const IncidenceFunction& big_g, const PointFunction& g) {
  const auto t0 = std::chrono::steady_clock::now();
  return make_report("weighted", p.description(), p.size(), det_bareiss(build_weighted_pfg(p, big_f, f, big_g, g)),
                     predicted_det_weighted(p, big_f, f, big_g, g), t0);
}

inline IdentityReport verify_lindstrom(const Poset& l, const IncidenceFunction& f) {
  const auto t0 = std::chrono::steady_clock::now();
  return make_report("lindstrom", l.description(), l.size(), det_bareiss(build_lindstrom(l, f)),
                     predicted_det_lindstrom(l, f), t0);
}

inline IdentityReport verify_meet_closed(const Poset& l, const Subset& s, const IncidenceFunction& f) {
  const auto t0 = std::chrono::steady_clock::now();
  return make_report("meet-closed", l.description() + ", |S|=" + std::to_string(s.size()), s.size(),
                     det_bareiss(build_meet_closed(l, s, f)), predicted_det_meet_closed(l, s, f), t0);
}

/// The product formula only holds for factor-closed sets.
inline IdentityReport verify_smith(std::span<const std::uint64_t> s) {
  if (!is_factor_closed(s)) throw InputError("smith: set is not factor closed");
  const auto t0 = std::chrono::steady_clock::now();
  return make_report("smith", "gcd matrix, |S|=" + std::to_string(s.size()), s.size(),
                     det_bareiss(smith_gcd_matrix(s)), smith_predicted(s), t0);
}

inline Integer factorial(std::uint64_t n) {
  Integer acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
  return acc;
}

/// det (c(a,b)) against both the weighted-identity product and n!.
inline IdentityReport verify_apostol(std::uint64_t n) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cfg = apostol_config(n);
  const RingValue product = predicted_det_weighted(cfg.poset, cfg.big_f, cfg.f, cfg.big_g, cfg.g);
  if (!(product == RingValue(factorial(n)))) throw InternalError("apostol: diagonal product is not n!");
  return make_report("apostol", "ramanujan sums on P_" + std::to_string(n), n, det_bareiss(apostol_matrix(n)),
                     product, t0);
}

/// f(a) = a unless given.
inline IdentityReport verify_daniloff(std::uint64_t n, unsigned k, PointFunction f = {}) {
  if (f.empty()) {
    for (std::uint64_t a = 1; a <= n; ++a) f.emplace_back(Integer(a));
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto cfg = daniloff_config(n, k, f);
  RingValue direct = RingValue::one(RingTag::integer);
  for (const auto& v : cfg.f) direct *= v;
  const RingValue product = predicted_det_weighted(cfg.poset, cfg.big_f, cfg.f, cfg.big_g, cfg.g);
  if (!(product == direct)) throw InternalError("daniloff: diagonal product is not f(1)...f(n)");
  return make_report("daniloff", "omega_" + std::to_string(k) + " on P_" + std::to_string(n), n,
                     det_bareiss(build_weighted_pfg(cfg.poset, cfg.big_f, cfg.f, cfg.big_g, cfg.g)), product, t0);
}

}  // namespace posetdet
