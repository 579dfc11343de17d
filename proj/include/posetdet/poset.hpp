#pragma once

// Finite posets, their incidence algebra, meets, and closure predicates.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetdet/errors.hpp"
#include "posetdet/ring.hpp"

namespace posetdet {

/// Exhaustive predicates (meet semilattice, meet closure) refuse larger posets.
inline constexpr std::size_t kMaxExhaustivePoset = 64;

using Subset = std::vector<std::size_t>;

/// A finite partially ordered set on indices 0..n-1.
///
/// The order relation is stored densely. Every poset carries a fixed linear
/// extension, obtained by repeatedly removing the lowest-index minimal
/// element; matrices indexed by the poset use this order for rows and
/// columns. An induced subposet remembers the host index of each element.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from an explicit relation, which must be a partial order.
  Poset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq)
      : n_(labels.size()), labels_(std::move(labels)), leq_(n_ * n_, 0) {
    if (leq.size() != n_) throw InputError("poset: relation has wrong row count");
    for (std::size_t a = 0; a < n_; ++a) {
      if (leq[a].size() != n_) throw InputError("poset: relation has wrong column count");
      for (std::size_t b = 0; b < n_; ++b) leq_[a * n_ + b] = leq[a][b] ? 1 : 0;
    }
    validate();
    compute_linear_extension();
  }

  std::size_t size() const { return n_; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
  bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  /// Element indices in linear-extension order.
  const std::vector<std::size_t>& linear_extension() const { return lin_ext_; }
  /// Position of element a within the linear extension.
  std::size_t position(std::size_t a) const { return position_.at(a); }

  /// For induced subposets: index of each element in the host poset.
  const std::vector<std::size_t>& host_indices() const { return host_; }

  std::vector<std::size_t> lower_set(std::size_t a) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < n_; ++c) {
      if (leq(c, a)) out.push_back(c);
    }
    return out;
  }

  std::string description() const {
    std::size_t relations = 0;
    for (char x : leq_) relations += x != 0;
    return "poset(n=" + std::to_string(n_) + ", strict relations=" + std::to_string(relations - n_) + ")";
  }

  friend bool operator==(const Poset& x, const Poset& y) { return x.n_ == y.n_ && x.leq_ == y.leq_; }

 private:
  friend Poset induced_subposet(const Poset& p, const Subset& s);

  void validate() const {
    for (std::size_t a = 0; a < n_; ++a) {
      if (!leq(a, a)) throw InputError("poset: relation is not reflexive at " + labels_[a]);
      for (std::size_t b = 0; b < n_; ++b) {
        if (a != b && leq(a, b) && leq(b, a)) {
          throw InputError("poset: relation is not antisymmetric (" + labels_[a] + ", " + labels_[b] + ")");
        }
        if (!leq(a, b)) continue;
        for (std::size_t c = 0; c < n_; ++c) {
          if (leq(b, c) && !leq(a, c)) throw InputError("poset: relation is not transitive");
        }
      }
    }
  }

  void compute_linear_extension() {
    lin_ext_.clear();
    position_.assign(n_, 0);
    std::vector<bool> removed(n_, false);
    for (std::size_t step = 0; step < n_; ++step) {
      for (std::size_t a = 0; a < n_; ++a) {
        if (removed[a]) continue;
        bool minimal = true;
        for (std::size_t c = 0; c < n_ && minimal; ++c) minimal = removed[c] || !lt(c, a);
        if (minimal) {
          position_[a] = lin_ext_.size();
          lin_ext_.push_back(a);
          removed[a] = true;
          break;
        }
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<std::size_t> lin_ext_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> host_;
};

/// Reflexive-transitive closure of a cover list; (i, j) means i < j.
inline Poset poset_from_covers(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> covers,
                               std::vector<std::string> labels = {}) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw InputError("poset: label count does not match element count");
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (auto [i, j] : covers) {
    if (i >= n || j >= n) throw InputError("poset: cover index out of range");
    if (i == j) throw InputError("poset: covers contain a directed cycle");
    rel[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k][j]) rel[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rel[i][j] && rel[j][i]) throw InputError("poset: covers contain a directed cycle");
    }
  }
  return Poset(std::move(labels), rel);
}

/// Positive integers ordered by divisibility; element i is s[i].
inline Poset divisor_poset(std::span<const std::uint64_t> s) {
  if (s.empty()) throw InputError("divisor_poset: empty set");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) throw InputError("divisor_poset: zero is not a positive integer");
    for (std::size_t j = 0; j < i; ++j) {
      if (s[i] == s[j]) throw InputError("divisor_poset: duplicate entry " + std::to_string(s[i]));
    }
    labels.push_back(std::to_string(s[i]));
  }
  std::vector<std::vector<bool>> rel(s.size(), std::vector<bool>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) rel[i][j] = s[j] % s[i] == 0;
  }
  return Poset(std::move(labels), rel);
}

/// The divisor order on {1, ..., n}.
inline Poset divisor_poset_first(std::uint64_t n) {
  std::vector<std::uint64_t> s(n);
  std::iota(s.begin(), s.end(), std::uint64_t{1});
  return divisor_poset(s);
}

/// Order restricted to s; the linear extension follows the host's.
inline Poset induced_subposet(const Poset& p, const Subset& s) {
  if (s.empty()) throw InputError("induced_subposet: empty subset");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= p.size()) throw InputError("induced_subposet: index out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (s[i] == s[j]) throw InputError("induced_subposet: repeated index");
    }
  }
  // Sort by host position so the lowest-index-minimal rule reproduces the
  // host's linear extension on the restriction.
  Subset sorted = s;
  std::sort(sorted.begin(), sorted.end(), [&](std::size_t x, std::size_t y) { return p.position(x) < p.position(y); });
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> rel(sorted.size(), std::vector<bool>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    labels.push_back(p.label(sorted[i]));
    for (std::size_t j = 0; j < sorted.size(); ++j) rel[i][j] = p.leq(sorted[i], sorted[j]);
  }
  Poset out(std::move(labels), rel);
  out.host_ = std::move(sorted);
  return out;
}

// ---------------------------------------------------------------------------
// Incidence algebra

/// An element of the incidence algebra I(P, R): a function on pairs a <= b.
/// Entries off the order relation are identically zero and cannot be set.
class IncidenceFunction {
 public:
  explicit IncidenceFunction(const Poset& host, RingTag tag = RingTag::integer)
      : host_(std::make_shared<const Poset>(host)),
        tag_(tag),
        table_(host.size() * host.size(), RingValue::zero(tag)) {}

  const Poset& host() const { return *host_; }
  RingTag tag() const { return tag_; }
  std::size_t size() const { return host_->size(); }

  const RingValue& operator()(std::size_t a, std::size_t b) const { return table_.at(a * size() + b); }

  void set(std::size_t a, std::size_t b, RingValue v) {
    if (a >= size() || b >= size()) throw InputError("incidence function: index out of range");
    if (v.tag() != tag_) throw InputError("incidence function: value has the wrong ring tag");
    if (!host_->leq(a, b) && !v.is_zero()) {
      throw InputError("incidence function: nonzero value at (" + host_->label(a) + ", " + host_->label(b) +
                       ") where the pair is not ordered");
    }
    table_[a * size() + b] = std::move(v);
  }

 private:
  std::shared_ptr<const Poset> host_;
  RingTag tag_;
  std::vector<RingValue> table_;
};

inline IncidenceFunction zeta(const Poset& p, RingTag tag = RingTag::integer) {
  IncidenceFunction z(p, tag);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(a, b)) z.set(a, b, RingValue::one(tag));
    }
  }
  return z;
}

inline IncidenceFunction delta(const Poset& p, RingTag tag = RingTag::integer) {
  IncidenceFunction d(p, tag);
  for (std::size_t a = 0; a < p.size(); ++a) d.set(a, a, RingValue::one(tag));
  return d;
}

/// Moebius function: mu(a,a) = 1 and mu(a,b) = -sum_{a <= c < b} mu(a,c).
inline IncidenceFunction mobius(const Poset& p, RingTag tag = RingTag::integer) {
  const std::size_t n = p.size();
  std::vector<Integer> mu(n * n);
  const auto& ext = p.linear_extension();
  for (std::size_t a = 0; a < n; ++a) {
    mu[a * n + a] = 1;
    // Walking b in linear-extension order guarantees every c < b is done.
    for (std::size_t b : ext) {
      if (!p.lt(a, b)) continue;
      Integer s = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (p.leq(a, c) && p.lt(c, b)) s += mu[a * n + c];
      }
      mu[a * n + b] = -s;
    }
  }
  IncidenceFunction out(p, tag);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (p.leq(a, b)) out.set(a, b, lift(mu[a * n + b], tag));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Meets and closure predicates

inline std::optional<std::size_t> try_meet(const Poset& p, std::size_t a, std::size_t b) {
  std::vector<std::size_t> lower;
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (p.leq(c, a) && p.leq(c, b)) lower.push_back(c);
  }
  std::optional<std::size_t> best;
  for (std::size_t c : lower) {
    bool greatest = true;
    for (std::size_t d : lower) greatest = greatest && p.leq(d, c);
    if (greatest) best = c;
  }
  return best;
}

/// Greatest lower bound of a and b; throws NotAMeetError if there is none.
inline std::size_t meet(const Poset& p, std::size_t a, std::size_t b) {
  if (a >= p.size() || b >= p.size()) throw InputError("meet: index out of range");
  if (auto m = try_meet(p, a, b)) return *m;
  throw NotAMeetError("meet: " + p.label(a) + " and " + p.label(b) + " have no unique greatest lower bound");
}

inline bool is_meet_semilattice(const Poset& p) {
  if (p.size() > kMaxExhaustivePoset) throw InputError("is_meet_semilattice: poset too large");
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (!try_meet(p, a, b)) return false;
    }
  }
  return true;
}

inline std::vector<bool> membership(const Poset& p, const Subset& s) {
  std::vector<bool> in(p.size(), false);
  for (std::size_t x : s) {
    if (x >= p.size()) throw InputError("subset index out of range");
    in[x] = true;
  }
  return in;
}

inline bool is_lower_closed(const Poset& p, const Subset& s) {
  const auto in = membership(p, s);
  for (std::size_t a : s) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(b, a) && !in[b]) return false;
    }
  }
  return true;
}

/// Closure of s under meets taken in p (p must be a meet semilattice).
inline bool is_meet_closed(const Poset& p, const Subset& s) {
  if (p.size() > kMaxExhaustivePoset) throw InputError("is_meet_closed: poset too large");
  const auto in = membership(p, s);
  for (std::size_t a : s) {
    for (std::size_t b : s) {
      if (!in[meet(p, a, b)]) return false;
    }
  }
  return true;
}

}  // namespace posetdet
