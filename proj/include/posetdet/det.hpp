#pragma once

// Exact determinants over integral domains.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "posetdet/errors.hpp"
#include "posetdet/ring.hpp"

namespace posetdet {

/// Largest dimension accepted by the Laplace-expansion oracle.
inline constexpr std::size_t kMaxCofactorDim = 8;

/// Square matrix of RingValue entries sharing one ring tag.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n = 0, RingTag tag = RingTag::integer)
      : n_(n), tag_(tag), entries_(n * n, RingValue::zero(tag)) {}

  SquareMatrix(const std::vector<std::vector<RingValue>>& rows) : n_(rows.size()) {  // NOLINT
    tag_ = n_ == 0 ? RingTag::integer : rows[0][0].tag();
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw InputError("matrix is not square");
      for (const auto& v : row) {
        if (v.tag() != tag_) throw InputError("matrix entries mix ring tags");
        entries_.push_back(v);
      }
    }
  }

  static SquareMatrix identity(std::size_t n, RingTag tag = RingTag::integer) {
    SquareMatrix m(n, tag);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, RingValue::one(tag));
    return m;
  }

  std::size_t size() const { return n_; }
  RingTag tag() const { return tag_; }

  const RingValue& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, RingValue v) {
    if (i >= n_ || j >= n_) throw InputError("matrix index out of range");
    if (v.tag() != tag_) throw InputError("matrix entries mix ring tags");
    entries_[i * n_ + j] = std::move(v);
  }

  /// Top-left k x k block.
  SquareMatrix leading_block(std::size_t k) const {
    SquareMatrix out(k, tag_);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) out.entries_[i * k + j] = (*this)(i, j);
    }
    return out;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (!((*this)(i, j) == (*this)(j, i))) return false;
      }
    }
    return true;
  }

  /// Entries row-major, unwrapped to the concrete scalar type T.
  template <typename T>
  std::vector<T> unwrap() const {
    std::vector<T> out;
    out.reserve(entries_.size());
    for (const auto& v : entries_) out.push_back(v.get_as<T>());
    return out;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && (a.n_ == 0 || a.tag_ == b.tag_) && a.entries_ == b.entries_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
      out += "[";
      for (std::size_t j = 0; j < n_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
      out += "]\n";
    }
    return out;
  }

 private:
  std::size_t n_;
  RingTag tag_;
  std::vector<RingValue> entries_;
};

/// Fraction-free one-step Bareiss elimination on a row-major n x n array.
/// Each update divides by the previous pivot; the division is exact in any
/// integral domain, and exact_div throws InternalError if it is not.
template <RingElement T>
T bareiss_determinant(std::vector<T> a, std::size_t n) {
  if (n == 0) return T(1);
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(at(k, k))) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(at(swap_row, k))) ++swap_row;
      if (swap_row == n) return T(0);
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      negate = !negate;
    }
    const T& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T& lead = at(i, k);
      const bool lead_zero = is_zero(lead);
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = at(i, j) * pivot;
        if (!lead_zero) num = num - lead * at(k, j);
        at(i, j) = exact_div(num, prev);
      }
    }
    prev = pivot;
  }
  T det = at(n - 1, n - 1);
  return negate ? T(-det) : det;
}

namespace detail {

template <RingElement T>
T laplace(const std::vector<T>& a, std::size_t n, std::size_t row, std::vector<bool>& used) {
  if (row == n) return T(1);
  T acc(0);
  bool positive = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    const T& entry = a[row * n + j];
    if (!is_zero(entry)) {
      used[j] = true;
      T term = entry * laplace(a, n, row + 1, used);
      used[j] = false;
      acc = positive ? T(acc + term) : T(acc - term);
    }
    positive = !positive;
  }
  return acc;
}

template <typename F>
RingValue dispatch(const SquareMatrix& m, F&& f) {
  switch (m.tag()) {
    case RingTag::integer: return RingValue(f(m.unwrap<Integer>()));
    case RingTag::rational: return RingValue(f(m.unwrap<Rational>()));
    case RingTag::polynomial: return RingValue(f(m.unwrap<Polynomial>()));
  }
  throw InputError("unknown ring tag");
}

}  // namespace detail

/// Laplace expansion along successive rows; the cost is factorial.
template <RingElement T>
T cofactor_determinant(const std::vector<T>& a, std::size_t n) {
  if (n > kMaxCofactorDim) {
    throw InputError("det_cofactor: dimension " + std::to_string(n) + " exceeds " + std::to_string(kMaxCofactorDim));
  }
  std::vector<bool> used(n, false);
  return detail::laplace(a, n, 0, used);
}

inline RingValue det_bareiss(const SquareMatrix& m) {
  if (m.size() == 0) return RingValue::one(m.tag());
  return detail::dispatch(m, [&](auto entries) { return bareiss_determinant(std::move(entries), m.size()); });
}

inline RingValue det_cofactor(const SquareMatrix& m) {
  if (m.size() == 0) return RingValue::one(m.tag());
  return detail::dispatch(m, [&](const auto& entries) { return cofactor_determinant(entries, m.size()); });
}

/// Determinants of the k x k top-left blocks for k = 1..n.
inline std::vector<RingValue> leading_principal_minors(const SquareMatrix& m) {
  std::vector<RingValue> out;
  out.reserve(m.size());
  for (std::size_t k = 1; k <= m.size(); ++k) out.push_back(det_bareiss(m.leading_block(k)));
  return out;
}

inline SquareMatrix mat_transpose(const SquareMatrix& m) {
  SquareMatrix t(m.size(), m.tag());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) t.set(j, i, m(i, j));
  }
  return t;
}

inline SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) throw InputError("mat_mul: dimension mismatch");
  if (a.size() > 0 && a.tag() != b.tag()) throw InputError("mat_mul: ring tag mismatch");
  const std::size_t n = a.size();
  SquareMatrix c(n, a.tag());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RingValue s = RingValue::zero(a.tag());
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      c.set(i, j, std::move(s));
    }
  }
  return c;
}

}  // namespace posetdet
