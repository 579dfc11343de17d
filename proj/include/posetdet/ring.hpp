#pragma once

// Exact scalar arithmetic: unbounded integers, reduced rationals, and dense
// univariate polynomials in q over the integers, all behind one tagged value
// type. Tags never mix; every binary operation on two different tags throws.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posetdet/errors.hpp"

namespace posetdet {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Integer& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

/// Exact quotient in Z. Throws InputError on a zero divisor and
/// InternalError when the division leaves a remainder.
inline Integer exact_div(const Integer& x, const Integer& y) {
  if (y.is_zero()) throw InputError("exact_div: division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(x, y, q, r);
  if (!r.is_zero()) {
    throw InternalError("exact_div: " + x.str() + " is not divisible by " + y.str());
  }
  return q;
}

inline Rational exact_div(const Rational& x, const Rational& y) {
  if (y == 0) throw InputError("exact_div: division by zero");
  return x / y;
}

/// Dense polynomial in the formal parameter q with integer coefficients.
/// Coefficients are stored by ascending degree and never carry a trailing
/// zero, so the zero polynomial is the empty sequence.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  /// Constant polynomial.
  explicit Polynomial(const Integer& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  Polynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial constant(const Integer& c) { return Polynomial(c); }

  /// c * q^k
  static Polynomial monomial(std::size_t k, const Integer& c = 1) {
    if (c.is_zero()) return {};
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Integer& leading() const { return coeffs_.back(); }

  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer{0}; }

  /// Multiplicity of q as a factor; 0 for the zero polynomial.
  std::size_t q_valuation() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
    return coeffs_.empty() ? 0 : k;
  }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Descending powers, e.g. "q^3 - q^2 + 1"; "0" for the zero polynomial.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Integer& c = coeffs_[k];
      if (c.is_zero()) continue;
      const bool negative = c < 0;
      const Integer mag = negative ? Integer(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (k == 0 || mag != 1) out += mag.str();
      if (k >= 1) out += "q";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Exact quotient in Z[q] by long division. Every step must divide the
/// leading coefficient exactly and the final remainder must vanish.
inline Polynomial exact_div(const Polynomial& x, const Polynomial& y) {
  if (y.is_zero()) throw InputError("exact_div: division by the zero polynomial");
  if (x.is_zero()) return {};
  if (x.degree() < y.degree()) {
    throw InternalError("exact_div: " + x.to_string() + " is not divisible by " + y.to_string());
  }
  std::vector<Integer> rem = x.coefficients();
  const auto& d = y.coefficients();
  const std::size_t dy = d.size() - 1;
  std::vector<Integer> quot(rem.size() - dy);
  Integer q, r;
  for (std::size_t k = rem.size(); k-- > dy;) {
    if (rem[k].is_zero()) continue;
    boost::multiprecision::divide_qr(rem[k], d[dy], q, r);
    if (!r.is_zero()) {
      throw InternalError("exact_div: " + x.to_string() + " is not divisible by " + y.to_string());
    }
    const std::size_t shift = k - dy;
    for (std::size_t j = 0; j <= dy; ++j) {
      if (!d[j].is_zero()) rem[shift + j] -= q * d[j];
    }
    quot[shift] = std::move(q);
  }
  for (std::size_t k = 0; k < dy; ++k) {
    if (!rem[k].is_zero()) {
      throw InternalError("exact_div: " + x.to_string() + " is not divisible by " + y.to_string());
    }
  }
  return Polynomial(std::move(quot));
}

inline Polynomial pow(Polynomial base, std::uint64_t e) {
  Polynomial acc = Polynomial::constant(1);
  while (e > 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return acc;
}

/// The operations the determinant engine needs from a scalar type.
template <typename T>
concept RingElement = std::regular<T> && requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { exact_div(a, b) } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

enum class RingTag { integer, rational, polynomial };

inline const char* tag_name(RingTag t) {
  switch (t) {
    case RingTag::integer: return "integer";
    case RingTag::rational: return "rational";
    case RingTag::polynomial: return "polynomial";
  }
  return "?";
}

/// Exact element of Z, Q, or Z[q].
class RingValue {
 public:
  RingValue() : value_(Integer{0}) {}
  RingValue(Integer v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  RingValue(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  RingValue(Polynomial v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  RingValue(T v) : value_(Integer{v}) {}  // NOLINT(google-explicit-constructor)

  static RingValue rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw InputError("rational with zero denominator");
    return RingValue(Rational(num) / Rational(den));
  }

  static RingValue zero(RingTag t) {
    switch (t) {
      case RingTag::integer: return Integer{0};
      case RingTag::rational: return Rational{0};
      case RingTag::polynomial: return Polynomial{};
    }
    throw InputError("unknown ring tag");
  }

  static RingValue one(RingTag t) {
    switch (t) {
      case RingTag::integer: return Integer{1};
      case RingTag::rational: return Rational{1};
      case RingTag::polynomial: return Polynomial::constant(1);
    }
    throw InputError("unknown ring tag");
  }

  RingTag tag() const { return static_cast<RingTag>(value_.index()); }

  bool is_zero() const {
    return std::visit([](const auto& v) { return posetdet::is_zero(v); }, value_);
  }

  const Integer& as_integer() const { return get<Integer>(RingTag::integer); }
  const Rational& as_rational() const { return get<Rational>(RingTag::rational); }
  const Polynomial& as_polynomial() const { return get<Polynomial>(RingTag::polynomial); }

  /// Sign of an integer or rational value; polynomials have no order.
  int sign() const {
    switch (tag()) {
      case RingTag::integer: return as_integer().sign();
      case RingTag::rational: return as_rational().sign();
      case RingTag::polynomial: break;
    }
    throw InputError("sign of a polynomial is undefined");
  }

  friend RingValue operator+(const RingValue& a, const RingValue& b) {
    return binary(a, b, "+", [](const auto& x, const auto& y) { return RingValue(std::decay_t<decltype(x)>(x + y)); });
  }
  friend RingValue operator-(const RingValue& a, const RingValue& b) {
    return binary(a, b, "-", [](const auto& x, const auto& y) { return RingValue(std::decay_t<decltype(x)>(x - y)); });
  }
  friend RingValue operator*(const RingValue& a, const RingValue& b) {
    return binary(a, b, "*", [](const auto& x, const auto& y) { return RingValue(std::decay_t<decltype(x)>(x * y)); });
  }
  friend RingValue operator-(const RingValue& a) {
    return std::visit([](const auto& x) { return RingValue(std::decay_t<decltype(x)>(-x)); }, a.value_);
  }
  RingValue& operator+=(const RingValue& o) { return *this = *this + o; }
  RingValue& operator-=(const RingValue& o) { return *this = *this - o; }
  RingValue& operator*=(const RingValue& o) { return *this = *this * o; }

  friend RingValue exact_div(const RingValue& a, const RingValue& b) {
    return binary(a, b, "/", [](const auto& x, const auto& y) { return RingValue(exact_div(x, y)); });
  }

  /// Structural equality; values of different tags are never equal.
  friend bool operator==(const RingValue& a, const RingValue& b) { return a.value_ == b.value_; }

  std::string to_string() const {
    switch (tag()) {
      case RingTag::integer: return as_integer().str();
      case RingTag::rational: {
        const Rational& r = as_rational();
        if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
        return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
      }
      case RingTag::polynomial: return as_polynomial().to_string();
    }
    return "?";
  }

  /// Same-tag variant access for generic code.
  template <typename T>
  const T& get_as() const {
    return std::get<T>(value_);
  }

 private:
  template <typename T>
  const T& get(RingTag want) const {
    if (tag() != want) {
      throw InputError(std::string("ring value is ") + tag_name(tag()) + ", expected " + tag_name(want));
    }
    return std::get<T>(value_);
  }

  template <typename Op>
  static RingValue binary(const RingValue& a, const RingValue& b, const char* op, Op&& f) {
    if (a.tag() != b.tag()) {
      throw InputError(std::string("ring tag mismatch in '") + op + "': " + tag_name(a.tag()) + " vs " +
                       tag_name(b.tag()));
    }
    return std::visit(
        [&](const auto& x) -> RingValue {
          using T = std::decay_t<decltype(x)>;
          return f(x, std::get<T>(b.value_));
        },
        a.value_);
  }

  std::variant<Integer, Rational, Polynomial> value_;
};

inline std::ostream& operator<<(std::ostream& os, const RingValue& v) { return os << v.to_string(); }

inline bool is_zero(const RingValue& v) { return v.is_zero(); }

/// The integer x viewed as an element of the ring with tag t.
inline RingValue lift(const Integer& x, RingTag t) {
  switch (t) {
    case RingTag::integer: return x;
    case RingTag::rational: return Rational(x);
    case RingTag::polynomial: return Polynomial::constant(x);
  }
  throw InputError("unknown ring tag");
}

// ---------------------------------------------------------------------------
// Arithmetic functions

/// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw InputError("euler_phi: argument must be positive");
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

/// Number-theoretic Moebius function.
inline int mobius_nt(std::uint64_t n) {
  if (n == 0) throw InputError("mobius_nt: argument must be positive");
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw InputError("divisors: argument must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Ramanujan's sum c(a,b) as the divisor sum over d | gcd(a,b) of d * mu(b/d).
inline std::int64_t ramanujan_sum(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw InputError("ramanujan_sum: arguments must be positive");
  std::int64_t sum = 0;
  for (std::uint64_t d : divisors(std::gcd(a, b))) {
    sum += static_cast<std::int64_t>(d) * mobius_nt(b / d);
  }
  return sum;
}

/// C(n,k); zero outside 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer acc = 1;
  for (long long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

}  // namespace posetdet
