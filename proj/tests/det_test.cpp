#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "posetdet/det.hpp"
#include "posetdet/identities.hpp"

using namespace posetdet;

namespace {

std::mt19937_64 rng(99);

long long draw(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }

SquareMatrix random_integer_matrix(std::size_t n, long long bound) {
  SquareMatrix m(n, RingTag::integer);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Integer(draw(-bound, bound)));
  }
  return m;
}

Polynomial random_polynomial(int max_degree) {
  std::vector<Integer> c(static_cast<std::size_t>(draw(0, max_degree + 1)));
  for (auto& x : c) x = draw(-4, 4);
  return Polynomial(c);
}

}  // namespace

TEST(Determinant, Examples) {
  EXPECT_EQ(det_bareiss(SquareMatrix::identity(5)), RingValue(1));
  EXPECT_EQ(det_bareiss(SquareMatrix(0, RingTag::integer)), RingValue(1));
  const Polynomial q = Polynomial::monomial(1);
  const SquareMatrix t2({{q * q, q}, {q, q}});
  EXPECT_EQ(det_bareiss(t2), RingValue(Polynomial{0, 0, -1, 1}));
  const std::vector<std::uint64_t> s{1, 2, 3, 4};
  EXPECT_EQ(det_bareiss(smith_gcd_matrix(s)), RingValue(4));
  EXPECT_EQ(det_cofactor(smith_gcd_matrix(s)), RingValue(4));
  const SquareMatrix needs_pivot({{RingValue(0), RingValue(1)}, {RingValue(1), RingValue(0)}});
  EXPECT_EQ(det_bareiss(needs_pivot), RingValue(-1));
  const SquareMatrix rat({{RingValue::rational(1, 2), RingValue::rational(1, 3)},
                          {RingValue::rational(1, 4), RingValue::rational(1, 5)}});
  EXPECT_EQ(det_bareiss(rat), RingValue::rational(1, 60));
}

TEST(Determinant, MixedTagsRejected) {
  EXPECT_THROW(SquareMatrix({{RingValue(1), RingValue(Polynomial{1})}, {RingValue(0), RingValue(1)}}), InputError);
  SquareMatrix m(2, RingTag::integer);
  EXPECT_THROW(m.set(0, 0, RingValue::rational(1, 2)), InputError);
}

TEST(Determinant, CofactorGuard) {
  EXPECT_NO_THROW(det_cofactor(SquareMatrix::identity(kMaxCofactorDim)));
  EXPECT_THROW(det_cofactor(SquareMatrix::identity(kMaxCofactorDim + 1)), InputError);
}

TEST(Determinant, LeadingMinors) {
  const std::vector<std::uint64_t> s{1, 2, 4};
  const auto minors = leading_principal_minors(smith_gcd_matrix(s));
  EXPECT_EQ(minors, (std::vector<RingValue>{RingValue(1), RingValue(1), RingValue(2)}));
}

TEST(Determinant, MultiplyAndTranspose) {
  const SquareMatrix a({{RingValue(1), RingValue(2)}, {RingValue(3), RingValue(4)}});
  const SquareMatrix b({{RingValue(0), RingValue(1)}, {RingValue(1), RingValue(0)}});
  EXPECT_EQ(mat_mul(a, b), SquareMatrix({{RingValue(2), RingValue(1)}, {RingValue(4), RingValue(3)}}));
  EXPECT_EQ(mat_transpose(a), SquareMatrix({{RingValue(1), RingValue(3)}, {RingValue(2), RingValue(4)}}));
  EXPECT_FALSE(a.is_symmetric());
}

TEST(DeterminantProperties, BareissMatchesCofactorOnIntegers) {
  for (int i = 0; i < 300; ++i) {
    const auto m = random_integer_matrix(static_cast<std::size_t>(draw(1, 6)), 9);
    ASSERT_EQ(det_bareiss(m), det_cofactor(m)) << m.to_string();
  }
}

TEST(DeterminantProperties, BareissMatchesCofactorOnPolynomials) {
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(draw(1, 5));
    SquareMatrix m(n, RingTag::polynomial);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, random_polynomial(3));
    }
    ASSERT_EQ(det_bareiss(m), det_cofactor(m)) << m.to_string();
  }
}

TEST(DeterminantProperties, SparseIntegerMatricesNeedPivoting) {
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::size_t>(draw(1, 7));
    SquareMatrix m(n, RingTag::integer);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, Integer(draw(0, 2) == 0 ? draw(-3, 3) : 0));
    }
    ASSERT_EQ(det_bareiss(m), det_cofactor(m)) << m.to_string();
  }
}

TEST(DeterminantProperties, TransposeRepeatedRowMultilinearity) {
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(draw(2, 6));
    const auto m = random_integer_matrix(n, 9);
    const RingValue d = det_bareiss(m);
    ASSERT_EQ(det_bareiss(mat_transpose(m)), d);

    SquareMatrix rep = m;
    const auto r0 = static_cast<std::size_t>(draw(0, static_cast<long long>(n) - 1));
    auto r1 = static_cast<std::size_t>(draw(0, static_cast<long long>(n) - 2));
    if (r1 >= r0) ++r1;
    for (std::size_t c = 0; c < n; ++c) rep.set(r1, c, m(r0, c));
    ASSERT_EQ(det_bareiss(rep), RingValue(0));

    // det is linear in row r0
    const RingValue k(Integer(draw(-5, 5)));
    SquareMatrix other = m, sum = m;
    for (std::size_t c = 0; c < n; ++c) {
      other.set(r0, c, Integer(draw(-9, 9)));
      sum.set(r0, c, k * m(r0, c) + other(r0, c));
    }
    ASSERT_EQ(det_bareiss(sum), k * d + det_bareiss(other));

    ASSERT_EQ(det_bareiss(mat_mul(m, other)), d * det_bareiss(other));
  }
}
