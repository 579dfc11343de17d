#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "posetdet/chromatic.hpp"

using namespace posetdet;

namespace {

SetPartition parse(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) { return SetPartition(n, blocks); }

Integer catalan(long long n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace

TEST(Partitions, Construction) {
  const auto p = parse(4, {{3, 1}, {4}, {2}});
  EXPECT_EQ(p.to_string(), "13|2|4");
  EXPECT_EQ(p.block_count(), 3u);
  EXPECT_EQ(p, parse(4, {{2}, {4}, {1, 3}}));
  EXPECT_THROW(parse(3, {{1, 2}}), InputError);
  EXPECT_THROW(parse(3, {{1, 2}, {2, 3}}), InputError);
  EXPECT_THROW(parse(3, {{1, 2, 3}, {}}), InputError);
  EXPECT_THROW(parse(3, {{1, 4}, {2, 3}}), InputError);
}

TEST(Partitions, BellNumbers) {
  const std::vector<std::size_t> bell{1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 1; n <= bell.size(); ++n) EXPECT_EQ(all_partitions(n).size(), bell[n - 1]) << n;
  const auto p3 = all_partitions(3);
  EXPECT_EQ(p3.front(), SetPartition::singletons(3));
  EXPECT_EQ(p3.back(), SetPartition::one_block(3));
  EXPECT_THROW(all_partitions(0), InputError);
  EXPECT_THROW(all_partitions(kMaxPartitionSize + 1), InputError);
}

TEST(Partitions, NoncrossingCatalan) {
  EXPECT_FALSE(is_noncrossing(parse(4, {{1, 3}, {2, 4}})));
  EXPECT_TRUE(is_noncrossing(parse(4, {{1, 4}, {2, 3}})));
  EXPECT_TRUE(is_noncrossing(parse(4, {{1, 2}, {3, 4}})));
  for (long long n = 1; n <= 7; ++n) {
    EXPECT_EQ(Integer(noncrossing_partitions(static_cast<std::size_t>(n)).size()), catalan(n)) << n;
  }
}

TEST(Partitions, JoinExamples) {
  EXPECT_EQ(join_pi(parse(4, {{1, 2}, {3}, {4}}), parse(4, {{1}, {2, 3}, {4}})), parse(4, {{1, 2, 3}, {4}}));
  // the join of two noncrossing partitions in the full lattice can cross
  const auto j = join_pi(parse(4, {{1, 3}, {2}, {4}}), parse(4, {{1}, {2, 4}, {3}}));
  EXPECT_EQ(j, parse(4, {{1, 3}, {2, 4}}));
  EXPECT_THROW(join_pi(SetPartition::singletons(2), SetPartition::singletons(3)), InputError);
}

TEST(Partitions, JoinIsLeastUpperBound) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = all_partitions(n);
    for (const auto& a : all) {
      ASSERT_EQ(join_pi(a, a), a);
      ASSERT_EQ(join_pi(a, SetPartition::singletons(n)), a);
      ASSERT_EQ(join_pi(a, SetPartition::one_block(n)), SetPartition::one_block(n));
      for (const auto& b : all) {
        const auto j = join_pi(a, b);
        ASSERT_EQ(j, join_pi(b, a));
        ASSERT_TRUE(a.refines(j) && b.refines(j));
        for (const auto& c : all) {
          if (a.refines(c) && b.refines(c)) {
            ASSERT_TRUE(j.refines(c));
          }
        }
      }
    }
  }
}

TEST(Partitions, JoinIsAssociative) {
  const auto all = all_partitions(4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (const auto& c : all) ASSERT_EQ(join_pi(join_pi(a, b), c), join_pi(a, join_pi(b, c)));
    }
  }
}

TEST(Tutte, SmallMatrix) {
  const Polynomial q = Polynomial::monomial(1);
  EXPECT_EQ(tutte_matrix(2), SquareMatrix({{q * q, q}, {q, q}}));
  EXPECT_THROW(tutte_matrix(1), InputError);
  EXPECT_THROW(tutte_matrix(7), InputError);
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_TRUE(tutte_matrix(n).is_symmetric());
}

TEST(Tutte, BerahaPolynomials) {
  EXPECT_EQ(beraha(0), Polynomial{});
  EXPECT_EQ(beraha(1), (Polynomial{1}));
  EXPECT_EQ(beraha(2), (Polynomial{0, 1}));
  EXPECT_EQ(beraha(3), (Polynomial{-1, 1}));
  EXPECT_EQ(beraha(4), (Polynomial{0, -2, 1}));
  EXPECT_EQ(beraha(5), (Polynomial{1, -3, 1}));
  EXPECT_EQ(beraha(6), (Polynomial{0, 3, -4, 1}));
  // roots of p_n are 4 cos^2(k pi / n)
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto c = beraha(n).coefficients();
    for (std::size_t k = 1; 2 * k < n; ++k) {
      const double x = 4 * std::pow(std::cos(M_PI * static_cast<double>(k) / static_cast<double>(n)), 2);
      double v = 0;
      for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i].convert_to<double>();
      ASSERT_NEAR(v, 0.0, 1e-6) << n << " " << k;
    }
  }
}

TEST(Tutte, Exponents) {
  EXPECT_EQ(tutte_exponents(2)[1], 1u);
  const auto e3 = tutte_exponents(3);
  EXPECT_EQ(e3[1], 4u);
  EXPECT_EQ(e3[2], 1u);
  const auto e4 = tutte_exponents(4);
  EXPECT_EQ(e4[1], 14u);
  EXPECT_EQ(e4[2], 6u);
  EXPECT_EQ(e4[3], 1u);
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_NO_THROW(tutte_exponents(n));
}

TEST(Tutte, DeterminantIdentity) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto r = verify_tutte_det(n);
    ASSERT_EQ(r.verdict, Verdict::pass) << n;
    ASSERT_EQ(r.computed, r.predicted);
    // degree of det is the sum of bk over NC_n
    long long blocks = 0;
    for (const auto& p : noncrossing_partitions(n)) blocks += static_cast<long long>(p.block_count());
    ASSERT_EQ(r.computed.as_polynomial().degree(), blocks);
    ASSERT_EQ(r.dimension, catalan(static_cast<long long>(n)).convert_to<std::size_t>());
  }
  const auto r3 = verify_tutte_det(3);
  EXPECT_EQ(r3.factored, "q^5 (q - 1)^4 (q - 2)");
  const Polynomial q = Polynomial::monomial(1);
  EXPECT_EQ(r3.computed, RingValue(pow(q, 5) * pow(Polynomial{-1, 1}, 4) * Polynomial{-2, 1}));
  EXPECT_EQ(verify_tutte_det(2).factored, "q^2 (q - 1)");
}

TEST(Tutte, DeterminantAtIntegerPoints) {
  // evaluating det T_n(q) at q = m equals det of the integer matrix m^bk(a v b)
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto nc = noncrossing_partitions(n);
    const Polynomial det = det_bareiss(tutte_matrix(n)).as_polynomial();
    for (long long m = -3; m <= 4; ++m) {
      SquareMatrix t(nc.size(), RingTag::integer);
      for (std::size_t i = 0; i < nc.size(); ++i) {
        for (std::size_t j = 0; j < nc.size(); ++j) {
          t.set(i, j, Integer(boost::multiprecision::pow(Integer(m), static_cast<unsigned>(join_pi(nc[i], nc[j]).block_count()))));
        }
      }
      ASSERT_EQ(RingValue(det.evaluate(m)), det_bareiss(t)) << n << " " << m;
    }
  }
}
