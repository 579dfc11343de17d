#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "posetdet/identities.hpp"
#include "posetdet/poset.hpp"
#include "posetdet/random.hpp"

using namespace posetdet;

namespace {

using Covers = std::vector<std::pair<std::size_t, std::size_t>>;

Poset figure1() { return poset_from_covers(3, Covers{{0, 1}, {0, 2}}, {"a", "b", "c"}); }

Poset chain(std::size_t n) {
  Covers c;
  for (std::size_t i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return poset_from_covers(n, c);
}

// (f * g)(a, b) = sum_{a <= c <= b} f(a, c) g(c, b)
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
  const Poset& p = f.host();
  IncidenceFunction h(p, f.tag());
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      RingValue s = RingValue::zero(f.tag());
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (p.leq(a, c) && p.leq(c, b)) s += f(a, c) * g(c, b);
      }
      h.set(a, b, s);
    }
  }
  return h;
}

}  // namespace

TEST(PosetConstruction, FigureOne) {
  const Poset p = figure1();
  EXPECT_EQ(p.size(), 3u);
  EXPECT_TRUE(p.leq(0, 1));
  EXPECT_TRUE(p.leq(0, 2));
  EXPECT_FALSE(p.leq(1, 2));
  EXPECT_FALSE(p.leq(2, 1));
  EXPECT_EQ(p.linear_extension(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(p.label(1), "b");
}

TEST(PosetConstruction, SingletonAndEmptyCovers) {
  const Poset p = poset_from_covers(1, Covers{});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.leq(0, 0));
  const Poset anti = poset_from_covers(4, Covers{});
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(anti.leq(a, b), a == b);
  }
}

TEST(PosetConstruction, RejectsCyclesAndBadRelations) {
  EXPECT_THROW(poset_from_covers(3, Covers{{0, 1}, {1, 2}, {2, 0}}), InputError);
  EXPECT_THROW(poset_from_covers(2, Covers{{0, 0}}), InputError);
  EXPECT_THROW(poset_from_covers(2, Covers{{0, 2}}), InputError);
  EXPECT_THROW(Poset({"x", "y"}, {{true, true}, {false, false}}), InputError);
  EXPECT_THROW(Poset({"x", "y"}, {{true, true}, {true, true}}), InputError);
  EXPECT_THROW(Poset({"x", "y", "z"}, {{true, true, false}, {false, true, true}, {false, false, true}}), InputError);
}

TEST(PosetConstruction, DivisorPoset) {
  const std::vector<std::uint64_t> s{1, 2, 3, 4};
  const Poset p = divisor_poset(s);
  EXPECT_TRUE(p.leq(0, 3));
  EXPECT_TRUE(p.leq(1, 3));
  EXPECT_FALSE(p.leq(2, 3));
  EXPECT_FALSE(p.leq(1, 2));
  EXPECT_EQ(p.label(3), "4");
  const std::vector<std::uint64_t> dup{2, 2}, zero{0, 1};
  EXPECT_THROW(divisor_poset(dup), InputError);
  EXPECT_THROW(divisor_poset(zero), InputError);
}

TEST(PosetConstruction, LinearExtensionRespectsOrder) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poset p = random_poset(rng, static_cast<std::size_t>(uniform_int(rng, 1, 9)));
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (p.lt(a, b)) {
          ASSERT_LT(p.position(a), p.position(b));
        }
      }
    }
  }
}

TEST(PosetConstruction, InducedSubposet) {
  const Poset d12 = divisor_poset_first(12);
  const Subset s{5, 3, 1};  // 6, 4, 2
  const Poset sub = induced_subposet(d12, s);
  ASSERT_EQ(sub.size(), 3u);
  EXPECT_EQ(sub.host_indices(), (std::vector<std::size_t>{1, 3, 5}));
  EXPECT_EQ(sub.label(0), "2");
  EXPECT_TRUE(sub.leq(0, 1));
  EXPECT_TRUE(sub.leq(0, 2));
  EXPECT_FALSE(sub.leq(1, 2));
}

TEST(Incidence, ZetaAndDelta) {
  const Poset p = figure1();
  const auto z = zeta(p);
  int ones = 0;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) ones += z(a, b) == RingValue(1);
  }
  EXPECT_EQ(ones, 5);
  const auto d = delta(p);
  EXPECT_EQ(d(1, 1), RingValue(1));
  EXPECT_EQ(d(0, 1), RingValue(0));
}

TEST(Incidence, SetRejectsOffRelationAndWrongTag) {
  const Poset p = figure1();
  IncidenceFunction f(p);
  EXPECT_THROW(f.set(1, 2, RingValue(3)), InputError);
  EXPECT_NO_THROW(f.set(1, 2, RingValue(0)));
  EXPECT_THROW(f.set(0, 1, RingValue(Polynomial{1})), InputError);
  EXPECT_THROW(f.set(0, 5, RingValue(1)), InputError);
}

TEST(Incidence, MobiusExamples) {
  const auto mc = mobius(chain(4));
  EXPECT_EQ(mc(0, 0), RingValue(1));
  EXPECT_EQ(mc(0, 1), RingValue(-1));
  EXPECT_EQ(mc(0, 2), RingValue(0));
  EXPECT_EQ(mc(1, 3), RingValue(0));
  const auto mf = mobius(figure1());
  EXPECT_EQ(mf(0, 1), RingValue(-1));
  EXPECT_EQ(mf(0, 2), RingValue(-1));
  const auto md = mobius(divisor_poset_first(6));
  EXPECT_EQ(md(0, 5), RingValue(1));   // mu(1, 6)
  EXPECT_EQ(md(0, 3), RingValue(0));   // mu(1, 4)
  EXPECT_EQ(md(1, 5), RingValue(-1));  // mu(2, 6)
  const auto mr = mobius(chain(3), RingTag::rational);
  EXPECT_EQ(mr(0, 1), RingValue::rational(-1, 1));
}

TEST(Meets, Examples) {
  const Poset p = figure1();
  EXPECT_EQ(meet(p, 1, 2), 0u);
  EXPECT_EQ(meet(p, 1, 1), 1u);
  const Poset d12 = divisor_poset_first(12);
  EXPECT_EQ(meet(d12, 3, 5), 1u);  // 4 ^ 6 = 2
  EXPECT_TRUE(is_meet_semilattice(d12));
  const Poset vee = poset_from_covers(3, Covers{{1, 0}, {2, 0}});
  EXPECT_FALSE(try_meet(vee, 1, 2).has_value());
  EXPECT_THROW(meet(vee, 1, 2), NotAMeetError);
  EXPECT_FALSE(is_meet_semilattice(vee));
}

TEST(Meets, ClosurePredicates) {
  const Poset d12 = divisor_poset_first(12);
  EXPECT_TRUE(is_lower_closed(d12, Subset{0, 1, 2, 3, 5, 11}));
  const Poset d6 = divisor_poset_first(6);
  const Subset s236{1, 2, 5};
  EXPECT_FALSE(is_lower_closed(d6, s236));
  EXPECT_FALSE(is_meet_closed(d6, s236));
  EXPECT_TRUE(is_meet_closed(d12, Subset{3, 5, 1}));
  EXPECT_EQ(meet_closure(d6, s236), (Subset{0, 1, 2, 5}));
}

TEST(PosetProperties, ZetaMobiusInverse) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Poset p = random_poset(rng, static_cast<std::size_t>(uniform_int(rng, 1, 8)));
    const auto z = zeta(p), m = mobius(p);
    const auto zm = convolve(z, m), mz = convolve(m, z);
    const auto d = delta(p);
    for (std::size_t a = 0; a < p.size(); ++a) {
      ASSERT_EQ(m(a, a), RingValue(1));
      for (std::size_t b = 0; b < p.size(); ++b) {
        ASSERT_EQ(zm(a, b), d(a, b));
        ASSERT_EQ(mz(a, b), d(a, b));
      }
    }
  }
}

TEST(PosetProperties, MobiusInversion) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Poset p = random_poset(rng, static_cast<std::size_t>(uniform_int(rng, 1, 8)));
    const auto f = random_point_function(rng, p.size());
    // g(b) = sum_{a <= b} f(a) recovers f(b) = sum_{a <= b} g(a) mu(a, b)
    PointFunction g(p.size(), RingValue(0));
    for (std::size_t b = 0; b < p.size(); ++b) {
      for (std::size_t a = 0; a < p.size(); ++a) {
        if (p.leq(a, b)) g[b] += f[a];
      }
    }
    const auto m = mobius(p);
    for (std::size_t b = 0; b < p.size(); ++b) {
      RingValue back(0);
      for (std::size_t a = 0; a < p.size(); ++a) back += g[a] * m(a, b);
      ASSERT_EQ(back, f[b]);
    }
  }
}

TEST(PosetProperties, MobiusOnDivisorsIsNumberTheoretic) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const Poset p = divisor_poset_first(n);
    const auto m = mobius(p);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (p.leq(a, b)) {
          ASSERT_EQ(m(a, b), RingValue(mobius_nt((b + 1) / (a + 1))));
        }
      }
    }
  }
}

TEST(PosetProperties, MeetLaws) {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const Poset l = random_meet_semilattice(rng, static_cast<std::size_t>(uniform_int(rng, 1, 7)));
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a) {
      ASSERT_EQ(meet(l, a, a), a);
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = meet(l, a, b);
        ASSERT_EQ(ab, meet(l, b, a));
        ASSERT_TRUE(l.leq(ab, a) && l.leq(ab, b));
        for (std::size_t c = 0; c < n; ++c) {
          ASSERT_EQ(meet(l, ab, c), meet(l, a, meet(l, b, c)));
          if (l.leq(c, a) && l.leq(c, b)) {
            ASSERT_TRUE(l.leq(c, ab));
          }
        }
      }
    }
  }
}

TEST(PosetProperties, MeetIsGcdOnDivisors) {
  for (std::uint64_t n : {12u, 30u, 36u, 60u}) {
    const auto values = divisors(n);
    const Poset p = divisor_poset(values);
    for (std::size_t a = 0; a < values.size(); ++a) {
      for (std::size_t b = 0; b < values.size(); ++b) {
        ASSERT_EQ(values[meet(p, a, b)], std::gcd(values[a], values[b]));
      }
    }
  }
}

TEST(PosetProperties, LowerClosedImpliesMeetClosed) {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const Poset l = random_meet_semilattice(rng, static_cast<std::size_t>(uniform_int(rng, 1, 7)));
    Subset s;
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (coin(rng)) s.push_back(a);
    }
    if (is_lower_closed(l, s)) {
      ASSERT_TRUE(is_meet_closed(l, s));
    }
    ASSERT_TRUE(is_meet_closed(l, meet_closure(l, s)));
  }
}
