#include <gtest/gtest.h>

#include "naples/bijection.hpp"
#include "naples/rules.hpp"
#include "naples/ties.hpp"
#include "oracle.hpp"

namespace naples {
namespace {

TEST(StatsTest, Examples) {
  EXPECT_EQ(stats(PrefSeq{2, 4, 8, 9, 2, 8, 9, 9, 9, 3}), (PairStats{5, 2, 2}));
  EXPECT_EQ(stats(PrefSeq{3, 3, 3}), (PairStats{0, 0, 2}));
  EXPECT_EQ(stats(PrefSeq{1, 2, 3}), (PairStats{2, 0, 0}));
  EXPECT_EQ(stats(PrefSeq{}), (PairStats{}));
}

TEST(BoundaryTest, Examples) {
  EXPECT_EQ(boundary_cars(PrefSeq{5, 5, 5, 5, 4, 4, 8, 8, 8, 8}, 10, 3), (std::vector<int>{6, 7, 9}));
  EXPECT_EQ(boundary_cars(PrefSeq{5, 5, 5, 5, 4, 4, 8, 9, 8, 8}, 11, 3).back(), 10);
  EXPECT_TRUE(boundary_cars(PrefSeq{1, 2, 3}, 3, 1).empty());
}

TEST(DeltaTiesTest, Examples) {
  EXPECT_EQ(delta_ties(PrefSeq{6, 6, 6, 6, 5, 5, 4, 4}, 10, 3), TieChangeTuple({-1, 0, -1}));
  EXPECT_EQ(delta_ties(PrefSeq{6, 6, 6, 6, 5, 6, 8, 8}, 10, 3), TieChangeTuple({1, 0, -1}));
  EXPECT_EQ(delta_ties(PrefSeq{5, 5, 5, 5, 4, 4, 8, 9, 8, 8}, 11, 3), TieChangeTuple({-1, 0, -1}));
}

TEST(DeltaTiesTest, RequiresContained) {
  EXPECT_THROW(delta_ties(PrefSeq{2, 4, 6, 9, 2, 6, 2, 9, 3}, 10, 4), NotContained);
}

TEST(TcompTest, Examples) {
  const auto a = tcomp(PrefSeq{5, 5, 5, 5, 4, 4, 8, 8, 8, 8}, 10, 3, 9, 3);
  EXPECT_EQ(a.span, Interval(1, 8));
  const auto b = tcomp(PrefSeq{5, 5, 5, 5, 4, 4, 8, 9, 8, 8}, 11, 3, 10, 3);
  EXPECT_EQ(b.span, Interval(1, 8));
  for (const auto& c : b.members) EXPECT_NE(c, Interval(9, 9));
}

TEST(TcompTest, LoneCarIsItsOwnComponent) {
  const auto t = tcomp(PrefSeq{1, 3}, 3, 1, 2, 1);
  EXPECT_EQ(t.span, Interval(3, 3));
}

TEST(AimTest, Examples) {
  EXPECT_EQ(aim(PrefSeq{5, 5, 5, 5, 4, 4, 8, 9, 8, 8}, 11, 3), 4);
  EXPECT_EQ(aim(PrefSeq{6, 6, 6, 6, 5, 5, 4, 4}, 10, 3), 7);
  EXPECT_EQ(aim(PrefSeq{6, 6, 6, 6, 5, 5}, 10, 3), 6);
}

TEST(AimTest, WrongCase) {
  EXPECT_THROW(aim(PrefSeq{6, 6, 6, 6, 5}, 10, 3), WrongTieCase);
}

TEST(PsiTest, Examples) {
  EXPECT_EQ(psi_small(PrefSeq{5, 5, 5, 5, 4, 4, 8, 9, 8, 8}, 11, 3),
            (PrefSeq{7, 7, 7, 7, 6, 6, 2, 9, 2, 4}));
  EXPECT_EQ(out_tail(PrefSeq{5, 5, 5, 5, 4, 4, 8, 9, 8, 8}, 11, 3), (PrefSeq{4}));
  EXPECT_EQ(out_tail(PrefSeq{6, 6, 6, 6, 5}, 10, 3), (PrefSeq{6, 6, 6, 6, 5}));
}

TEST(PsiTest, FixesWhenLastEntryIsZero) {
  // Two runs; the boundary pair is a tie both before and after xi.
  const PrefSeq f{3, 3, 3};
  ASSERT_EQ(delta_ties(f, 4, 1).entries(), (std::vector<int>{0}));
  EXPECT_EQ(psi_small(f, 4, 1), f);
}

TEST(BigPsiTest, Examples) {
  EXPECT_EQ(psi_big(PrefSeq{6, 6, 6, 6, 5, 5, 4, 4}, 10, 3), (PrefSeq{6, 6, 6, 6, 5, 6, 4, 7}));
  EXPECT_EQ(psi_big(PrefSeq{6, 6, 6, 6, 5, 6, 8, 8}, 10, 3), (PrefSeq{7, 7, 7, 7, 6, 6, 2, 5}));
}

TEST(BigPsiTest, RequiresContained) {
  EXPECT_THROW(psi_big(PrefSeq{1, 1}, 2, 1), NotContained);
}

// True when a last-run car that did not share the boundary car's preference
// in f shares it in g.
bool reaim_collision(const PrefSeq& f, const PrefSeq& g, int n, int k) {
  const auto dec = k_decompose(f, n, k);
  if (dec.size() < 2) return false;
  const auto b = static_cast<std::size_t>(dec.part(dec.size()).start - 1);
  for (std::size_t c = b + 1; c < f.size(); ++c) {
    if (f[c] != f[b] && g[c] == g[b]) return true;
  }
  return false;
}

// psi returns to its input exactly when no last-run car collides with the
// new aim; the colliding inputs are the known gap in the involution.
TEST(PsiProperty, InvolutionUpToReaimCollisions) {
  std::vector<PrefSeq> collisions;
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int k = 0; k < n; ++k) {
        oracle::sequences(m, n, [&](const oracle::Seq& s) {
          const auto run = oracle::park_naples(s, n, k);
          if (!(run.ok && run.contained)) return;
          const auto g = psi_small(s, n, k);
          ASSERT_TRUE(is_contained(g, n, k)) << format_seq(s);
          ASSERT_EQ(k_decompose(g, n, k).lengths(), k_decompose(s, n, k).lengths());
          const bool back = psi_small(g, n, k) == s;
          const bool collides = reaim_collision(s, g, n, k);
          ASSERT_NE(back, collides) << format_seq(s) << " k=" << k;
          if (collides) collisions.push_back(s);
        });
      }
    }
  }
  EXPECT_EQ(collisions, (std::vector<PrefSeq>{
                            {2, 2, 3, 3, 2}, {3, 3, 1, 2, 3}, {3, 3, 2, 2, 3}, {3, 3, 2, 3, 2}}));
}

TEST(BigPsiProperty, NegatesEveryTieChange) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int k = 0; k < n; ++k) {
        oracle::sequences(m, n, [&](const oracle::Seq& s) {
          const auto run = oracle::park_naples(s, n, k);
          if (!(run.ok && run.contained)) return;
          const auto g = psi_big(s, n, k);
          ASSERT_TRUE(is_contained(g, n, k)) << format_seq(s);
          ASSERT_EQ(delta_ties(g, n, k), delta_ties(s, n, k).negated()) << format_seq(s);
        });
      }
    }
  }
}

TEST(TiesProperty, TotalsAgreeWithClassical) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= n; ++m) {
      long classical = 0;
      oracle::sequences(m, n, [&](const oracle::Seq& s) {
        if (oracle::park_classical(s, n).ok) classical += oracle::ties(s);
      });
      for (int k = 0; k < n; ++k) {
        long contained = 0;
        oracle::sequences(m, n, [&](const oracle::Seq& s) {
          const auto run = oracle::park_naples(s, n, k);
          if (run.ok && run.contained) contained += stats(s).ties;
        });
        EXPECT_EQ(contained, classical) << "m=" << m << " n=" << n << " k=" << k;
      }
    }
  }
}

}  // namespace
}  // namespace naples
