#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "naples/bijection.hpp"
#include "naples/rules.hpp"
#include "oracle.hpp"

namespace naples {
namespace {

std::vector<int> lengths_of(const PrefSeq& f, int n, int k) { return k_decompose(f, n, k).lengths(); }

TEST(DecomposeTest, Examples) {
  const auto a = k_decompose(PrefSeq{6, 6, 5, 4, 5, 6, 7, 7}, 10, 4);
  EXPECT_EQ(a.parts(), (std::vector<KDecomposition::Part>{{1, 5}, {6, 3}}));
  EXPECT_EQ(lengths_of({5, 5, 4, 4, 3, 5, 10, 6, 10}, 10, 4), (std::vector<int>{5, 1, 1, 1, 1}));
  EXPECT_EQ(lengths_of({1, 3, 2}, 3, 1), (std::vector<int>{3}));
}

TEST(DecomposeTest, NotANaplesFunction) {
  EXPECT_THROW(k_decompose(PrefSeq{2, 3, 6, 9, 9, 6, 8, 9, 9}, 10, 4), NotAParkingFunction);
}

TEST(XiTest, Examples) {
  EXPECT_EQ(xi(PrefSeq{6, 6, 5, 4, 5, 6, 7, 7}, 10, 4), (PrefSeq{2, 2, 3, 4, 3, 2, 3, 3}));
  EXPECT_EQ(xi(PrefSeq{5, 5, 4, 4, 3, 5, 10, 6, 10}, 10, 4), (PrefSeq{4, 4, 5, 5, 6, 4, 1, 5, 1}));
  EXPECT_EQ(xi(PrefSeq{1, 2}, 2, 1), (PrefSeq{2, 1}));
}

TEST(XiTest, StagesEndAtImage) {
  const PrefSeq f{5, 5, 4, 4, 3, 5, 10, 6, 10};
  const auto stages = xi_stages(f, 10, 4);
  ASSERT_EQ(stages.size(), 5u);
  EXPECT_EQ(stages.front(), (PrefSeq{6, 6, 7, 7, 8}));
  EXPECT_EQ(stages.back(), xi(f, 10, 4));
  for (std::size_t i = 0; i < stages.size(); ++i) {
    EXPECT_TRUE(parks_classically(stages[i], 10)) << i;
  }
}

TEST(XiTest, RejectsNonContained) {
  EXPECT_THROW(xi(PrefSeq{2, 4, 6, 9, 2, 6, 2, 9, 3}, 10, 4), NotContained);
}

TEST(XiInverseTest, Examples) {
  EXPECT_EQ(xi_inverse(PrefSeq{2, 2, 3, 4, 3, 2, 3, 3}, 10, 4), (PrefSeq{6, 6, 5, 4, 5, 6, 7, 7}));
  EXPECT_EQ(xi_inverse(PrefSeq{1, 2, 4, 3, 5, 1, 5}, 10, 3), (PrefSeq{5, 6, 8, 7, 9, 8, 6}));
  EXPECT_TRUE(xi_inverse(PrefSeq{}, 3, 1).empty());
}

TEST(XiInverseTest, RejectsNonParkingFunction) {
  EXPECT_THROW(xi_inverse(PrefSeq{3, 3}, 3, 1), NotAParkingFunction);
}

// Round trip both ways over every contained function and every classical
// parking function, with membership decided by the oracle.
TEST(XiProperty, BijectionOntoClassical) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int k = 0; k < n; ++k) {
        std::set<oracle::Seq> images;
        std::size_t contained = 0;
        oracle::sequences(m, n, [&](const oracle::Seq& s) {
          const auto run = oracle::park_naples(s, n, k);
          if (!(run.ok && run.contained)) return;
          ++contained;
          const auto g = xi(s, n, k);
          ASSERT_TRUE(oracle::park_classical(g, n).ok) << format_seq(s);
          ASSERT_EQ(xi_inverse(g, n, k), s) << format_seq(s);
          images.insert(g);
        });
        ASSERT_EQ(images.size(), contained) << "m=" << m << " n=" << n << " k=" << k;
        std::size_t classical = 0;
        oracle::sequences(m, n, [&](const oracle::Seq& s) {
          if (!oracle::park_classical(s, n).ok) return;
          ++classical;
          ASSERT_EQ(xi(xi_inverse(s, n, k), n, k), s) << format_seq(s);
        });
        ASSERT_EQ(classical, contained);
      }
    }
  }
}

TEST(XiBarTest, FirstExampleStages) {
  const auto stages = xi_bar_stages(PrefSeq{4, 4, 7, 1, 1, 9, 10, 10, 1}, 10, 4);
  ASSERT_EQ(stages.size(), 4u);
  EXPECT_EQ(stages[0].prefs, (PrefSeq{7, 7, 4, 10}));
  EXPECT_EQ(stages[1].prefs, (PrefSeq{7, 7, 11, 5, 1}));
  EXPECT_EQ(stages[1].lot, Lot::obstructed(14, Interval(1, 4)));
  EXPECT_EQ(stages[2].prefs, (PrefSeq{7, 7, 4, 13, 9, 2, 1, 1}));
  EXPECT_EQ(stages[2].lot, Lot::obstructed(14, Interval(9, 12)));
  EXPECT_EQ(stages[3].prefs, (PrefSeq{7, 7, 11, 5, 1, 13, 12, 12, 1}));
  EXPECT_EQ(stages[3].lot, Lot::obstructed(14, Interval(1, 4)));
}

TEST(XiBarTest, SecondExampleStages) {
  const PrefSeq f{4, 4, 7, 1, 2, 2, 5, 9, 3, 10};
  const auto stages = xi_bar_stages(f, 10, 4);
  ASSERT_EQ(stages.size(), 6u);
  EXPECT_EQ(stages[0].prefs, (PrefSeq{7, 7, 4, 10, 9}));
  EXPECT_EQ(stages[1].prefs, (PrefSeq{7, 7, 11, 5, 6, 2, 5}));
  EXPECT_EQ(stages[2].prefs, (PrefSeq{11, 11, 4, 9, 10, 6, 9, 2}));
  EXPECT_EQ(stages[2].lot, Lot::obstructed(14, Interval(5, 8)));
  // Reflecting stage three sends car 5 to 6; stage five depends on that.
  EXPECT_EQ(stages[3].prefs, (PrefSeq{7, 7, 11, 5, 6, 2, 5, 13, 3}));
  EXPECT_EQ(stages[3].lot, Lot::obstructed(14, Interval(1, 4)));
  EXPECT_EQ(stages[4].prefs, (PrefSeq{9, 9, 13, 7, 8, 4, 7, 2, 5, 1}));
  EXPECT_EQ(stages[4].lot, Lot::obstructed(14, Interval(3, 6)));
  // Car 10 prefers the singleton component [1, 1] of stage five.
  const auto final_value = xi_bar(f, 10, 4);
  EXPECT_EQ(final_value.prefs, (PrefSeq{7, 7, 11, 5, 6, 2, 5, 13, 3, 14}));
  EXPECT_EQ(final_value.lot, Lot::obstructed(14, Interval(1, 4)));
  EXPECT_EQ(stages.back(), final_value);
}

TEST(XiBarTest, SecondExampleSingleSteps) {
  const auto lot = Lot::obstructed(14, Interval(3, 6));
  const auto last = phi_bar(PrefSeq{9, 9, 13, 7, 8, 4, 7, 2, 5, 1}, lot);
  EXPECT_EQ(last.prefs, (PrefSeq{7, 7, 11, 5, 6, 2, 5, 13, 3, 14}));
  EXPECT_EQ(last.lot, Lot::obstructed(14, Interval(1, 4)));

  const auto fifth = phi_bar(PrefSeq{7, 7, 11, 5, 6, 2, 5, 13, 3}, Lot::obstructed(14, Interval(1, 4)));
  EXPECT_EQ(fifth.prefs, (PrefSeq{9, 9, 13, 7, 8, 4, 7, 2, 5}));
  EXPECT_EQ(fifth.lot, lot);
}

TEST(XiBarTest, ContainedBranchIsShiftedXi) {
  const auto g = xi_bar(PrefSeq{6, 6, 5, 4, 5, 6, 7, 7}, 10, 4);
  EXPECT_EQ(g.prefs, (PrefSeq{6, 6, 7, 8, 7, 6, 7, 7}));
  EXPECT_EQ(g.lot, Lot::obstructed(14, Interval(1, 4)));
}

TEST(XiBarProperty, InjectiveIntoLeftObstructed) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= std::min(3, n); ++k) {
        const auto lot = Lot::with_block(n + k, 1, k);
        std::set<PrefSeq> images;
        std::size_t members = 0;
        oracle::sequences(m, n, [&](const oracle::Seq& s) {
          const auto run = oracle::park_naples(s, n, k);
          if (!run.ok) return;
          ++members;
          const auto g = xi_bar(s, n, k);
          ASSERT_EQ(g.lot, lot);
          ASSERT_TRUE(oracle::park_blocked(g.prefs, n + k, 1, k).ok) << format_seq(s);
          const bool hits_block =
              std::any_of(g.prefs.begin(), g.prefs.end(), [k](int p) { return p <= k; });
          ASSERT_EQ(hits_block, !run.contained) << format_seq(s);
          images.insert(g.prefs);
        });
        ASSERT_EQ(images.size(), members) << "m=" << m << " n=" << n << " k=" << k;
      }
    }
  }
}

}  // namespace
}  // namespace naples
