#include <gtest/gtest.h>

#include "lrc/enumerate.hpp"
#include "lrc/insertion.hpp"
#include "lrc/knuth.hpp"
#include "test_helpers.hpp"

using namespace lrc;
using test::pair;
using test::tab;
using test::word;

TEST(InnerCorners, Examples) {
  const SkewTableau t = tab(". 1 3/2 3");
  EXPECT_EQ(inner_corners(t), (std::vector<int>{1, 2}));
  for (int i = 1; i <= 4; ++i) {
    const bool listed = i <= 2;
    if (listed)
      EXPECT_NO_THROW(internal_insert(t, i)) << i;
    else
      EXPECT_THROW(internal_insert(t, i), Error) << i;
  }
  EXPECT_EQ(inner_corners(SkewTableau::empty(Partition{0})), std::vector<int>{1});
  EXPECT_EQ(inner_corners(SkewTableau::empty(Partition{2})), (std::vector<int>{1, 2}));
}

TEST(InternalInsert, FilledCorner) {
  // The 2 leaves (2,1) and settles in the empty row 3.
  auto [t, tr] = internal_insert(tab(". 1 3/2 3"), 2);
  EXPECT_EQ(t, tab(". 1 3/. 3/2"));
  EXPECT_EQ(tr.vacated, (Cell{2, 1}));
  EXPECT_EQ(tr.route, (std::vector<Cell>{{2, 1}, {3, 1}}));
  EXPECT_EQ(tr.created, (Cell{3, 1}));
  EXPECT_FALSE(tr.blank());
}

TEST(InternalInsert, BumpingRoute) {
  // 1 bumps the 2 of row 2, which bumps the 3 of row 3 into a new row.
  auto [t, tr] = internal_insert(tab(". 1 3/2 3/3"), 1);
  EXPECT_EQ(t, tab(". . 3/1 3/2/3"));
  EXPECT_EQ(tr.route, (std::vector<Cell>{{1, 2}, {2, 1}, {3, 1}, {4, 1}}));
  EXPECT_EQ(tr.created, (Cell{4, 1}));
}

TEST(InternalInsert, BlankCorner) {
  auto [t, tr] = internal_insert(SkewTableau::empty(Partition{0}), 1);
  EXPECT_EQ(t, SkewTableau::empty(Partition{1}));
  EXPECT_TRUE(tr.blank());
  EXPECT_EQ(tr.created, tr.vacated);
}

TEST(ApplyOrderWord, ExampleAndKnuthCommutativity) {
  const SkewTableau t = tab(". 1 3/2 3");
  const SkewTableau expected = tab(". . . ./. . 3/1 3/2");
  EXPECT_EQ(apply_order_word(t, word("12121")), expected);
  EXPECT_EQ(apply_order_word(t, word("21121")), expected);
  EXPECT_EQ(apply_order_word(t, Word()), t);
}

TEST(ApplyOrderWord, BuildsYoungDiagram) {
  const SkewTableau e = apply_order_word(SkewTableau::empty(Partition{0}), word("2342341231211"));
  EXPECT_EQ(e, SkewTableau::empty(Partition({4, 4, 3, 2})));
}

TEST(ApplyOrderWord, ReportsFailingStep) {
  try {
    apply_order_word(SkewTableau::empty(Partition{0}), word("3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("step"), std::string::npos);
  }
}

TEST(ApplyOrderWord, PreservesKnuthClassAndBallot) {
  for (const auto& t : enumerate_lr_tableaux(5))
    for (int i : inner_corners(t)) {
      const SkewTableau r = internal_insert(t, i).first;
      EXPECT_TRUE(knuth_equivalent(reading_word(r), reading_word(t)));
      EXPECT_TRUE(is_ballot(r));
      EXPECT_EQ(r.inner().size(), t.inner().size() + 1);
      EXPECT_EQ(r.outer().size(), t.outer().size() + 1);
    }
}

TEST(ExtendedInsert, GrowsYamanouchiFactor) {
  const GluedPair p = pair("1 1 1*/2 2*");
  auto [q, tr] = extended_insert(p, 2);
  EXPECT_EQ(q.yam(), tab("1 1/2 2"));
  EXPECT_EQ(q.skew(), internal_insert(p.skew(), 2).first);
  EXPECT_TRUE(q.is_lr_pair());
}

TEST(ExtendedInsert, NewRowNeedsNonzeroLastPart) {
  const GluedPair p(SkewTableau::empty(Partition({1, 0})));
  EXPECT_THROW(extended_insert(p, 3), Error);
  const GluedPair q(SkewTableau::empty(Partition({1})));
  auto [r, tr] = extended_insert(q, 2);
  EXPECT_EQ(r.skew().inner(), Partition({1, 1}));
  EXPECT_TRUE(tr.blank());
}

TEST(SkewRsk, ExampleFromOrderWords) {
  const SkewTableau t = tab(". 1 3/2 3");
  for (const char* u : {". 1 3 5/2 4", ". 1 3 4/2 5"}) {
    const auto [p, q] = skew_rsk_forward(t, tab(u));
    EXPECT_EQ(p, tab(". . . ./. . 3/1 3/2"));
    EXPECT_EQ(skew_rsk_inverse(p, q), std::make_pair(t, tab(u)));
  }
}

TEST(SkewRsk, EmptyRecording) {
  const SkewTableau t = tab(". 1 3/2 3");
  const auto [p, q] = skew_rsk_forward(t, SkewTableau::empty(Partition({1, 0})));
  EXPECT_EQ(p, t);
  EXPECT_EQ(q.size(), 0);
  EXPECT_EQ(q.inner(), t.outer());
  const auto [t2, u2] = skew_rsk_inverse(p, q);
  EXPECT_EQ(t2, t);
  EXPECT_EQ(u2, SkewTableau::empty(Partition({1, 0})));
}

TEST(SkewRsk, RecordingTableauOfInsertionsIntoEmpty) {
  const SkewTableau t = tab("1 1 2/2 3/3 4");
  const SkewTableau u = tab("1 2 3/4");
  const auto [p, q] = skew_rsk_forward(t, u);
  EXPECT_TRUE(knuth_equivalent(reading_word(p), reading_word(t)));
  EXPECT_EQ(p.inner(), u.outer());
  EXPECT_EQ(skew_rsk_inverse(p, q), std::make_pair(t, u));
}

TEST(SkewRsk, MismatchedBorders) {
  EXPECT_THROW(skew_rsk_forward(tab(". 1"), tab("1")), Error);
}
