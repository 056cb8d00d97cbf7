#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lrc/knuth.hpp"
#include "test_helpers.hpp"

using namespace lrc;
using test::tab;
using test::word;

namespace {

std::vector<Word> all_words(int len, int alphabet) {
  std::vector<Word> out;
  std::vector<int> w(len, 1);
  while (true) {
    out.emplace_back(w);
    int k = len - 1;
    while (k >= 0 && w[k] == alphabet) w[k--] = 1;
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

}  // namespace

TEST(Schensted, Examples) {
  auto [p, c] = schensted_insert(tab("1 2/2"), 1);
  EXPECT_EQ(p, tab("1 1/2 2"));
  EXPECT_EQ(c, (Cell{2, 2}));
  auto [q, d] = schensted_insert(tab("1 3 4/2 5"), 9);
  EXPECT_EQ(q, tab("1 3 4 9/2 5"));
  EXPECT_EQ(d, (Cell{1, 4}));
  auto [e, f] = schensted_insert(SkewTableau::empty(Partition{0}), 1);
  EXPECT_EQ(e, tab("1"));
  EXPECT_EQ(f, (Cell{1, 1}));
}

TEST(Rsk, Examples) {
  EXPECT_EQ(rsk(Word()).p.size(), 0);
  EXPECT_EQ(rsk(word("1123")).p, tab("1 1 2 3"));
  const RskPair r = rsk(word("2132313"));
  EXPECT_TRUE(is_standard(r.q));
  EXPECT_EQ(r.p.outer(), r.q.outer());
  for (const Word& v : knuth_class(word("2132313"), 10000)) EXPECT_EQ(rsk(v).p, r.p) << v.to_string();
}

TEST(Rsk, InsertionRowsMatchTableau) {
  for (int len = 0; len <= 5; ++len)
    for (const Word& w : all_words(len, 3)) EXPECT_EQ(rsk_insertion_rows(w), rsk(w).p.rows());
}

TEST(Rsk, BallotWordsRectifyToYamanouchi) {
  for (int len = 0; len <= 8; ++len)
    for (const Word& w : all_words(len, 4)) {
      if (!is_ballot(w)) continue;
      EXPECT_EQ(rsk(w).p, yamanouchi_tableau(Partition(content(w).counts))) << w.to_string();
    }
}

TEST(KnuthEquivalent, Examples) {
  EXPECT_TRUE(knuth_equivalent(word("12121"), word("21121")));
  EXPECT_TRUE(knuth_equivalent(word("3141"), word("3141")));
  EXPECT_FALSE(knuth_equivalent(word("12"), word("21")));
  EXPECT_TRUE(knuth_equivalent(word("33422333"), word("33334223")));
}

TEST(ElementaryMoves, Examples) {
  const auto m = elementary_moves(word("12121"));
  EXPECT_NE(std::find(m.begin(), m.end(), word("21121")), m.end());
  EXPECT_TRUE(elementary_moves(word("21")).empty());
  EXPECT_EQ(elementary_moves(word("132")), std::vector<Word>{word("312")});
  EXPECT_TRUE(knuth_equivalent(word("132"), word("312")));
}

TEST(KnuthClass, Examples) {
  const auto c = knuth_class(word("12121"), 100);
  EXPECT_NE(std::find(c.begin(), c.end(), word("21121")), c.end());
  EXPECT_EQ(knuth_class(word("1"), 10), std::vector<Word>{word("1")});
  EXPECT_THROW(knuth_class(word("1234321"), 2), Error);
}

// The move closure and the insertion tableau criterion partition all words
// of a given length and alphabet identically.
TEST(KnuthClass, ClosureMatchesInsertionTableau) {
  for (int len = 1; len <= 6; ++len) {
    std::map<std::vector<std::vector<int>>, std::set<Word>> by_p;
    for (const Word& w : all_words(len, 4)) by_p[rsk_insertion_rows(w)].insert(w);
    for (const auto& [p, members] : by_p) {
      const auto cls = knuth_class(*members.begin(), 100000);
      EXPECT_EQ(std::set<Word>(cls.begin(), cls.end()), members) << len;
    }
  }
}

TEST(KnuthEquivalent, TableauxByReadingWord) {
  EXPECT_TRUE(knuth_equivalent(tab(". 1/1 2"), tab("1 1/2")));
  EXPECT_FALSE(knuth_equivalent(tab(". 1/2"), tab("1 2")));
}
