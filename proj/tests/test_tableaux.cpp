#include <gtest/gtest.h>

#include <set>

#include "lrc/enumerate.hpp"
#include "test_helpers.hpp"

using namespace lrc;
using test::tab;
using test::word;

TEST(Partition, NormalisesAndCompares) {
  EXPECT_EQ(Partition({3, 2, 0}), Partition({3, 2}));
  EXPECT_EQ(Partition({3, 2, 0}).declared_length(), 3);
  EXPECT_EQ(Partition({3, 2, 0}).length(), 2);
  EXPECT_EQ(Partition({3, 2, 1}).size(), 6);
  EXPECT_TRUE(Partition({3, 2, 1}).contains(Partition({2, 1})));
  EXPECT_FALSE(Partition({2, 1}).contains(Partition({1, 1, 1})));
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({2, -1}), Error);
}

TEST(Partition, Enumeration) {
  // Partition numbers p(0..8).
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(static_cast<int>(partitions_of(n).size()), p[n]) << n;
  EXPECT_EQ(partitions_of(4).front(), Partition({4}));
  EXPECT_EQ(partitions_of(6, 2, 4).size(), 2u);  // 42 and 33
  // Subpartitions of (2,1): empty, 1, 2, 11, 21.
  EXPECT_EQ(subpartitions(Partition({2, 1})).size(), 5u);
}

TEST(SkewShape, RejectsNonContainedInner) { EXPECT_THROW(SkewShape(Partition({2}), Partition({1, 1})), Error); }

TEST(SkewTableau, ValidatesSemistandard) {
  EXPECT_THROW(SkewTableau(Partition({2}), Partition({0}), {{2, 1}}), Error);
  EXPECT_THROW(SkewTableau(Partition({1, 1}), Partition({0, 0}), {{1}, {1}}), Error);
  EXPECT_NO_THROW(SkewTableau(Partition({2, 1}), Partition({1, 0}), {{1}, {1}}));
}

TEST(ReadingWord, Examples) {
  EXPECT_EQ(reading_word(tab(". . 1 1/. 1 2/2 3")).to_string(), "231211");
  EXPECT_EQ(reading_word(tab(". . 1 2/. 1 3/1 2")).to_string(), "121312");
  EXPECT_TRUE(reading_word(SkewTableau::empty(Partition({3, 1}))).empty());
  EXPECT_EQ(reading_word(tab("3 5")).to_string(), "35");
}

TEST(Content, Examples) {
  EXPECT_EQ(content(word("231211")).counts, (std::vector<int>{3, 2, 1}));
  EXPECT_TRUE(content(Word()).counts.empty());
  EXPECT_EQ(content(word("33")).counts, (std::vector<int>{0, 0, 2}));
  EXPECT_FALSE(content(word("33")).is_partition());
}

TEST(Ballot, Examples) {
  EXPECT_FALSE(is_ballot(word("121312")));
  EXPECT_TRUE(is_ballot(word("231211")));
  EXPECT_TRUE(is_ballot(Word()));
  EXPECT_FALSE(is_ballot(word("12")));
  EXPECT_TRUE(is_ballot(word("21")));
}

TEST(Ballot, AgreesWithSuffixDefinition) {
  // Oracle: every suffix has weakly decreasing letter counts.
  for (int len = 0; len <= 6; ++len) {
    std::vector<int> w(len, 1);
    while (true) {
      bool ok = true;
      int c[4] = {0, 0, 0, 0};
      for (int k = len - 1; k >= 0 && ok; --k) {
        ++c[w[k]];
        ok = c[1] >= c[2] && c[2] >= c[3];
      }
      EXPECT_EQ(is_ballot(Word(w)), ok);
      int k = len - 1;
      while (k >= 0 && w[k] == 3) w[k--] = 1;
      if (k < 0) break;
      ++w[k];
    }
  }
}

TEST(Standardize, Examples) {
  const SkewTableau u = tab(". . . 1 3/. . 2 4/1 2 3");
  EXPECT_EQ(standardize(u), tab(". . . 2 6/. . 4 7/1 3 5"));
  const SkewTableau s = tab(". 1 3/2 4");
  EXPECT_EQ(standardize(s), s);
  EXPECT_EQ(standardize(tab("1 1")), tab("1 2"));
  EXPECT_TRUE(is_standard(standardize(u)));
  EXPECT_FALSE(is_standard(u));
}

TEST(CompanionWord, Examples) {
  EXPECT_EQ(companion_word(tab(". . . 1 3/. . 2 4/1 2 3")).to_string(), "2132313");
  EXPECT_EQ(companion_word(tab(". . . 4 6/. . 5 7/4 5 6")).to_string(), "2132313");
  EXPECT_TRUE(companion_word(SkewTableau::empty(Partition({2, 1}))).empty());
  EXPECT_EQ(companion_word(tab("1 2 3")).to_string(), "111");
}

TEST(Yamanouchi, Examples) {
  EXPECT_EQ(yamanouchi_tableau(Partition({2, 1})), tab("1 1/2"));
  EXPECT_EQ(yamanouchi_tableau(Partition({0})).size(), 0);
  EXPECT_EQ(yamanouchi_tableau(Partition({6, 4})), tab("1 1 1 1 1 1/2 2 2 2"));
  EXPECT_TRUE(is_ballot(yamanouchi_tableau(Partition({4, 2, 2, 1}))));
}

TEST(RestrictRows, Examples) {
  const SkewTableau t = tab(". . . . . . 1 1 1/. . . . 1 1 2/1 2 2 2 2 3/3 3 3 3 4");
  const auto [below, top] = restrict_rows(t, 3);
  EXPECT_EQ(reading_word(below).to_string(), "33334");
  EXPECT_EQ(top.num_rows(), 3);
  EXPECT_EQ(top, tab(". . . . . . 1 1 1/. . . . 1 1 2/1 2 2 2 2 3"));
  EXPECT_EQ(restrict_rows(t, 0).first.size(), t.size());
  EXPECT_EQ(restrict_rows(t, 0).second.size(), 0);
  EXPECT_EQ(restrict_rows(t, 4).first.size(), 0);
  EXPECT_EQ(restrict_rows(t, 4).second, t);
}

TEST(EnumerateSsyt, SmallShapes) {
  EXPECT_EQ(enumerate_ssyt(SkewShape(Partition({1}), Partition({0})), 3),
            (std::vector<SkewTableau>{tab("1"), tab("2"), tab("3")}));
  EXPECT_EQ(enumerate_ssyt(SkewShape(Partition({2}), Partition({0})), 2),
            (std::vector<SkewTableau>{tab("1 1"), tab("1 2"), tab("2 2")}));
  EXPECT_EQ(enumerate_ssyt(SkewShape(Partition({2, 1}), Partition({0, 0})), 2),
            (std::vector<SkewTableau>{tab("1 1/2"), tab("1 2/2")}));
}

// Oracle: fill every cell with every letter and keep the semistandard ones.
static std::size_t brute_ssyt_count(const SkewShape& shape, int max_letter, const Partition* nu_ballot) {
  std::vector<Cell> cells;
  for (int i = 1; i <= shape.outer.declared_length(); ++i)
    for (int j = shape.inner[i] + 1; j <= shape.outer[i]; ++j) cells.push_back({i, j});
  std::vector<int> f(cells.size(), 1);
  std::size_t count = 0;
  while (true) {
    std::map<Cell, int> m;
    for (std::size_t k = 0; k < cells.size(); ++k) m[cells[k]] = f[k];
    bool ok = true;
    for (auto [c, x] : m) {
      auto r = m.find({c.row, c.col + 1});
      auto d = m.find({c.row + 1, c.col});
      if ((r != m.end() && r->second < x) || (d != m.end() && d->second <= x)) ok = false;
    }
    if (ok && nu_ballot) {
      std::vector<int> w;
      for (int i = shape.outer.declared_length(); i >= 1; --i)
        for (int j = shape.inner[i] + 1; j <= shape.outer[i]; ++j) w.push_back(m[{i, j}]);
      const Word ww(w);
      ok = is_ballot(ww) && Partition(content(ww).counts) == *nu_ballot;
    }
    count += ok;
    std::size_t k = 0;
    while (k < f.size() && f[k] == max_letter) f[k++] = 1;
    if (k == f.size()) break;
    ++f[k];
  }
  return count;
}

TEST(EnumerateSsyt, AgreesWithBruteForce) {
  for (const auto& lambda : partitions_of(5))
    for (const auto& mu : subpartitions(lambda)) {
      const SkewShape s(lambda, mu.padded(lambda.declared_length()));
      const auto all = enumerate_ssyt(s, 3);
      EXPECT_EQ(all.size(), brute_ssyt_count(s, 3, nullptr)) << lambda.to_string() << "/" << mu.to_string();
      std::set<std::string> distinct;
      for (const auto& t : all) distinct.insert(io::to_text(t));
      EXPECT_EQ(distinct.size(), all.size());
    }
}

TEST(EnumerateBallot, Examples) {
  EXPECT_EQ(enumerate_ballot(SkewShape(Partition({2, 1}), Partition({0, 0})), Partition({2, 1})),
            (std::vector<SkewTableau>{yamanouchi_tableau(Partition({2, 1}))}));
  const SkewShape s(Partition({3, 2, 1}), Partition({2, 1, 0}));
  const Partition nu{2, 1};
  EXPECT_EQ(enumerate_ballot(s, nu).size(), brute_ssyt_count(s, 3, &nu));
  EXPECT_EQ(enumerate_ballot(s, Partition({2, 1})).size(), 2u);
  const auto ex = enumerate_ballot(SkewShape(Partition({4, 3, 2}), Partition({2, 1, 0})), Partition({3, 2, 1}));
  EXPECT_NE(std::find(ex.begin(), ex.end(), tab(". . 1 1/. 1 2/2 3")), ex.end());
}

TEST(EnumerateBallot, AgreesWithFillAndFilter) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : subpartitions(lambda))
        for (const auto& nu : partitions_of(n - mu.size(), 3, n)) {
          const SkewShape s(lambda, mu.padded(lambda.declared_length()));
          EXPECT_EQ(enumerate_ballot(s, nu).size(), brute_ssyt_count(s, 3, &nu));
        }
}

TEST(EnumerateLr, AllBallotAndDistinct) {
  const auto all = enumerate_lr_tableaux(5);
  std::set<std::string> seen;
  for (const auto& t : all) {
    EXPECT_TRUE(is_ballot(t));
    EXPECT_LE(t.outer().size(), 5);
    seen.insert(io::to_json(t).dump());
  }
  EXPECT_EQ(seen.size(), all.size());
}
