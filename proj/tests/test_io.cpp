#include <gtest/gtest.h>

#include "lrc/enumerate.hpp"
#include "test_helpers.hpp"

using namespace lrc;
using test::tab;

TEST(Io, PartitionForms) {
  const Partition p{3, 2, 1};
  EXPECT_EQ(io::parse_partition("3,2,1"), p);
  EXPECT_EQ(io::parse_partition("(3,2,1)"), p);
  EXPECT_EQ(io::parse_partition("3 2 1"), p);
  EXPECT_EQ(io::parse_partition("321"), p);
  EXPECT_EQ(io::parse_partition("[12,3]"), Partition({12, 3}));
  EXPECT_EQ(io::parse_partition("4,4,3,2,0").declared_length(), 5);
  EXPECT_THROW(io::parse_partition("1,2"), Error);
  EXPECT_THROW(io::parse_partition("3,x"), Error);
  EXPECT_EQ(io::partition_from_json(io::to_json(p)), p);
}

TEST(Io, WordForms) {
  EXPECT_EQ(io::parse_word("2132313"), Word({2, 1, 3, 2, 3, 1, 3}));
  EXPECT_EQ(io::parse_word("[10, 2]"), Word({10, 2}));
  EXPECT_EQ(io::parse_word("10,2"), Word({10, 2}));
  EXPECT_EQ(Word({10, 2}).to_string(), "10,2");
  EXPECT_EQ(io::word_from_json(io::to_json(Word({1, 2}))), Word({1, 2}));
  EXPECT_THROW(io::parse_word("[1, \"a\"]"), Error);
}

TEST(Io, TableauText) {
  const std::string s = ". . 1 1\n. 1 2\n2 3\n";
  const SkewTableau t = io::tableau_from_text(s);
  EXPECT_EQ(t.outer(), Partition({4, 3, 2}));
  EXPECT_EQ(t.inner(), Partition({2, 1, 0}));
  EXPECT_EQ(io::to_text(t), s);
  EXPECT_THROW(io::tableau_from_text("1 . 2\n"), Error);
  EXPECT_THROW(io::tableau_from_text("1 x\n"), Error);
  EXPECT_THROW(io::tableau_from_text("2 1\n"), Error);
}

TEST(Io, TableauJson) {
  const SkewTableau t = tab(". . 1 1/. 1 2/2 3");
  const auto j = io::to_json(t);
  EXPECT_EQ(j.dump(), R"({"inner":[2,1,0],"outer":[4,3,2],"rows":[[1,1],[1,2],[2,3]]})");
  EXPECT_EQ(io::parse_tableau(j.dump()), t);
  EXPECT_THROW(io::parse_tableau("{\"outer\": [1]}"), Error);
  EXPECT_THROW(io::parse_tableau("{not json"), Error);
}

TEST(Io, RoundTripsEveryLrTableau) {
  for (const auto& t : enumerate_lr_tableaux(6)) {
    const std::string dumped = io::to_json(t).dump();
    EXPECT_EQ(io::to_json(io::tableau_from_json(io::json::parse(dumped))).dump(), dumped);
    EXPECT_EQ(io::tableau_from_text(io::to_text(t)), t);
    const GluedPair p(t);
    const std::string g = io::to_json(p).dump();
    EXPECT_EQ(io::to_json(io::parse_glued(g)).dump(), g);
    if (t.size() > 0) EXPECT_EQ(io::glued_from_text(io::to_text(p)), p);
  }
}

TEST(Io, GluedText) {
  const GluedPair p = io::glued_from_text("1 1 1*\n2 2*\n");
  EXPECT_EQ(p.skew(), tab(". . 1/. 2"));
  EXPECT_EQ(io::to_text(p), "1 1 1*\n2 2*\n");
  EXPECT_THROW(io::glued_from_text("1 2 1*\n"), Error);
  EXPECT_THROW(io::glued_from_text("1 1* 1\n"), Error);
  // Without stars the text is the skew factor.
  EXPECT_EQ(io::glued_from_text(". 1\n1\n").skew(), tab(". 1/1"));
  // A bare tableau object is read as the skew factor; a stale "y" is rejected.
  EXPECT_EQ(io::parse_glued(io::to_json(tab(". 1/1")).dump()).skew(), tab(". 1/1"));
  auto j = io::to_json(p);
  j["y"] = io::to_json(tab("1 1"));
  EXPECT_THROW(io::glued_from_json(j), Error);
}

TEST(Io, TwoColour) {
  const std::string s = "1 1* 1 1\n2 2* 2*\n1* 2 2\n";
  const TwoColorTableau t = io::two_color_from_text(s);
  EXPECT_EQ(io::to_text(t), s);
  EXPECT_EQ(io::two_color_from_json(io::to_json(t)), t);
  const TwoColorTableau b = io::two_color_from_text(s, TwoColorTableau::Grouping::by_value);
  EXPECT_EQ(b.at({2, 1}).group, 2);
  EXPECT_EQ(t.at({2, 1}).group, 1);
  EXPECT_EQ(t.at({1, 2}).group, kOuterMember);
}

TEST(Io, TraceJson) {
  auto [t, tr] = internal_insert(tab(". 1 3/2 3"), 2);
  EXPECT_EQ(io::to_json(tr).dump(), R"({"created":[3,1],"route":[[2,1],[3,1]],"vacated":[2,1]})");
}
