#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrc/commutor.hpp"
#include "lrc/insertion.hpp"
#include "lrc/switching.hpp"
#include "lrc/tableau.hpp"

namespace lrc::io {

using nlohmann::json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);
/// Accepts "3,2,1", "3 2 1", "(3,2,1)" or "321" (single digits).
Partition parse_partition(const std::string& s);

json to_json(const Word& w);
/// Accepts a JSON integer array or a digit string.
Word word_from_json(const json& j);
/// Digit string, comma separated list, or JSON array.
Word parse_word(const std::string& s);

// {"outer": [..], "inner": [..], "rows": [[..], ..]}
json to_json(const SkewTableau& t);
SkewTableau tableau_from_json(const json& j);

/// One line per row: "." for each inner blank, then the entries, separated by
/// single spaces. Every line ends with '\n'.
std::string to_text(const SkewTableau& t);
SkewTableau tableau_from_text(const std::string& s);
/// JSON when the first non-blank character is '{', text otherwise.
SkewTableau parse_tableau(const std::string& s);

// {"y": tableau, "t": tableau}
json to_json(const GluedPair& p);
/// Also accepts a bare tableau object, read as the skew factor.
GluedPair glued_from_json(const json& j);
/// Rows of Y plain, entries of the skew factor starred ("3*").
std::string to_text(const GluedPair& p);
/// Text with stars is read as a glued pair; text without stars is read as the
/// skew factor in tableau text format.
GluedPair glued_from_text(const std::string& s);
GluedPair parse_glued(const std::string& s);

// {"outer", "inner", "rows": [[value..]..], "groups": [[group..]..]}
json to_json(const TwoColorTableau& t);
TwoColorTableau two_color_from_json(const json& j);
/// U letters plain, V letters starred.
std::string to_text(const TwoColorTableau& t);
/// Inverse of to_text. U letters get group 1, or their own value as group
/// under Grouping::by_value.
TwoColorTableau two_color_from_text(const std::string& s,
                                    TwoColorTableau::Grouping grouping = TwoColorTableau::Grouping::single);

json to_json(const InsertionTrace& t);
json to_json(const Cell& c);
json to_json(const RecursionLevel& level);
json to_json(const StagedDecomposition& s);

std::string read_file(const std::string& path);

}  // namespace lrc::io
