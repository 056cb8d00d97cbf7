#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lrc/partition.hpp"

namespace lrc {

/// Finite sequence of positive integers.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  /// Parses a compact digit string such as "2132313" (letters 1..9 only).
  static Word from_digits(const std::string& digits);

  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int i) const { return letters_[i]; }
  int max_letter() const;

  Word operator+(const Word& other) const;
  Word reversed() const;

  /// Digit string when every letter is at most 9, comma separated otherwise.
  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// counts[i] is the multiplicity of the letter i+1.
struct Composition {
  std::vector<int> counts;

  int operator[](int letter) const {
    return letter >= 1 && letter <= static_cast<int>(counts.size()) ? counts[letter - 1] : 0;
  }
  bool is_partition() const;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Semistandard filling of a skew shape. Only filled cells are stored; the
/// inner shape is positional.
class SkewTableau {
 public:
  SkewTableau() = default;
  SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows);

  /// The empty tableau of shape mu/mu.
  static SkewTableau empty(const Partition& mu);

  int num_rows() const { return static_cast<int>(rows_.size()); }
  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  SkewShape shape() const { return SkewShape(outer_, inner_); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// Row i (1-based); empty beyond the declared rows.
  const std::vector<int>& row(int i) const;

  bool is_filled(Cell c) const;
  int at(Cell c) const;
  int size() const;
  int max_entry() const;
  /// Filled cells in row-major order.
  std::vector<Cell> cells() const;

  SkewTableau padded(int n) const;
  SkewTableau trimmed() const;

  /// Equality ignores trailing rows whose inner and outer parts are both zero.
  friend bool operator==(const SkewTableau& a, const SkewTableau& b);

 private:
  Partition outer_;
  Partition inner_;
  std::vector<std::vector<int>> rows_;
};

/// Rows bottom to top, each left to right.
Word reading_word(const SkewTableau& t);
Composition content(const Word& w);
Composition content(const SkewTableau& t);

/// True iff the content of every suffix of w is a partition.
bool is_ballot(const Word& w);
bool is_ballot(const SkewTableau& t);
bool is_standard(const SkewTableau& t);

/// Renumbers the entries 1..|U|; equal entries are ordered by column.
SkewTableau standardize(const SkewTableau& u);

/// u_{|U|} ... u_1 where u_p is the row holding p in standardize(u).
Word companion_word(const SkewTableau& u);

/// Row i holds mu_i copies of i.
SkewTableau yamanouchi_tableau(const Partition& mu);

/// Splits t across row i: first the rows below i, then the first i rows.
std::pair<SkewTableau, SkewTableau> restrict_rows(const SkewTableau& t, int i);

/// The first i rows of t (shorthand for restrict_rows(t, i).second).
SkewTableau first_rows(const SkewTableau& t, int i);

}  // namespace lrc
