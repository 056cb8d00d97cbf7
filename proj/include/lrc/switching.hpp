#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lrc/tableau.hpp"

namespace lrc {

/// A filled cell of a glued pair U u V. Group 0 marks letters of V (the outer
/// member); groups >= 1 mark letters of U. Plain switching puts all of U in
/// group 1; staged switching gives each row of a Yamanouchi U its own group.
struct TwoColorEntry {
  int value = 0;
  int group = 0;

  bool in_u() const { return group != 0; }
  bool operator==(const TwoColorEntry&) const = default;
};

inline constexpr int kOuterMember = 0;

/// An adjacent (U-letter, V-letter) pair; cell_v is directly right of or
/// directly below cell_u.
struct SwitchSite {
  Cell cell_u;
  Cell cell_v;
  bool operator==(const SwitchSite&) const = default;
};

class TwoColorTableau {
 public:
  enum class Grouping { single, by_value };

  TwoColorTableau() = default;
  TwoColorTableau(Partition outer, Partition inner, std::vector<std::vector<TwoColorEntry>> rows);

  /// U u V for V extending U. Throws when V does not extend U.
  static TwoColorTableau glue(const SkewTableau& u, const SkewTableau& v,
                              Grouping grouping = Grouping::single);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<TwoColorEntry>>& rows() const { return rows_; }

  bool is_filled(Cell c) const;
  const TwoColorEntry& at(Cell c) const;
  std::vector<Cell> cells() const;

  /// Both colour classes (every U group separately) satisfy the filling
  /// conditions: for same-class cells x' weakly north-west of x, x >= x',
  /// strictly when they share a column.
  bool is_valid() const;

  /// True when every V letter precedes every U letter in its row and the V
  /// cells form a skew shape, i.e. the pair is of the form S u H.
  bool is_fully_switched() const;

  /// (S, H): the V letters and the U letters of a fully switched pair.
  std::pair<SkewTableau, SkewTableau> split() const;

  /// Same as split for a pair whose V letters lie between U groups below
  /// `group` and U groups at or above it: returns (V part, U groups >= group).
  std::pair<SkewTableau, SkewTableau> split_at_group(int group) const;

  bool operator==(const TwoColorTableau&) const = default;

  // Swaps the two cells of a site without checks. Used by apply_switch.
  void swap_cells(Cell a, Cell b);

 private:
  bool consistent_at(Cell c) const;

  Partition outer_;
  Partition inner_;
  std::vector<std::vector<TwoColorEntry>> rows_;
};

/// Admissible switch sites in row-major order of the U cell, horizontal
/// interchange before vertical. When group is set only that U group takes part.
std::vector<SwitchSite> switch_sites(const TwoColorTableau& t, std::optional<int> group = {});

bool is_admissible(const TwoColorTableau& t, const SwitchSite& s);

/// Interchanges the letters (and colours) of an admissible site.
TwoColorTableau apply_switch(const TwoColorTableau& t, const SwitchSite& s);

enum class SwitchStrategy { infusion, greedy, random };

struct SwitchOrder {
  SwitchStrategy strategy = SwitchStrategy::greedy;
  std::uint64_t seed = 0;
};

/// Switches until no site is admissible. Frames, when requested, receive
/// every intermediate state including the first and the last.
TwoColorTableau switch_to_end(TwoColorTableau t, SwitchOrder order,
                              std::vector<TwoColorTableau>* frames = nullptr);

/// Greedy switching of V with one U group only (a stage of staged switching).
TwoColorTableau switch_group(TwoColorTableau t, int group,
                             std::vector<TwoColorTableau>* frames = nullptr);

/// U u V -> S u H with U == H and V == S (Knuth equivalence).
std::pair<SkewTableau, SkewTableau> switching(const SkewTableau& u, const SkewTableau& v,
                                              SwitchOrder order = {});

}  // namespace lrc
