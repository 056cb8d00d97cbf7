#pragma once

#include <utility>
#include <vector>

#include "lrc/tableau.hpp"

namespace lrc {

/// Classical RSK output: p semistandard, q standard, same normal shape.
struct RskPair {
  SkewTableau p;
  SkewTableau q;
  bool operator==(const RskPair&) const = default;
};

/// Row-inserts x into the normal-shape tableau p. Returns the new tableau and
/// the created cell.
std::pair<SkewTableau, Cell> schensted_insert(const SkewTableau& p, int x);

RskPair rsk(const Word& w);

/// The insertion tableau alone, computed on plain rows (the hot path of
/// every Knuth-equivalence test).
std::vector<std::vector<int>> rsk_insertion_rows(const Word& w);

bool knuth_equivalent(const Word& u, const Word& v);
bool knuth_equivalent(const SkewTableau& a, const SkewTableau& b);

/// Every word reachable from w by one elementary Knuth move on an adjacent
/// triple:  x z y <-> z x y  (x <= y < z)  and  y x z <-> y z x  (x < y <= z).
std::vector<Word> elementary_moves(const Word& w);

/// Breadth-first closure of w under elementary moves, in discovery order.
/// Throws when the class has more than cap members.
std::vector<Word> knuth_class(const Word& w, int cap);

}  // namespace lrc
