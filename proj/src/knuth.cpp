#include "lrc/knuth.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lrc {

namespace {

using Rows = std::vector<std::vector<int>>;

Cell row_insert(Rows& rows, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) rows.emplace_back();
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
    }
    std::swap(*it, x);
  }
}

SkewTableau normal_tableau(Rows rows) {
  std::vector<int> shape;
  for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
  return SkewTableau(Partition(shape), Partition(), std::move(rows));
}

}  // namespace

std::pair<SkewTableau, Cell> schensted_insert(const SkewTableau& p, int x) {
  if (!p.inner().empty()) throw Error("schensted_insert needs a normal-shape tableau");
  if (x < 1) throw Error("letters must be positive");
  Rows rows = p.trimmed().rows();
  Cell c = row_insert(rows, x);
  return {normal_tableau(std::move(rows)), c};
}

std::vector<std::vector<int>> rsk_insertion_rows(const Word& w) {
  Rows rows;
  for (int x : w.letters()) row_insert(rows, x);
  return rows;
}

RskPair rsk(const Word& w) {
  Rows p, q;
  int step = 0;
  for (int x : w.letters()) {
    Cell c = row_insert(p, x);
    if (c.row > static_cast<int>(q.size())) q.emplace_back();
    q[c.row - 1].push_back(++step);
  }
  return {normal_tableau(std::move(p)), normal_tableau(std::move(q))};
}

bool knuth_equivalent(const Word& u, const Word& v) {
  return u.size() == v.size() && rsk_insertion_rows(u) == rsk_insertion_rows(v);
}

bool knuth_equivalent(const SkewTableau& a, const SkewTableau& b) {
  return knuth_equivalent(reading_word(a), reading_word(b));
}

std::vector<Word> elementary_moves(const Word& w) {
  std::vector<Word> out;
  const auto& l = w.letters();
  auto emit = [&](std::size_t k, int a, int b, int c) {
    std::vector<int> m = l;
    m[k] = a;
    m[k + 1] = b;
    m[k + 2] = c;
    out.emplace_back(std::move(m));
  };
  for (std::size_t k = 0; k + 2 < l.size(); ++k) {
    const int a = l[k], b = l[k + 1], c = l[k + 2];
    // x z y -> z x y with x <= y < z
    if (a <= c && c < b) emit(k, b, a, c);
    // z x y -> x z y with x <= y < z
    if (b <= c && c < a) emit(k, b, a, c);
    // y x z -> y z x with x < y <= z
    if (b < a && a <= c) emit(k, a, c, b);
    // y z x -> y x z with x < y <= z
    if (c < a && a <= b) emit(k, a, c, b);
  }
  return out;
}

std::vector<Word> knuth_class(const Word& w, int cap) {
  if (cap < 1) throw Error("knuth_class cap must be at least 1");
  std::vector<Word> order{w};
  std::set<Word> seen{w};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Word& m : elementary_moves(order[head])) {
      if (seen.insert(m).second) {
        if (static_cast<int>(order.size()) == cap)
          throw Error("knuth class of " + w.to_string() + " exceeds cap " + std::to_string(cap));
        order.push_back(std::move(m));
      }
    }
  }
  return order;
}

}  // namespace lrc
