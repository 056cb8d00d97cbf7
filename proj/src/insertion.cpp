#include "lrc/insertion.hpp"

#include <algorithm>

namespace lrc {

namespace {

// Mutable copy of a tableau's storage for the insertion algorithms.
struct Workspace {
  std::vector<int> outer, inner;
  std::vector<std::vector<int>> rows;

  explicit Workspace(const SkewTableau& t)
      : outer(t.outer().parts()), inner(t.inner().parts()), rows(t.rows()) {}

  int num_rows() const { return static_cast<int>(rows.size()); }

  void ensure_rows(int n) {
    if (n <= num_rows()) return;
    outer.resize(n, 0);
    inner.resize(n, 0);
    rows.resize(n);
  }

  int out(int r) const { return r >= 1 && r <= num_rows() ? outer[r - 1] : 0; }
  int in(int r) const { return r >= 1 && r <= num_rows() ? inner[r - 1] : 0; }

  SkewTableau freeze() const { return SkewTableau(Partition(outer), Partition(inner), rows); }
};

std::vector<Cell> standard_order(const SkewTableau& u) {
  std::vector<Cell> cells = u.cells();
  std::sort(cells.begin(), cells.end(), [&](Cell a, Cell b) {
    int va = u.at(a), vb = u.at(b);
    return va != vb ? va < vb : a.col < b.col;
  });
  return cells;
}

}  // namespace

bool is_inner_corner(const Partition& mu, int i) { return i == 1 || (i > 1 && mu[i - 1] > mu[i]); }

std::vector<int> inner_corners(const SkewTableau& t) {
  std::vector<int> out;
  for (int i = 1; i <= t.num_rows() + 1; ++i)
    if (is_inner_corner(t.inner(), i)) out.push_back(i);
  return out;
}

std::pair<SkewTableau, InsertionTrace> internal_insert(const SkewTableau& t, int i) {
  if (!is_inner_corner(t.inner(), i))
    throw Error("row " + std::to_string(i) + " has no inner corner");
  Workspace w(t);
  w.ensure_rows(i);
  InsertionTrace trace;
  if (w.out(i) == w.in(i)) {
    ++w.inner[i - 1];
    w.outer[i - 1] = w.inner[i - 1];
    trace.vacated = trace.created = {i, w.inner[i - 1]};
    return {w.freeze(), trace};
  }
  auto& first = w.rows[i - 1];
  int x = first.front();
  first.erase(first.begin());
  ++w.inner[i - 1];
  trace.vacated = {i, w.inner[i - 1]};
  trace.route.push_back(trace.vacated);
  for (int r = i + 1;; ++r) {
    w.ensure_rows(r);
    auto& row = w.rows[r - 1];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      ++w.outer[r - 1];
      trace.created = {r, w.outer[r - 1]};
      trace.route.push_back(trace.created);
      break;
    }
    trace.route.push_back({r, w.inner[r - 1] + 1 + static_cast<int>(it - row.begin())});
    std::swap(*it, x);
  }
  return {w.freeze(), trace};
}

SkewTableau apply_order_word(const SkewTableau& t, const Word& u,
                             std::vector<InsertionTrace>& traces) {
  SkewTableau cur = t;
  for (int k = u.size() - 1, step = 1; k >= 0; --k, ++step) {
    if (!is_inner_corner(cur.inner(), u[k]))
      throw Error("order word " + u.to_string() + ": step " + std::to_string(step) + " (row " +
                  std::to_string(u[k]) + ") is not an inner corner");
    auto [next, trace] = internal_insert(cur, u[k]);
    cur = std::move(next);
    traces.push_back(std::move(trace));
  }
  return cur;
}

SkewTableau apply_order_word(const SkewTableau& t, const Word& u) {
  std::vector<InsertionTrace> traces;
  return apply_order_word(t, u, traces);
}

std::pair<GluedPair, InsertionTrace> extended_insert(const GluedPair& p, int i) {
  const int n = p.num_rows();
  if (i < 1 || i > n + 1) throw Error("extended insertion row out of range");
  if (i == n + 1 && n > 0 && p.skew().inner()[n] == 0)
    throw Error("extended insertion at row n+1 requires mu_n > 0");
  auto [skew, trace] = internal_insert(p.skew(), i);
  return {GluedPair(std::move(skew)), std::move(trace)};
}

SkewTableau tableau_from_cells(const Partition& outer, const Partition& inner,
                               const std::map<Cell, int>& cells) {
  const int n = std::max(outer.declared_length(), inner.declared_length());
  std::vector<std::vector<int>> rows(n);
  for (int r = 1; r <= n; ++r)
    for (int c = inner[r] + 1; c <= outer[r]; ++c) {
      auto it = cells.find({r, c});
      if (it == cells.end()) throw Error("missing entry for a cell of the shape");
      rows[r - 1].push_back(it->second);
    }
  if (static_cast<int>(cells.size()) != outer.size() - inner.size())
    throw Error("entries given outside the shape");
  return SkewTableau(outer, inner, std::move(rows));
}

std::pair<SkewTableau, SkewTableau> skew_rsk_forward(const SkewTableau& t, const SkewTableau& u) {
  if (t.inner() != u.inner())
    throw Error("T and U must share their inner border: " + t.inner().to_string() + " vs " +
                u.inner().to_string());
  SkewTableau p = t;
  std::map<Cell, int> recorded;
  for (Cell c : standard_order(u)) {
    auto [next, trace] = internal_insert(p, c.row);
    p = std::move(next);
    recorded[trace.created] = u.at(c);
  }
  return {p, tableau_from_cells(p.outer(), t.outer(), recorded)};
}

std::pair<SkewTableau, SkewTableau> skew_rsk_inverse(const SkewTableau& p, const SkewTableau& q) {
  if (p.outer() != q.outer())
    throw Error("P and Q must share their outer border: " + p.outer().to_string() + " vs " +
                q.outer().to_string());
  Workspace w(p);
  w.ensure_rows(q.num_rows());
  const int n = w.num_rows();
  std::map<Cell, int> recovered;
  std::vector<Cell> order = standard_order(q);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Cell b = *it;
    const int r = b.row;
    if (b.col != w.out(r) || w.out(r + 1) >= b.col)
      throw Error("recording cell is not an outer corner of P");
    if (b.col <= w.in(r)) {
      // Blank step: the cell was adjoined to both borders.
      if (b.col != w.in(r) || w.in(r + 1) >= b.col)
        throw Error("malformed reverse step at a blank cell");
      --w.inner[r - 1];
      --w.outer[r - 1];
      recovered[b] = q.at(b);
      continue;
    }
    int x = w.rows[r - 1].back();
    w.rows[r - 1].pop_back();
    --w.outer[r - 1];
    bool deposited = false;
    for (int k = r - 1; k >= 1; --k) {
      auto& row = w.rows[k - 1];
      auto lb = std::lower_bound(row.begin(), row.end(), x);
      if (lb != row.begin()) {
        std::swap(*(lb - 1), x);
        continue;
      }
      // Nothing smaller in row k: x was vacated from the inner corner here.
      const int col = w.in(k);
      if (col == 0 || w.in(k + 1) >= col) throw Error("malformed reverse bump: no inner corner");
      if (k < n && col > w.in(k + 1) && col <= w.out(k + 1) &&
          w.rows[k][col - w.in(k + 1) - 1] <= x)
        throw Error("malformed reverse bump: column strictness");
      row.insert(row.begin(), x);
      --w.inner[k - 1];
      recovered[{k, col}] = q.at(b);
      deposited = true;
      break;
    }
    if (!deposited) throw Error("malformed reverse bump: route left the tableau");
  }
  SkewTableau t = w.freeze();
  if (t.outer() != q.inner()) throw Error("recovered T does not end at Q's inner border");
  SkewTableau u = tableau_from_cells(p.inner().padded(std::max(n, p.inner().length())),
                                     t.inner().padded(n), recovered);
  return {t, u};
}

}  // namespace lrc
