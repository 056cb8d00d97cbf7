#include "lrc/switching.hpp"

#include <algorithm>
#include <random>

namespace lrc {

TwoColorTableau::TwoColorTableau(Partition outer, Partition inner,
                                 std::vector<std::vector<TwoColorEntry>> rows) {
  const int n = std::max({outer.declared_length(), inner.declared_length(),
                          static_cast<int>(rows.size())});
  std::vector<int> o = outer.parts(), in = inner.parts();
  o.resize(n, 0);
  in.resize(n, 0);
  outer_ = Partition(std::move(o));
  inner_ = Partition(std::move(in));
  if (!outer_.contains(inner_)) throw Error("two-colour tableau inner shape exceeds outer shape");
  rows_ = std::move(rows);
  rows_.resize(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows_[i - 1].size()) != outer_[i] - inner_[i])
      throw Error("two-colour tableau row " + std::to_string(i) + " does not match its shape");
    for (const auto& e : rows_[i - 1])
      if (e.value < 1 || e.group < 0) throw Error("two-colour tableau entry out of range");
  }
}

TwoColorTableau TwoColorTableau::glue(const SkewTableau& u, const SkewTableau& v,
                                      Grouping grouping) {
  if (v.inner() != u.outer())
    throw Error("V does not extend U: V's inner shape " + v.inner().to_string() +
                " differs from U's outer shape " + u.outer().to_string());
  const int n = std::max(u.num_rows(), v.num_rows());
  std::vector<std::vector<TwoColorEntry>> rows(n);
  for (int i = 1; i <= n; ++i) {
    for (int x : u.row(i))
      rows[i - 1].push_back({x, grouping == Grouping::single ? 1 : x});
    for (int x : v.row(i)) rows[i - 1].push_back({x, kOuterMember});
  }
  return TwoColorTableau(v.outer().padded(std::max(n, v.outer().length())),
                         u.inner().padded(std::max(n, u.inner().length())), std::move(rows));
}

bool TwoColorTableau::is_filled(Cell c) const {
  return c.row >= 1 && c.row <= num_rows() && c.col > inner_[c.row] && c.col <= outer_[c.row];
}

const TwoColorEntry& TwoColorTableau::at(Cell c) const {
  if (!is_filled(c)) throw Error("two-colour cell is not filled");
  return rows_[c.row - 1][c.col - inner_[c.row] - 1];
}

std::vector<Cell> TwoColorTableau::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= num_rows(); ++i)
    for (int c = inner_[i] + 1; c <= outer_[i]; ++c) out.push_back({i, c});
  return out;
}

void TwoColorTableau::swap_cells(Cell a, Cell b) {
  std::swap(rows_[a.row - 1][a.col - inner_[a.row] - 1], rows_[b.row - 1][b.col - inner_[b.row] - 1]);
}

namespace {

// Filling condition for entry e placed at c against every other cell of its
// class. `other`/`other_e` override one cell so that a prospective switch can
// be tested without copying.
bool consistent_with(const TwoColorTableau& t, Cell c, TwoColorEntry e, Cell other,
                     TwoColorEntry other_e) {
  for (int r = 1; r <= t.num_rows(); ++r) {
    const auto& row = t.rows()[r - 1];
    const int first = t.inner()[r] + 1;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const Cell d{r, first + static_cast<int>(k)};
      if (d == c) continue;
      const TwoColorEntry& f = d == other ? other_e : row[k];
      if (f.group != e.group) continue;
      if (d.row <= c.row && d.col <= c.col) {
        if (e.value < f.value || (d.col == c.col && e.value == f.value)) return false;
      } else if (d.row >= c.row && d.col >= c.col) {
        if (f.value < e.value || (d.col == c.col && e.value == f.value)) return false;
      }
    }
  }
  return true;
}

bool adjacent_right_or_below(Cell u, Cell v) {
  return (v.row == u.row && v.col == u.col + 1) || (v.col == u.col && v.row == u.row + 1);
}

}  // namespace

bool TwoColorTableau::consistent_at(Cell c) const { return consistent_with(*this, c, at(c), c, at(c)); }

bool TwoColorTableau::is_valid() const {
  for (Cell c : cells())
    if (!consistent_at(c)) return false;
  return true;
}

std::pair<SkewTableau, SkewTableau> TwoColorTableau::split_at_group(int group) const {
  const int n = num_rows();
  std::vector<int> s_inner(n), s_outer(n);
  std::vector<std::vector<int>> s_rows(n), h_rows(n);
  for (int i = 1; i <= n; ++i) {
    // Expected layout: [U groups below `group`] [V] [U groups >= group].
    int phase = 0;
    s_inner[i - 1] = inner_[i];
    for (const auto& e : rows_[i - 1]) {
      int p = e.group == kOuterMember ? 1 : (e.group < group ? 0 : 2);
      if (p < phase) throw Error("pair is not fully switched in row " + std::to_string(i));
      phase = p;
      if (p == 0) ++s_inner[i - 1];
      if (p == 1) s_rows[i - 1].push_back(e.value);
      if (p == 2) h_rows[i - 1].push_back(e.value);
    }
    s_outer[i - 1] = s_inner[i - 1] + static_cast<int>(s_rows[i - 1].size());
  }
  SkewTableau s(Partition(s_outer), Partition(s_inner), std::move(s_rows));
  SkewTableau h(outer_, Partition(s_outer), std::move(h_rows));
  return {std::move(s), std::move(h)};
}

std::pair<SkewTableau, SkewTableau> TwoColorTableau::split() const { return split_at_group(1); }

bool TwoColorTableau::is_fully_switched() const {
  try {
    split();
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_admissible(const TwoColorTableau& t, const SwitchSite& s) {
  if (!t.is_filled(s.cell_u) || !t.is_filled(s.cell_v)) return false;
  if (!adjacent_right_or_below(s.cell_u, s.cell_v)) return false;
  const TwoColorEntry u = t.at(s.cell_u), v = t.at(s.cell_v);
  if (!u.in_u() || v.in_u()) return false;
  // After the interchange v sits at cell_u and u at cell_v.
  return consistent_with(t, s.cell_u, v, s.cell_v, u) && consistent_with(t, s.cell_v, u, s.cell_u, v);
}

std::vector<SwitchSite> switch_sites(const TwoColorTableau& t, std::optional<int> group) {
  std::vector<SwitchSite> out;
  for (Cell c : t.cells()) {
    const auto& e = t.at(c);
    if (!e.in_u() || (group && e.group != *group)) continue;
    for (Cell v : {Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}}) {
      SwitchSite s{c, v};
      if (is_admissible(t, s)) out.push_back(s);
    }
  }
  return out;
}

TwoColorTableau apply_switch(const TwoColorTableau& t, const SwitchSite& s) {
  if (!is_admissible(t, s)) throw Error("switch site is not admissible");
  TwoColorTableau out = t;
  out.swap_cells(s.cell_u, s.cell_v);
  return out;
}

namespace {

std::optional<SwitchSite> first_site(const TwoColorTableau& t, std::optional<int> group) {
  for (Cell c : t.cells()) {
    const auto& e = t.at(c);
    if (!e.in_u() || (group && e.group != *group)) continue;
    for (Cell v : {Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}}) {
      SwitchSite s{c, v};
      if (is_admissible(t, s)) return s;
    }
  }
  return std::nullopt;
}

void record(std::vector<TwoColorTableau>* frames, const TwoColorTableau& t) {
  if (frames) frames->push_back(t);
}

// Slides the U letters out through V by jeu de taquin, largest letter first
// (rightmost among equals).
TwoColorTableau infuse(TwoColorTableau t, std::vector<TwoColorTableau>* frames) {
  std::vector<Cell> order;
  for (Cell c : t.cells())
    if (t.at(c).in_u()) order.push_back(c);
  std::sort(order.begin(), order.end(), [&](Cell a, Cell b) {
    int va = t.at(a).value, vb = t.at(b).value;
    return va != vb ? va > vb : a.col > b.col;
  });
  for (Cell hole : order) {
    for (;;) {
      const Cell right{hole.row, hole.col + 1}, below{hole.row + 1, hole.col};
      const bool has_right = t.is_filled(right) && !t.at(right).in_u();
      const bool has_below = t.is_filled(below) && !t.at(below).in_u();
      if (!has_right && !has_below) break;
      Cell next = has_below ? below : right;
      if (has_right && has_below && t.at(right).value < t.at(below).value) next = right;
      t = apply_switch(t, {hole, next});
      record(frames, t);
      hole = next;
    }
  }
  return t;
}

}  // namespace

TwoColorTableau switch_to_end(TwoColorTableau t, SwitchOrder order,
                              std::vector<TwoColorTableau>* frames) {
  record(frames, t);
  switch (order.strategy) {
    case SwitchStrategy::infusion:
      return infuse(std::move(t), frames);
    case SwitchStrategy::greedy:
      while (auto s = first_site(t, std::nullopt)) {
        t.swap_cells(s->cell_u, s->cell_v);
        record(frames, t);
      }
      return t;
    case SwitchStrategy::random: {
      std::mt19937_64 rng(order.seed);
      for (;;) {
        auto sites = switch_sites(t);
        if (sites.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
        const auto& s = sites[pick(rng)];
        t.swap_cells(s.cell_u, s.cell_v);
        record(frames, t);
      }
      return t;
    }
  }
  return t;
}

TwoColorTableau switch_group(TwoColorTableau t, int group, std::vector<TwoColorTableau>* frames) {
  while (auto s = first_site(t, group)) {
    t.swap_cells(s->cell_u, s->cell_v);
    record(frames, t);
  }
  return t;
}

std::pair<SkewTableau, SkewTableau> switching(const SkewTableau& u, const SkewTableau& v,
                                              SwitchOrder order) {
  TwoColorTableau t = switch_to_end(TwoColorTableau::glue(u, v), order);
  if (!t.is_fully_switched()) throw Error("switching stopped before the pair was fully switched");
  return t.split();
}

}  // namespace lrc
