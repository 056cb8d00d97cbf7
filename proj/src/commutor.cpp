#include "lrc/commutor.hpp"

#include <algorithm>
#include <set>

namespace lrc {

TwoColorTableau to_two_color(const GluedPair& p) {
  return TwoColorTableau::glue(p.yam(), p.skew());
}

GluedPair rho1_switching(const GluedPair& p, SwitchOrder order) {
  if (!p.is_lr_pair()) throw Error("not an LR pair: the skew factor is not ballot");
  auto [s, h] = switching(p.yam(), p.skew(), order);
  if (!(s == yamanouchi_tableau(s.outer())))
    throw Error("switching did not rectify the skew factor to a Yamanouchi tableau");
  return GluedPair(h.padded(std::max(p.num_rows(), h.trimmed().num_rows())));
}

Partition nu_hat(const SkewTableau& t) {
  std::vector<int> parts;
  for (int i = 1; i <= t.num_rows(); ++i) {
    const auto& r = t.row(i);
    parts.push_back(static_cast<int>(std::count(r.begin(), r.end(), i)));
  }
  return Partition(std::move(parts));
}

Word row_subword_below(const SkewTableau& t, int i) {
  std::vector<int> v;
  for (int x : t.row(i))
    if (x < i) v.push_back(x);
  return Word(std::move(v));
}

Word gt_order_word(const SkewTableau& t) {
  if (!is_ballot(t)) throw Error("gt_order_word needs a ballot tableau");
  const Partition hat = nu_hat(t);
  std::vector<int> w;
  for (int i = t.num_rows(); i >= 1; --i) {
    for (int x : t.row(i)) {
      if (x > i) throw Error("ballot tableau has a letter above its row index");
      if (x < i) w.push_back(x);
    }
    w.insert(w.end(), hat[i], i);
  }
  return Word(std::move(w));
}

SkewTableau chi_append(const SkewTableau& t, int i) {
  if (i < 1) throw Error("chi row index must be positive");
  std::vector<int> outer = t.outer().parts(), inner = t.inner().parts();
  auto rows = t.rows();
  const int n = std::max(t.num_rows(), i);
  outer.resize(n, 0);
  inner.resize(n, 0);
  rows.resize(n);
  ++outer[i - 1];
  rows[i - 1].push_back(i);
  try {
    return SkewTableau(Partition(outer), Partition(inner), std::move(rows));
  } catch (const Error& e) {
    throw Error("chi_" + std::to_string(i) + " breaks the tableau: " + e.what());
  }
}

GluedPair chi_append(const GluedPair& p, int i) { return GluedPair(chi_append(p.skew(), i)); }

namespace {

int count_letter(const SkewTableau& t, int letter) {
  int k = 0;
  for (const auto& r : t.rows()) k += static_cast<int>(std::count(r.begin(), r.end(), letter));
  return k;
}

InternalRun internal_rec(const GluedPair& p, int n) {
  if (n == 0) return {GluedPair(SkewTableau()), {}};
  InternalRun run = internal_rec(p.first_rows(n - 1), n - 1);
  const SkewTableau& t = p.skew();

  RecursionLevel level;
  level.n = n;
  const auto& row = t.row(n);
  level.nu_n = static_cast<int>(std::count(row.begin(), row.end(), n));
  if (level.nu_n != count_letter(first_rows(t, n), n))
    throw Error("letter " + std::to_string(n) + " occurs outside row " + std::to_string(n));
  level.v_n = row_subword_below(t, n);
  level.mu_n = t.inner()[n];

  GluedPair cur = run.result;
  for (int k = 0; k < level.nu_n; ++k) {
    auto [next, trace] = extended_insert(cur, n);
    cur = std::move(next);
    level.top_traces.push_back(std::move(trace));
  }
  if (level.nu_n > 0) level.frames.push_back(cur);
  for (int k = level.v_n.size() - 1; k >= 0; --k) {
    auto [next, trace] = extended_insert(cur, level.v_n[k]);
    cur = std::move(next);
    level.v_traces.push_back(std::move(trace));
    level.frames.push_back(cur);
  }
  for (int k = 0; k < level.mu_n; ++k) cur = chi_append(cur, n);
  if (level.mu_n > 0) level.frames.push_back(cur);

  level.result = cur.padded(std::max(n, cur.skew().trimmed().num_rows()));
  run.result = level.result;
  run.levels.push_back(std::move(level));
  return run;
}

}  // namespace

InternalRun rho1_internal_traced(const GluedPair& p) {
  if (!p.is_lr_pair()) throw Error("not an LR pair: the skew factor is not ballot");
  return internal_rec(p, p.num_rows());
}

GluedPair rho1_internal(const GluedPair& p) { return rho1_internal_traced(p).result; }

std::optional<std::string> check_route_claim(const InternalRun& run) {
  for (const auto& level : run.levels) {
    std::set<Cell> used;
    for (const auto& tr : level.v_traces) {
      const std::string where = "level " + std::to_string(level.n) + ": ";
      if (tr.blank()) return where + "a V_n insertion hit a blank corner";
      if (tr.created.row != level.n)
        return where + "a V_n route ends in row " + std::to_string(tr.created.row);
      for (Cell c : tr.route)
        if (!used.insert(c).second)
          return where + "two V_n routes share cell (" + std::to_string(c.row) + "," +
                 std::to_string(c.col) + ")";
    }
  }
  return std::nullopt;
}

GluedPair rho1_scratch(const GluedPair& p, std::vector<SkewTableau>* frames) {
  if (!p.is_lr_pair()) throw Error("not an LR pair: the skew factor is not ballot");
  const SkewTableau& t = p.skew();
  const Partition hat = nu_hat(t);
  SkewTableau cur;
  for (int i = 1; i <= t.num_rows(); ++i) {
    Word block = row_subword_below(t, i) + Word(std::vector<int>(hat[i], i));
    cur = apply_order_word(cur, block);
    for (int k = 0; k < t.inner()[i]; ++k) cur = chi_append(cur, i);
    if (frames) frames->push_back(cur);
  }
  return GluedPair(cur.padded(std::max(t.num_rows(), cur.trimmed().num_rows())));
}

bool staged_admissible(const GluedPair& p) {
  const int rows = p.num_rows();
  if (rows < 2 || !p.is_lr_pair()) return false;
  const Partition& mu = p.skew().inner();
  if (mu[rows] != 0 || mu.empty()) return false;
  const auto& last = p.skew().row(rows);
  return !last.empty() && last.front() < rows && last.back() <= rows;
}

StagedDecomposition staged_decomposition(const GluedPair& p,
                                         std::vector<TwoColorTableau>* frames) {
  if (!staged_admissible(p))
    throw Error("staged decomposition needs Y_mu u T in LR^(n+1) with mu nonzero, mu_{n+1} = 0 "
                "and a nonempty F in the last row");
  const int last = p.num_rows();
  const Partition& mu = p.skew().inner();
  TwoColorTableau t =
      TwoColorTableau::glue(p.yam(), p.skew(), TwoColorTableau::Grouping::by_value);
  if (frames) frames->push_back(t);

  int d = 0;
  for (int g = last - 1; g >= 1 && d == 0; --g) {
    if (mu[g] == 0) continue;
    t = switch_group(std::move(t), g, frames);
    for (const auto& e : t.rows()[last - 1])
      if (e.group == g) d = g;
  }
  if (d == 0) throw Error("staged switching never lifted a letter into the last row");

  StagedDecomposition out;
  out.d = d;
  auto [s, q] = t.split_at_group(d);
  out.s = std::move(s);
  out.q = std::move(q);
  out.f = row_subword_below(p.skew(), last);
  out.f_hat = row_subword_below(out.s, last);
  out.d_word = Word(out.q.row(last));
  out.final_state = std::move(t);
  return out;
}

SkewTableau concatenate(const SkewTableau& a, const SkewTableau& b) {
  if (b.inner() != a.outer()) throw Error("second tableau does not extend the first");
  const int n = std::max(a.num_rows(), b.num_rows());
  std::vector<std::vector<int>> rows(n);
  for (int i = 1; i <= n; ++i) {
    rows[i - 1] = a.row(i);
    rows[i - 1].insert(rows[i - 1].end(), b.row(i).begin(), b.row(i).end());
  }
  return SkewTableau(b.outer().padded(std::max(n, b.outer().length())),
                     a.inner().padded(std::max(n, a.inner().length())), std::move(rows));
}

}  // namespace lrc
