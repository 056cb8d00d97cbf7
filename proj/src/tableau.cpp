#include "lrc/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lrc {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int x : letters_)
    if (x < 1) throw Error("word letters must be positive");
}

Word Word::from_digits(const std::string& digits) {
  std::vector<int> letters;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw Error("invalid digit '" + std::string(1, ch) + "' in word");
    letters.push_back(ch - '0');
  }
  return Word(std::move(letters));
}

int Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::operator+(const Word& other) const {
  std::vector<int> l = letters_;
  l.insert(l.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(l));
}

Word Word::reversed() const { return Word(std::vector<int>(letters_.rbegin(), letters_.rend())); }

std::string Word::to_string() const {
  std::ostringstream os;
  bool compact = max_letter() <= 9;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i) os << ',';
    os << letters_[i];
  }
  return os.str();
}

bool Composition::is_partition() const {
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > counts[i - 1]) return false;
  return true;
}

SkewTableau::SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows) {
  int n = std::max({outer.declared_length(), inner.declared_length(),
                    static_cast<int>(rows.size())});
  // Shapes may have been given trimmed; pad everything to the row count.
  std::vector<int> o = outer.parts(), in = inner.parts();
  o.resize(n, 0);
  in.resize(n, 0);
  outer_ = Partition(std::move(o));
  inner_ = Partition(std::move(in));
  if (!outer_.contains(inner_))
    throw Error("skew shape inner " + inner_.to_string() + " not contained in outer " +
                outer_.to_string());
  rows_ = std::move(rows);
  rows_.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto& r = rows_[i];
    if (static_cast<int>(r.size()) != outer_[i + 1] - inner_[i + 1])
      throw Error("row " + std::to_string(i + 1) + " has " + std::to_string(r.size()) +
                  " entries, shape requires " + std::to_string(outer_[i + 1] - inner_[i + 1]));
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] < 1) throw Error("tableau entries must be positive");
      if (j > 0 && r[j] < r[j - 1])
        throw Error("row " + std::to_string(i + 1) + " is not weakly increasing");
    }
    if (i == 0) continue;
    // Column strictness against the row above.
    const int lo = std::max(inner_[i] + 1, inner_[i + 1] + 1);
    const int hi = outer_[i + 1];
    for (int c = lo; c <= hi; ++c) {
      if (c > outer_[i]) break;
      if (rows_[i - 1][c - inner_[i] - 1] >= r[c - inner_[i + 1] - 1])
        throw Error("column " + std::to_string(c) + " is not strictly increasing at row " +
                    std::to_string(i + 1));
    }
  }
}

SkewTableau SkewTableau::empty(const Partition& mu) { return SkewTableau(mu, mu, {}); }

const std::vector<int>& SkewTableau::row(int i) const {
  static const std::vector<int> none;
  return i >= 1 && i <= num_rows() ? rows_[i - 1] : none;
}

bool SkewTableau::is_filled(Cell c) const {
  return c.row >= 1 && c.row <= num_rows() && c.col > inner_[c.row] && c.col <= outer_[c.row];
}

int SkewTableau::at(Cell c) const {
  if (!is_filled(c)) throw Error("cell is not filled");
  return rows_[c.row - 1][c.col - inner_[c.row] - 1];
}

int SkewTableau::size() const { return outer_.size() - inner_.size(); }

int SkewTableau::max_entry() const {
  int m = 0;
  for (const auto& r : rows_)
    if (!r.empty()) m = std::max(m, r.back());
  return m;
}

std::vector<Cell> SkewTableau::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= num_rows(); ++i)
    for (int c = inner_[i] + 1; c <= outer_[i]; ++c) out.push_back({i, c});
  return out;
}

SkewTableau SkewTableau::padded(int n) const {
  if (n < num_rows()) {
    SkewTableau t = trimmed();
    if (t.num_rows() > n) throw Error("cannot pad tableau to fewer rows than it occupies");
    return t.padded(n);
  }
  auto rows = rows_;
  rows.resize(n);
  std::vector<int> o = outer_.parts(), in = inner_.parts();
  o.resize(n, 0);
  in.resize(n, 0);
  return SkewTableau(Partition(o), Partition(in), rows);
}

SkewTableau SkewTableau::trimmed() const {
  int n = num_rows();
  while (n > 0 && outer_[n] == 0) --n;
  std::vector<int> o(outer_.parts().begin(), outer_.parts().begin() + n);
  std::vector<int> in(inner_.parts().begin(), inner_.parts().begin() + n);
  return SkewTableau(Partition(o), Partition(in),
                     std::vector<std::vector<int>>(rows_.begin(), rows_.begin() + n));
}

bool operator==(const SkewTableau& a, const SkewTableau& b) {
  if (a.outer_ != b.outer_ || a.inner_ != b.inner_) return false;
  int n = std::max(a.num_rows(), b.num_rows());
  for (int i = 1; i <= n; ++i)
    if (a.row(i) != b.row(i)) return false;
  return true;
}

Word reading_word(const SkewTableau& t) {
  std::vector<int> w;
  w.reserve(t.size());
  for (int i = t.num_rows(); i >= 1; --i) w.insert(w.end(), t.row(i).begin(), t.row(i).end());
  return Word(std::move(w));
}

Composition content(const Word& w) {
  Composition c;
  for (int x : w.letters()) {
    if (x > static_cast<int>(c.counts.size())) c.counts.resize(x, 0);
    ++c.counts[x - 1];
  }
  return c;
}

Composition content(const SkewTableau& t) { return content(reading_word(t)); }

bool is_ballot(const Word& w) {
  std::vector<int> counts(w.max_letter() + 2, 0);
  for (int k = w.size() - 1; k >= 0; --k) {
    int x = w[k];
    ++counts[x];
    if (x > 1 && counts[x] > counts[x - 1]) return false;
  }
  return true;
}

bool is_ballot(const SkewTableau& t) { return is_ballot(reading_word(t)); }

bool is_standard(const SkewTableau& t) {
  std::vector<int> seen(t.size() + 1, 0);
  for (const auto& r : t.rows())
    for (int x : r) {
      if (x > t.size() || seen[x]) return false;
      seen[x] = 1;
    }
  return true;
}

namespace {

// Cells of u in standard order: by value, then by column.
std::vector<Cell> standard_order(const SkewTableau& u) {
  std::vector<Cell> cells = u.cells();
  std::sort(cells.begin(), cells.end(), [&](Cell a, Cell b) {
    int va = u.at(a), vb = u.at(b);
    return va != vb ? va < vb : a.col < b.col;
  });
  return cells;
}

}  // namespace

SkewTableau standardize(const SkewTableau& u) {
  auto rows = u.rows();
  int label = 0;
  for (Cell c : standard_order(u)) rows[c.row - 1][c.col - u.inner()[c.row] - 1] = ++label;
  return SkewTableau(u.outer(), u.inner(), std::move(rows));
}

Word companion_word(const SkewTableau& u) {
  std::vector<int> w;
  for (Cell c : standard_order(u)) w.push_back(c.row);
  std::reverse(w.begin(), w.end());
  return Word(std::move(w));
}

SkewTableau yamanouchi_tableau(const Partition& mu) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= mu.declared_length(); ++i) rows.emplace_back(mu[i], i);
  return SkewTableau(mu, Partition(std::vector<int>(mu.declared_length(), 0)), std::move(rows));
}

std::pair<SkewTableau, SkewTableau> restrict_rows(const SkewTableau& t, int i) {
  if (i < 0 || i > t.num_rows())
    throw Error("row index " + std::to_string(i) + " out of range 0.." +
                std::to_string(t.num_rows()));
  const auto& o = t.outer().parts();
  const auto& in = t.inner().parts();
  const auto& rows = t.rows();
  SkewTableau top(Partition(std::vector<int>(o.begin(), o.begin() + i)),
                  Partition(std::vector<int>(in.begin(), in.begin() + i)),
                  std::vector<std::vector<int>>(rows.begin(), rows.begin() + i));
  SkewTableau bottom(Partition(std::vector<int>(o.begin() + i, o.end())),
                     Partition(std::vector<int>(in.begin() + i, in.end())),
                     std::vector<std::vector<int>>(rows.begin() + i, rows.end()));
  return {std::move(bottom), std::move(top)};
}

SkewTableau first_rows(const SkewTableau& t, int i) { return restrict_rows(t, i).second; }

}  // namespace lrc
