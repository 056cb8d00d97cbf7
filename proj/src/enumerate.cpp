#include "lrc/enumerate.hpp"

#include <algorithm>

namespace lrc {

namespace {

// Backtracking filler shared by the semistandard and ballot enumerators.
// Cells are visited in reading order so that lexicographic order of the
// emitted reading words follows from trying values in increasing order.
class Filler {
 public:
  Filler(const SkewShape& shape, int max_letter, const Partition* content)
      : n_(std::max(shape.outer.declared_length(), shape.inner.declared_length())),
        outer_(shape.outer.padded(std::max(n_, shape.outer.length()))),
        inner_(shape.inner.padded(std::max(n_, shape.inner.length()))),
        max_letter_(max_letter),
        content_(content) {
    rows_.resize(n_);
    for (int i = 1; i <= n_; ++i) rows_[i - 1].assign(outer_[i] - inner_[i], 0);
    for (int i = n_; i >= 1; --i)
      for (int c = inner_[i] + 1; c <= outer_[i]; ++c) order_.push_back({i, c});
    if (content_) {
      remaining_.assign(max_letter_ + 2, 0);
      for (int k = 1; k <= max_letter_; ++k) remaining_[k] = (*content_)[k];
    }
  }

  void run(const std::function<void(const SkewTableau&)>& visit) {
    if (content_ && content_->size() != static_cast<int>(order_.size())) return;
    visit_ = &visit;
    rec(0);
  }

 private:
  int& at(Cell c) { return rows_[c.row - 1][c.col - inner_[c.row] - 1]; }

  void rec(std::size_t k) {
    if (k == order_.size()) {
      (*visit_)(SkewTableau(outer_, inner_, rows_));
      return;
    }
    const Cell c = order_[k];
    int lo = 1, hi = max_letter_;
    if (c.col > inner_[c.row] + 1) lo = at({c.row, c.col - 1});
    if (c.row < n_ && c.col > inner_[c.row + 1] && c.col <= outer_[c.row + 1])
      hi = std::min(hi, at({c.row + 1, c.col}) - 1);
    for (int v = lo; v <= hi; ++v) {
      if (content_) {
        // Suffix contents stay partitions iff remaining counts stay weakly
        // decreasing as letters are consumed from the left.
        if (remaining_[v] == 0) continue;
        if (remaining_[v] - 1 < remaining_[v + 1]) continue;
        --remaining_[v];
      }
      at(c) = v;
      rec(k + 1);
      if (content_) ++remaining_[v];
    }
    at(c) = 0;
  }

  int n_;
  Partition outer_, inner_;
  int max_letter_;
  const Partition* content_;
  std::vector<std::vector<int>> rows_;
  std::vector<Cell> order_;
  std::vector<int> remaining_;
  const std::function<void(const SkewTableau&)>* visit_ = nullptr;
};

}  // namespace

void for_each_ssyt(const SkewShape& shape, int max_letter,
                   const std::function<void(const SkewTableau&)>& visit) {
  if (max_letter < 1) throw Error("max_letter must be at least 1");
  Filler(shape, max_letter, nullptr).run(visit);
}

std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, int max_letter) {
  std::vector<SkewTableau> out;
  for_each_ssyt(shape, max_letter, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

std::vector<SkewTableau> enumerate_ballot(const SkewShape& shape, const Partition& nu) {
  std::vector<SkewTableau> out;
  Partition content = nu.trimmed();
  Filler(shape, std::max(1, content.length()), &content).run([&](const SkewTableau& t) {
    out.push_back(t);
  });
  return out;
}

std::vector<SkewTableau> enumerate_lr_tableaux(int max_size) {
  std::vector<SkewTableau> out;
  for (int size = 0; size <= max_size; ++size)
    for (const Partition& lambda : partitions_of(size))
      for (const Partition& mu : subpartitions(lambda)) {
        const int n = std::max(1, lambda.length());
        SkewShape shape(lambda.padded(n), mu.padded(n));
        for (const Partition& nu : partitions_of(size - mu.size(), n, lambda[1]))
          for (auto& t : enumerate_ballot(shape, nu)) out.push_back(std::move(t));
      }
  return out;
}

}  // namespace lrc
