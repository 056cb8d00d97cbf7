#include "lrc/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace lrc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must weakly decrease");
  }
}

int Partition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::trimmed() const {
  std::vector<int> p(parts_.begin(), parts_.begin() + length());
  return Partition(std::move(p));
}

Partition Partition::padded(int n) const {
  std::vector<int> p = trimmed().parts_;
  if (static_cast<int>(p.size()) > n) throw Error("partition longer than requested padding");
  p.resize(n, 0);
  return Partition(std::move(p));
}

bool Partition::contains(const Partition& other) const {
  int n = std::max(declared_length(), other.declared_length());
  for (int i = 1; i <= n; ++i)
    if (other[i] > (*this)[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

bool operator==(const Partition& a, const Partition& b) {
  int n = std::max(a.declared_length(), b.declared_length());
  for (int i = 1; i <= n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  int n = std::max(a.declared_length(), b.declared_length());
  for (int i = 1; i <= n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner)) throw Error("skew shape inner " + inner.to_string() +
                                          " not contained in outer " + outer.to_string());
}

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, max_part);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n, n); }

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  const int n = lambda.length();
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(cap, lambda[i + 1]); p >= 0; --p) {
      cur[i] = p;
      rec(i + 1, p);
    }
    cur[i] = 0;
  };
  rec(0, n ? lambda[1] : 0);
  for (auto& p : out) p = p.trimmed();
  return out;
}

}  // namespace lrc
