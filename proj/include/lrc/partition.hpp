#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

/// Thrown when a value violates the invariants of its type or an operation's
/// precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cell of a Young diagram, 1-based row and column (English convention).
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of nonnegative integers.
///
/// The declared length (including trailing zeros) is kept because some
/// operations are indexed by it, but equality and ordering only look at the
/// positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }

  /// Part i (1-based); zero beyond the declared length.
  int operator[](int i) const {
    return i >= 1 && i <= static_cast<int>(parts_.size()) ? parts_[i - 1] : 0;
  }

  int declared_length() const { return static_cast<int>(parts_.size()); }
  /// Number of positive parts.
  int length() const;
  /// Sum of the parts.
  int size() const;
  bool empty() const { return size() == 0; }

  Partition trimmed() const;
  Partition padded(int n) const;
  bool contains(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b);
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

/// lambda / mu with mu contained in lambda.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition outer_, Partition inner_);

  int size() const { return outer.size() - inner.size(); }
  bool operator==(const SkewShape&) const = default;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// All partitions of n with at most max_parts parts and largest part at most max_part.
std::vector<Partition> partitions_of(int n, int max_parts, int max_part);

/// All partitions contained in lambda (including the empty one and lambda).
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace lrc
