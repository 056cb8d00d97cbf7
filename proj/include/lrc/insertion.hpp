#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lrc/tableau.hpp"

namespace lrc {

/// Record of one internal row insertion.
///
/// For a filled corner the route starts at the vacated cell and descends one
/// row per step; the created outer cell is its last element. For a blank
/// corner the route is empty and created == vacated (the cell is adjoined to
/// both the inner and the outer shape).
struct InsertionTrace {
  Cell vacated;
  std::vector<Cell> route;
  Cell created;

  bool blank() const { return route.empty(); }
  bool operator==(const InsertionTrace&) const = default;
};

/// True iff phi_i is defined on a tableau with inner shape mu.
bool is_inner_corner(const Partition& mu, int i);

/// Rows i (1-based) at which phi_i is defined, increasing.
std::vector<int> inner_corners(const SkewTableau& t);

/// phi_i: vacate the inner corner of row i and row-insert its entry starting
/// at row i+1.
std::pair<SkewTableau, InsertionTrace> internal_insert(const SkewTableau& t, int i);

/// phi_u = phi_{u_k} ... phi_{u_1}: the last letter of u acts first.
SkewTableau apply_order_word(const SkewTableau& t, const Word& u);
SkewTableau apply_order_word(const SkewTableau& t, const Word& u,
                             std::vector<InsertionTrace>& traces);

/// Y_mu glued to a skew tableau of inner shape mu. The Yamanouchi factor is
/// determined by the skew factor's inner shape.
class GluedPair {
 public:
  GluedPair() = default;
  explicit GluedPair(SkewTableau skew) : skew_(std::move(skew)) {}

  const SkewTableau& skew() const { return skew_; }
  SkewTableau yam() const { return yamanouchi_tableau(skew_.inner()); }
  int num_rows() const { return skew_.num_rows(); }
  /// Member of LR^(n): the skew factor is ballot.
  bool is_lr_pair() const { return is_ballot(skew_); }

  GluedPair padded(int n) const { return GluedPair(skew_.padded(n)); }
  /// (Y u T)^(i): the first i rows of both factors.
  GluedPair first_rows(int i) const { return GluedPair(lrc::first_rows(skew_, i)); }

  bool operator==(const GluedPair&) const = default;

 private:
  SkewTableau skew_;
};

/// Extended operator on Y u T: the Yamanouchi factor gains an i in row i and
/// the skew factor becomes phi_i of itself.
std::pair<GluedPair, InsertionTrace> extended_insert(const GluedPair& p, int i);

/// Builds a tableau from its filled cells.
SkewTableau tableau_from_cells(const Partition& outer, const Partition& inner,
                               const std::map<Cell, int>& cells);

/// (T, U) sharing an inner border -> (P, Q) sharing an outer border.
std::pair<SkewTableau, SkewTableau> skew_rsk_forward(const SkewTableau& t, const SkewTableau& u);

/// Inverse of skew_rsk_forward.
std::pair<SkewTableau, SkewTableau> skew_rsk_inverse(const SkewTableau& p, const SkewTableau& q);

}  // namespace lrc
