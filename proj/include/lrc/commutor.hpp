#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/insertion.hpp"
#include "lrc/switching.hpp"

namespace lrc {

/// Y_mu u T as a two-colour tableau (Y is the inner member).
TwoColorTableau to_two_color(const GluedPair& p);

/// rho_1 by switching Y_mu with T: returns Y_nu u H.
GluedPair rho1_switching(const GluedPair& p, SwitchOrder order = {});

/// Number of i's in row i of a ballot tableau, i = 1..num_rows.
Partition nu_hat(const SkewTableau& t);

/// Row i of t restricted to letters below i.
Word row_subword_below(const SkewTableau& t, int i);

/// V_n n^{nu^_n} ... V_2 2^{nu^_2} 1^{nu^_1}.
Word gt_order_word(const SkewTableau& t);

/// Appends the letter i at the end of row i of the skew factor.
GluedPair chi_append(const GluedPair& p, int i);
SkewTableau chi_append(const SkewTableau& t, int i);

/// One level n of the internal-insertion recursion.
struct RecursionLevel {
  int n = 0;
  int nu_n = 0;
  Word v_n;
  int mu_n = 0;
  std::vector<InsertionTrace> top_traces;  // phi-bar_n^{nu_n}
  std::vector<InsertionTrace> v_traces;    // phi-bar_{V_n}, in application order
  /// States after the phi-bar_n block (when nu_n > 0), after each phi-bar of
  /// V_n, and after the chi block (when mu_n > 0).
  std::vector<GluedPair> frames;
  GluedPair result;
};

struct InternalRun {
  GluedPair result;
  std::vector<RecursionLevel> levels;  // level 1 first
};

InternalRun rho1_internal_traced(const GluedPair& p);
GluedPair rho1_internal(const GluedPair& p);

/// The phi-bar_{V_n} routes of every level are pairwise disjoint and all end
/// in row n. Returns a description of the first violation.
std::optional<std::string> check_route_claim(const InternalRun& run);

/// Builds the image from the empty tableau by the product of (non-extended)
/// internal insertions and chi operators. Frames receive the state after each
/// row block.
GluedPair rho1_scratch(const GluedPair& p, std::vector<SkewTableau>* frames = nullptr);

/// Outcome of staged switching of Y_mu u T in LR^(n+1).
struct StagedDecomposition {
  int d = 0;
  SkewTableau s;  // V part, inner shape (mu_1..mu_{d-1})
  Word f;         // row n+1 of T restricted to [n]
  Word f_hat;     // row n+1 of S restricted to [n]
  Word d_word;    // letters of Q in row n+1
  SkewTableau q;  // switched U letters of rows d..n
  TwoColorTableau final_state;
};

/// Preconditions: mu nonzero with mu_{n+1} = 0, and row n+1 of T is
/// F (n+1)^{nu_{n+1}} with F a nonempty word over [n].
bool staged_admissible(const GluedPair& p);
StagedDecomposition staged_decomposition(const GluedPair& p,
                                         std::vector<TwoColorTableau>* frames = nullptr);

/// Union of a tableau a and a tableau b extending it, as one skew tableau.
SkewTableau concatenate(const SkewTableau& a, const SkewTableau& b);

}  // namespace lrc
