#pragma once

#include <functional>
#include <vector>

#include "lrc/tableau.hpp"

namespace lrc {

/// Visits every semistandard filling of shape over [max_letter], in
/// lexicographic order of reading words.
void for_each_ssyt(const SkewShape& shape, int max_letter,
                   const std::function<void(const SkewTableau&)>& visit);

std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, int max_letter);

/// Ballot semistandard tableaux of the given shape and content nu, in
/// lexicographic order of reading words.
std::vector<SkewTableau> enumerate_ballot(const SkewShape& shape, const Partition& nu);

/// A ballot pair Y_mu u T given by T alone (Y is determined by T's inner shape).
/// Enumerates all of them with |lambda| <= max_size, padded to l(lambda) rows.
std::vector<SkewTableau> enumerate_lr_tableaux(int max_size);

}  // namespace lrc
