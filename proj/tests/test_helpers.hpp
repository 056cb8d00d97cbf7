#pragma once

#include <string>

#include "lrc/io.hpp"

namespace lrc::test {

// Tableau from text with '/' between rows.
inline SkewTableau tab(std::string s) {
  for (char& c : s)
    if (c == '/') c = '\n';
  return io::tableau_from_text(s);
}

inline GluedPair pair(std::string s) {
  for (char& c : s)
    if (c == '/') c = '\n';
  return io::glued_from_text(s);
}

inline Word word(const std::string& s) { return Word::from_digits(s); }

}  // namespace lrc::test
