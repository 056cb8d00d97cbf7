#pragma once

#include <string>
#include <vector>

namespace lrc::golden {

struct CaseResult {
  std::string id;
  int assertions = 0;
  /// One entry per failed assertion, with a line diff for tableau frames.
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Fixture directory baked in at build time.
std::string default_fixture_dir();

/// Ids of the fixtures found in dir, sorted.
std::vector<std::string> fixture_ids(const std::string& dir);

/// Replays the selected fixtures (all when only is empty). Unknown ids throw
/// lrc::Error.
std::vector<CaseResult> run(const std::string& dir, const std::vector<std::string>& only = {});

/// Line-by-line comparison of two multi-line renderings.
std::string frame_diff(const std::string& expected, const std::string& actual);

}  // namespace lrc::golden
