#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lrc::verify {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string name;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

enum class Exec { serial, parallel };

struct Options {
  /// Size bound of the sweep; each check's default when unset.
  std::optional<int> max_size;
  /// Largest letter used for arbitrary semistandard fillings.
  int alphabet = 3;
  std::uint64_t seed = 0;
  /// Seeded random switch orders per confluence instance.
  int random_orders = 20;
  Exec exec = Exec::parallel;
};

struct CheckInfo {
  std::string name;
  std::string description;
  int default_size;
  Report (*run)(const Options&);
};

const std::vector<CheckInfo>& checks();
/// Throws lrc::Error listing the valid names when the name is unknown.
const CheckInfo& find_check(const std::string& name);
Report run_check(const std::string& name, const Options& options);

}  // namespace lrc::verify
