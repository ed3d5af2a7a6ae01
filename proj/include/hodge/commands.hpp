#pragma once

// Command drivers behind the hodge executable: configuration, report rendering
// and comparison against the published tables.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodge/geometry.hpp"
#include "hodge/hodgeloci.hpp"

namespace hodge {

enum class Format { text, csv, json };
Format parse_format(const std::string& text);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::vector<int> ns{4};
  int d = 3;
  std::optional<int> m;  // defaults to n/2 - 2
  std::optional<long> r;
  std::optional<long> rr;
  int range = 3;
  std::vector<int> orders{2};
  std::uint64_t seed = 1;
  int batch = 20;
  std::vector<CycleKind> kinds{CycleKind::linear, CycleKind::cubic_ruled, CycleKind::quartic_scroll,
                               CycleKind::veronese};
  int which = 1;
  Format format = Format::text;
  int threads = 1;
  double budget_seconds = 0;
  Engine engine = Engine::residue;
  std::optional<std::string> cache_dir;

  int n() const { return ns.front(); }
  int m_or_default() const { return m.value_or(n() / 2 - 2); }
  /// Throws ConfigError with an explanation.
  void validate(const std::string& command) const;
};

struct CommandResult {
  std::string output;
  std::vector<std::string> mismatches;
  int exit_code() const { return mismatches.empty() ? 0 : 3; }
};

CommandResult cmd_tangent(const RunConfig& config);
CommandResult cmd_locus(const RunConfig& config);
CommandResult cmd_special_loci(const RunConfig& config);
CommandResult cmd_tables(const RunConfig& config);

}  // namespace hodge
