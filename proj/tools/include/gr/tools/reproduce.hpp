#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace gr::tools {

/// One reference value next to the value computed here.
struct ReproCheck {
  std::string table;
  std::string item;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct ReproReport {
  std::vector<ReproCheck> checks;
  std::vector<std::filesystem::path> files;

  std::size_t mismatches() const;
};

/// Recomputes every reference value, writes one CSV per table plus
/// summary.csv into `out_dir` (created if missing).
ReproReport reproduce(const std::filesystem::path& out_dir);

}  // namespace gr::tools
