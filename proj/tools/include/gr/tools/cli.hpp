#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gr::tools {

/// Parsed command line, also loadable from a key = value config file.
struct RunConfig {
  std::string command;
  std::string graph = "grid:6";
  std::string ordering;  // empty: the family's canonical ordering
  std::string family;    // profile only; empty: taken from graph
  std::string kind = "vertex";
  std::string source = "auto";
  std::string input;
  std::string out;
  std::string p_list = "1,2,inf";
  std::string theorems = "2,3,4";
  std::string format = "table";
  int nmax = 6;
  int ranks = 16;
  std::optional<int> box;
  std::optional<std::uint64_t> seed;
  bool witness = false;
};

/// Exit codes: 0 success, 1 hypothesis failure or reproduction mismatch,
/// 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gr::tools
