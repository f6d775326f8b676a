#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vsb::cli {

enum class Format { Json, Text };

/// Options shared by all subcommands; validated before dispatch.
struct RunConfig {
  std::string command;
  int strands = 0;
  int p = 3;
  std::string catalog = "standard";
  std::size_t depth = 8;
  std::size_t max_states = 200000;
  std::size_t max_length = 0;  // 0: derived from the inputs
  unsigned threads = 1;
  std::uint64_t seed = 20240601;  // accepted for reproducibility; subcommands are deterministic
  Format format = Format::Json;
  std::string target;                  // translate --to
  std::vector<std::string> extra;      // verify --extra "lhs = rhs"
  std::vector<std::string> words;
};

/// Runs one subcommand. args excludes the program name. Exit codes: 0 pass or
/// success, 1 fail / unequal / unknown, 2 usage or input error.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace vsb::cli
