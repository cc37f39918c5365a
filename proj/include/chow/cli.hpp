#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chow/spec_file.hpp"

namespace chow {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2 };

// A command's result; the JSON mirror is the source of the text rendering.
struct Report {
  nlohmann::ordered_json json;
  int exit_code = kExitOk;
};

struct ChowOptions {
  std::optional<std::string> at;  // "r1,...,rn"
  bool expand = false;
};

// Input problems throw (ParseError, SpecError, NotNilpotentError, DomainError);
// verification failures come back as exit code 1.
Report cmd_degree(const SpecFile& spec);
Report cmd_chow(const SpecFile& spec, const ChowOptions& options);
Report cmd_analyze(const SpecFile& spec);
Report cmd_check(const SpecFile& spec, unsigned trials, std::uint64_t seed);
Report cmd_examples();

std::string render_text(const Report& report);

struct BundledExample {
  std::string_view name;
  std::string_view spec;
  std::string_view golden;
};

std::span<const BundledExample> bundled_examples();

struct CliResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// Full command line without the program name. Never throws.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace chow
