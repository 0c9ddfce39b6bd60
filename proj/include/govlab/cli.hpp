#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "govlab/claims.hpp"
#include "govlab/dynamics.hpp"
#include "govlab/natural.hpp"

namespace govlab::cli {

enum ExitCode : int { kOk = 0, kClaimFailure = 1, kUsage = 2, kIo = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TraceFormat { Jsonl, Csv };

struct OrbitCommand {
  std::uint64_t rule = 3;
  Natural start;
  OrbitLimits limits;
  TraceFormat format = TraceFormat::Jsonl;
  std::size_t max_print_bits = 0;  // 0: never elide
};

struct TraceGovernorCommand {
  std::uint64_t rule = 3;
  Natural start;
  std::size_t count = 16;
};

struct AncestorsCommand {
  std::uint64_t rule = 3;
  Natural start;
  std::size_t max_doublings = 16;
  std::optional<std::size_t> depth;  // set: emit a tree document
};

struct ConditionsCommand {
  std::uint64_t rule = 3;
  std::size_t mu_max = 64;
  std::size_t i_max = 64;
};

struct ScanCommand {
  std::uint64_t rule = 3;
  Natural lo;
  Natural hi;
  OrbitLimits limits;
  std::size_t workers = 1;
  std::size_t chunk_size = std::size_t{1} << 16;
  std::optional<std::filesystem::path> checkpoint;
  std::optional<std::size_t> stop_after_chunks;
  std::optional<std::filesystem::path> output;
};

struct ClaimsCommand {
  bool list = false;
  std::vector<std::string> ids;  // empty with list == false: all claims
  std::map<std::string, ClaimParams> params;
  bool timing = true;
  std::size_t workers = 1;
  std::optional<std::filesystem::path> output;
};

struct HelpCommand {
  std::string text;
};

using Command = std::variant<OrbitCommand, TraceGovernorCommand, AncestorsCommand, ConditionsCommand, ScanCommand,
                             ClaimsCommand, HelpCommand>;

/// Parses arguments (without the program name). Throws UsageError naming the
/// offending flag or value.
Command parse_args(const std::vector<std::string>& args);

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + execute with every failure mapped to an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default worker count: GOVLAB_WORKERS if set and valid, else hardware concurrency.
std::size_t default_workers();

}  // namespace govlab::cli
