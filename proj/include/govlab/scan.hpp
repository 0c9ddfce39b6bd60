#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "govlab/cycles.hpp"
#include "govlab/dynamics.hpp"
#include "govlab/natural.hpp"
#include "govlab/rule.hpp"

namespace govlab {

inline constexpr int kScanSchemaVersion = 1;
inline constexpr std::size_t kDefaultChunkSize = std::size_t{1} << 16;

struct ScanConfig {
  Rule rule = Rule::three();
  Natural lo{1};
  Natural hi{1};
  OrbitLimits limits;
  std::size_t chunk_size = kDefaultChunkSize;

  /// Throws ValidationError unless lo <= hi, both odd, limits valid, chunk_size >= 1
  /// and the seed count fits in 64 bits.
  void validate() const;
  std::uint64_t seed_count() const;
  std::size_t chunk_count() const;
  Natural seed(std::uint64_t index) const;

  friend bool operator==(const ScanConfig& a, const ScanConfig& b) {
    return a.rule == b.rule && a.lo == b.lo && a.hi == b.hi && a.limits.max_steps == b.limits.max_steps &&
           a.limits.max_value_bits == b.limits.max_value_bits && a.chunk_size == b.chunk_size;
  }
};

struct OutcomeCounts {
  std::uint64_t converged_trivial = 0;
  std::uint64_t cycle = 0;
  std::uint64_t undecided_step_limit = 0;
  std::uint64_t undecided_value_limit = 0;

  std::uint64_t total() const { return converged_trivial + cycle + undecided_step_limit + undecided_value_limit; }
  friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

struct DivergenceCandidate {
  Natural seed;
  Termination reason;

  friend bool operator==(const DivergenceCandidate&, const DivergenceCandidate&) = default;
};

struct CycleTally {
  CycleRecord cycle;
  std::uint64_t seeds = 0;

  friend bool operator==(const CycleTally&, const CycleTally&) = default;
};

/// Partial scan result. merge() is associative and commutative once the
/// candidate list is sorted, which finalize() does.
struct ScanAccumulator {
  OutcomeCounts counts;
  std::map<Natural, CycleTally> cycles;  // keyed by smallest odd member
  std::vector<DivergenceCandidate> candidates;
  std::size_t max_excursion_bits = 0;
  std::size_t max_steps = 0;

  void add(const Natural& seed, const Outcome& outcome, const Rule& rule);
  void merge(ScanAccumulator&& other);
};

struct ScanReport {
  int schema_version = kScanSchemaVersion;
  std::uint64_t rule = 3;
  Natural lo;
  Natural hi;
  OrbitLimits limits;
  std::uint64_t seeds = 0;
  OutcomeCounts counts;
  std::vector<CycleTally> cycles;  // ascending smallest_odd
  std::vector<DivergenceCandidate> divergence_candidates;  // ascending seed
  std::size_t max_excursion_bits = 0;
  std::size_t max_steps = 0;

  std::size_t auxiliary_cycle_count() const;
  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

ScanReport finalize(const ScanConfig& config, ScanAccumulator acc);

/// Serial, GMP-only classification of every seed through detect_outcome.
ScanReport scan_range_reference(const ScanConfig& config);

struct ScanControl {
  std::size_t workers = 1;
  std::optional<std::filesystem::path> checkpoint;
  /// Stop (after saving the checkpoint) once this many chunks ran in this call.
  std::optional<std::size_t> stop_after_chunks;
};

struct ScanResult {
  ScanReport report;  // final report when complete, otherwise the partial tally
  bool complete = false;
  std::size_t chunks_done = 0;
  std::size_t chunk_total = 0;
};

/// Parallel scan over fixed-size chunks; the report does not depend on the
/// worker count. With a checkpoint path, an existing checkpoint is resumed
/// (its configuration must match) and progress is saved after every chunk.
ScanResult scan_range(const ScanConfig& config, const ScanControl& control);

ScanReport scan_range(const Natural& lo, const Natural& hi, const Rule& rule, const OrbitLimits& limits,
                      std::size_t workers);

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanCheckpoint {
  int schema_version = kScanSchemaVersion;
  ScanConfig config;
  std::set<std::size_t> completed_chunks;
  ScanAccumulator accumulated;
};

/// Writes atomically (temporary file + rename).
void checkpoint_save(const ScanCheckpoint& state, const std::filesystem::path& path);
/// Throws CheckpointError on I/O failure, malformed content or schema mismatch.
ScanCheckpoint checkpoint_load(const std::filesystem::path& path);

namespace detail {
/// 128-bit fast path for one seed. Returns nullopt when the orbit outgrows
/// 128 bits without breaching the value limit; the caller then falls back to
/// detect_outcome.
std::optional<Outcome> fast_outcome(unsigned __int128 seed, const Rule& rule, const OrbitLimits& limits);
}  // namespace detail

}  // namespace govlab
