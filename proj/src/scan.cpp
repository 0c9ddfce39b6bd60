#include "govlab/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "govlab/errors.hpp"
#include "govlab/json_io.hpp"

namespace govlab {
namespace {

using u128 = unsigned __int128;

constexpr std::size_t kBlockSeeds = 1024;

std::size_t bit_length(u128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 128 - static_cast<std::size_t>(std::countl_zero(hi));
  const auto lo = static_cast<std::uint64_t>(v);
  return 64 - static_cast<std::size_t>(std::countl_zero(lo));
}

// Open-addressing set of 128-bit values, reset per seed by bumping a stamp.
class SeenSet {
 public:
  SeenSet() { resize(1 << 12); }

  void clear() {
    ++stamp_;
    size_ = 0;
    if (stamp_ == 0) {
      std::fill(stamps_.begin(), stamps_.end(), 0U);
      stamp_ = 1;
    }
  }

  // false if v was already present
  bool insert(u128 v) {
    if (2 * (size_ + 1) > keys_.size()) grow();
    return place(v);
  }

 private:
  static std::size_t hash(u128 v) {
    std::uint64_t h = static_cast<std::uint64_t>(v) ^ (static_cast<std::uint64_t>(v >> 64) * 0x9e3779b97f4a7c15ULL);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }

  bool place(u128 v) {
    const std::size_t mask = keys_.size() - 1;
    for (std::size_t i = hash(v) & mask;; i = (i + 1) & mask) {
      if (stamps_[i] != stamp_) {
        stamps_[i] = stamp_;
        keys_[i] = v;
        ++size_;
        return true;
      }
      if (keys_[i] == v) return false;
    }
  }

  void resize(std::size_t n) {
    keys_.assign(n, 0);
    stamps_.assign(n, 0U);
    stamp_ = 1;
    size_ = 0;
  }

  void grow() {
    std::vector<u128> live;
    live.reserve(size_);
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (stamps_[i] == stamp_) live.push_back(keys_[i]);
    }
    resize(keys_.size() * 2);
    for (u128 v : live) place(v);
  }

  std::vector<u128> keys_;
  std::vector<std::uint32_t> stamps_;
  std::uint32_t stamp_ = 1;
  std::size_t size_ = 0;
};

SeenSet& thread_seen_set() {
  thread_local SeenSet set;
  return set;
}

const CycleRecord& trivial_record(const Rule& rule) {
  static const CycleRecord three = canonical_cycle(Rule::three().trivial_cycle(), Rule::three());
  static const CycleRecord five = canonical_cycle(Rule::five().trivial_cycle(), Rule::five());
  return rule.multiplier() == 3 ? three : five;
}

ScanAccumulator run_seeds(const ScanConfig& config, std::uint64_t first, std::uint64_t last) {
  ScanAccumulator acc;
  const bool fast_ok = config.seed(last - 1).bit_length() <= 127;
  for (std::uint64_t idx = first; idx < last; ++idx) {
    const Natural seed = config.seed(idx);
    std::optional<Outcome> o;
    if (fast_ok) o = detail::fast_outcome(seed.to_u128(), config.rule, config.limits);
    if (!o) o = detect_outcome(seed, config.rule, config.limits);
    acc.add(seed, *o, config.rule);
  }
  return acc;
}

// Runs one chunk, splitting it into fixed blocks that OpenMP threads pick up.
ScanAccumulator run_chunk(const ScanConfig& config, std::size_t chunk, std::size_t workers) {
  const std::uint64_t begin = static_cast<std::uint64_t>(chunk) * config.chunk_size;
  const std::uint64_t end = std::min<std::uint64_t>(begin + config.chunk_size, config.seed_count());
  const std::uint64_t nblocks = (end - begin + kBlockSeeds - 1) / kBlockSeeds;

  std::vector<ScanAccumulator> parts(nblocks);
  std::vector<std::exception_ptr> errors(nblocks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(workers))
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    try {
      const std::uint64_t lo = begin + static_cast<std::uint64_t>(b) * kBlockSeeds;
      parts[b] = run_seeds(config, lo, std::min<std::uint64_t>(lo + kBlockSeeds, end));
    } catch (...) {
      errors[b] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  ScanAccumulator acc;
  for (auto& p : parts) acc.merge(std::move(p));
  return acc;
}

}  // namespace

void ScanConfig::validate() const {
  limits.validate();
  if (!lo.is_odd() || !hi.is_odd()) throw ValidationError("scan range bounds must be odd");
  if (hi < lo) throw ValidationError("scan range is empty (lo > hi)");
  if (chunk_size < 1) throw ValidationError("chunk size must be >= 1");
  if (((hi - lo) >> 1).bit_length() > 63) throw ValidationError("scan range has more than 2^63 seeds");
}

std::uint64_t ScanConfig::seed_count() const { return ((hi - lo) >> 1).to_u64() + 1; }

std::size_t ScanConfig::chunk_count() const {
  return static_cast<std::size_t>((seed_count() + chunk_size - 1) / chunk_size);
}

Natural ScanConfig::seed(std::uint64_t index) const { return lo + (Natural(index) << 1); }

void ScanAccumulator::add(const Natural& seed, const Outcome& outcome, const Rule& rule) {
  max_excursion_bits = std::max(max_excursion_bits, outcome.max_bits);
  max_steps = std::max(max_steps, outcome.steps);
  switch (outcome.kind) {
    case OutcomeKind::ConvergedTrivial: {
      ++counts.converged_trivial;
      const CycleRecord& t = trivial_record(rule);
      auto [it, fresh] = cycles.try_emplace(t.smallest_odd, CycleTally{t, 0});
      ++it->second.seeds;
      break;
    }
    case OutcomeKind::Cycle: {
      ++counts.cycle;
      auto [it, fresh] = cycles.try_emplace(outcome.cycle.smallest_odd, CycleTally{outcome.cycle, 0});
      ++it->second.seeds;
      break;
    }
    case OutcomeKind::Undecided:
      if (outcome.reason == Termination::ValueLimit) {
        ++counts.undecided_value_limit;
      } else {
        ++counts.undecided_step_limit;
      }
      candidates.push_back({seed, outcome.reason});
      break;
  }
}

void ScanAccumulator::merge(ScanAccumulator&& other) {
  counts.converged_trivial += other.counts.converged_trivial;
  counts.cycle += other.counts.cycle;
  counts.undecided_step_limit += other.counts.undecided_step_limit;
  counts.undecided_value_limit += other.counts.undecided_value_limit;
  for (auto& [key, tally] : other.cycles) {
    auto [it, fresh] = cycles.try_emplace(key, CycleTally{tally.cycle, 0});
    it->second.seeds += tally.seeds;
  }
  candidates.insert(candidates.end(), std::make_move_iterator(other.candidates.begin()),
                    std::make_move_iterator(other.candidates.end()));
  max_excursion_bits = std::max(max_excursion_bits, other.max_excursion_bits);
  max_steps = std::max(max_steps, other.max_steps);
}

std::size_t ScanReport::auxiliary_cycle_count() const {
  return static_cast<std::size_t>(std::count_if(cycles.begin(), cycles.end(), [](const CycleTally& t) {
    return t.cycle.classification == CycleClass::Auxiliary;
  }));
}

ScanReport finalize(const ScanConfig& config, ScanAccumulator acc) {
  ScanReport r;
  r.rule = config.rule.multiplier();
  r.lo = config.lo;
  r.hi = config.hi;
  r.limits = config.limits;
  r.seeds = acc.counts.total();
  r.counts = acc.counts;
  for (auto& [key, tally] : acc.cycles) r.cycles.push_back(std::move(tally));
  r.divergence_candidates = std::move(acc.candidates);
  std::sort(r.divergence_candidates.begin(), r.divergence_candidates.end(),
            [](const auto& a, const auto& b) { return a.seed < b.seed; });
  r.max_excursion_bits = acc.max_excursion_bits;
  r.max_steps = acc.max_steps;
  return r;
}

ScanReport scan_range_reference(const ScanConfig& config) {
  config.validate();
  ScanAccumulator acc;
  const std::uint64_t n = config.seed_count();
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    const Natural seed = config.seed(idx);
    acc.add(seed, detect_outcome(seed, config.rule, config.limits), config.rule);
  }
  return finalize(config, std::move(acc));
}

ScanResult scan_range(const ScanConfig& config, const ScanControl& control) {
  config.validate();
  const std::size_t workers = std::max<std::size_t>(control.workers, 1);

  ScanCheckpoint state;
  state.config = config;
  if (control.checkpoint && std::filesystem::exists(*control.checkpoint)) {
    state = checkpoint_load(*control.checkpoint);
    if (!(state.config == config)) {
      throw CheckpointError("checkpoint " + control.checkpoint->string() +
                            " was written for a different rule, range, limits or chunk size");
    }
  }

  const std::size_t total = config.chunk_count();
  std::size_t ran = 0;
  for (std::size_t chunk = 0; chunk < total; ++chunk) {
    if (state.completed_chunks.contains(chunk)) continue;
    if (control.stop_after_chunks && ran >= *control.stop_after_chunks) break;
    state.accumulated.merge(run_chunk(config, chunk, workers));
    state.completed_chunks.insert(chunk);
    ++ran;
    if (control.checkpoint) checkpoint_save(state, *control.checkpoint);
  }
  if (control.checkpoint && ran == 0) checkpoint_save(state, *control.checkpoint);

  ScanResult result;
  result.chunk_total = total;
  result.chunks_done = state.completed_chunks.size();
  result.complete = result.chunks_done == total;
  result.report = finalize(config, std::move(state.accumulated));
  return result;
}

ScanReport scan_range(const Natural& lo, const Natural& hi, const Rule& rule, const OrbitLimits& limits,
                      std::size_t workers) {
  ScanConfig config;
  config.rule = rule;
  config.lo = lo;
  config.hi = hi;
  config.limits = limits;
  return scan_range(config, ScanControl{workers, std::nullopt, std::nullopt}).report;
}

void checkpoint_save(const ScanCheckpoint& state, const std::filesystem::path& path) {
  Json completed = Json::array();
  for (std::size_t c : state.completed_chunks) completed.push_back(c);
  const Json doc{{"schema_version", state.schema_version},
                 {"kind", "govlab-scan-checkpoint"},
                 {"rule", state.config.rule.multiplier()},
                 {"range", Json{{"lo", state.config.lo.to_decimal()}, {"hi", state.config.hi.to_decimal()}}},
                 {"limits", to_json(state.config.limits)},
                 {"chunk_size", state.config.chunk_size},
                 {"chunk_total", state.config.chunk_count()},
                 {"completed_chunks", completed},
                 {"accumulated", to_json(state.accumulated)}};

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp.string());
    out << to_document(doc);
    if (!out.flush()) throw CheckpointError("cannot write checkpoint " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("cannot move checkpoint into place: " + ec.message());
}

ScanCheckpoint checkpoint_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();

  try {
    const Json doc = Json::parse(buf.str());
    if (doc.at("kind").get<std::string>() != "govlab-scan-checkpoint") {
      throw CheckpointError("not a scan checkpoint: " + path.string());
    }
    const int version = doc.at("schema_version").get<int>();
    if (version != kScanSchemaVersion) {
      throw CheckpointError("checkpoint schema_version " + std::to_string(version) + " is not supported (expected " +
                            std::to_string(kScanSchemaVersion) + ")");
    }
    ScanCheckpoint s;
    s.config.rule = Rule::from_multiplier(doc.at("rule").get<std::uint64_t>());
    s.config.lo = natural_from_json(doc.at("range").at("lo"));
    s.config.hi = natural_from_json(doc.at("range").at("hi"));
    s.config.limits = limits_from_json(doc.at("limits"));
    s.config.chunk_size = doc.at("chunk_size").get<std::size_t>();
    s.config.validate();
    if (doc.at("chunk_total").get<std::size_t>() != s.config.chunk_count()) {
      throw CheckpointError("checkpoint chunk_total disagrees with its range");
    }
    for (const auto& c : doc.at("completed_chunks")) {
      const auto idx = c.get<std::size_t>();
      if (idx >= s.config.chunk_count() || !s.completed_chunks.insert(idx).second) {
        throw CheckpointError("checkpoint lists an invalid or duplicate chunk");
      }
    }
    s.accumulated = accumulator_from_json(doc.at("accumulated"), s.config.rule);
    return s;
  } catch (const CheckpointError&) {
    throw;
  } catch (const std::exception& e) {
    throw CheckpointError("corrupt checkpoint " + path.string() + ": " + e.what());
  }
}

namespace detail {

std::optional<Outcome> fast_outcome(u128 seed, const Rule& rule, const OrbitLimits& limits) {
  const std::uint64_t q = rule.multiplier();
  const u128 max_before_overflow = (std::numeric_limits<u128>::max() - 1) / q;

  Outcome o;
  o.max_bits = bit_length(seed);
  if (o.max_bits > limits.max_value_bits) {
    o.kind = OutcomeKind::Undecided;
    o.reason = Termination::ValueLimit;
    return o;
  }
  if (rule.in_trivial_cycle(seed)) {
    o.kind = OutcomeKind::ConvergedTrivial;
    return o;
  }

  SeenSet& seen = thread_seen_set();
  seen.clear();
  seen.insert(seed);
  u128 cur = seed;
  for (std::size_t s = 1;; ++s) {
    if ((cur & 1) != 0) {
      if (cur > max_before_overflow) {
        const std::size_t bits = Natural::from_u128(cur).mul_add_one(q).bit_length();
        if (bits <= limits.max_value_bits) return std::nullopt;
        o.steps = s;
        o.max_bits = std::max(o.max_bits, bits);
        o.kind = OutcomeKind::Undecided;
        o.reason = Termination::ValueLimit;
        return o;
      }
      cur = cur * q + 1;
    } else {
      cur >>= 1;
    }
    o.steps = s;
    const std::size_t bits = bit_length(cur);
    o.max_bits = std::max(o.max_bits, bits);

    if (bits > limits.max_value_bits) {
      o.kind = OutcomeKind::Undecided;
      o.reason = Termination::ValueLimit;
      return o;
    }
    if (rule.in_trivial_cycle(cur)) {
      o.kind = OutcomeKind::ConvergedTrivial;
      return o;
    }
    if (!seen.insert(cur)) {
      std::vector<Natural> members;
      u128 v = cur;
      do {
        members.push_back(Natural::from_u128(v));
        v = (v & 1) != 0 ? v * q + 1 : v >> 1;
      } while (v != cur);
      o.kind = OutcomeKind::Cycle;
      o.cycle = canonical_cycle(members, rule);
      return o;
    }
    if (s >= limits.max_steps) {
      o.kind = OutcomeKind::Undecided;
      o.reason = Termination::StepLimit;
      return o;
    }
  }
}

}  // namespace detail
}  // namespace govlab
