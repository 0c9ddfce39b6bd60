#include "govlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "govlab/errors.hpp"
#include "govlab/genealogy.hpp"
#include "govlab/json_io.hpp"
#include "govlab/numerics.hpp"
#include "govlab/scan.hpp"

namespace govlab::cli {
namespace {

std::size_t parse_size(const std::string& flag, const std::string& text, std::size_t min = 1) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || p != end) throw UsageError(flag + ": unparsable integer '" + text + "'");
  if (v < min) throw UsageError(flag + ": must be >= " + std::to_string(min));
  return v;
}

Natural parse_natural(const std::string& flag, const std::string& text) {
  try {
    return Natural::from_decimal(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": unparsable integer '" + text + "'");
  }
}

Natural parse_odd(const std::string& flag, const std::string& text) {
  Natural v = parse_natural(flag, text);
  if (!v.is_odd()) throw UsageError(flag + ": value must be odd, got " + text);
  return v;
}

std::uint64_t parse_rule(const std::string& text) {
  const std::size_t q = parse_size("--rule", text);
  if (q != 3 && q != 5) throw UsageError("--rule: expected 3 or 5, got " + text);
  return q;
}

std::string render(const Natural& v, std::size_t max_print_bits) {
  const std::size_t bits = v.bit_length();
  if (max_print_bits > 0 && bits > max_print_bits) return "<elided: " + std::to_string(bits) + " bits>";
  return v.to_decimal();
}

struct Raw {
  std::string rule = "3";
  std::string start;
  std::string step_limit;
  std::string value_bits;
  std::string format = "jsonl";
  std::string max_print_bits = "0";
  std::string count = "16";
  std::string max_doublings = "16";
  std::string depth;
  std::string mu_max = "64";
  std::string i_max = "64";
  std::string odd_range;
  std::string workers;
  std::string chunk_size;
  std::string checkpoint;
  std::string stop_after;
  std::string output;
  bool all = false;
  bool list = false;
  bool no_timing = false;
  std::vector<std::string> ids;
  std::vector<std::string> params;
};

OrbitLimits limits_from(const Raw& raw, std::size_t default_steps, std::size_t default_bits) {
  OrbitLimits l;
  l.max_steps = raw.step_limit.empty() ? default_steps : parse_size("--step-limit", raw.step_limit);
  l.max_value_bits = raw.value_bits.empty() ? default_bits : parse_size("--value-limit-bits", raw.value_bits);
  return l;
}

std::size_t workers_from(const Raw& raw) {
  return raw.workers.empty() ? default_workers() : parse_size("--workers", raw.workers);
}

std::pair<std::string, ClaimParams> parse_claim_param(const std::string& text) {
  // ID.KEY=VALUE
  const auto dot = text.find('.');
  const auto eq = text.find('=');
  if (dot == std::string::npos || eq == std::string::npos || eq < dot || dot == 0 || eq == dot + 1) {
    throw UsageError("--param: expected ID.KEY=VALUE, got '" + text + "'");
  }
  const std::string id = text.substr(0, dot);
  const std::string key = text.substr(dot + 1, eq - dot - 1);
  const std::string value = text.substr(eq + 1);
  std::int64_t v = 0;
  const auto* end = value.data() + value.size();
  const auto [p, ec] = std::from_chars(value.data(), end, v);
  if (value.empty() || ec != std::errc() || p != end) throw UsageError("--param: unparsable integer '" + value + "'");
  return {id, ClaimParams{{key, v}}};
}

void write_output(const std::optional<std::filesystem::path>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text) || !f.flush()) throw std::filesystem::filesystem_error("cannot write", *path, std::make_error_code(std::errc::io_error));
}

int run_orbit(const OrbitCommand& c, std::ostream& out) {
  const Rule rule = Rule::from_multiplier(c.rule);
  const OrbitTrace t = orbit(c.start, rule, c.limits);
  const bool csv = c.format == TraceFormat::Csv;
  if (csv) out << "step,kind,value,governor_index\n";

  const auto emit = [&](std::size_t step, std::optional<StepKind> kind, const Natural& v) {
    const std::string value = render(v, c.max_print_bits);
    if (csv) {
      out << step << ',' << (kind ? std::string(1, step_letter(*kind)) : std::string()) << ',' << value << ',';
      if (v.is_odd()) out << governor_index(v);
      out << '\n';
      return;
    }
    Json j{{"step", step}, {"value", value}};
    if (kind) j["kind"] = std::string(1, step_letter(*kind));
    if (v.is_odd()) j["governor_index"] = governor_index(v);
    out << j.dump() << '\n';
  };

  emit(0, std::nullopt, t.start);
  for (std::size_t i = 0; i < t.steps.size(); ++i) emit(i + 1, t.steps[i].kind, t.steps[i].value);

  if (csv) {
    out << "# termination=" << termination_name(t.termination) << " steps=" << t.steps.size()
        << " odd_steps=" << t.odd_step_count() << '\n';
    return kOk;
  }
  Json end{{"termination", termination_name(t.termination)},
           {"steps", t.steps.size()},
           {"odd_steps", t.odd_step_count()},
           {"max_bits", t.max_bit_length()}};
  if (t.termination == Termination::EnteredCycle) {
    Json members = Json::array();
    for (const auto& m : t.cycle_members) members.push_back(render(m, c.max_print_bits));
    end["cycle"] = members;
  }
  out << end.dump() << '\n';
  return kOk;
}

int run_trace(const TraceGovernorCommand& c, std::ostream& out) {
  const Rule rule = Rule::from_multiplier(c.rule);
  Natural v = c.start;
  const auto indices = governor_trace(c.start, rule, c.count);
  for (std::size_t n = 0; n < indices.size(); ++n) {
    out << Json{{"n", n}, {"value", v.to_decimal()}, {"governor_index", indices[n]}}.dump() << '\n';
    if (n + 1 < indices.size()) v = next_odd(v, rule).value;
  }
  return kOk;
}

int run_ancestors(const AncestorsCommand& c, std::ostream& out) {
  const Rule rule = Rule::from_multiplier(c.rule);
  if (c.depth) {
    out << to_document(to_json(ancestor_tree(c.start, rule, *c.depth, c.max_doublings)));
    return kOk;
  }
  for (const auto& e : odd_ancestors(c.start, rule, c.max_doublings)) {
    out << Json{{"doublings", e.doublings},
                {"ancestor", e.ancestor.to_decimal()},
                {"governor_index", governor_index(e.ancestor)}}
               .dump()
        << '\n';
  }
  return kOk;
}

int run_conditions(const ConditionsCommand& c, std::ostream& out) {
  const Rule rule = Rule::from_multiplier(c.rule);
  for (const auto& s : solve_ancestor_conditions(rule, c.mu_max, c.i_max)) out << to_json(s).dump() << '\n';
  return kOk;
}

int run_scan(const ScanCommand& c, std::ostream& out, std::ostream& err) {
  ScanConfig cfg;
  cfg.rule = Rule::from_multiplier(c.rule);
  cfg.lo = c.lo;
  cfg.hi = c.hi;
  cfg.limits = c.limits;
  cfg.chunk_size = c.chunk_size;
  const ScanResult res = scan_range(cfg, ScanControl{c.workers, c.checkpoint, c.stop_after_chunks});
  if (!res.complete) {
    err << "scan stopped after " << res.chunks_done << " of " << res.chunk_total << " chunks";
    if (c.checkpoint) err << "; resume with --checkpoint " << c.checkpoint->string();
    err << '\n';
    out << Json{{"status", "incomplete"}, {"chunks_done", res.chunks_done}, {"chunk_total", res.chunk_total}}.dump()
        << '\n';
    return kOk;
  }
  write_output(c.output, to_document(to_json(res.report)), out);
  return kOk;
}

int run_claims(const ClaimsCommand& c, std::ostream& out) {
  if (c.list) {
    for (const auto& info : list_claims()) {
      out << Json{{"id", info.id}, {"description", info.description}, {"statement", info.statement}}.dump() << '\n';
    }
    return kOk;
  }
  ClaimReport report;
  if (c.ids.empty()) {
    report = run_all(c.params, c.workers);
  } else {
    for (const auto& [id, p] : c.params) {
      if (std::find(c.ids.begin(), c.ids.end(), id) == c.ids.end()) {
        throw ClaimError("--param given for claim " + id + " which was not selected");
      }
    }
    for (const auto& id : c.ids) {
      const auto it = c.params.find(id);
      ClaimResult r = run_claim(id, it == c.params.end() ? ClaimParams{} : it->second, c.workers);
      switch (r.verdict) {
        case Verdict::Pass: ++report.passed; break;
        case Verdict::Fail: ++report.failed; break;
        case Verdict::MismatchReported: ++report.mismatch_reported; break;
      }
      report.results.push_back(std::move(r));
    }
  }
  write_output(c.output, to_document(to_json(report, c.timing)), out);
  return report.any_failed() ? kClaimFailure : kOk;
}

}  // namespace

std::size_t default_workers() {
  if (const char* env = std::getenv("GOVLAB_WORKERS")) {
    std::size_t v = 0;
    const std::string s(env);
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size() && v >= 1) return v;
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Governor-form toolkit for the 3Z+1 and 5Z+1 maps", "govlab"};
  app.require_subcommand(1, 1);
  Raw raw;

  auto* orbit_cmd = app.add_subcommand("orbit", "Print every step of an orbit");
  orbit_cmd->add_option("--rule", raw.rule, "Multiplier q (3 or 5)");
  orbit_cmd->add_option("--start", raw.start, "Odd start value")->required();
  orbit_cmd->add_option("--step-limit", raw.step_limit, "Maximum O+E steps (default 1000000)");
  orbit_cmd->add_option("--value-limit-bits", raw.value_bits, "Abort when a value exceeds this many bits (default 4096)");
  orbit_cmd->add_option("--format", raw.format, "jsonl or csv");
  orbit_cmd->add_option("--max-print-bits", raw.max_print_bits, "Elide values longer than this (0 = never)");

  auto* trace_cmd = app.add_subcommand("trace-governor", "Governor indices along the odd-to-odd orbit");
  trace_cmd->add_option("--rule", raw.rule, "Multiplier q (3 or 5)");
  trace_cmd->add_option("--start", raw.start, "Odd start value")->required();
  trace_cmd->add_option("--count", raw.count, "Number of odd values");

  auto* anc_cmd = app.add_subcommand("ancestors", "Odd ancestors (preimages) of an odd value");
  anc_cmd->add_option("--rule", raw.rule, "Multiplier q (3 or 5)");
  anc_cmd->add_option("--start", raw.start, "Odd value")->required();
  anc_cmd->add_option("--max-doublings", raw.max_doublings, "Largest number of halvings considered");
  anc_cmd->add_option("--depth", raw.depth, "Emit the ancestor tree of this depth");

  auto* cond_cmd = app.add_subcommand("conditions", "Solve the odd-ancestor existence equations");
  cond_cmd->add_option("--rule", raw.rule, "Multiplier q (3 or 5)");
  cond_cmd->add_option("--mu-max", raw.mu_max, "Upper bound for mu");
  cond_cmd->add_option("--i-max", raw.i_max, "Upper bound for i");

  auto* scan_cmd = app.add_subcommand("scan", "Classify every odd seed in a range");
  scan_cmd->add_option("--rule", raw.rule, "Multiplier q (3 or 5)");
  scan_cmd->add_option("--odd-range", raw.odd_range, "LO:HI, both odd")->required();
  scan_cmd->add_option("--step-limit", raw.step_limit, "Maximum O+E steps per seed (default 1000000)");
  scan_cmd->add_option("--value-limit-bits", raw.value_bits, "Value bit-length cap (default 4096)");
  scan_cmd->add_option("--workers", raw.workers, "Worker threads (default GOVLAB_WORKERS or hardware)");
  scan_cmd->add_option("--chunk-size", raw.chunk_size, "Seeds per checkpoint chunk (default 65536)");
  scan_cmd->add_option("--checkpoint", raw.checkpoint, "Checkpoint file; resumed if present");
  scan_cmd->add_option("--stop-after-chunks", raw.stop_after, "Stop after this many chunks in this run");
  scan_cmd->add_option("--output", raw.output, "Write the report here instead of stdout");

  auto* claims_cmd = app.add_subcommand("claims", "Run the claim registry");
  claims_cmd->add_flag("--all", raw.all, "Run C1..C7 (default when no --id is given)");
  claims_cmd->add_flag("--list", raw.list, "List the registry");
  claims_cmd->add_option("--id", raw.ids, "Claim id (repeatable)");
  claims_cmd->add_option("--param", raw.params, "ID.KEY=VALUE override (repeatable)");
  claims_cmd->add_flag("--no-timing", raw.no_timing, "Omit runtimes from the report");
  claims_cmd->add_option("--workers", raw.workers, "Worker threads for scans");
  claims_cmd->add_option("--output", raw.output, "Write the report here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    return HelpCommand{subs.empty() ? app.help() : subs.front()->help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (orbit_cmd->parsed()) {
    OrbitCommand c;
    c.rule = parse_rule(raw.rule);
    c.start = parse_odd("--start", raw.start);
    c.limits = limits_from(raw, 1'000'000, 4096);
    if (raw.format == "jsonl") c.format = TraceFormat::Jsonl;
    else if (raw.format == "csv") c.format = TraceFormat::Csv;
    else throw UsageError("--format: expected jsonl or csv, got " + raw.format);
    c.max_print_bits = parse_size("--max-print-bits", raw.max_print_bits, 0);
    return c;
  }
  if (trace_cmd->parsed()) {
    TraceGovernorCommand c;
    c.rule = parse_rule(raw.rule);
    c.start = parse_odd("--start", raw.start);
    c.count = parse_size("--count", raw.count);
    return c;
  }
  if (anc_cmd->parsed()) {
    AncestorsCommand c;
    c.rule = parse_rule(raw.rule);
    c.start = parse_odd("--start", raw.start);
    c.max_doublings = parse_size("--max-doublings", raw.max_doublings);
    if (!raw.depth.empty()) c.depth = parse_size("--depth", raw.depth);
    return c;
  }
  if (cond_cmd->parsed()) {
    ConditionsCommand c;
    c.rule = parse_rule(raw.rule);
    c.mu_max = parse_size("--mu-max", raw.mu_max);
    c.i_max = parse_size("--i-max", raw.i_max);
    return c;
  }
  if (scan_cmd->parsed()) {
    ScanCommand c;
    c.rule = parse_rule(raw.rule);
    const auto colon = raw.odd_range.find(':');
    if (colon == std::string::npos) throw UsageError("--odd-range: expected LO:HI, got '" + raw.odd_range + "'");
    c.lo = parse_odd("--odd-range", raw.odd_range.substr(0, colon));
    c.hi = parse_odd("--odd-range", raw.odd_range.substr(colon + 1));
    if (c.hi < c.lo) throw UsageError("--odd-range: LO must not exceed HI");
    c.limits = limits_from(raw, 1'000'000, 4096);
    c.workers = workers_from(raw);
    if (!raw.chunk_size.empty()) c.chunk_size = parse_size("--chunk-size", raw.chunk_size);
    if (!raw.checkpoint.empty()) c.checkpoint = raw.checkpoint;
    if (!raw.stop_after.empty()) c.stop_after_chunks = parse_size("--stop-after-chunks", raw.stop_after);
    if (!raw.output.empty()) c.output = raw.output;
    return c;
  }
  ClaimsCommand c;
  c.list = raw.list;
  if (raw.list && (raw.all || !raw.ids.empty())) throw UsageError("--list: cannot be combined with --all or --id");
  if (raw.all && !raw.ids.empty()) throw UsageError("--all: cannot be combined with --id");
  const auto& known = list_claims();
  for (const auto& id : raw.ids) {
    if (std::none_of(known.begin(), known.end(), [&](const ClaimInfo& i) { return i.id == id; })) {
      throw UsageError("--id: unknown claim '" + id + "'");
    }
  }
  c.ids = raw.ids;
  for (const auto& p : raw.params) {
    auto [id, kv] = parse_claim_param(p);
    for (auto& [k, v] : kv) c.params[id][k] = v;
  }
  c.timing = !raw.no_timing;
  c.workers = workers_from(raw);
  if (!raw.output.empty()) c.output = raw.output;
  return c;
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  return std::visit(
      [&](const auto& c) -> int {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, OrbitCommand>) return run_orbit(c, out);
        else if constexpr (std::is_same_v<T, TraceGovernorCommand>) return run_trace(c, out);
        else if constexpr (std::is_same_v<T, AncestorsCommand>) return run_ancestors(c, out);
        else if constexpr (std::is_same_v<T, ConditionsCommand>) return run_conditions(c, out);
        else if constexpr (std::is_same_v<T, ScanCommand>) return run_scan(c, out, err);
        else if constexpr (std::is_same_v<T, ClaimsCommand>) return run_claims(c, out);
        else {
          out << c.text;
          return kOk;
        }
      },
      cmd);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_args(args), out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'govlab --help' for usage\n";
    return kUsage;
  } catch (const ClaimError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CheckpointError& e) {
    err << "checkpoint error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace govlab::cli
