#include "govlab/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "govlab/numerics.hpp"

namespace govlab {
namespace {

std::string_view outcome_reason_name(Termination t) { return termination_name(t); }

Termination reason_from_name(const std::string& s) {
  if (s == "StepLimit") return Termination::StepLimit;
  if (s == "ValueLimit") return Termination::ValueLimit;
  throw std::invalid_argument("unknown undecided reason '" + s + "'");
}

Json counts_json(const OutcomeCounts& c) {
  return Json{{"converged_trivial", c.converged_trivial},
              {"cycle", c.cycle},
              {"undecided_step_limit", c.undecided_step_limit},
              {"undecided_value_limit", c.undecided_value_limit}};
}

OutcomeCounts counts_from_json(const Json& j) {
  OutcomeCounts c;
  c.converged_trivial = j.at("converged_trivial").get<std::uint64_t>();
  c.cycle = j.at("cycle").get<std::uint64_t>();
  c.undecided_step_limit = j.at("undecided_step_limit").get<std::uint64_t>();
  c.undecided_value_limit = j.at("undecided_value_limit").get<std::uint64_t>();
  return c;
}

Json tally_json(const CycleTally& t) {
  Json j = to_json(t.cycle);
  j["seeds"] = t.seeds;
  return j;
}

Json candidate_json(const DivergenceCandidate& c) {
  return Json{{"seed", c.seed.to_decimal()}, {"reason", outcome_reason_name(c.reason)}};
}

}  // namespace

std::string to_document(const Json& j) { return j.dump(2) + "\n"; }

Natural natural_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("integers are encoded as decimal strings");
  return Natural::from_decimal(j.get<std::string>());
}

Json to_json(const OrbitLimits& limits) {
  return Json{{"max_steps", limits.max_steps}, {"max_value_bits", limits.max_value_bits}};
}

OrbitLimits limits_from_json(const Json& j) {
  OrbitLimits l;
  l.max_steps = j.at("max_steps").get<std::size_t>();
  l.max_value_bits = j.at("max_value_bits").get<std::size_t>();
  l.validate();
  return l;
}

Json to_json(const CycleRecord& c) {
  Json odd = Json::array();
  for (const auto& v : c.odd_members) odd.push_back(v.to_decimal());
  Json all = Json::array();
  for (const auto& v : c.all_members) all.push_back(v.to_decimal());
  Json gov = Json::array();
  for (const auto& g : c.governor_indices) gov.push_back(Json{{"value", g.value.to_decimal()}, {"index", g.governor_index}});
  return Json{{"odd_members", odd},
              {"all_members", all},
              {"classification", cycle_class_name(c.classification)},
              {"smallest_odd", c.smallest_odd.to_decimal()},
              {"governor_indices", gov}};
}

CycleRecord cycle_from_json(const Json& j, const Rule& rule) {
  std::vector<Natural> members;
  for (const auto& v : j.at("all_members")) members.push_back(natural_from_json(v));
  CycleRecord c = canonical_cycle(members, rule);
  if (!(c.smallest_odd == natural_from_json(j.at("smallest_odd")))) {
    throw std::invalid_argument("cycle smallest_odd disagrees with its members");
  }
  return c;
}

Json to_json(const ScanAccumulator& acc) {
  Json cycles = Json::array();
  for (const auto& [key, t] : acc.cycles) cycles.push_back(tally_json(t));
  std::vector<DivergenceCandidate> sorted = acc.candidates;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.seed < b.seed; });
  Json cands = Json::array();
  for (const auto& c : sorted) cands.push_back(candidate_json(c));
  return Json{{"counts", counts_json(acc.counts)},
              {"cycles", cycles},
              {"divergence_candidates", cands},
              {"max_excursion_bits", acc.max_excursion_bits},
              {"max_steps", acc.max_steps}};
}

ScanAccumulator accumulator_from_json(const Json& j, const Rule& rule) {
  ScanAccumulator acc;
  acc.counts = counts_from_json(j.at("counts"));
  for (const auto& cj : j.at("cycles")) {
    CycleTally t{cycle_from_json(cj, rule), cj.at("seeds").get<std::uint64_t>()};
    const Natural key = t.cycle.smallest_odd;
    if (!acc.cycles.emplace(key, std::move(t)).second) throw std::invalid_argument("duplicate cycle in checkpoint");
  }
  for (const auto& cj : j.at("divergence_candidates")) {
    acc.candidates.push_back({natural_from_json(cj.at("seed")), reason_from_name(cj.at("reason").get<std::string>())});
  }
  acc.max_excursion_bits = j.at("max_excursion_bits").get<std::size_t>();
  acc.max_steps = j.at("max_steps").get<std::size_t>();
  return acc;
}

Json to_json(const ScanReport& r) {
  Json cycles = Json::array();
  for (const auto& t : r.cycles) cycles.push_back(tally_json(t));
  Json cands = Json::array();
  for (const auto& c : r.divergence_candidates) cands.push_back(candidate_json(c));
  return Json{{"schema_version", r.schema_version},
              {"kind", "govlab-scan-report"},
              {"rule", r.rule},
              {"range", Json{{"lo", r.lo.to_decimal()}, {"hi", r.hi.to_decimal()}}},
              {"limits", to_json(r.limits)},
              {"seeds", r.seeds},
              {"counts", counts_json(r.counts)},
              {"auxiliary_cycles", r.auxiliary_cycle_count()},
              {"cycles", cycles},
              {"divergence_candidates", cands},
              {"stats", Json{{"max_excursion_bits", r.max_excursion_bits}, {"max_steps", r.max_steps}}}};
}

Json to_json(const AncestorNode& n) {
  Json children = Json::array();
  for (const auto& c : n.children) children.push_back(to_json(c));
  Json j{{"value", n.value.to_decimal()},
         {"governor_index", n.governor_index},
         {"trivial", n.trivial},
         {"children", children}};
  if (n.doublings > 0) j["doublings"] = n.doublings;
  return j;
}

Json to_json(const ConditionSolution& s) {
  return Json{{"term_count", s.term_count}, {"mu", s.mu}, {"i", s.i}};
}

Json to_json(const ClosedFormMismatch& m) {
  return Json{{"param", m.param},
              {"label", m.label},
              {"predicted", m.predicted.to_decimal()},
              {"actual", m.actual.to_decimal()}};
}

Json to_json(const DescentCheck& d) {
  return Json{{"governor_index", d.governor_index},
              {"expected_index", d.expected_index},
              {"observed_index", d.observed_index},
              {"expected_even_steps", d.expected_even_steps},
              {"observed_even_steps", d.observed_even_steps},
              {"next", d.next.to_decimal()},
              {"pass", d.pass}};
}

Json to_json(const Promotion& p) {
  return Json{{"from", p.from.to_decimal()},
              {"to", p.to.to_decimal()},
              {"old_index", p.old_index},
              {"new_index", p.new_index}};
}

}  // namespace govlab
