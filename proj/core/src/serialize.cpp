#include "lammult/serialize.hpp"

#include <json.hpp>

namespace lammult {

namespace {

using nlohmann::json;

json flat_j(const FlatStack& s) {
  json arr = json::array();
  for (const Term& t : s) arr.push_back(print(t));
  return arr;
}

json seg_j(const SegStack& s) {
  json arr = json::array();
  for (const Frame& f : s) {
    json seg = json::array();
    for (const Term& t : f) seg.push_back(print(t));
    arr.push_back(std::move(seg));
  }
  return arr;
}

json config_j(const PEConfig& c) {
  return json{{"control", print(c.control)}, {"stack", flat_j(c.stack)}};
}

json config_j(const EAConfig& c) {
  return std::visit(
      Overloaded{[](const EvalConfig& e) {
                   return json{{"kind", "eval"},
                               {"control", print(e.control)},
                               {"stack", seg_j(e.stack)}};
                 },
                 [](const PapConfig& p) {
                   json acc = json::array();
                   for (const Term& t : p.acc) acc.push_back(print(t));
                   json params = json::array();
                   for (const Identifier& x : p.params) params.push_back(x.name);
                   return json{{"kind", "pap"},
                               {"acc", std::move(acc)},
                               {"arity", p.arity},
                               {"body", print(p.body)},
                               {"params", std::move(params)},
                               {"stack", seg_j(p.stack)}};
                 }},
      c);
}

template <class Config>
std::string trace_lines(const Trace<Config>& tr, const Outcome<Config>& o) {
  std::string out;
  std::size_t i = 1;
  for (const TraceEntry<Config>& e : tr.entries) {
    json line{{"step", i}, {"rule", e.rule}, {"config", config_j(e.after)}};
    out += line.dump();
    out += '\n';
    ++i;
  }
  json last;
  if (o.halted()) {
    last = json{{"outcome", "halted"},
                {"reason", halt_reason_name(*o.reason)},
                {"steps", o.steps},
                {"config", config_j(*o.final_config)}};
  } else {
    last = json{{"outcome", "fuel-exhausted"}, {"steps", o.steps}};
  }
  out += last.dump();
  out += '\n';
  return out;
}

json machine_j(const MachineSummary& m) {
  json j{{"halted", m.halted}, {"steps", m.steps}};
  if (m.reason) j["reason"] = halt_reason_name(*m.reason);
  if (m.unloaded) j["unload"] = print(*m.unloaded);
  return j;
}

json stage_j(const StageResult& r) {
  json j{{"halted", r.halted()}, {"steps", r.steps_taken}};
  if (r.halted()) {
    j["answer"] = print(r.value->answer);
    j["residual"] = flat_j(r.value->residual);
  }
  return j;
}

}  // namespace

std::string config_json(const PEConfig& c) { return config_j(c).dump(); }
std::string config_json(const EAConfig& c) { return config_j(c).dump(); }

std::string trace_json_lines(const Trace<PEConfig>& tr, const Outcome<PEConfig>& o) {
  return trace_lines(tr, o);
}
std::string trace_json_lines(const Trace<EAConfig>& tr, const Outcome<EAConfig>& o) {
  return trace_lines(tr, o);
}

std::string diff_report_json(const DiffReport& rep) {
  json j{
      {"term", print(rep.term)},
      {"pe", machine_j(rep.pe)},
      {"ea", machine_j(rep.ea)},
      {"stg", machine_j(rep.stg)},
      {"chain", chain_verdict_name(rep.chain)},
      {"oracle", rep.oracle_conclusive ? (rep.oracle_ok ? "ok" : "violation")
                                       : "inconclusive"},
      {"verdict", verdict_name(rep.verdict)},
  };
  if (!rep.chain_detail.empty()) j["chain_detail"] = rep.chain_detail;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j.dump();
}

std::string chain_report_json(const Term& t, const ChainReport& rep) {
  json stages = json::array();
  for (const StageResult& r : rep.results) stages.push_back(stage_j(r));
  json j{{"term", print(t)},
         {"stages", std::move(stages)},
         {"verdict", chain_verdict_name(rep.verdict)}};
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j.dump();
}

std::string fuzz_summary_json(const FuzzSummary& sum) {
  json wits = json::array();
  for (const FuzzWitness& w : sum.witnesses) {
    wits.push_back(json{{"index", w.index},
                        {"seed", w.seed},
                        {"term", w.printed},
                        {"shrunk", w.shrunk},
                        {"detail", w.detail}});
  }
  json j{
      {"count", sum.count},
      {"agree", sum.agree},
      {"mismatch", sum.mismatch},
      {"all_fuel_exhausted", sum.all_fuel_exhausted},
      {"oracle_violations", sum.oracle_violations},
      {"chain_exceptions", sum.chain_exceptions},
      {"fuel_skew", sum.fuel_skew},
      {"witnesses", std::move(wits)},
  };
  return j.dump();
}

std::string fusion_report_json(const FusionReport& rep) {
  json j{
      {"ran_to_halt", rep.ran_to_halt},
      {"ok", rep.ok},
      {"ea_steps", rep.ea_steps},
      {"stg_steps", rep.stg_steps},
      {"compressed", rep.compressed},
      {"stg_rules", rep.stg_rules},
  };
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j.dump();
}

}  // namespace lammult
