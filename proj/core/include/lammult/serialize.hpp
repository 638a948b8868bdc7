#ifndef LAMMULT_SERIALIZE_HPP
#define LAMMULT_SERIALIZE_HPP

#include <string>

#include "lammult/derivation.hpp"
#include "lammult/harness.hpp"

namespace lammult {

// Single-line JSON renderings. Terms appear in printed concrete syntax;
// segmented stacks serialize as arrays of arrays of printed terms.
std::string config_json(const PEConfig& c);
std::string config_json(const EAConfig& c);

// One {"step":i,"rule":...,"config":...} object per line for every
// transition, then a final {"outcome":...} line.
std::string trace_json_lines(const Trace<PEConfig>& tr, const Outcome<PEConfig>& o);
std::string trace_json_lines(const Trace<EAConfig>& tr, const Outcome<EAConfig>& o);

std::string diff_report_json(const DiffReport& rep);
std::string chain_report_json(const Term& t, const ChainReport& rep);
std::string fuzz_summary_json(const FuzzSummary& sum);
std::string fusion_report_json(const FusionReport& rep);

}  // namespace lammult

#endif
