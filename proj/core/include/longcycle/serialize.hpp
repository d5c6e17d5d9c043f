#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "longcycle/audit.hpp"
#include "longcycle/cycles.hpp"
#include "longcycle/scan.hpp"
#include "longcycle/search.hpp"
#include "longcycle/spectral.hpp"
#include "longcycle/transforms.hpp"

namespace longcycle {

using json = nlohmann::json;

json vertex_list(VertexSet s);

void to_json(json& j, const SpectralResult& r);
void to_json(json& j, const Certificate& c);
void to_json(json& j, const JoinComparison& c);
void to_json(json& j, const PathWitness& p);
void to_json(json& j, const CycleWitness& c);
void to_json(json& j, const FactResult& f);
void to_json(json& j, const TransformStep& s);
void to_json(json& j, const ClaimReport& r);
void to_json(json& j, const PerronViolation& v);
void to_json(json& j, const ScanRecord& r);
void to_json(json& j, const ClimbEvent& e);
void to_json(json& j, const ClimbResult& r);
void to_json(json& j, const TheoremAudit& a);

/// The report fields other than the record lists.
json scan_summary(const ScanReport& report);

/// One JSON object per line: the kept free records (or, if none were kept,
/// the maximizers), then {"summary": ...}.
void write_scan_jsonl(std::ostream& out, const ScanReport& report);

/// One step per line, then {"summary": {initial, final, steps, fixpoint}}.
void write_trace_jsonl(std::ostream& out, const TransformTrace& trace);

}  // namespace longcycle
