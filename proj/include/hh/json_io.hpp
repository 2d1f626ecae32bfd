#pragma once

#include <string>

#include "hh/balanced.hpp"
#include "hh/hedgehog.hpp"
#include "hh/peel.hpp"
#include "hh/pipeline.hpp"

namespace hh {

// Certificate object: { "color": "r"|"b", "t", "n", "body": [ids],
// "spine": [[i, j, w], ...], "coloring": descriptor, "seed": u64|null }.
// The solve-aware overload appends a "provenance" object (path, retries,
// peels, deleted, sampler stats, trace reference); parsers ignore it.
std::string certificate_json(const HedgehogEmbedding& e);
std::string certificate_json(const HedgehogEmbedding& e,
                             const SolveReport& rep,
                             const std::string& trace_ref = "");
HedgehogEmbedding parse_certificate(const std::string& text);

void save_certificate(const HedgehogEmbedding& e, const std::string& path);
HedgehogEmbedding load_certificate(const std::string& path);

// Trace: line-delimited JSON — header {"t","n","coloring","seed"}, then one
// event {"v","chi","m","hat_u","bad_set","deleted"} per line.
std::string trace_jsonl(const PeelTrace& tr);
PeelTrace parse_trace_jsonl(const std::string& text);

void save_trace(const PeelTrace& tr, const std::string& path);
PeelTrace load_trace(const std::string& path);

// {"retries": int, "samples": [{"size", "accepted", "reason"}, ...]}
std::string balanced_stats_json(const BalancedRunStats& stats);

}  // namespace hh
