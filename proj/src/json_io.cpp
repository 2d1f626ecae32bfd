#include "hh/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hh {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;  // insertion order = documented order

ojson embedding_obj(const HedgehogEmbedding& e) {
  ojson o;
  o["color"] = std::string(1, color_char(e.color));
  o["t"] = e.t;
  o["n"] = e.n;
  o["body"] = e.body;
  ojson spine = ojson::array();
  for (const SpineEntry& s : e.spine) spine.push_back({s.i, s.j, s.w});
  o["spine"] = std::move(spine);
  o["coloring"] = e.coloring;
  if (e.seed)
    o["seed"] = *e.seed;
  else
    o["seed"] = nullptr;
  return o;
}

ojson stats_obj(const BalancedRunStats& stats) {
  ojson o;
  o["retries"] = stats.retries;
  ojson samples = ojson::array();
  for (const SampleReport& s : stats.samples) {
    ojson row;
    row["size"] = s.sample.size();
    row["accepted"] = s.accepted;
    row["reason"] = s.reason;
    samples.push_back(std::move(row));
  }
  o["samples"] = std::move(samples);
  return o;
}

const json& field(const json& o, const char* name) {
  auto it = o.find(name);
  if (it == o.end())
    throw std::invalid_argument(std::string("certificate missing field '") +
                                name + "'");
  return *it;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

std::string certificate_json(const HedgehogEmbedding& e) {
  return embedding_obj(e).dump(2) + "\n";
}

std::string certificate_json(const HedgehogEmbedding& e,
                             const SolveReport& rep,
                             const std::string& trace_ref) {
  ojson o = embedding_obj(e);
  ojson prov;
  prov["path"] = rep.path;
  prov["retries"] = rep.retries;
  prov["peels"] = rep.peels;
  prov["deleted"] = rep.deleted;
  if (rep.balanced_stats)
    prov["stats"] = stats_obj(*rep.balanced_stats);
  else
    prov["stats"] = nullptr;
  if (trace_ref.empty())
    prov["trace"] = nullptr;
  else
    prov["trace"] = trace_ref;
  o["provenance"] = std::move(prov);
  return o.dump(2) + "\n";
}

HedgehogEmbedding parse_certificate(const std::string& text) {
  json o;
  try {
    o = json::parse(text);
  } catch (const json::parse_error& pe) {
    throw std::invalid_argument(std::string("certificate does not parse: ") +
                                pe.what());
  }
  if (!o.is_object())
    throw std::invalid_argument("certificate root must be an object");

  HedgehogEmbedding e;
  const json& col = field(o, "color");
  if (!col.is_string() || col.get<std::string>().size() != 1)
    throw std::invalid_argument("certificate color must be \"r\" or \"b\"");
  e.color = parse_color(col.get<std::string>());
  e.t = field(o, "t").get<int>();
  e.n = field(o, "n").get<Vertex>();
  e.body = field(o, "body").get<std::vector<Vertex>>();
  for (const json& row : field(o, "spine")) {
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("spine entries must be [i, j, w] triples");
    e.spine.push_back({row[0].get<int>(), row[1].get<int>(),
                       row[2].get<Vertex>()});
  }
  e.coloring = field(o, "coloring").get<std::string>();
  const json& seed = field(o, "seed");
  if (!seed.is_null()) e.seed = seed.get<std::uint64_t>();
  return e;
}

void save_certificate(const HedgehogEmbedding& e, const std::string& path) {
  spill(path, certificate_json(e));
}

HedgehogEmbedding load_certificate(const std::string& path) {
  return parse_certificate(slurp(path));
}

std::string trace_jsonl(const PeelTrace& tr) {
  ojson head;
  head["t"] = tr.t;
  head["n"] = tr.n;
  head["coloring"] = tr.coloring;
  if (tr.seed)
    head["seed"] = *tr.seed;
  else
    head["seed"] = nullptr;
  std::string out = head.dump() + "\n";
  for (const PeelEvent& ev : tr.events) {
    ojson o;
    o["v"] = ev.v;
    o["chi"] = std::string(1, color_char(ev.chi));
    o["m"] = ev.m;
    o["hat_u"] = ev.hat_u;
    o["bad_set"] = ev.bad_set;
    o["deleted"] = ev.deleted;
    out += o.dump() + "\n";
  }
  return out;
}

PeelTrace parse_trace_jsonl(const std::string& text) {
  PeelTrace tr;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json o;
    try {
      o = json::parse(line);
    } catch (const json::parse_error& pe) {
      throw std::invalid_argument("trace line " + std::to_string(lineno) +
                                  " does not parse: " + pe.what());
    }
    if (!have_header) {
      tr.t = field(o, "t").get<int>();
      tr.n = field(o, "n").get<Vertex>();
      tr.coloring = field(o, "coloring").get<std::string>();
      const json& seed = field(o, "seed");
      if (!seed.is_null()) tr.seed = seed.get<std::uint64_t>();
      have_header = true;
      continue;
    }
    PeelEvent ev;
    ev.v = field(o, "v").get<Vertex>();
    const json& chi = field(o, "chi");
    if (!chi.is_string() || chi.get<std::string>().size() != 1)
      throw std::invalid_argument("trace line " + std::to_string(lineno) +
                                  ": chi must be \"r\" or \"b\"");
    ev.chi = parse_color(chi.get<std::string>());
    ev.m = field(o, "m").get<int>();
    ev.hat_u = field(o, "hat_u").get<std::vector<Vertex>>();
    ev.bad_set = field(o, "bad_set").get<std::vector<Vertex>>();
    ev.deleted = field(o, "deleted").get<std::vector<Vertex>>();
    tr.events.push_back(std::move(ev));
  }
  if (!have_header) throw std::invalid_argument("trace has no header line");
  return tr;
}

void save_trace(const PeelTrace& tr, const std::string& path) {
  spill(path, trace_jsonl(tr));
}

PeelTrace load_trace(const std::string& path) {
  return parse_trace_jsonl(slurp(path));
}

std::string balanced_stats_json(const BalancedRunStats& stats) {
  return stats_obj(stats).dump(2) + "\n";
}

}  // namespace hh
