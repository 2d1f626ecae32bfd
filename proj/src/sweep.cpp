#include "hh/sweep.hpp"

#include <chrono>

#include <json.hpp>

#include "hh/coloring.hpp"
#include "hh/peel.hpp"
#include "hh/pipeline.hpp"

namespace hh {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad_config(const std::string& what) {
  throw std::invalid_argument("sweep config: " + what);
}

std::string substitute(std::string tmpl, const std::string& key,
                       const std::string& value) {
  const std::string needle = "{" + key + "}";
  std::size_t at;
  while ((at = tmpl.find(needle)) != std::string::npos)
    tmpl.replace(at, needle.size(), value);
  return tmpl;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const std::string& config_json,
                                   int threads) {
  json cfg;
  try {
    cfg = json::parse(config_json);
  } catch (const json::parse_error& pe) {
    bad_config(std::string("does not parse: ") + pe.what());
  }
  if (!cfg.is_object()) bad_config("root must be an object");

  auto int_list = [&](const char* name) {
    std::vector<long long> out;
    auto it = cfg.find(name);
    if (it == cfg.end()) bad_config(std::string("missing list '") + name + "'");
    if (!it->is_array()) bad_config(std::string("'") + name + "' must be an array");
    for (const json& v : *it) {
      if (!v.is_number_integer() && !v.is_number_unsigned())
        bad_config(std::string("'") + name + "' entries must be integers");
      out.push_back(v.get<long long>());
    }
    return out;
  };

  std::vector<long long> ts = int_list("t");
  std::vector<long long> ns = int_list("n");
  std::vector<long long> seeds_raw = int_list("seeds");
  std::vector<std::uint64_t> seeds(seeds_raw.begin(), seeds_raw.end());

  auto fam_it = cfg.find("families");
  if (fam_it == cfg.end() || !fam_it->is_array())
    bad_config("'families' must be an array");
  struct Family {
    std::string name, tmpl;
  };
  std::vector<Family> families;
  for (std::size_t i = 0; i < fam_it->size(); ++i) {
    const json& f = (*fam_it)[i];
    const std::string where = "families[" + std::to_string(i) + "]";
    if (!f.is_object()) bad_config(where + " must be an object");
    auto c = f.find("coloring");
    if (c == f.end() || !c->is_string())
      bad_config(where + ".coloring must be a string");
    Family fam;
    fam.tmpl = c->get<std::string>();
    auto nm = f.find("name");
    if (nm != f.end()) {
      if (!nm->is_string()) bad_config(where + ".name must be a string");
      fam.name = nm->get<std::string>();
    } else {
      fam.name = fam.tmpl;
    }
    families.push_back(std::move(fam));
  }

  std::string mode = "auto";
  if (auto it = cfg.find("mode"); it != cfg.end()) {
    if (!it->is_string()) bad_config("'mode' must be a string");
    mode = it->get<std::string>();
  }
  int max_retries = 10;
  if (auto it = cfg.find("max_retries"); it != cfg.end()) {
    if (!it->is_number_integer()) bad_config("'max_retries' must be an integer");
    max_retries = it->get<int>();
  }
  bool audit = false;
  if (auto it = cfg.find("audit"); it != cfg.end()) {
    if (!it->is_boolean()) bad_config("'audit' must be a boolean");
    audit = it->get<bool>();
  }

  std::vector<SweepRecord> records;
  for (const Family& fam : families)
    for (long long t : ts)
      for (long long n : ns)
        for (std::uint64_t seed : seeds) {
          SweepRecord rec;
          rec.family = fam.name;
          rec.seed = seed;
          rec.t = int(t);
          rec.n = Vertex(n);
          rec.audit = "-";
          auto start = std::chrono::steady_clock::now();
          try {
            std::string desc = substitute(fam.tmpl, "seed", std::to_string(seed));
            desc = substitute(desc, "t", std::to_string(t));
            desc = substitute(desc, "n", std::to_string(n));
            ColoringPtr h = make_coloring(desc, Vertex(n));
            SolveOptions opt;
            opt.mode = mode;
            opt.max_retries = max_retries;
            opt.seed = seed;
            opt.threads = threads;
            SolveReport rep = solve(h, int(t), opt);
            rec.path = rep.path;
            rec.peels = rep.peels;
            rec.deleted = rep.deleted;
            rec.retries = rep.retries;
            switch (rep.status) {
              case SolveReport::Status::Found: rec.outcome = "found"; break;
              case SolveReport::Status::NotFound: rec.outcome = "not-found"; break;
              case SolveReport::Status::Critical: rec.outcome = "critical"; break;
            }
            if (audit && rep.trace) {
              AuditReport ar = audit_trace(*h, int(t), *rep.trace);
              rec.audit = ar.passed() ? "pass" : "fail";
            }
          } catch (const std::exception& e) {
            rec.outcome = "error";
            rec.path = e.what();
          }
          rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
          records.push_back(std::move(rec));
        }
  return records;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out =
      "family,seed,t,n,path,outcome,peels,deleted,retries,millis,audit\n";
  for (const SweepRecord& r : records) {
    out += csv_field(r.family) + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.t) + ',' + std::to_string(r.n) + ',' +
           csv_field(r.path) + ',' + r.outcome + ',' +
           std::to_string(r.peels) + ',' + std::to_string(r.deleted) + ',' +
           std::to_string(r.retries) + ',' + std::to_string(r.millis) + ',' +
           r.audit + '\n';
  }
  return out;
}

}  // namespace hh
