// Command-line front end: gen | solve | verify | audit | oracle | sweep.
// Exit codes: 0 success, 1 not-found / failed check, 2 critical invariant
// breach, 3 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hh/coloring.hpp"
#include "hh/graph.hpp"
#include "hh/json_io.hpp"
#include "hh/oracle.hpp"
#include "hh/peel.hpp"
#include "hh/pipeline.hpp"
#include "hh/sweep.hpp"

namespace {

using namespace hh;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitCritical = 2;
constexpr int kExitUsage = 3;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Vertex> opt_n(long long n) {
  if (n < 0) return std::nullopt;
  return Vertex(n);
}

int cmd_gen(const std::string& coloring, long long n, const std::string& out) {
  if (out.empty()) throw std::invalid_argument("gen needs --out");
  if (coloring.rfind("gnp:", 0) == 0) {
    // Materialize the base graph itself in the graph file format.
    ColoringPtr h = make_coloring(coloring, opt_n(n));
    const auto& sc = dynamic_cast<const SimpleColoring&>(*h);
    const auto* bit = dynamic_cast<const BitGraph*>(sc.graph_ptr().get());
    if (bit == nullptr)
      throw std::invalid_argument(
          "graph too large to materialize into a file");
    bit->save(out);
    std::cout << "wrote graph " << bit->descriptor() << " ("
              << bit->edge_count() << " edges) to " << out << "\n";
    return kExitFound;
  }
  ColoringPtr h = make_coloring(coloring, opt_n(n));
  const Vertex nn = h->vertex_count();
  require(nn <= ExplicitColoring::kMaxN,
          "explicit coloring files are capped at n = 300");
  ExplicitColoring col(nn, Color::Blue);
  for (Vertex a = 0; a < nn; ++a)
    for (Vertex b = a + 1; b < nn; ++b)
      for (Vertex c = b + 1; c < nn; ++c) {
        Color x = h->color(a, b, c);
        if (x != Color::Blue) col.paint(a, b, c, x);
      }
  col.save(out);
  std::cout << "wrote coloring " << h->descriptor() << " to " << out << "\n";
  return kExitFound;
}

int cmd_solve(const std::string& coloring, long long n, int t,
              std::uint64_t seed, const std::string& mode, int max_retries,
              bool audit, const std::string& trace_path,
              const std::string& out, int threads) {
  ColoringPtr h = make_coloring(coloring, opt_n(n));
  SolveOptions opt;
  opt.mode = mode;
  opt.max_retries = max_retries;
  opt.seed = seed;
  opt.threads = threads;
  SolveReport rep = solve(h, t, opt);

  if (rep.trace && !trace_path.empty()) save_trace(*rep.trace, trace_path);

  if (rep.found()) {
    std::string cert = certificate_json(*rep.embedding, rep, trace_path);
    if (out.empty())
      std::cout << cert;
    else
      write_text(out, cert);
  }

  std::cout << (rep.found() ? "found" : "not-found") << " path=" << rep.path
            << " peels=" << rep.peels << " deleted=" << rep.deleted
            << " retries=" << rep.retries << "\n";
  for (const std::string& d : rep.diagnostics) std::cout << "  " << d << "\n";

  if (audit && rep.trace) {
    AuditReport ar = audit_trace(*h, t, *rep.trace);
    std::cout << "audit: " << (ar.passed() ? "pass" : "FAIL") << " ("
              << ar.events_checked << " events, " << ar.checkpoints
              << " checkpoints)\n";
    for (const std::string& v : ar.violations) std::cout << "  violation: " << v << "\n";
    for (const std::string& nnote : ar.notes) std::cout << "  note: " << nnote << "\n";
    if (rep.status != SolveReport::Status::Critical && !ar.passed())
      return kExitCritical;
  }

  switch (rep.status) {
    case SolveReport::Status::Found: return kExitFound;
    case SolveReport::Status::NotFound: return kExitNotFound;
    case SolveReport::Status::Critical: return kExitCritical;
  }
  return kExitUsage;
}

int cmd_verify(const std::string& cert_path, const std::string& coloring,
               long long n) {
  HedgehogEmbedding emb = load_certificate(cert_path);
  const std::string desc = coloring.empty() ? emb.coloring : coloring;
  ColoringPtr h = make_coloring(desc, emb.n);
  if (n >= 0 && Vertex(n) != emb.n)
    throw std::invalid_argument("certificate n disagrees with --n");
  std::vector<std::string> problems = verify_embedding(*h, emb);
  if (problems.empty()) {
    std::cout << "pass: " << color_name(emb.color) << " hedgehog t=" << emb.t
              << " n=" << emb.n << " against " << desc << "\n";
    return kExitFound;
  }
  std::cout << "fail:\n";
  for (const std::string& p : problems) std::cout << "  " << p << "\n";
  return kExitNotFound;
}

int cmd_audit(const std::string& trace_path, const std::string& coloring,
              long long n) {
  PeelTrace tr = load_trace(trace_path);
  const std::string desc = coloring.empty() ? tr.coloring : coloring;
  ColoringPtr h =
      make_coloring(desc, n >= 0 ? Vertex(n) : tr.n);
  AuditReport ar = audit_trace(*h, tr.t, tr);
  std::cout << "audit: " << (ar.passed() ? "pass" : "FAIL") << " ("
            << ar.events_checked << " events, " << ar.checkpoints
            << " checkpoints)\n";
  for (const std::string& v : ar.violations) std::cout << "  violation: " << v << "\n";
  for (const std::string& nnote : ar.notes) std::cout << "  note: " << nnote << "\n";
  return ar.passed() ? kExitFound : kExitCritical;
}

int cmd_oracle(const std::string& coloring, long long n, int t,
               bool min_coloring, const std::string& out) {
  if (min_coloring) {
    require(n >= 1, "--min-coloring needs --n");
    std::optional<ExplicitColoring> wit = min_coloring_search(Vertex(n), t);
    if (!wit) {
      std::cout << "none: every 2-coloring of n=" << n
                << " has a monochromatic H_" << t << "\n";
      return kExitFound;
    }
    std::cout << "witness: a coloring of n=" << n << " with no monochromatic H_"
              << t << "\n";
    if (!out.empty()) {
      wit->save(out);
      std::cout << "wrote witness to " << out << "\n";
    }
    return kExitFound;
  }
  require(!coloring.empty(), "oracle needs --coloring (or --min-coloring)");
  ColoringPtr h = make_coloring(coloring, opt_n(n));
  OracleComparison oc = pipeline_vs_oracle(h, t);
  std::cout << "feasible=" << (oc.feasible ? "yes" : "no")
            << " pipeline=" << (oc.pipeline_found ? "found" : "none")
            << " path=" << oc.pipeline_path
            << " oracle_blue=" << (oc.oracle_blue ? "yes" : "no")
            << " oracle_red=" << (oc.oracle_red ? "yes" : "no")
            << " sound=" << (oc.sound ? "yes" : "NO") << "\n";
  if (!oc.note.empty()) std::cout << "  " << oc.note << "\n";
  return oc.sound ? kExitFound : kExitCritical;
}

int cmd_sweep(const std::string& config_path, const std::string& out,
              int threads) {
  std::vector<SweepRecord> records = run_sweep(slurp(config_path), threads);
  std::string csv = sweep_csv(records);
  if (out.empty())
    std::cout << csv;
  else
    write_text(out, csv);
  std::size_t criticals = 0;
  for (const SweepRecord& r : records)
    if (r.outcome == "critical") ++criticals;
  std::cout << records.size() << " records, " << criticals << " critical\n";
  return criticals == 0 ? kExitFound : kExitCritical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monochromatic hedgehog finder and certifier"};
  app.require_subcommand(1);

  std::string coloring, mode = "auto", trace_path, out, cert_path, config_path;
  long long n = -1;
  int t = 10, max_retries = 10, threads = 1;
  std::uint64_t seed = 0;
  bool audit = false, min_coloring = false;

  CLI::App* gen = app.add_subcommand("gen", "materialize a coloring or graph file");
  gen->add_option("--coloring", coloring, "descriptor")->required();
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--out", out, "output path")->required();

  CLI::App* solve = app.add_subcommand("solve", "find and certify a hedgehog");
  solve->add_option("--coloring", coloring, "descriptor")->required();
  solve->add_option("--t", t, "body size")->required();
  solve->add_option("--n", n, "vertex count");
  solve->add_option("--seed", seed, "sampler seed");
  solve->add_option("--mode", mode, "auto|peel|balanced|simple|oracle");
  solve->add_option("--max-retries", max_retries, "balanced retry budget");
  solve->add_flag("--audit", audit, "replay-audit the peel trace");
  solve->add_option("--trace", trace_path, "write the peel trace here");
  solve->add_option("--out", out, "write the certificate here");
  solve->add_option("--threads", threads, "scan parallelism");

  CLI::App* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("certificate", cert_path, "certificate JSON path")->required();
  verify->add_option("--coloring", coloring, "descriptor override");
  verify->add_option("--n", n, "expected vertex count");

  CLI::App* auditc = app.add_subcommand("audit", "replay-audit a trace file");
  auditc->add_option("trace", trace_path, "trace JSONL path")->required();
  auditc->add_option("--coloring", coloring, "descriptor override");
  auditc->add_option("--n", n, "vertex count override");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force comparisons");
  oracle->add_option("--coloring", coloring, "descriptor");
  oracle->add_option("--t", t, "body size")->required();
  oracle->add_option("--n", n, "vertex count");
  oracle->add_flag("--min-coloring", min_coloring,
                   "search colorings for a hedgehog-free witness");
  oracle->add_option("--out", out, "witness output path");

  CLI::App* sweep = app.add_subcommand("sweep", "run a family grid to CSV");
  sweep->add_option("config", config_path, "sweep config JSON")->required();
  sweep->add_option("--out", out, "CSV output path");
  sweep->add_option("--threads", threads, "per-record parallelism");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(coloring, n, out);
    if (solve->parsed())
      return cmd_solve(coloring, n, t, seed, mode, max_retries, audit,
                       trace_path, out, threads);
    if (verify->parsed()) return cmd_verify(cert_path, coloring, n);
    if (auditc->parsed()) return cmd_audit(trace_path, coloring, n);
    if (oracle->parsed()) return cmd_oracle(coloring, n, t, min_coloring, out);
    if (sweep->parsed()) return cmd_sweep(config_path, out, threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
