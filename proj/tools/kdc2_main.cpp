#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kdc2/io.hpp"
#include "kdc2/oracle.hpp"
#include "kdc2/solver.hpp"

namespace {

namespace fs = std::filesystem;
using namespace kdc2;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTimeout = 2;

GraphFormat format_from_flag(const std::string& flag) {
  if (flag == "edge-list") return GraphFormat::kEdgeList;
  if (flag == "mtx" || flag == "matrix-market") return GraphFormat::kMatrixMarket;
  return GraphFormat::kAuto;
}

SolveMode mode_from_flag(const std::string& flag) {
  if (flag == "full") return SolveMode::kFullSearch;
  if (flag == "degen-gap") return SolveMode::kDegeneracyGap;
  return SolveMode::kTwoStage;
}

IdBase base_from_flag(const std::string& flag) {
  if (flag == "0") return IdBase::kZeroBased;
  if (flag == "1") return IdBase::kOneBased;
  return IdBase::kAuto;
}

void print_solution(const LoadedGraph& g, const Solution& sol) {
  std::cout << sol.size() << "\n";
  std::vector<long long> labels;
  labels.reserve(sol.vertices.size());
  for (Vertex v : sol.vertices) labels.push_back(g.labels[v]);
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i)
    std::cout << labels[i] << (i + 1 == labels.size() ? "\n" : " ");
  if (labels.empty()) std::cout << "\n";
}

void print_stats(const SearchStats& st) {
  std::cout << "stats nodes=" << st.nodes_visited << " leaves=" << st.leaves
            << " rr1=" << st.rr1_removals << " rr2=" << st.rr2_additions
            << " rr3=" << st.rr3_removals << " ub_prunes=" << st.ub_prunes
            << " time_sec=" << st.elapsed_sec << " timed_out=" << (st.timed_out ? 1 : 0)
            << "\n";
}

struct SolveArgs {
  std::string graph;
  int k = 0;
  std::string mode = "two-stage";
  double time_limit = 0.0;
  bool no_rr3 = false;
  int lb = 0;
  std::string output;
  bool stats = false;
  std::string format = "auto";
  std::string id_base = "auto";
};

int cmd_solve(const SolveArgs& args) {
  LoadedGraph g = load_graph(args.graph, format_from_flag(args.format), base_from_flag(args.id_base));
  SolverConfig cfg;
  cfg.k = args.k;
  cfg.mode = mode_from_flag(args.mode);
  cfg.time_limit_sec = args.time_limit;
  cfg.enable_rr3 = !args.no_rr3;
  cfg.initial_lb = args.lb;
  auto [sol, st] = solve(g.graph, cfg);
  print_solution(g, sol);
  if (args.stats) print_stats(st);
  if (!args.output.empty()) write_solution(make_run_record(g, args.k, cfg.mode, sol, st), args.output);
  return st.timed_out ? kExitTimeout : kExitOk;
}

std::vector<long long> parse_label_list(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream ss(cleaned);
  std::vector<long long> out;
  long long v;
  while (ss >> v) out.push_back(v);
  return out;
}

struct VerifyArgs {
  std::string graph;
  int k = 0;
  std::string vertices;
  std::string solution_json;
  std::string format = "auto";
  std::string id_base = "auto";
};

int cmd_verify(const VerifyArgs& args) {
  LoadedGraph g = load_graph(args.graph, format_from_flag(args.format), base_from_flag(args.id_base));
  std::vector<long long> labels;
  if (!args.solution_json.empty()) {
    std::ifstream in(args.solution_json);
    if (!in) {
      std::cerr << "error: cannot open '" << args.solution_json << "'\n";
      return kExitError;
    }
    auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.contains("vertices")) {
      std::cerr << "error: '" << args.solution_json << "' is not a solution record\n";
      return kExitError;
    }
    labels = j["vertices"].get<std::vector<long long>>();
  } else {
    labels = parse_label_list(args.vertices);
  }
  auto index = label_to_id(g);
  VertexSet s(g.graph.vertex_count());
  for (long long label : labels) {
    auto it = index.find(label);
    if (it == index.end()) {
      std::cerr << "error: unknown vertex label " << label << "\n";
      return kExitError;
    }
    s.insert(it->second);
  }
  long long nonedges = non_edge_count(g.graph, s);
  bool ok = nonedges <= args.k;
  std::cout << "non_edges " << nonedges << "\n"
            << (ok ? "accept" : "reject") << "\n";
  return ok ? kExitOk : kExitError;
}

int cmd_oracle(const std::string& graph, int k, const std::string& format) {
  LoadedGraph g = load_graph(graph, format_from_flag(format));
  Solution sol = brute_force_max_kdc(g.graph, k);
  print_solution(g, sol);
  return kExitOk;
}

// ---- bench harness ----

struct BenchRow {
  std::string graph;
  RunRecord record;
  std::string status;  // solved | timeout | error
  std::string error;
};

std::string csv_row(const BenchRow& row) {
  std::ostringstream os;
  if (row.status == "error") {
    os << row.graph << ",,,,,,,,,,,,,," << row.status;
    return os.str();
  }
  const RunRecord& r = row.record;
  os << r.graph << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.mode << ',' << r.omega
     << ',' << r.time_sec << ',' << (r.timed_out ? 1 : 0) << ',' << r.nodes << ',' << r.leaves
     << ',' << r.rr1 << ',' << r.rr2 << ',' << r.rr3 << ',' << r.ub_prunes << ',' << row.status;
  return os.str();
}

int harness_threads() {
  const char* env = std::getenv("KDC2_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n > 0 ? n : 1;
}

struct BenchArgs {
  std::string corpus;
  std::string k_list = "1";
  double time_limit = 0.0;
  std::string out;
  std::string mode = "two-stage";
  bool no_rr3 = false;
};

int cmd_bench(const BenchArgs& args) {
  std::vector<std::string> files;
  if (fs::exists(args.corpus)) {
    for (const auto& entry : fs::directory_iterator(args.corpus)) {
      if (!entry.is_regular_file()) continue;
      auto ext = entry.path().extension().string();
      if (ext == ".txt" || ext == ".edges" || ext == ".mtx" || ext == ".el")
        files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<int> ks;
  for (long long k : parse_label_list(args.k_list)) ks.push_back(static_cast<int>(k));
  if (ks.empty()) {
    std::cerr << "error: empty k list\n";
    return kExitError;
  }

  struct Job {
    std::string file;
    int k;
  };
  std::vector<Job> jobs;
  for (const auto& f : files)
    for (int k : ks) jobs.push_back({f, k});
  std::vector<BenchRow> rows(jobs.size());

  const SolveMode mode = mode_from_flag(args.mode);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      BenchRow& row = rows[i];
      row.graph = fs::path(jobs[i].file).stem().string();
      try {
        LoadedGraph g = load_graph(jobs[i].file);
        SolverConfig cfg;
        cfg.k = jobs[i].k;
        cfg.mode = mode;
        cfg.time_limit_sec = args.time_limit;
        cfg.enable_rr3 = !args.no_rr3;
        auto [sol, st] = solve(g.graph, cfg);
        row.record = make_run_record(g, jobs[i].k, mode, sol, st);
        row.status = st.timed_out ? "timeout" : "solved";
      } catch (const std::exception& e) {
        row.status = "error";
        row.error = e.what();
      }
    }
  };
  int nthreads = std::min<std::size_t>(harness_threads(), std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "error: cannot open '" << args.out << "' for writing\n";
      return kExitError;
    }
    const bool jsonl = fs::path(args.out).extension() == ".jsonl";
    if (jsonl) {
      for (const auto& row : rows) {
        if (row.status == "error") {
          nlohmann::ordered_json j;
          j["graph"] = row.graph;
          j["status"] = row.status;
          j["error"] = row.error;
          out << j.dump() << '\n';
        } else {
          out << run_record_to_json(row.record, /*compact=*/true) << '\n';
        }
      }
    } else {
      out << "graph,n,m,k,mode,omega,time_sec,timed_out,nodes,leaves,rr1,rr2,rr3,ub_prunes,status\n";
      for (const auto& row : rows) out << csv_row(row) << '\n';
    }
  }

  // summary in the shape of a solved-instances table
  for (int k : ks) {
    long long solved = 0, total = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (jobs[i].k != k) continue;
      ++total;
      if (rows[i].status == "solved") ++solved;
    }
    std::cout << "k=" << k << " solved " << solved << "/" << total << "\n";
  }
  for (const auto& row : rows)
    if (row.status == "error")
      std::cerr << "error: " << row.graph << ": " << row.error << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact maximum k-defective clique solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "solve one graph");
  solve_cmd->add_option("--graph", solve_args.graph, "graph file")->required();
  solve_cmd->add_option("--k", solve_args.k, "number of allowed missing edges")->required();
  solve_cmd->add_option("--mode", solve_args.mode, "two-stage|full|degen-gap")
      ->check(CLI::IsMember({"two-stage", "full", "degen-gap"}));
  solve_cmd->add_option("--time-limit", solve_args.time_limit, "seconds, 0 = none");
  solve_cmd->add_flag("--no-rr3", solve_args.no_rr3, "disable the degree-sequence reduction rule");
  solve_cmd->add_option("--lb", solve_args.lb, "seed lower bound");
  solve_cmd->add_option("--output", solve_args.output, "write a JSON run record");
  solve_cmd->add_flag("--stats", solve_args.stats, "print search statistics");
  solve_cmd->add_option("--format", solve_args.format, "edge-list|mtx (default: by extension)");
  solve_cmd->add_option("--id-base", solve_args.id_base, "0|1: force the header id base")
      ->check(CLI::IsMember({"auto", "0", "1"}));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check a vertex set");
  verify_cmd->add_option("--graph", verify_args.graph, "graph file")->required();
  verify_cmd->add_option("--k", verify_args.k, "number of allowed missing edges")->required();
  verify_cmd->add_option("--vertices", verify_args.vertices, "comma/space separated labels");
  verify_cmd->add_option("--solution-json", verify_args.solution_json, "solution record to check");
  verify_cmd->add_option("--format", verify_args.format, "edge-list|mtx");
  verify_cmd->add_option("--id-base", verify_args.id_base, "0|1: force the header id base")
      ->check(CLI::IsMember({"auto", "0", "1"}));

  std::string oracle_graph, oracle_format = "auto";
  int oracle_k = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference solver (small graphs)");
  oracle_cmd->add_option("--graph", oracle_graph, "graph file")->required();
  oracle_cmd->add_option("--k", oracle_k, "number of allowed missing edges")->required();
  oracle_cmd->add_option("--format", oracle_format, "edge-list|mtx");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "run a corpus of graphs");
  bench_cmd->add_option("--corpus", bench_args.corpus, "directory of graph files")->required();
  bench_cmd->add_option("--k", bench_args.k_list, "comma separated k values");
  bench_cmd->add_option("--time-limit", bench_args.time_limit, "seconds per run, 0 = none");
  bench_cmd->add_option("--out", bench_args.out, "output table (.csv or .jsonl)");
  bench_cmd->add_option("--mode", bench_args.mode, "two-stage|full|degen-gap")
      ->check(CLI::IsMember({"two-stage", "full", "degen-gap"}));
  bench_cmd->add_flag("--no-rr3", bench_args.no_rr3, "disable the degree-sequence reduction rule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints usage or the requested help text
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_graph, oracle_k, oracle_format);
    if (bench_cmd->parsed()) return cmd_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
