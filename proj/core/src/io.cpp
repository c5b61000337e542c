#include "kdc2/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace kdc2 {

namespace {

struct Record {
  long long a, b;
  long long line;
};

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#' || c == '%';
  }
  return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

long long parse_id(const std::string& tok, long long line_no) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     tok + "'");
  }
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

LoadedGraph from_labeled_edges(std::vector<std::pair<long long, long long>> edges,
                               std::vector<long long> labels, const std::string& name) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::unordered_map<long long, Vertex> dense;
  dense.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) dense[labels[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> dense_edges;
  dense_edges.reserve(edges.size());
  for (auto [a, b] : edges) dense_edges.emplace_back(dense[a], dense[b]);
  LoadedGraph out;
  out.graph = Graph::from_edges(static_cast<Vertex>(labels.size()), std::move(dense_edges));
  out.labels = std::move(labels);
  out.name = name;
  out.graph.validate();
  return out;
}

}  // namespace

std::unordered_map<long long, Vertex> label_to_id(const LoadedGraph& g) {
  std::unordered_map<long long, Vertex> map;
  map.reserve(g.labels.size());
  for (std::size_t i = 0; i < g.labels.size(); ++i) map[g.labels[i]] = static_cast<Vertex>(i);
  return map;
}

GraphFormat detect_format(const std::string& path) {
  auto ext = lower(std::filesystem::path(path).extension().string());
  return ext == ".mtx" ? GraphFormat::kMatrixMarket : GraphFormat::kEdgeList;
}

LoadedGraph load_graph(const std::string& path, GraphFormat format, IdBase base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  if (format == GraphFormat::kAuto) format = detect_format(path);
  std::string name = std::filesystem::path(path).stem().string();
  return format == GraphFormat::kMatrixMarket ? parse_matrix_market(in, name)
                                              : parse_edge_list(in, name, base);
}

LoadedGraph parse_edge_list(std::istream& in, const std::string& name, IdBase base) {
  std::vector<Record> records;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto toks = tokens_of(line);
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v', got " +
                       std::to_string(toks.size()) + " tokens");
    records.push_back({parse_id(toks[0], line_no), parse_id(toks[1], line_no), line_no});
  }
  if (records.empty()) return from_labeled_edges({}, {}, name);

  const auto [hn, hm, hline] = records[0];
  bool header_zero_based = false, header_one_based = false;
  if (hn >= 1 && (records.size() > 1 || hm == 0)) {
    long long min_id = std::numeric_limits<long long>::max(), max_id = -1;
    bool all_below_n = true, all_in_one_based = true;
    for (std::size_t i = 1; i < records.size(); ++i) {
      min_id = std::min({min_id, records[i].a, records[i].b});
      max_id = std::max({max_id, records[i].a, records[i].b});
      if (records[i].a >= hn || records[i].b >= hn) all_below_n = false;
      if (records[i].a < 1 || records[i].a > hn || records[i].b < 1 || records[i].b > hn)
        all_in_one_based = false;
    }
    switch (base) {
      case IdBase::kAuto:
        if (all_below_n)
          header_zero_based = true;
        else if (records.size() > 1 && min_id == 1 && max_id == hn)
          header_one_based = true;
        break;
      case IdBase::kZeroBased:
        if (!all_below_n)
          throw ParseError(name + ": id outside [0," + std::to_string(hn) +
                           ") under the declared 0-based header");
        header_zero_based = true;
        break;
      case IdBase::kOneBased:
        if (!all_in_one_based)
          throw ParseError(name + ": id outside [1," + std::to_string(hn) +
                           "] under the declared 1-based header");
        header_one_based = true;
        break;
    }
  } else if (base != IdBase::kAuto) {
    throw ParseError(name + ": an id base override requires a leading 'n m' header line");
  }

  std::vector<std::pair<long long, long long>> edges;
  std::vector<long long> labels;
  if (header_zero_based || header_one_based) {
    const long long base = header_one_based ? 1 : 0;
    labels.reserve(hn);
    for (long long v = 0; v < hn; ++v) labels.push_back(v + base);
    for (std::size_t i = 1; i < records.size(); ++i)
      edges.emplace_back(records[i].a, records[i].b);
  } else {
    for (const auto& r : records) {
      edges.emplace_back(r.a, r.b);
      labels.push_back(r.a);
      labels.push_back(r.b);
    }
  }
  return from_labeled_edges(std::move(edges), std::move(labels), name);
}

LoadedGraph parse_matrix_market(std::istream& in, const std::string& name) {
  std::string line;
  long long line_no = 0;
  if (!std::getline(in, line)) throw ParseError("matrix-market: empty input");
  ++line_no;
  auto header = tokens_of(line);
  if (header.size() < 5 || lower(header[0]) != "%%matrixmarket")
    throw ParseError("matrix-market: missing %%MatrixMarket header");
  if (lower(header[1]) != "matrix" || lower(header[2]) != "coordinate")
    throw ParseError("matrix-market: only 'matrix coordinate' inputs are supported");
  const std::string field = lower(header[3]);
  const std::string symmetry = lower(header[4]);
  if (field != "pattern" && field != "integer" && field != "real")
    throw ParseError("matrix-market: unsupported field '" + header[3] + "'");
  if (symmetry != "symmetric" && symmetry != "general")
    throw ParseError("matrix-market: unsupported symmetry '" + header[4] + "'");
  if (field != "pattern")
    std::cerr << "warning: " << name << ": weighted matrix-market input, weights discarded\n";
  if (symmetry == "general")
    std::cerr << "warning: " << name << ": 'general' matrix-market input, symmetrizing\n";

  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto toks = tokens_of(line);
    if (toks.size() != 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'rows cols nnz'");
    rows = parse_id(toks[0], line_no);
    cols = parse_id(toks[1], line_no);
    nnz = parse_id(toks[2], line_no);
    break;
  }
  if (rows < 0) throw ParseError("matrix-market: missing dimensions line");
  if (rows != cols)
    throw ParseError("matrix-market: non-square matrix (" + std::to_string(rows) + "x" +
                     std::to_string(cols) + ")");

  std::vector<std::pair<long long, long long>> edges;
  edges.reserve(static_cast<std::size_t>(nnz));
  long long seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto toks = tokens_of(line);
    if (toks.size() != 2 && toks.size() != 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'i j [value]'");
    long long i = parse_id(toks[0], line_no);
    long long j = parse_id(toks[1], line_no);
    if (i < 1 || i > rows || j < 1 || j > rows)
      throw ParseError("line " + std::to_string(line_no) + ": index out of range");
    edges.emplace_back(i, j);
    ++seen;
  }
  if (seen != nnz)
    throw ParseError("matrix-market: entry count " + std::to_string(seen) +
                     " does not match declared nnz " + std::to_string(nnz));

  std::vector<long long> labels(rows);
  for (long long v = 0; v < rows; ++v) labels[v] = v + 1;
  return from_labeled_edges(std::move(edges), std::move(labels), name);
}

void write_edge_list(const LoadedGraph& g, std::ostream& out) {
  const Graph& gr = g.graph;
  for (Vertex v = 0; v < gr.vertex_count(); ++v)
    for (Vertex w : gr.neighbors(v))
      if (v < w) out << g.labels[v] << ' ' << g.labels[w] << '\n';
}

const char* mode_name(SolveMode mode) {
  switch (mode) {
    case SolveMode::kTwoStage: return "two-stage";
    case SolveMode::kFullSearch: return "full";
    case SolveMode::kDegeneracyGap: return "degen-gap";
  }
  return "unknown";
}

RunRecord make_run_record(const LoadedGraph& g, int k, SolveMode mode, const Solution& sol,
                          const SearchStats& stats) {
  RunRecord rec;
  rec.graph = g.name;
  rec.n = g.graph.vertex_count();
  rec.m = g.graph.edge_count();
  rec.k = k;
  rec.mode = mode_name(mode);
  rec.omega = sol.size();
  rec.vertices.reserve(sol.vertices.size());
  for (Vertex v : sol.vertices) rec.vertices.push_back(g.labels[v]);
  std::sort(rec.vertices.begin(), rec.vertices.end());
  VertexSet s(g.graph.vertex_count());
  for (Vertex v : sol.vertices) s.insert(v);
  rec.nonedges_induced = non_edge_count(g.graph, s);
  rec.time_sec = stats.elapsed_sec;
  rec.timed_out = stats.timed_out;
  rec.nodes = stats.nodes_visited;
  rec.leaves = stats.leaves;
  rec.rr1 = stats.rr1_removals;
  rec.rr2 = stats.rr2_additions;
  rec.rr3 = stats.rr3_removals;
  rec.ub_prunes = stats.ub_prunes;
  return rec;
}

std::string run_record_to_json(const RunRecord& rec, bool compact) {
  nlohmann::ordered_json j;
  j["graph"] = rec.graph;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["k"] = rec.k;
  j["mode"] = rec.mode;
  j["omega"] = rec.omega;
  j["vertices"] = rec.vertices;
  j["nonedges_induced"] = rec.nonedges_induced;
  j["time_sec"] = rec.time_sec;
  j["timed_out"] = rec.timed_out;
  j["stats"] = {{"nodes", rec.nodes},   {"leaves", rec.leaves}, {"rr1", rec.rr1},
                {"rr2", rec.rr2},       {"rr3", rec.rr3},       {"ub_prunes", rec.ub_prunes}};
  return compact ? j.dump() : j.dump(2);
}

void write_solution(const RunRecord& rec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << run_record_to_json(rec) << '\n';
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace kdc2
