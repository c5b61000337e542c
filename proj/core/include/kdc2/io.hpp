#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "kdc2/graph.hpp"
#include "kdc2/solver.hpp"

namespace kdc2 {

enum class GraphFormat { kAuto, kEdgeList, kMatrixMarket };

// How a leading "n m" edge-list header declares its ids: detected from the
// data by default, or forced by the caller.
enum class IdBase { kAuto, kZeroBased, kOneBased };

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph plus the original vertex labels of the file it came from. Dense
/// ids are internal; everything user-facing reports labels.
struct LoadedGraph {
  Graph graph;
  std::vector<long long> labels;  // dense id -> original label
  std::string name;
};

std::unordered_map<long long, Vertex> label_to_id(const LoadedGraph& g);

// Format auto-detection by extension: .mtx is matrix-market, anything else
// (.txt, .edges, ...) is an edge list.
GraphFormat detect_format(const std::string& path);

LoadedGraph load_graph(const std::string& path, GraphFormat format = GraphFormat::kAuto,
                       IdBase base = IdBase::kAuto);

// Edge list: whitespace-separated "u v" lines; '#'/'%' lines are comments.
// An optional leading "n m" header is honored when it is consistent with
// every later id (0-based, or 1-based when min id is 1 and max id equals n);
// otherwise the first line is just an edge. A non-auto base forces the header
// interpretation and turns inconsistent ids into parse errors. Without a
// header, arbitrary integer labels are accepted and mapped densely in sorted
// order. Self-loops are dropped and duplicate edges merged.
LoadedGraph parse_edge_list(std::istream& in, const std::string& name,
                            IdBase base = IdBase::kAuto);

// Matrix-market "coordinate" path: pattern/integer/real fields (weights are
// discarded with a warning), symmetric or general symmetry, 1-based indices.
// Rows must equal columns.
LoadedGraph parse_matrix_market(std::istream& in, const std::string& name);

// Edges as "label label" lines; a reloaded copy reproduces the same graph on
// the same labels (isolated vertices are not representable and drop out).
void write_edge_list(const LoadedGraph& g, std::ostream& out);

/// One solver run in the fixed JSON schema consumed by the bench harness.
struct RunRecord {
  std::string graph;
  long long n = 0;
  long long m = 0;
  int k = 0;
  std::string mode;
  int omega = 0;
  std::vector<long long> vertices;  // original labels, ascending
  long long nonedges_induced = 0;
  double time_sec = 0.0;
  bool timed_out = false;
  long long nodes = 0;
  long long leaves = 0;
  long long rr1 = 0;
  long long rr2 = 0;
  long long rr3 = 0;
  long long ub_prunes = 0;
};

const char* mode_name(SolveMode mode);

RunRecord make_run_record(const LoadedGraph& g, int k, SolveMode mode, const Solution& sol,
                          const SearchStats& stats);

std::string run_record_to_json(const RunRecord& rec, bool compact = false);

// Writes the record as a single JSON object; throws std::runtime_error on
// I/O failure.
void write_solution(const RunRecord& rec, const std::string& path);

}  // namespace kdc2
