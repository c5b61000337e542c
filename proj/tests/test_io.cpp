#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "graphgen.hpp"
#include "json.hpp"
#include "kdc2/io.hpp"
#include "kdc2/solver.hpp"

using namespace kdc2;

namespace {

LoadedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in, "test");
}

LoadedGraph parse_mtx(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_market(in, "test");
}

}  // namespace

TEST_CASE("edge list basics") {
  auto g = parse("1 2\n2 3\n3 1\n");
  CHECK(g.graph.vertex_count() == 3);
  CHECK(g.graph.edge_count() == 3);
  CHECK(g.labels == std::vector<long long>{1, 2, 3});
}

TEST_CASE("duplicates and loops are cleaned") {
  auto g = parse("1 2\n1 2\n2 2\n");
  CHECK(g.graph.vertex_count() == 2);
  CHECK(g.graph.edge_count() == 1);
}

TEST_CASE("comments and blank lines are skipped") {
  auto g = parse("# a comment\n% another\n\n4 5\n5 6\n");
  CHECK(g.graph.vertex_count() == 3);
  CHECK(g.graph.edge_count() == 2);
  CHECK(g.labels == std::vector<long long>{4, 5, 6});
}

TEST_CASE("zero-based header") {
  auto g = parse("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g.graph.vertex_count() == 4);
  CHECK(g.graph.edge_count() == 3);
  CHECK(g.labels == std::vector<long long>{0, 1, 2, 3});
}

TEST_CASE("one-based header shifts ids down") {
  auto g = parse("4 3\n1 2\n2 3\n3 4\n");
  CHECK(g.graph.vertex_count() == 4);
  CHECK(g.graph.edge_count() == 3);
  CHECK(g.labels == std::vector<long long>{1, 2, 3, 4});
  CHECK(g.graph.adjacent(0, 1));  // labels 1,2
}

TEST_CASE("header-only file declares an edgeless graph") {
  auto g = parse("5 0\n");
  CHECK(g.graph.vertex_count() == 5);
  CHECK(g.graph.edge_count() == 0);
}

TEST_CASE("two-token first line that cannot be a header is an edge") {
  // ids reference vertex >= n under both header readings
  auto g = parse("2 3\n0 1\n1 2\n");
  CHECK(g.graph.vertex_count() == 4);  // labels {0,1,2,3}
  CHECK(g.graph.edge_count() == 3);
  // a single edge line keeps its edge meaning
  auto single = parse("1 2\n");
  CHECK(single.graph.vertex_count() == 2);
  CHECK(single.graph.edge_count() == 1);
}

TEST_CASE("sparse labels are kept in a side table") {
  auto g = parse("10 900\n900 42\n");
  CHECK(g.graph.vertex_count() == 3);
  CHECK(g.labels == std::vector<long long>{10, 42, 900});
  auto index = label_to_id(g);
  CHECK(g.graph.adjacent(index[10], index[900]));
  CHECK(!g.graph.adjacent(index[10], index[42]));
}

TEST_CASE("malformed lines report their line number") {
  CHECK_THROWS_WITH_AS(parse("1 2\n3 x\n"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse("1 2 3\n"), doctest::Contains("line 1"), ParseError);
}

TEST_CASE("matrix market pattern symmetric") {
  auto g = parse_mtx(
      "%%MatrixMarket matrix coordinate pattern symmetric\n"
      "% comment\n"
      "3 3 3\n"
      "2 1\n"
      "3 1\n"
      "3 2\n");
  CHECK(g.graph.vertex_count() == 3);
  CHECK(g.graph.edge_count() == 3);
  CHECK(g.labels == std::vector<long long>{1, 2, 3});
}

TEST_CASE("matrix market tolerates weights and general symmetry") {
  auto g = parse_mtx(
      "%%MatrixMarket matrix coordinate real general\n"
      "3 3 4\n"
      "1 2 0.5\n"
      "2 1 0.5\n"
      "2 3 1.5\n"
      "3 3 9.0\n");
  CHECK(g.graph.vertex_count() == 3);
  CHECK(g.graph.edge_count() == 2);  // reverse duplicate merged, loop dropped
}

TEST_CASE("matrix market rejects bad inputs") {
  CHECK_THROWS_AS(parse_mtx("%%MatrixMarket matrix coordinate pattern symmetric\n3 4 1\n1 2\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_mtx("not a matrix\n"), ParseError);
  CHECK_THROWS_AS(parse_mtx("%%MatrixMarket matrix array pattern symmetric\n3 3 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_mtx("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n1 2\n"),
                  ParseError);  // nnz mismatch
  CHECK_THROWS_AS(parse_mtx("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 1\n1 4\n"),
                  ParseError);  // index out of range
}

TEST_CASE("fig2 round-trips through the edge-list format") {
  LoadedGraph g;
  g.graph = fixtures::fig2();
  g.name = "fig2";
  for (long long v = 1; v <= 14; ++v) g.labels.push_back(v);

  std::ostringstream out;
  write_edge_list(g, out);
  auto reloaded = parse(out.str());
  CHECK(reloaded.graph.vertex_count() == 14);
  CHECK(reloaded.graph.edge_count() == 22);
  SolverConfig cfg;
  cfg.k = 2;
  auto [sol, stats] = solve(reloaded.graph, cfg);
  CHECK(sol.size() == 5);  // ω_2 preserved

  // a second round-trip is a fixpoint
  std::ostringstream out2;
  write_edge_list(reloaded, out2);
  CHECK(out.str() == out2.str());
}

TEST_CASE("load-write-load is idempotent on random graphs") {
  testgen::Rng rng(515);
  Graph raw = testgen::gnp(12, 0.4, rng);
  LoadedGraph g;
  g.graph = raw;
  g.name = "rand";
  for (long long v = 0; v < 12; ++v) g.labels.push_back(v * 7 + 3);
  std::ostringstream a;
  write_edge_list(g, a);
  auto r1 = parse(a.str());
  std::ostringstream b;
  write_edge_list(r1, b);
  auto r2 = parse(b.str());
  CHECK(a.str() == b.str());
  CHECK(r1.graph.edge_count() == r2.graph.edge_count());
  CHECK(r1.labels == r2.labels);
}

TEST_CASE("run records serialize with the fixed schema") {
  LoadedGraph g;
  g.graph = fixtures::fig2();
  g.name = "fig2";
  for (long long v = 1; v <= 14; ++v) g.labels.push_back(v);
  SolverConfig cfg;
  cfg.k = 2;
  auto [sol, stats] = solve(g.graph, cfg);
  RunRecord rec = make_run_record(g, 2, cfg.mode, sol, stats);
  CHECK(rec.omega == 5);
  CHECK(rec.nonedges_induced <= 2);
  CHECK(std::is_sorted(rec.vertices.begin(), rec.vertices.end()));

  auto j = nlohmann::json::parse(run_record_to_json(rec));
  for (const char* field : {"graph", "n", "m", "k", "mode", "omega", "vertices",
                            "nonedges_induced", "time_sec", "timed_out", "stats"})
    CHECK(j.contains(field));
  for (const char* field : {"nodes", "leaves", "rr1", "rr2", "rr3", "ub_prunes"})
    CHECK(j["stats"].contains(field));
  CHECK(j["omega"] == 5);
  CHECK(j["k"] == 2);
  CHECK(j["mode"] == "two-stage");
  CHECK(j["timed_out"] == false);
  CHECK(j["vertices"].size() == 5);
}

TEST_CASE("id base override forces the header interpretation") {
  // auto-detection reads this as a 0-based header (no id reaches 4)
  std::istringstream amb0("4 2\n1 2\n2 3\n");
  auto zero = parse_edge_list(amb0, "t", IdBase::kZeroBased);
  CHECK(zero.labels == std::vector<long long>{0, 1, 2, 3});
  CHECK(zero.graph.adjacent(1, 2));

  std::istringstream amb1("4 2\n1 2\n2 3\n");
  auto one = parse_edge_list(amb1, "t", IdBase::kOneBased);
  CHECK(one.labels == std::vector<long long>{1, 2, 3, 4});
  CHECK(one.graph.adjacent(0, 1));  // labels 1 and 2

  std::istringstream bad("4 2\n0 1\n1 2\n");
  CHECK_THROWS_AS(parse_edge_list(bad, "t", IdBase::kOneBased), ParseError);
  std::istringstream bad2("4 2\n1 4\n");
  CHECK_THROWS_AS(parse_edge_list(bad2, "t", IdBase::kZeroBased), ParseError);
  std::istringstream headerless("7 8\n8 9\n");
  CHECK_THROWS_AS(parse_edge_list(headerless, "t", IdBase::kOneBased), ParseError);
}

TEST_CASE("detect_format follows the extension") {
  CHECK(detect_format("a/b/graph.mtx") == GraphFormat::kMatrixMarket);
  CHECK(detect_format("a/b/graph.txt") == GraphFormat::kEdgeList);
  CHECK(detect_format("graph.edges") == GraphFormat::kEdgeList);
}
