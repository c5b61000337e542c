#include "kdc2/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "kdc2/rules.hpp"

namespace kdc2 {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_from(double limit_sec) {
  if (limit_sec <= 0.0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(limit_sec));
}

// One branch-and-bound driver. In normal mode lb tracks the incumbent and
// grows as solutions are found; in tau mode lb is pinned to tau-1 and the
// search additionally cuts every node whose working graph has at most tau
// vertices, stopping globally as soon as a witness appears.
class Searcher {
 public:
  Searcher(int k, bool enable_rr3, std::optional<Clock::time_point> deadline,
           SearchStats& stats, Solution& best, int initial_lb, int tau = 0)
      : k_(k),
        enable_rr3_(enable_rr3),
        tau_(tau),
        deadline_(deadline),
        stats_(stats),
        best_(best),
        lb_(std::max(best.size(), initial_lb)) {
    if (tau_ > 0) lb_ = tau_ - 1;
  }

  int lb() const { return lb_; }
  bool found_witness() const { return found_; }
  bool stopped() const { return stats_.timed_out || found_; }

  void run_root(Instance& inst) {
    if (stopped()) return;
    const long long leaves_before = stats_.leaves;
    root_size_ = -1;
    descend(inst);
    if (root_size_ >= 0)
      stats_.per_root.push_back({root_size_, stats_.leaves - leaves_before});
  }

 private:
  bool expired() {
    if (stats_.timed_out) return true;
    if (deadline_ && Clock::now() >= *deadline_) {
      stats_.timed_out = true;
      return true;
    }
    return false;
  }

  void record_root(int size) {
    if (root_size_ < 0) root_size_ = size;
  }

  void on_feasible(const Instance& inst) {
    const int size = inst.active_count();
    if (size <= lb_) return;
    lb_ = size;
    best_.k = k_;
    best_.vertices.clear();
    best_.vertices.reserve(size);
    for (Vertex v : inst.active()) best_.vertices.push_back(inst.local().root_id(v));
    std::sort(best_.vertices.begin(), best_.vertices.end());
    if (tau_ > 0) found_ = true;
  }

  // Iterative over the exclude branch, recursive on the include branch; the
  // recursion depth is therefore bounded by |S| <= α+k+1.
  void descend(Instance& inst, int depth = 0) {
    const std::size_t entry_mark = inst.trail_mark();
    bool first = (depth == 0);
    while (true) {
      ++stats_.nodes_visited;
      if (expired() || found_) break;

      auto red = reduce_to_fixpoint(inst, k_);
      stats_.rr1_removals += red.removed;
      stats_.rr2_additions += red.added;

      // terminal: the whole working graph is a k-defective clique
      if (inst.active_nonedges() <= k_) {
        on_feasible(inst);
        if (first) record_root(0);
        ++stats_.leaves;
        break;
      }
      if (tau_ > 0 && inst.active_count() <= tau_) {
        // truncated search: a node this small can no longer yield a witness
        if (first) record_root(inst.candidate_count());
        ++stats_.leaves;
        break;
      }
      if (inst.active_count() <= lb_) {
        ++stats_.ub_prunes;
        if (first) record_root(inst.candidate_count());
        ++stats_.leaves;
        break;
      }
      if (degree_sequence_ub(inst, k_) <= lb_) {
        ++stats_.ub_prunes;
        if (first) record_root(inst.candidate_count());
        ++stats_.leaves;
        break;
      }
      if (enable_rr3_ && inst.solution_count() < lb_ && lb_ < inst.active_count()) {
        int rm = apply_rr3(inst, k_, lb_, rr3_scratch_);
        stats_.rr3_removals += rm;
        if (rm > 0) {
          if (inst.active_nonedges() <= k_) {
            on_feasible(inst);
            if (first) record_root(0);
            ++stats_.leaves;
            break;
          }
          if (inst.active_count() <= (tau_ > 0 ? tau_ : lb_)) {
            ++stats_.ub_prunes;
            if (first) record_root(inst.candidate_count());
            ++stats_.leaves;
            break;
          }
        }
      }
      if (first) record_root(inst.candidate_count());
      first = false;

      const Vertex b = select_branching_vertex(inst);
      {
        const std::size_t mark = inst.trail_mark();
        inst.add_to_solution(b);
        descend(inst, depth + 1);
        inst.unwind(mark);
      }
      if (expired() || found_) break;
      inst.remove_candidate(b);
      // loop around: the exclude branch is the next node
    }
    inst.unwind(entry_mark);
  }

  const int k_;
  const bool enable_rr3_;
  const int tau_;
  const std::optional<Clock::time_point> deadline_;
  SearchStats& stats_;
  Solution& best_;
  int lb_;
  bool found_ = false;
  int root_size_ = -1;
  Rr3Scratch rr3_scratch_;
};

// Reusable two-hop member collection for Stage-I roots.
class EgoExtractor {
 public:
  EgoExtractor(const Graph& g, const DegeneracyOrdering& ord)
      : g_(g), ord_(ord), stamp_(g.vertex_count(), 0), local_id_(g.vertex_count(), -1) {}

  // Gathers N[A] ∩ suffix for position idx; returns the member count.
  int collect(int idx) {
    seed_ = ord_.order[idx];
    members_.clear();
    ++gen_;
    push(seed_);
    for (Vertex w : g_.neighbors(seed_))
      if (ord_.position[w] >= idx) push(w);
    // members_[1..] currently holds A; extend with A's later neighbors
    const std::size_t a_size = members_.size();
    for (std::size_t i = 1; i < a_size; ++i)
      for (Vertex w : g_.neighbors(members_[i]))
        if (ord_.position[w] >= idx) push(w);
    return static_cast<int>(members_.size());
  }

  // Builds the induced local graph for the last collect() and the local id
  // of the seed vertex.
  std::pair<LocalGraph, Vertex> build() {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i)
      local_id_[members_[i]] = static_cast<Vertex>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (Vertex w : g_.neighbors(members_[i]))
        if (stamped(w) && local_id_[w] > static_cast<Vertex>(i))
          edges.emplace_back(static_cast<Vertex>(i), local_id_[w]);
    Graph sub = Graph::from_edges(static_cast<Vertex>(members_.size()), std::move(edges));
    Vertex seed_local = local_id_[seed_];
    for (Vertex v : members_) local_id_[v] = -1;
    return {LocalGraph::from_graph(std::move(sub), members_), seed_local};
  }

 private:
  void push(Vertex v) {
    if (stamp_[v] != gen_) {
      stamp_[v] = gen_;
      members_.push_back(v);
    }
  }
  bool stamped(Vertex v) const { return stamp_[v] == gen_; }

  const Graph& g_;
  const DegeneracyOrdering& ord_;
  std::vector<std::uint32_t> stamp_;
  std::vector<Vertex> local_id_;
  std::vector<Vertex> members_;
  Vertex seed_ = -1;
  std::uint32_t gen_ = 0;
};

// Stage-I sweep: one root per ordering position, skipping subgraphs already
// dominated by the incumbent (in tau mode lb = tau-1, so this also skips
// subgraphs too small to host a witness).
void run_stage_one(const Graph& g, const DegeneracyOrdering& ord, Searcher& searcher) {
  EgoExtractor extractor(g, ord);
  const Vertex n = g.vertex_count();
  for (int i = 0; i < n && !searcher.stopped(); ++i) {
    int members = extractor.collect(i);
    if (members <= searcher.lb()) continue;
    auto [local, seed] = extractor.build();
    Instance inst(local);
    inst.add_to_solution(seed);
    searcher.run_root(inst);
  }
}

void run_full_graph(const Graph& g, Searcher& searcher) {
  if (searcher.stopped()) return;
  LocalGraph whole = LocalGraph::whole(g);
  Instance inst(whole);
  searcher.run_root(inst);
}

void verify_or_throw(const Graph& g, const Solution& best) {
  if (best.vertices.empty()) return;
  VertexSet s(g.vertex_count());
  for (Vertex v : best.vertices) s.insert(v);
  if (!is_k_defective(g, s, best.k))
    throw std::logic_error("solver produced a set that is not a k-defective clique");
}

bool trivial_cases(const Graph& g, const SolverConfig& cfg, Solution& best) {
  const long long n = g.vertex_count();
  if (n <= cfg.initial_lb) return true;  // cannot beat the seed
  if (cfg.k >= n * (n - 1) / 2) {
    best.vertices.resize(n);
    for (Vertex v = 0; v < n; ++v) best.vertices[v] = v;
    return true;
  }
  return false;
}

}  // namespace

double beta_k(int k) {
  if (k < 1) throw std::invalid_argument("beta_k: requires k >= 1");
  auto poly = [k](double x) { return std::pow(x, k + 2) - 2.0 * std::pow(x, k + 1) + 1.0; };
  // x=1 is a root but not the largest: the polynomial is negative just above
  // 1 and reaches 1 at x=2, so the largest root is bracketed by (1,2).
  double lo = 1.000001, hi = 2.0;
  for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi);
    (poly(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

EgoInstance extract_ego_instance(const Graph& g, const DegeneracyOrdering& ord, int idx) {
  if (idx < 0 || idx >= g.vertex_count())
    throw std::invalid_argument("extract_ego_instance: order index out of range");
  EgoExtractor extractor(g, ord);
  extractor.collect(idx);
  auto [local, seed] = extractor.build();
  EgoInstance out;
  out.local = std::make_unique<LocalGraph>(std::move(local));
  out.instance = Instance(*out.local);
  out.instance.add_to_solution(seed);
  return out;
}

void branch_and_bound(Instance& inst, const SolverConfig& cfg, Solution& best,
                      SearchStats& stats) {
  if (cfg.k < 0) throw std::invalid_argument("branch_and_bound: k must be non-negative");
  if (!best.vertices.empty() && best.k != cfg.k)
    throw std::invalid_argument("branch_and_bound: best.k does not match cfg.k");
  best.k = cfg.k;
  const auto start = Clock::now();
  Searcher searcher(cfg.k, cfg.enable_rr3, deadline_from(cfg.time_limit_sec), stats, best,
                    cfg.initial_lb);
  searcher.run_root(inst);
  stats.elapsed_sec += std::chrono::duration<double>(Clock::now() - start).count();
}

std::pair<Solution, SearchStats> solve(const Graph& g, const SolverConfig& cfg) {
  if (cfg.k < 0) throw std::invalid_argument("solve: k must be non-negative");
  if (cfg.mode == SolveMode::kDegeneracyGap) {
    auto res = solve_degeneracy_gap(g, cfg.k, cfg.time_limit_sec, cfg.enable_rr3);
    return res;
  }

  const auto start = Clock::now();
  Solution best;
  best.k = cfg.k;
  SearchStats stats;
  if (!trivial_cases(g, cfg, best)) {
    Searcher searcher(cfg.k, cfg.enable_rr3, deadline_from(cfg.time_limit_sec), stats, best,
                      cfg.initial_lb);
    if (cfg.mode == SolveMode::kTwoStage) {
      auto ord = degeneracy_ordering(g);
      run_stage_one(g, ord, searcher);
      if (best.size() < cfg.k + 1) run_full_graph(g, searcher);
    } else {
      run_full_graph(g, searcher);
    }
  }
  verify_or_throw(g, best);
  stats.elapsed_sec = std::chrono::duration<double>(Clock::now() - start).count();
  return {std::move(best), std::move(stats)};
}

std::optional<Solution> test_tau(const Graph& g, int k, int tau, SearchStats* stats,
                                 bool enable_rr3, double time_limit_sec) {
  if (k < 0) throw std::invalid_argument("test_tau: k must be non-negative");
  if (tau < k + 2) throw std::invalid_argument("test_tau: requires tau >= k+2");
  SearchStats local_stats;
  SearchStats& st = stats ? *stats : local_stats;
  const auto start = Clock::now();
  Solution witness;
  witness.k = k;
  Searcher searcher(k, enable_rr3, deadline_from(time_limit_sec), st, witness, 0, tau);
  auto ord = degeneracy_ordering(g);
  // any witness has size >= tau >= k+2 and diameter <= 2, so the Stage-I
  // sweep is complete on its own; roots smaller than tau cannot host one
  run_stage_one(g, ord, searcher);
  st.elapsed_sec += std::chrono::duration<double>(Clock::now() - start).count();
  if (searcher.found_witness()) {
    verify_or_throw(g, witness);
    return witness;
  }
  return std::nullopt;
}

std::pair<Solution, SearchStats> solve_degeneracy_gap(const Graph& g, int k,
                                                      double time_limit_sec, bool enable_rr3) {
  if (k < 0) throw std::invalid_argument("solve_degeneracy_gap: k must be non-negative");
  const auto start = Clock::now();
  const auto deadline = deadline_from(time_limit_sec);
  SearchStats stats;
  SolverConfig fallback_cfg;
  fallback_cfg.k = k;
  fallback_cfg.mode = SolveMode::kTwoStage;
  fallback_cfg.enable_rr3 = enable_rr3;

  Solution trivial_best;
  trivial_best.k = k;
  SolverConfig probe = fallback_cfg;
  if (trivial_cases(g, probe, trivial_best)) {
    stats.elapsed_sec = std::chrono::duration<double>(Clock::now() - start).count();
    return {std::move(trivial_best), std::move(stats)};
  }

  auto ord = degeneracy_ordering(g);
  for (int tau = degeneracy_upper_bound(ord, k); tau >= k + 2 && !stats.timed_out; --tau) {
    Solution witness;
    witness.k = k;
    Searcher searcher(k, enable_rr3, deadline, stats, witness, 0, tau);
    run_stage_one(g, ord, searcher);
    if (searcher.found_witness()) {
      verify_or_throw(g, witness);
      stats.elapsed_sec = std::chrono::duration<double>(Clock::now() - start).count();
      return {std::move(witness), std::move(stats)};
    }
  }

  // tau < k+2 is outside the truncated search's regime: finish exactly
  Solution best;
  best.k = k;
  if (!stats.timed_out) {
    Searcher searcher(k, enable_rr3, deadline, stats, best, 0);
    run_stage_one(g, ord, searcher);
    if (!searcher.stopped() && best.size() < k + 1) run_full_graph(g, searcher);
    verify_or_throw(g, best);
  }
  stats.elapsed_sec = std::chrono::duration<double>(Clock::now() - start).count();
  return {std::move(best), std::move(stats)};
}

}  // namespace kdc2
