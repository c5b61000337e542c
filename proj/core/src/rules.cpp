#include "kdc2/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdc2 {

int apply_rr1(Instance& inst, int k, std::vector<Vertex>* removed) {
  const long long es = inst.solution_nonedges();
  const int s = inst.solution_count();
  int count = 0;
  // removal swaps the last candidate into the current slot, so the index
  // only advances when the slot survives
  int idx = s;
  int end = inst.active_count();
  while (idx < end) {
    Vertex u = inst.candidates()[idx - s];
    if (es + inst.nonneighbors_in_solution(u) > k) {
      inst.remove_candidate(u);
      --end;
      ++count;
      if (removed) removed->push_back(u);
    } else {
      ++idx;
    }
  }
  return count;
}

int apply_rr2(Instance& inst, int k, std::vector<Vertex>* added) {
  int count = 0;
  std::vector<Vertex> pass;
  bool changed = true;
  while (changed) {
    changed = false;
    pass.assign(inst.candidates().begin(), inst.candidates().end());
    for (Vertex u : pass) {
      if (!inst.is_candidate(u)) continue;
      if (inst.solution_nonedges() + inst.nonneighbors_in_solution(u) <= k &&
          inst.degree_in_graph(u) >= inst.active_count() - 2) {
        inst.add_to_solution(u);
        ++count;
        changed = true;
        if (added) added->push_back(u);
      }
    }
  }
  return count;
}

ReduceResult reduce_to_fixpoint(Instance& inst, int k, std::vector<Vertex>* removed,
                                std::vector<Vertex>* added) {
  ReduceResult res;
  for (;;) {
    int a = apply_rr1(inst, k, removed);
    int b = apply_rr2(inst, k, added);
    res.removed += a;
    res.added += b;
    if (a == 0 && b == 0) break;
  }
  return res;
}

Vertex select_branching_vertex(const Instance& inst) {
  if (inst.candidate_count() == 0)
    throw std::logic_error("select_branching_vertex: empty candidate set");
  Vertex best = -1;
  int best_nbar = -1;
  for (Vertex u : inst.candidates()) {
    int nb = inst.nonneighbors_in_solution(u);
    if (nb > best_nbar || (nb == best_nbar && u < best)) {
      best = u;
      best_nbar = nb;
    }
  }
  return best;
}

int degree_sequence_ub(const Instance& inst, int k) {
  long long budget = k - inst.solution_nonedges();
  if (budget < 0) return inst.solution_count();
  int maxval = 0;
  for (Vertex u : inst.candidates())
    maxval = std::max(maxval, inst.nonneighbors_in_solution(u));
  // counts above the budget can never join the prefix, so one clamped
  // histogram realizes the sorted prefix walk
  const long long cap = std::min<long long>(budget, maxval);
  std::vector<int> hist(static_cast<std::size_t>(cap) + 2, 0);
  for (Vertex u : inst.candidates()) {
    long long c = inst.nonneighbors_in_solution(u);
    ++hist[static_cast<std::size_t>(std::min<long long>(c, cap + 1))];
  }
  long long take = hist[0];
  for (long long c = 1; c <= cap; ++c) {
    if (budget < c) break;
    long long x = std::min<long long>(hist[static_cast<std::size_t>(c)], budget / c);
    take += x;
    if (x < hist[static_cast<std::size_t>(c)]) break;
    budget -= x * c;
  }
  return inst.solution_count() + static_cast<int>(take);
}

int apply_rr3(Instance& inst, int k, int lb, Rr3Scratch& sc, std::vector<Rr3Decision>* log) {
  const int s = inst.solution_count();
  const int t = inst.candidate_count();
  if (!(s < lb && lb < inst.active_count()))
    throw std::logic_error("apply_rr3: requires |S| < lb < |V(g)|");
  const int r = lb - s;  // >= 1
  const long long es = inst.solution_nonedges();

  // counting sort of candidates by |N̄_S|
  int maxval = 0;
  for (Vertex u : inst.candidates()) maxval = std::max(maxval, inst.nonneighbors_in_solution(u));
  sc.count_lt.assign(static_cast<std::size_t>(maxval) + 2, 0);
  for (Vertex u : inst.candidates()) ++sc.count_lt[inst.nonneighbors_in_solution(u) + 1];
  for (int c = 1; c <= maxval + 1; ++c) sc.count_lt[c] += sc.count_lt[c - 1];
  sc.order.assign(t, -1);
  sc.sorted_val.assign(t, 0);
  {
    std::vector<int> fill(sc.count_lt.begin(), sc.count_lt.end() - 1);
    for (Vertex u : inst.candidates()) {
      int c = inst.nonneighbors_in_solution(u);
      sc.order[fill[c]] = u;
      sc.sorted_val[fill[c]] = c;
      ++fill[c];
    }
  }
  if (static_cast<int>(sc.pos_in_order.size()) < inst.total_count())
    sc.pos_in_order.resize(inst.total_count(), 0);
  if (static_cast<int>(sc.kept_index.size()) < inst.total_count())
    sc.kept_index.resize(inst.total_count(), -1);
  for (int i = 0; i < t; ++i) {
    sc.pos_in_order[sc.order[i]] = i + 1;
    sc.kept_index[sc.order[i]] = -1;
  }
  // suffix sums of the sorted counts: suffix_sums[i] = Σ_{j>=i} val_j, 1-based
  sc.suffix_sums.assign(static_cast<std::size_t>(t) + 2, 0);
  for (int i = t; i >= 1; --i) sc.suffix_sums[i] = sc.suffix_sums[i + 1] + sc.sorted_val[i - 1];

  sc.kept.clear();
  sc.kept_vals.clear();
  sc.kept_prefix.assign(1, 0);
  sc.kept_first_of_val.assign(static_cast<std::size_t>(maxval) + 1, -1);
  sc.kept_count_of_val.assign(static_cast<std::size_t>(maxval) + 1, 0);

  int removed_total = 0;
  bool kill_all = false;

  for (int i = 1; i <= t; ++i) {
    const Vertex u = sc.order[i - 1];
    const int cu = sc.sorted_val[i - 1];
    const int xs = static_cast<int>(sc.kept.size());
    if (xs + (t - i) < r) {
      // fewer vertices than r would remain: the whole candidate set goes
      if (log)
        for (int j = i; j <= t; ++j) log->push_back({sc.order[j - 1], true});
      kill_all = true;
      break;
    }

    // value at merged position r (merged ordering = X then unprocessed tail,
    // sorted by construction since X values <= cu <= unprocessed values)
    const int cstar = (r <= xs) ? sc.kept_vals[r - 1] : sc.sorted_val[i + (r - xs) - 1];
    // Σ_{j=1..r} |N̄_S(v_j)| over the merged ordering
    const long long head_sum =
        (r <= xs) ? sc.kept_prefix[r]
                  : sc.kept_prefix[xs] +
                        (sc.suffix_sums[i + 1] - sc.suffix_sums[i + (r - xs) + 1]);
    // first merged position holding cstar; everything below it is D
    const int xless = (sc.kept_count_of_val[cstar] > 0) ? sc.kept_first_of_val[cstar] : xs;
    const int uless = std::max(0, sc.count_lt[cstar] - i);
    const int lo = xless + uless + 1;
    const int c1_size = r - lo + 1;
    const int d_size = lo - 1;

    // classify u's surviving neighbors into D, C1, C2
    int n_d = 0, n_c1 = 0, n_c2 = 0;
    for (Vertex w : inst.graph().neighbors(u)) {
      if (!inst.is_candidate(w)) continue;
      int ki = sc.kept_index[w];
      int wv, mpos;
      if (ki >= 0) {
        wv = sc.kept_vals[ki];
        mpos = ki + 1;
      } else {
        int j = sc.pos_in_order[w];
        wv = sc.sorted_val[j - 1];
        mpos = xs + (j - i);
      }
      if (wv > cstar) continue;
      if (wv < cstar)
        ++n_d;
      else if (mpos <= r)
        ++n_c1;
      else
        ++n_c2;
    }

    const long long nbar_sd = cu + (d_size - n_d);
    const long long tail = std::max(0, (c1_size - n_c1) - n_c2);
    const bool prune = es + head_sum + nbar_sd + tail > k;
    if (log) log->push_back({u, prune});
    if (prune) {
      inst.remove_candidate(u);
      ++removed_total;
    } else {
      sc.kept_index[u] = xs;
      sc.kept.push_back(u);
      sc.kept_vals.push_back(cu);
      sc.kept_prefix.push_back(sc.kept_prefix.back() + cu);
      if (sc.kept_count_of_val[cu]++ == 0) sc.kept_first_of_val[cu] = xs;
    }
  }

  if (kill_all) {
    std::vector<Vertex> rest(inst.candidates().begin(), inst.candidates().end());
    for (Vertex u : rest) {
      inst.remove_candidate(u);
      ++removed_total;
    }
  }
  return removed_total;
}

}  // namespace kdc2
