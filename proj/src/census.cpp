#include <zaremba/census.hpp>

#include <zaremba/errors.hpp>

#include <boost/multiprecision/integer.hpp>

#include <atomic>
#include <chrono>
#include <limits>
#include <thread>
#include <utility>

namespace zaremba {

namespace {

constexpr std::uint64_t kNodeBatch = 8192;

// Shared walk state for one census. Node accounting is batched through an
// atomic so a budget overrun stops all workers promptly; successful results
// are deterministic and independent of the partitioning.
struct WalkControl {
  Int target;
  std::int64_t bound;
  std::uint64_t budget;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};

  // Returns false when the walk must abort.
  bool charge(std::uint64_t& local) {
    nodes.fetch_add(local, std::memory_order_relaxed);
    local = 0;
    if (nodes.load(std::memory_order_relaxed) > budget) {
      stop.store(true, std::memory_order_relaxed);
    }
    return !stop.load(std::memory_order_relaxed);
  }
};

// Ascending DFS below the prefix whose last two continuants are
// (kprev, kcur). Calls emit(prefix) for every exact hit. Children are
// enumerated by the incremental recurrence K' = v*kcur + kprev, adding kcur
// per step; the loop stops as soon as K' overshoots, since K' is strictly
// increasing in v. Exact hits are leaves: any extension overshoots.
template <typename Emit>
bool walk(WalkControl& ctl, std::vector<std::int64_t>& prefix,
          const Int& kprev, const Int& kcur, std::uint64_t& local,
          const Emit& emit) {
  Int kchild = kcur + kprev;
  for (std::int64_t v = 1; v < ctl.bound && kchild <= ctl.target;
       ++v, kchild += kcur) {
    if (++local >= kNodeBatch && !ctl.charge(local)) return false;
    prefix.push_back(v);
    if (kchild == ctl.target) {
      emit(prefix);
    } else {
      if (!walk(ctl, prefix, kcur, kchild, local, emit)) {
        prefix.pop_back();
        return false;
      }
    }
    prefix.pop_back();
  }
  return true;
}

bool accept(CountMode mode, const std::vector<std::int64_t>& u) {
  if (mode == CountMode::sequences) return true;
  // Canonical continued-fraction representative: last element >= 2, except
  // the single sequence (1).
  return u.back() >= 2 || u.size() == 1;
}

// Hits of one first-element subtree, kept per worker so the merge can
// reassemble global lexicographic order without a slot per first element.
struct SubtreeGroup {
  std::int64_t first;
  std::vector<PartialQuotients> hits;
};

struct WorkerOut {
  std::vector<SubtreeGroup> groups;  // ascending by first element
  std::uint64_t count = 0;
};

template <bool Collect>
CountResult run_census(const CensusQuery& q,
                       std::vector<PartialQuotients>* out) {
  if (q.target < 2) throw invalid_argument_error("census target must be >= 2");
  if (q.bound < 2) throw invalid_argument_error("census bound must be >= 2");
  const auto t0 = std::chrono::steady_clock::now();

  WalkControl ctl;
  ctl.target = q.target;
  ctl.bound = q.bound;
  ctl.budget = q.node_budget;

  // First elements that can start a hit: v <= target.
  std::int64_t first_max = q.bound - 1;
  if (q.target < first_max) first_max = static_cast<std::int64_t>(q.target);

  int workers = q.workers < 1 ? 1 : q.workers;
  if (static_cast<std::int64_t>(workers) > first_max) {
    workers = static_cast<int>(first_max);
  }
  if (workers < 1) workers = 1;

  std::vector<WorkerOut> results(static_cast<std::size_t>(workers));

  auto run_worker = [&](int w) {
    WorkerOut& mine = results[static_cast<std::size_t>(w)];
    std::uint64_t local = 0;
    std::vector<std::int64_t> prefix;
    for (std::int64_t v = w + 1; v <= first_max; v += workers) {
      if (ctl.stop.load(std::memory_order_relaxed)) break;
      std::vector<PartialQuotients> hits;
      auto emit = [&](const std::vector<std::int64_t>& u) {
        if (!accept(q.mode, u)) return;
        ++mine.count;
        if constexpr (Collect) hits.emplace_back(u);
      };
      if (++local >= kNodeBatch && !ctl.charge(local)) break;
      prefix.assign(1, v);
      bool keep_going = true;
      if (Int(v) == ctl.target) {
        emit(prefix);
      } else {
        keep_going = walk(ctl, prefix, Int(1), Int(v), local, emit);
      }
      if constexpr (Collect) {
        if (!hits.empty()) mine.groups.push_back({v, std::move(hits)});
      }
      if (!keep_going) break;
    }
    ctl.nodes.fetch_add(local, std::memory_order_relaxed);
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }

  const std::uint64_t nodes = ctl.nodes.load();
  if (ctl.stop.load()) throw budget_exceeded_error(nodes, q.node_budget);

  CountResult r;
  r.nodes = nodes;
  for (const auto& w : results) r.count += w.count;

  if constexpr (Collect) {
    // k-way merge of the per-worker group lists by first element.
    std::vector<std::size_t> cursor(results.size(), 0);
    for (;;) {
      int best = -1;
      std::int64_t best_first = std::numeric_limits<std::int64_t>::max();
      for (std::size_t w = 0; w < results.size(); ++w) {
        if (cursor[w] < results[w].groups.size() &&
            results[w].groups[cursor[w]].first < best_first) {
          best = static_cast<int>(w);
          best_first = results[w].groups[cursor[w]].first;
        }
      }
      if (best < 0) break;
      auto& g = results[static_cast<std::size_t>(best)]
                    .groups[cursor[static_cast<std::size_t>(best)]++];
      for (auto& h : g.hits) out->push_back(std::move(h));
    }
  }

  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
  r.exhaustive = true;
  return r;
}

}  // namespace

std::vector<PartialQuotients> enumerate(const CensusQuery& q) {
  std::vector<PartialQuotients> out;
  run_census<true>(q, &out);
  return out;
}

CountResult count_census(const CensusQuery& q) {
  return run_census<false>(q, nullptr);
}

CountResult count_f(std::int64_t a, int m, std::int64_t bound,
                        CountMode mode, std::uint64_t node_budget,
                        int workers) {
  if (a < 2) throw invalid_argument_error("count_f requires a >= 2");
  if (m < 1) throw invalid_argument_error("count_f requires m >= 1");
  CensusQuery q;
  q.target = ipow(Int(a), static_cast<unsigned>(m));
  q.bound = bound;
  q.mode = mode;
  q.node_budget = node_budget;
  q.workers = workers;
  return count_census(q);
}

std::optional<ZarembaWitness> zaremba_witness(const Int& d,
                                              std::int64_t bound) {
  if (d < 2) throw invalid_argument_error("zaremba_witness requires d >= 2");
  if (bound < 2) throw invalid_argument_error("bound must be >= 2");
  for (Int c = 1; c < d; ++c) {
    if (boost::multiprecision::gcd(c, d) != 1) continue;
    // Inline Euclid with early abort once a quotient reaches the bound.
    std::vector<std::int64_t> elems;
    Int hi = d, lo = c;
    bool ok = true;
    while (lo != 0) {
      Int q = hi / lo;
      if (q >= bound) {
        ok = false;
        break;
      }
      elems.push_back(static_cast<std::int64_t>(q));
      hi -= q * lo;
      std::swap(hi, lo);
    }
    if (ok) {
      return ZarembaWitness{c, PartialQuotients(std::move(elems))};
    }
  }
  return std::nullopt;
}

namespace {

// Descending DFS for the seed policy: at every node children are tried from
// the largest feasible element downward, and the first admissible exact hit
// wins. v_max comes from one exact division, then K' walks down by kcur.
bool seed_walk(WalkControl& ctl, std::vector<std::int64_t>& prefix,
               const Int& kprev, const Int& kcur, std::uint64_t& local,
               std::optional<PartialQuotients>& found) {
  Int vmax_i = (ctl.target - kprev) / kcur;
  std::int64_t vmax = vmax_i > ctl.bound - 1
                          ? ctl.bound - 1
                          : static_cast<std::int64_t>(vmax_i);
  if (vmax < 1) return true;
  Int kchild = vmax * kcur + kprev;
  for (std::int64_t v = vmax; v >= 1; --v, kchild -= kcur) {
    if (++local >= kNodeBatch && !ctl.charge(local)) return false;
    prefix.push_back(v);
    if (kchild == ctl.target) {
      if (v >= 2 && v <= ctl.bound - 2) {  // admissible last element
        found = PartialQuotients(prefix);
        prefix.pop_back();
        return false;  // found: stop the walk
      }
    } else {
      if (!seed_walk(ctl, prefix, kcur, kchild, local, found)) {
        prefix.pop_back();
        return false;
      }
    }
    prefix.pop_back();
  }
  return true;
}

}  // namespace

std::optional<PartialQuotients> find_endpoint_constrained(
    const Int& target, std::int64_t bound, std::uint64_t node_budget) {
  if (target < 1) throw invalid_argument_error("target must be >= 1");
  if (bound < 4) return std::nullopt;  // endpoints need the range [2, bound-2]
  WalkControl ctl;
  ctl.target = target;
  ctl.bound = bound;
  ctl.budget = node_budget;

  std::optional<PartialQuotients> found;
  std::uint64_t local = 0;
  std::vector<std::int64_t> prefix;
  std::int64_t first_max = bound - 2;
  if (target < first_max) first_max = static_cast<std::int64_t>(target);
  for (std::int64_t v = first_max; v >= 2 && !found; --v) {
    ++local;
    prefix.assign(1, v);
    if (Int(v) == target) {
      found = PartialQuotients(prefix);  // single element, endpoints valid
      break;
    }
    if (!seed_walk(ctl, prefix, Int(1), Int(v), local, found) && !found) {
      break;  // budget stop
    }
  }
  ctl.nodes.fetch_add(local, std::memory_order_relaxed);
  if (!found && ctl.stop.load()) {
    throw budget_exceeded_error(ctl.nodes.load(), node_budget);
  }
  return found;
}

}  // namespace zaremba
