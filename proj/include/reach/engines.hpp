#pragma once

#include <atomic>
#include <cstdint>

#include "reach/cost.hpp"
#include "reach/postd.hpp"

namespace reach {

struct RunStats {
  int levels = 0;            // highest processed level
  long postc_count = 0;      // continuous-post invocations
  long postd_count = 0;      // discrete-post invocations
  long support_samples = 0;  // template support evaluations
  long jump_tasks = 0;       // atomic jump tasks (emitted per transition)
  long postd_cost_units = 0; // sum over flowpipes of emitted omega count
  long frontier_unexplored = 0;
  double wall_seconds = 0.0;
  std::vector<double> busy_seconds;                     // per worker
  std::vector<std::vector<double>> level_busy_seconds;  // [level][worker]

  long total_post() const { return postc_count + postd_count; }
  double utilization() const;
};

/// One explored symbolic state: its polytope bounds (template followed
/// by the location invariant rows), the flowpipe computed from it and,
/// where the engine tracks it, the parent state and transition.
struct StateRecord {
  SymbolicState state;
  std::shared_ptr<const TemplateDirections> dirs;
  std::vector<double> bounds;
  Flowpipe flowpipe;
  int parent = -1;          // index into the previous level's records
  int via_transition = -1;  // index into ha.transitions
};

struct LevelRecord {
  std::vector<StateRecord> states;
};

struct ReachResult {
  std::vector<LevelRecord> levels;
  RunStats stats;
};

struct EngineConfig {
  int bound = 5;
  int workers = 1;
  std::uint64_t seed = 0;
  bool aggregate = true;
  bool containment = false;  // run_seq only
};

/// Level-bounded sequential worklist exploration. With containment on,
/// successors whose bounds are dominated by an already recorded state
/// of the same location are dropped.
ReachResult run_seq(const HybridAutomaton& ha, const ReachParams& p,
                    const EngineConfig& cfg);

/// Instrumentation hook for the lock-free worklist discipline: one cell
/// per (row, column) of the write buffer, accumulating a bitmask of the
/// workers that appended there during the current level.
struct AgjhWriteLog {
  int n = 0;
  std::vector<std::atomic<std::uint64_t>> cells;
  std::atomic<bool> conflict{false};

  explicit AgjhWriteLog(int workers)
      : n(workers), cells(static_cast<size_t>(workers) * workers) {}
  void record(int row, int col, int worker);
  void reset();
};

/// Adapted lock-free parallel BFS: two-buffer N x N worklist, worker w
/// reading row w and writing column w, successors scattered across rows
/// by a per-(seed, level, worker) deterministic stream, full barrier at
/// every level.
ReachResult run_agjh(const HybridAutomaton& ha, const ReachParams& p,
                     const EngineConfig& cfg, AgjhWriteLog* log = nullptr);

/// Per-level chunk assignment record, exposed for the load-balance
/// property tests.
struct TpbfsBalance {
  long tasks_per_core = 0;       // ceil(total cost / workers)
  long max_single_cost = 0;
  std::vector<long> assigned;    // cost per worker
};

struct TpbfsTrace {
  std::vector<TpbfsBalance> postc;  // one per level
  std::vector<TpbfsBalance> postd;
};

/// Task-parallel BFS: per level, post operations are split into atomic
/// tasks (one template direction's support sequence per flowpipe; one
/// omega's guard intersection per transition), weighted by precomputed
/// cost and handed to workers as contiguous chunks.
ReachResult run_tpbfs(const HybridAutomaton& ha, const ReachParams& p,
                      const EngineConfig& cfg, TpbfsTrace* trace = nullptr);

}  // namespace reach
