#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpg/game.hpp"
#include "dpg/graph.hpp"

namespace dpg {

enum class SchedulerPolicy { LowestId, HighestGain, PreferFlipToOne, RandomSeeded, Scripted };

// Chooses which improving vertex moves next.
//   LowestId         smallest id with an improving flip
//   HighestGain      largest exact cost decrease, ties to the smallest id
//   PreferFlipToOne  smallest id flipping 0 -> 1, else smallest id
//   RandomSeeded     uniform among improving vertices (mt19937_64)
//   Scripted         the listed vertices in order; the run ends with the script
// A non-empty `allowed` mask restricts every policy to vertices with allowed[v].
struct Scheduler {
  SchedulerPolicy policy = SchedulerPolicy::LowestId;
  std::uint64_t seed = 0;
  std::vector<Vertex> script;
  std::vector<std::uint8_t> allowed;

  static Scheduler lowest_id() { return {}; }
  static Scheduler highest_gain() { return {SchedulerPolicy::HighestGain, 0, {}, {}}; }
  static Scheduler prefer_flip_to_one() { return {SchedulerPolicy::PreferFlipToOne, 0, {}, {}}; }
  static Scheduler random(std::uint64_t seed) { return {SchedulerPolicy::RandomSeeded, seed, {}, {}}; }
  static Scheduler scripted(std::vector<Vertex> s) { return {SchedulerPolicy::Scripted, 0, std::move(s), {}}; }
};

// Parses "lowest-id", "highest-gain", "prefer-one", "random"; throws InvalidArgument.
SchedulerPolicy parse_scheduler_policy(const std::string& name);

struct Move {
  std::int64_t step = 0;
  Vertex vertex = -1;
  std::uint8_t new_opinion = 0;
  Vertex ones_after = 0;
};

struct MoveTrace {
  std::vector<Move> moves;

  // TSV with header "step\tvertex\tnew_opinion\tones_after".
  std::string tsv() const;
};

struct RunResult {
  OpinionState final_state;
  MoveTrace trace;
  bool reached_equilibrium = false;
};

// 4 n (max degree + 1).
std::int64_t default_max_steps(const Graph& g);

// Applies scheduler-selected improving flips until none is available to the
// scheduler, the script ends, or max_steps moves were made. reached_equilibrium
// reports is_equilibrium of the final state. Each move is checked to lower the
// mover's exact cost. Scripted entries without an improving flip throw
// InvalidScript.
RunResult run_to_equilibrium(const Graph& g, const StubbornnessProfile& profile,
                             const BeliefAssignment& beliefs, const OpinionState& initial,
                             const Scheduler& scheduler,
                             std::optional<std::int64_t> max_steps = std::nullopt);

// The three swing conditions for u: b(u) = 0; u improves by flipping in the
// truthful state; after that flip no belief-1 vertex improves by moving to 0.
// Throws NotMajorityZero unless beliefs has exactly (n+1)/2 zeros.
bool verify_swing(const Graph& g, const StubbornnessProfile& profile,
                  const BeliefAssignment& beliefs, Vertex u);

struct ScheduleMode {
  bool exhaustive = true;
  std::int64_t samples = 100;   // sampled mode
  std::uint64_t seed = 0;       // sampled mode
  Vertex max_n = 11;            // exhaustive mode
  std::int64_t state_budget = std::int64_t{1} << 22;
};

struct ScheduleStats {
  std::int64_t states = 0;      // distinct states (exhaustive) or moves (sampled)
  std::int64_t terminals = 0;
  Vertex min_ones = 0;          // fewest ones seen after the swing move
};

// From the truthful state with u flipped to 1, explores best-response
// sequences and returns true iff every state seen keeps at least (n+1)/2 ones
// and every terminal state has majority 1. Returns false without exploring
// when verify_swing fails. Exhaustive mode throws TooLarge above max_n and
// BudgetExceeded past state_budget.
bool check_all_schedules_subvert(const Graph& g, const StubbornnessProfile& profile,
                                 const BeliefAssignment& beliefs, Vertex u,
                                 const ScheduleMode& mode = {}, ScheduleStats* stats = nullptr);

}  // namespace dpg
