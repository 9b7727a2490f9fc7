#include "dpg/dynamics.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "dpg/error.hpp"
#include "packed_game.hpp"

namespace dpg {

SchedulerPolicy parse_scheduler_policy(const std::string& name) {
  if (name == "lowest-id") return SchedulerPolicy::LowestId;
  if (name == "highest-gain") return SchedulerPolicy::HighestGain;
  if (name == "prefer-one") return SchedulerPolicy::PreferFlipToOne;
  if (name == "random") return SchedulerPolicy::RandomSeeded;
  if (name == "scripted") return SchedulerPolicy::Scripted;
  fail(ErrorCode::InvalidArgument, "unknown scheduler '" + name + "'");
}

std::string MoveTrace::tsv() const {
  std::ostringstream os;
  os << "step\tvertex\tnew_opinion\tones_after\n";
  for (const auto& m : moves) {
    os << m.step << '\t' << m.vertex << '\t' << int(m.new_opinion) << '\t' << m.ones_after << '\n';
  }
  return os.str();
}

std::int64_t default_max_steps(const Graph& g) {
  return 4 * static_cast<std::int64_t>(g.n()) * (g.max_degree() + 1);
}

namespace {

class Picker {
 public:
  Picker(const Graph& g, const StubbornnessProfile& profile, const BeliefAssignment& beliefs,
         const Scheduler& s)
      : g_(g), profile_(profile), beliefs_(beliefs), s_(s), rng_(s.seed) {
    if (!s.allowed.empty() && static_cast<Vertex>(s.allowed.size()) != g.n()) {
      fail(ErrorCode::InvalidArgument, "scheduler mask length does not match the graph");
    }
  }

  // Next vertex to move, or nullopt when the scheduler has nothing to do.
  std::optional<Vertex> next(const OpinionState& state) {
    if (s_.policy == SchedulerPolicy::Scripted) {
      if (cursor_ >= s_.script.size()) return std::nullopt;
      const Vertex v = s_.script[cursor_++];
      if (!g_.valid_vertex(v) || !allowed(v) || !improving_flip(g_, profile_, beliefs_, state, v)) {
        fail(ErrorCode::InvalidScript, "script entry " + std::to_string(cursor_) + " (vertex " +
                                           std::to_string(v) + ") has no improving flip");
      }
      return v;
    }
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (allowed(v) && improving_flip(g_, profile_, beliefs_, state, v)) candidates.push_back(v);
    }
    if (candidates.empty()) return std::nullopt;
    switch (s_.policy) {
      case SchedulerPolicy::LowestId:
        return candidates.front();
      case SchedulerPolicy::HighestGain: {
        Vertex best = candidates.front();
        Rational best_gain = flip_gain(g_, profile_, beliefs_, state, best);
        for (Vertex v : candidates) {
          Rational gain = flip_gain(g_, profile_, beliefs_, state, v);
          if (gain > best_gain) {
            best = v;
            best_gain = gain;
          }
        }
        return best;
      }
      case SchedulerPolicy::PreferFlipToOne:
        for (Vertex v : candidates) {
          if (state[v] == 0) return v;
        }
        return candidates.front();
      case SchedulerPolicy::RandomSeeded: {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        return candidates[pick(rng_)];
      }
      case SchedulerPolicy::Scripted:
        break;
    }
    return std::nullopt;
  }

 private:
  bool allowed(Vertex v) const { return s_.allowed.empty() || s_.allowed[v]; }

  const Graph& g_;
  const StubbornnessProfile& profile_;
  const BeliefAssignment& beliefs_;
  const Scheduler& s_;
  std::mt19937_64 rng_;
  std::size_t cursor_ = 0;
};

void check_state_size(const Graph& g, const OpinionState& state) {
  if (state.size() != g.n()) fail(ErrorCode::InvalidArgument, "opinion state length does not match the graph");
}

}  // namespace

RunResult run_to_equilibrium(const Graph& g, const StubbornnessProfile& profile,
                             const BeliefAssignment& beliefs, const OpinionState& initial,
                             const Scheduler& scheduler, std::optional<std::int64_t> max_steps) {
  check_game_sizes(g, profile, beliefs);
  check_state_size(g, initial);
  const std::int64_t limit = max_steps.value_or(default_max_steps(g));
  if (limit < 0) fail(ErrorCode::InvalidArgument, "max_steps must be non-negative");

  RunResult r;
  r.final_state = initial;
  Picker picker(g, profile, beliefs, scheduler);
  Vertex ones = initial.ones();
  for (std::int64_t step = 1; step <= limit; ++step) {
    auto v = picker.next(r.final_state);
    if (!v) break;
    OpinionState after = r.final_state;
    after[*v] ^= 1;
    const Rational before_cost = cost(g, profile, beliefs, r.final_state, *v);
    const Rational after_cost = cost(g, profile, beliefs, after, *v);
    check_invariant(after_cost < before_cost, "move-lowers-cost",
                    "vertex " + std::to_string(*v) + " cost " + before_cost.str() + " -> " +
                        after_cost.str());
    ones += after[*v] ? 1 : -1;
    r.final_state = std::move(after);
    r.trace.moves.push_back({step, *v, r.final_state[*v], ones});
  }
  r.reached_equilibrium = is_equilibrium(g, profile, beliefs, r.final_state);
  return r;
}

bool verify_swing(const Graph& g, const StubbornnessProfile& profile,
                  const BeliefAssignment& beliefs, Vertex u) {
  check_game_sizes(g, profile, beliefs);
  if (beliefs.zeros() != (g.n() + 1) / 2) {
    fail(ErrorCode::NotMajorityZero, "beliefs must have exactly (n+1)/2 = " +
                                         std::to_string((g.n() + 1) / 2) + " zeros, got " +
                                         std::to_string(beliefs.zeros()));
  }
  if (!g.valid_vertex(u)) fail(ErrorCode::InvalidArgument, "swing vertex out of range");
  if (beliefs[u] != 0) return false;
  OpinionState s = truthful_state(beliefs);
  if (!improving_flip(g, profile, beliefs, s, u)) return false;
  s[u] = 1;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (beliefs[x] == 1 && improving_flip(g, profile, beliefs, s, x)) return false;
  }
  return true;
}

bool check_all_schedules_subvert(const Graph& g, const StubbornnessProfile& profile,
                                 const BeliefAssignment& beliefs, Vertex u,
                                 const ScheduleMode& mode, ScheduleStats* stats) {
  if (!verify_swing(g, profile, beliefs, u)) return false;
  const Vertex n = g.n();
  const Vertex need = (n + 1) / 2;
  ScheduleStats local;
  ScheduleStats& st = stats ? *stats : local;
  st = {};
  OpinionState start = truthful_state(beliefs);
  start[u] = 1;
  st.min_ones = start.ones();

  if (mode.exhaustive) {
    if (n > mode.max_n || n > detail::PackedGame::kMaxN) {
      fail(ErrorCode::TooLarge, "exhaustive schedule search is limited to n <= " +
                                    std::to_string(std::min<Vertex>(mode.max_n, detail::PackedGame::kMaxN)));
    }
    detail::PackedGame game(g, profile, beliefs);
    std::uint64_t s0 = game.beliefs() | (std::uint64_t{1} << u);
    std::unordered_set<std::uint64_t> seen{s0};
    std::vector<std::uint64_t> stack{s0};
    bool ok = true;
    while (!stack.empty()) {
      const std::uint64_t s = stack.back();
      stack.pop_back();
      const int ones = detail::PackedGame::ones(s);
      st.min_ones = std::min<Vertex>(st.min_ones, ones);
      if (ones < need) ok = false;
      bool terminal = true;
      for (Vertex i = 0; i < n; ++i) {
        if (!game.improving(s, i)) continue;
        terminal = false;
        const std::uint64_t t = s ^ (std::uint64_t{1} << i);
        if (seen.insert(t).second) {
          if (static_cast<std::int64_t>(seen.size()) > mode.state_budget) {
            fail(ErrorCode::BudgetExceeded, "schedule search exceeded " +
                                                std::to_string(mode.state_budget) + " states");
          }
          stack.push_back(t);
        }
      }
      if (terminal) {
        ++st.terminals;
        if (ones < need) ok = false;
      }
    }
    st.states = static_cast<std::int64_t>(seen.size());
    return ok;
  }

  std::mt19937_64 seeds(mode.seed);
  bool ok = true;
  for (std::int64_t k = 0; k < mode.samples; ++k) {
    auto r = run_to_equilibrium(g, profile, beliefs, start, Scheduler::random(seeds()));
    st.states += static_cast<std::int64_t>(r.trace.moves.size());
    for (const auto& m : r.trace.moves) {
      st.min_ones = std::min(st.min_ones, m.ones_after);
      if (m.ones_after < need) ok = false;
    }
    if (r.reached_equilibrium) ++st.terminals;
    if (!r.reached_equilibrium || majority(r.final_state) != 1) ok = false;
  }
  return ok;
}

}  // namespace dpg
