#include "dpg/oracle.hpp"

#include <unordered_set>

#include "dpg/error.hpp"
#include "packed_game.hpp"

namespace dpg {

namespace {

void check_size(const Graph& g, const OracleOptions& options) {
  if (g.n() % 2 == 0) fail(ErrorCode::EvenN, "oracle needs an odd number of vertices");
  if (g.n() > options.max_n || g.n() > detail::PackedGame::kMaxN) {
    fail(ErrorCode::TooLarge, "oracle limited to n <= " + std::to_string(options.max_n) +
                                  ", got " + std::to_string(g.n()));
  }
}

bool reaches_majority_one(const detail::PackedGame& game) {
  const Vertex n = game.n();
  const int need = (n + 1) / 2;
  std::unordered_set<std::uint64_t> seen{game.beliefs()};
  std::vector<std::uint64_t> stack{game.beliefs()};
  while (!stack.empty()) {
    const std::uint64_t s = stack.back();
    stack.pop_back();
    bool terminal = true;
    for (Vertex i = 0; i < n; ++i) {
      if (!game.improving(s, i)) continue;
      terminal = false;
      const std::uint64_t t = s ^ (std::uint64_t{1} << i);
      if (seen.insert(t).second) stack.push_back(t);
    }
    if (terminal && detail::PackedGame::ones(s) >= need) return true;
  }
  return false;
}

}  // namespace

bool is_subvertable_assignment(const Graph& g, const StubbornnessProfile& profile,
                               const BeliefAssignment& beliefs, const OracleOptions& options) {
  check_game_sizes(g, profile, beliefs);
  check_size(g, options);
  if (majority(beliefs) != 0) fail(ErrorCode::NotMajorityZero, "beliefs must have majority 0");
  return reaches_majority_one(detail::PackedGame(g, profile, beliefs));
}

std::optional<BeliefAssignment> exists_subvertable_assignment(const Graph& g,
                                                              const StubbornnessProfile& profile,
                                                              const OracleOptions& options) {
  check_size(g, options);
  const Vertex n = g.n();
  if (profile.size() != n) fail(ErrorCode::InvalidArgument, "stubbornness profile size does not match the graph");
  const int max_ones = (n - 1) / 2;
  BeliefAssignment b(n, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    const int ones = std::popcount(code);
    if (ones > max_ones || (options.exact_half && ones != max_ones)) continue;
    for (Vertex v = 0; v < n; ++v) b[v] = (code >> (n - 1 - v)) & 1;
    if (reaches_majority_one(detail::PackedGame(g, profile, b))) return b;
  }
  return std::nullopt;
}

bool characterization_check(const Graph& g, const StubbornnessProfile& profile,
                            const OracleOptions& options) {
  const bool found = exists_subvertable_assignment(g, profile, options).has_value();
  return found == !all_stubborn(g, profile);
}

}  // namespace dpg
