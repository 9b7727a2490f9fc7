#pragma once

#include <optional>

#include "dpg/game.hpp"
#include "dpg/graph.hpp"

namespace dpg {

struct OracleOptions {
  Vertex max_n = 15;
  // Enumerate only assignments with exactly (n+1)/2 zeros instead of every
  // majority-0 assignment.
  bool exact_half = false;
};

// True iff some state reachable from the truthful state by single improving
// flips is an equilibrium with majority 1. Throws NotMajorityZero unless
// majority(beliefs) = 0 and TooLarge above options.max_n.
bool is_subvertable_assignment(const Graph& g, const StubbornnessProfile& profile,
                               const BeliefAssignment& beliefs, const OracleOptions& options = {});

// First subvertable majority-0 assignment in lexicographic order (vertex 0 is
// the most significant position).
std::optional<BeliefAssignment> exists_subvertable_assignment(const Graph& g,
                                                              const StubbornnessProfile& profile,
                                                              const OracleOptions& options = {});

// (a subvertable assignment exists) == (some vertex is non-stubborn).
bool characterization_check(const Graph& g, const StubbornnessProfile& profile,
                            const OracleOptions& options = {});

}  // namespace dpg
