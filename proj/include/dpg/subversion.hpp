#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dpg/bisection.hpp"
#include "dpg/game.hpp"
#include "dpg/graph.hpp"

namespace dpg {

// Every place the constructive procedure can hand back a bisection.
enum class ReturnPoint {
  // top level
  WarmupFlipNegative,   // some u in S with def <= -a-1; move everything across
  WarmupAlreadyGood,    // some u in S is already good
  WarmupGoodInSbar,     // some u in S-bar has def >= a+1
  WarmupNegativeMinRank,
  // minimum rank reached in S-bar
  NotSPairGood,
  NotSObstructionPair,
  NotSStubbornSide,
  // minimum rank only in S
  SPairGood,
  SNegativeObstruction,
  SMirrorPairGood,
  SLowerRankGood,
  SLowerRankObstruction,
  SSwapPairGood,
  SNegativeMinRank,
  SPartnerPairGood,
  STriangle,
  SDelegateNotS,
  SFinalPairGood,
  SFinalObstruction,
};

inline constexpr std::size_t kReturnPointCount = 19;

std::string_view to_string(ReturnPoint p);
const std::array<ReturnPoint, kReturnPointCount>& all_return_points();

struct GoodBisection {
  Bisection bisection;
  Vertex good_vertex = -1;
  // Return points visited, outermost first (two entries when the minimum-rank-
  // in-S procedure delegates).
  std::vector<ReturnPoint> path;
  // One line per decision and per checked invariant.
  std::vector<std::string> log;
};

struct MinRank {
  std::int64_t rank = 0;
  std::vector<Vertex> vertices;  // non-stubborn vertices attaining it, ascending
};

// Non-stubborn vertices of minimum rank. Throws AllStubborn if there are none.
MinRank min_rank_set(const Graph& g, const StubbornnessProfile& profile, const Bisection& b);

// Full procedure: 3-minimal local search, then the case analysis below.
GoodBisection compute_good_bisection(const Graph& g, const StubbornnessProfile& profile);

// Case analysis starting from a caller-supplied bisection, which must be
// 3-minimal for the guarantees to hold.
GoodBisection compute_good_bisection_from(const Graph& g, const StubbornnessProfile& profile,
                                          const Bisection& start);

// Needs a 1-minimal bisection with a minimum-rank non-stubborn vertex in S-bar.
GoodBisection min_rank_in_not_s(const Graph& g, const StubbornnessProfile& profile,
                                const Bisection& b);

// Needs a 3-minimal bisection whose minimum-rank non-stubborn vertices all lie
// in S with non-negative deficiency, and no warm-up case applicable.
GoodBisection min_rank_in_s(const Graph& g, const StubbornnessProfile& profile,
                            const Bisection& b);

struct SubversionResult {
  BeliefAssignment beliefs;
  Vertex swing = -1;
  Bisection witness_bisection;
  Vertex good_vertex = -1;
  std::vector<ReturnPoint> path;
  std::vector<std::string> log;
};

// b = 1 on S \ {u}, 0 elsewhere; swing u. Throws NotGood unless u is a good
// vertex of a good bisection.
SubversionResult belief_from_good_bisection(const StubbornnessProfile& profile,
                                            const Bisection& b, Vertex u);

// Throws EvenN for even n and AllStubborn when every vertex is stubborn.
SubversionResult find_subversion(const Graph& g, const StubbornnessProfile& profile);

}  // namespace dpg
