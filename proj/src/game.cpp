#include "dpg/game.hpp"

#include <algorithm>

#include "dpg/error.hpp"

namespace dpg {

std::int64_t integer_stubbornness(const Rational& alpha) {
  if (alpha.num() <= 0 || alpha.num() >= alpha.den()) {
    fail(ErrorCode::InvalidStubbornness,
         "stubbornness " + alpha.str() + " outside the open interval (0,1)");
  }
  // alpha/(1-alpha) = p/(q-p), both positive.
  return alpha.num() / (alpha.den() - alpha.num());
}

StubbornnessProfile::StubbornnessProfile(std::vector<Rational> alpha)
    : alpha_(std::move(alpha)) {
  a_.reserve(alpha_.size());
  for (const auto& x : alpha_) a_.push_back(integer_stubbornness(x));
}

StubbornnessProfile StubbornnessProfile::uniform(Vertex n, const Rational& alpha) {
  return StubbornnessProfile(std::vector<Rational>(static_cast<std::size_t>(n), alpha));
}

OpinionState truthful_state(const BeliefAssignment& beliefs) {
  return OpinionState(beliefs.bits);
}

bool is_stubborn(const Graph& g, const StubbornnessProfile& profile, Vertex v) {
  const std::int64_t d = g.degree(v);
  return profile.a(v) >= std::min<std::int64_t>(d, g.n() - d - 1);
}

bool all_stubborn(const Graph& g, const StubbornnessProfile& profile) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!is_stubborn(g, profile, v)) return false;
  }
  return true;
}

namespace {

struct NeighborSplit {
  std::int64_t diff = 0;
  std::int64_t same = 0;
};

NeighborSplit split(const Graph& g, const OpinionState& state, Vertex i) {
  NeighborSplit s;
  for (Vertex j : g.neighbors(i)) {
    if (state[j] != state[i]) ++s.diff;
    else ++s.same;
  }
  return s;
}

}  // namespace

Rational cost(const Graph& g, const StubbornnessProfile& profile,
              const BeliefAssignment& beliefs, const OpinionState& state, Vertex i) {
  const Rational& alpha = profile.alpha(i);
  Rational belief_term = state[i] != beliefs[i] ? alpha : Rational(0);
  return belief_term + (Rational(1) - alpha) * Rational(split(g, state, i).diff);
}

bool improving_flip(const Graph& g, const StubbornnessProfile& profile,
                    const BeliefAssignment& beliefs, const OpinionState& state, Vertex i) {
  const auto p = static_cast<__int128>(profile.alpha(i).num());
  const auto q = static_cast<__int128>(profile.alpha(i).den());
  const auto s = split(g, state, i);
  const __int128 sigma = state[i] == beliefs[i] ? 1 : -1;
  return (q - p) * (s.diff - s.same) > p * sigma;
}

Rational flip_gain(const Graph& g, const StubbornnessProfile& profile,
                   const BeliefAssignment& beliefs, const OpinionState& state, Vertex i) {
  const Rational& alpha = profile.alpha(i);
  const auto s = split(g, state, i);
  Rational belief_delta = state[i] == beliefs[i] ? -alpha : alpha;
  return belief_delta + (Rational(1) - alpha) * Rational(s.diff - s.same);
}

bool is_equilibrium(const Graph& g, const StubbornnessProfile& profile,
                    const BeliefAssignment& beliefs, const OpinionState& state) {
  for (Vertex i = 0; i < g.n(); ++i) {
    if (improving_flip(g, profile, beliefs, state, i)) return false;
  }
  return true;
}

int majority_of(Vertex n, Vertex ones) {
  if (n % 2 == 0) fail(ErrorCode::EvenN, "majority needs an odd number of players, got " + std::to_string(n));
  return ones >= (n + 1) / 2 ? 1 : 0;
}

void check_game_sizes(const Graph& g, const StubbornnessProfile& profile,
                      const BeliefAssignment& beliefs) {
  if (profile.size() != g.n()) {
    fail(ErrorCode::InvalidArgument, "stubbornness profile has " + std::to_string(profile.size()) +
                                         " entries for a graph with " + std::to_string(g.n()) +
                                         " vertices");
  }
  if (beliefs.size() != g.n()) {
    fail(ErrorCode::InvalidArgument, "belief vector has " + std::to_string(beliefs.size()) +
                                         " entries for a graph with " + std::to_string(g.n()) +
                                         " vertices");
  }
}

}  // namespace dpg
