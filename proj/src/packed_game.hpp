#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "dpg/error.hpp"
#include "dpg/game.hpp"
#include "dpg/graph.hpp"

namespace dpg::detail {

// Opinion states as machine words for exhaustive searches over {0,1}^n.
class PackedGame {
 public:
  static constexpr Vertex kMaxN = 63;

  PackedGame(const Graph& g, const StubbornnessProfile& profile, const BeliefAssignment& beliefs)
      : n_(g.n()) {
    if (n_ > kMaxN) fail(ErrorCode::TooLarge, "packed search supports at most 63 vertices");
    nbr_.resize(n_);
    p_.resize(n_);
    q_.resize(n_);
    deg_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex x : g.neighbors(v)) nbr_[v] |= std::uint64_t{1} << x;
      p_[v] = profile.alpha(v).num();
      q_[v] = profile.alpha(v).den();
      deg_[v] = g.degree(v);
      if (beliefs[v]) beliefs_ |= std::uint64_t{1} << v;
    }
  }

  Vertex n() const { return n_; }
  std::uint64_t beliefs() const { return beliefs_; }

  bool improving(std::uint64_t s, Vertex i) const {
    const bool si = (s >> i) & 1;
    const int same = std::popcount(nbr_[i] & (si ? s : ~s));
    const int diff = deg_[i] - same;
    const bool truthful = si == static_cast<bool>((beliefs_ >> i) & 1);
    const __int128 lhs = static_cast<__int128>(q_[i] - p_[i]) * (diff - same);
    const __int128 rhs = truthful ? p_[i] : -static_cast<__int128>(p_[i]);
    return lhs > rhs;
  }

  static int ones(std::uint64_t s) { return std::popcount(s); }

 private:
  Vertex n_;
  std::vector<std::uint64_t> nbr_;
  std::vector<std::int64_t> p_, q_;
  std::vector<int> deg_;
  std::uint64_t beliefs_ = 0;
};

}  // namespace dpg::detail
