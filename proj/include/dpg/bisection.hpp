#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpg/game.hpp"
#include "dpg/graph.hpp"

namespace dpg {

struct UPair;

// Partition (S, S-bar) with |S| = (n+1)/2. Deficiencies and the doubled
// potential are cached and kept current by every operation that returns a new
// bisection:
//   def(x) = W(x,S) - W(x,S-bar) for x in S, W(x,S-bar) - W(x,S) otherwise
//   phi2   = 2 W(S,S-bar) + sum_{x in S} a_x - sum_{y in S-bar} a_y
class Bisection {
 public:
  Bisection() = default;

  static Bisection from_members(const Graph& g, const StubbornnessProfile& profile,
                                std::span<const Vertex> s_members);
  // side[v] == 1 iff v in S.
  static Bisection from_sides(const Graph& g, const StubbornnessProfile& profile,
                              std::vector<std::uint8_t> side);
  // S = {0, ..., (n-1)/2}.
  static Bisection lowest_ids(const Graph& g, const StubbornnessProfile& profile);

  Vertex n() const noexcept { return static_cast<Vertex>(side_.size()); }
  bool in_s(Vertex v) const { return side_[v] != 0; }
  std::int64_t def(Vertex v) const { return def_[v]; }
  std::int64_t phi2() const noexcept { return 2 * cut_ + asum_; }
  std::int64_t cut() const noexcept { return cut_; }
  const std::vector<std::uint8_t>& sides() const noexcept { return side_; }

  std::vector<Vertex> s_members() const;
  std::vector<Vertex> sbar_members() const;

  // (S \ A u B, S-bar \ B u A) for A within S and B within S-bar, |A| = |B|.
  Bisection swapped(const Graph& g, const StubbornnessProfile& profile,
                    std::span<const Vertex> a, std::span<const Vertex> b) const;

  // (S-bar u {u}, S \ {u}) for u in S.
  Bisection mirrored_with(const Graph& g, const StubbornnessProfile& profile, Vertex u) const;

  // Recounts deficiencies and potential and compares against the caches.
  bool caches_consistent(const Graph& g, const StubbornnessProfile& profile) const;

  // Side string: '1' for S, '0' for S-bar.
  std::string str() const;

  friend bool operator==(const Bisection& x, const Bisection& y) { return x.side_ == y.side_; }

 private:
  friend Bisection apply_u_pair(const Graph&, const StubbornnessProfile&, const Bisection&,
                                const UPair&);

  void recompute(const Graph& g, const StubbornnessProfile& profile);
  void move(const Graph& g, const StubbornnessProfile& profile, Vertex v);
  void invert();
  void check_balanced() const;

  std::vector<std::uint8_t> side_;
  std::vector<std::int64_t> def_;
  std::int64_t cut_ = 0;   // W(S, S-bar)
  std::int64_t asum_ = 0;  // sum_S a - sum_{S-bar} a
};

std::int64_t deficiency(const Bisection& b, Vertex x);

// ceil((a_u + 1 - def(u)) / 2).
std::int64_t rank(const Bisection& b, const StubbornnessProfile& profile, Vertex u);

std::int64_t potential2(const Bisection& b);

struct LocalSearchStats {
  std::int64_t accepted_swaps = 0;
  std::int64_t swaps_by_size[4] = {0, 0, 0, 0};
};

// First-improvement local search over swaps of size 1..k, scanning sizes in
// increasing order and candidate sets in lexicographic vertex order, restarting
// at size 1 after every accepted swap. The result is k-minimal.
Bisection local_search_k_minimal(const Graph& g, const StubbornnessProfile& profile, int k,
                                 std::optional<Bisection> seed = std::nullopt,
                                 LocalSearchStats* stats = nullptr);

// Change in phi2 from swapping A (within S) with B (within S-bar).
std::int64_t swap_delta2(const Graph& g, const StubbornnessProfile& profile,
                         const Bisection& b, std::span<const Vertex> a,
                         std::span<const Vertex> bset);

bool is_k_minimal(const Graph& g, const StubbornnessProfile& profile, const Bisection& b, int k);

struct Classification {
  std::vector<Vertex> good_vertices;  // u in S with def(u) >= a_u + 1
  std::vector<Vertex> obstructions;   // y in S with def(y) < -a_y

  bool is_good() const { return obstructions.empty() && !good_vertices.empty(); }
};

Classification classify(const Bisection& b, const StubbornnessProfile& profile);

// True iff b has no obstruction and u is one of its good vertices.
bool is_good_with(const Bisection& b, const StubbornnessProfile& profile, Vertex u);

struct UPair {
  Vertex u = -1;
  std::vector<Vertex> a;  // leaves S
  std::vector<Vertex> b;  // leaves S-bar
};

struct UPairConstraints {
  std::vector<Vertex> must_include_a;
  std::vector<Vertex> must_include_b;
  std::vector<Vertex> prefer_a;
};

// Required sizes and candidate pools of a u-pair. For u in S:
// A from S \ N[u], B from S-bar n N(u), |A| = |B| = rank. For u in S-bar:
// A from S n N(u), B from S-bar \ N[u], |A| = rank, |B| = rank - 1.
// Ranks below the smallest meaningful size are clamped: u in S with rank <= 0
// uses empty sets; u in S-bar with rank <= 0 uses |A| = 1 drawn from all of S.
struct UPairShape {
  std::int64_t size_a = 0;
  std::int64_t size_b = 0;
  std::vector<Vertex> pool_a;
  std::vector<Vertex> pool_b;

  bool feasible() const {
    return static_cast<std::int64_t>(pool_a.size()) >= size_a &&
           static_cast<std::int64_t>(pool_b.size()) >= size_b;
  }
};

UPairShape u_pair_shape(const Graph& g, const StubbornnessProfile& profile, const Bisection& b,
                        Vertex u);

bool u_pair_exists(const Graph& g, const StubbornnessProfile& profile, const Bisection& b,
                   Vertex u);

// Builds a u-pair containing the must-include vertices, maximizing |A n prefer_a|
// and filling the rest by ascending id. Throws NoPairExists for stubborn u.
UPair build_u_pair(const Graph& g, const StubbornnessProfile& profile, const Bisection& b,
                   Vertex u, const UPairConstraints& constraints = {});

// The bisection associated with a u-pair. Asserts def_T(u) >= a_u + 1.
Bisection apply_u_pair(const Graph& g, const StubbornnessProfile& profile, const Bisection& b,
                       const UPair& pair);

}  // namespace dpg
