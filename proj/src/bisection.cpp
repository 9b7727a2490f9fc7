#include "dpg/bisection.hpp"

#include <algorithm>
#include <limits>

#include "dpg/error.hpp"

namespace dpg {

namespace {

void check_odd(Vertex n) {
  if (n % 2 == 0) fail(ErrorCode::EvenN, "bisections need an odd number of vertices, got " + std::to_string(n));
}

std::string list_str(std::span<const Vertex> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

// All size-t subsets of `items` in lexicographic order, flattened.
std::vector<Vertex> combinations(const std::vector<Vertex>& items, int t) {
  std::vector<Vertex> out;
  const int n = static_cast<int>(items.size());
  if (t > n || t <= 0) return out;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    for (int i : idx) out.push_back(items[i]);
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::int64_t internal_edges(const Graph& g, std::span<const Vertex> xs) {
  std::int64_t e = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) e += g.w(xs[i], xs[j]);
  }
  return e;
}

std::int64_t cross_edges(const Graph& g, std::span<const Vertex> xs, std::span<const Vertex> ys) {
  std::int64_t e = 0;
  for (Vertex x : xs) {
    for (Vertex y : ys) e += g.w(x, y);
  }
  return e;
}

// Half of the phi2 change split into the part owned by A and the part owned by
// B; the swap changes phi2 by 2 * (key(A) + key(B) + 2 W(A,B)).
std::int64_t key_leaving_s(const Graph& g, const StubbornnessProfile& p, const Bisection& b,
                           std::span<const Vertex> a) {
  std::int64_t k = -2 * internal_edges(g, a);
  for (Vertex x : a) k += b.def(x) - p.a(x);
  return k;
}

std::int64_t key_leaving_sbar(const Graph& g, const StubbornnessProfile& p, const Bisection& b,
                              std::span<const Vertex> bs) {
  std::int64_t k = -2 * internal_edges(g, bs);
  for (Vertex y : bs) k += b.def(y) + p.a(y);
  return k;
}

struct Swap {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

std::optional<Swap> first_improving_swap(const Graph& g, const StubbornnessProfile& p,
                                         const Bisection& bis, int t) {
  const auto s = bis.s_members();
  const auto sbar = bis.sbar_members();
  if (t > static_cast<int>(sbar.size())) return std::nullopt;
  const auto combos_a = combinations(s, t);
  const auto combos_b = combinations(sbar, t);
  const std::size_t na = combos_a.size() / t;
  const std::size_t nb = combos_b.size() / t;

  std::vector<std::int64_t> keys_b(nb);
  std::int64_t min_key_b = std::numeric_limits<std::int64_t>::max();
  for (std::size_t j = 0; j < nb; ++j) {
    keys_b[j] = key_leaving_sbar(g, p, bis, std::span(combos_b).subspan(j * t, t));
    min_key_b = std::min(min_key_b, keys_b[j]);
  }
  for (std::size_t i = 0; i < na; ++i) {
    auto a = std::span(combos_a).subspan(i * t, t);
    const std::int64_t key_a = key_leaving_s(g, p, bis, a);
    if (key_a + min_key_b >= 0) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (key_a + keys_b[j] >= 0) continue;
      auto b = std::span(combos_b).subspan(j * t, t);
      if (key_a + keys_b[j] + 2 * cross_edges(g, a, b) < 0) {
        return Swap{{a.begin(), a.end()}, {b.begin(), b.end()}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Bisection Bisection::from_members(const Graph& g, const StubbornnessProfile& profile,
                                  std::span<const Vertex> s_members) {
  std::vector<std::uint8_t> side(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : s_members) {
    if (!g.valid_vertex(v)) fail(ErrorCode::InvalidArgument, "bisection member out of range");
    if (side[v]) fail(ErrorCode::InvalidArgument, "duplicate bisection member " + std::to_string(v));
    side[v] = 1;
  }
  return from_sides(g, profile, std::move(side));
}

Bisection Bisection::from_sides(const Graph& g, const StubbornnessProfile& profile,
                                std::vector<std::uint8_t> side) {
  check_odd(g.n());
  if (static_cast<Vertex>(side.size()) != g.n()) {
    fail(ErrorCode::InvalidArgument, "side vector length does not match the graph");
  }
  Bisection b;
  b.side_ = std::move(side);
  for (auto& s : b.side_) s = s ? 1 : 0;
  b.check_balanced();
  b.recompute(g, profile);
  return b;
}

Bisection Bisection::lowest_ids(const Graph& g, const StubbornnessProfile& profile) {
  check_odd(g.n());
  std::vector<std::uint8_t> side(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v = 0; v < (g.n() + 1) / 2; ++v) side[v] = 1;
  return from_sides(g, profile, std::move(side));
}

std::vector<Vertex> Bisection::s_members() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v) {
    if (side_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> Bisection::sbar_members() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v) {
    if (!side_[v]) out.push_back(v);
  }
  return out;
}

void Bisection::check_balanced() const {
  Vertex in_s = 0;
  for (auto s : side_) in_s += s;
  if (in_s != (n() + 1) / 2) {
    fail(ErrorCode::InvalidArgument, "bisection needs |S| = " + std::to_string((n() + 1) / 2) +
                                         ", got " + std::to_string(in_s));
  }
}

void Bisection::recompute(const Graph& g, const StubbornnessProfile& profile) {
  def_.assign(side_.size(), 0);
  cut_ = 0;
  asum_ = 0;
  for (Vertex x = 0; x < n(); ++x) {
    for (Vertex y : g.neighbors(x)) {
      if (side_[x] == side_[y]) ++def_[x];
      else {
        --def_[x];
        if (x < y) ++cut_;
      }
    }
    asum_ += side_[x] ? profile.a(x) : -profile.a(x);
  }
}

// Moves v to the other side; balance is restored by the caller.
void Bisection::move(const Graph& g, const StubbornnessProfile& profile, Vertex v) {
  cut_ += def_[v];
  asum_ += side_[v] ? -2 * profile.a(v) : 2 * profile.a(v);
  for (Vertex x : g.neighbors(v)) def_[x] += side_[x] == side_[v] ? -2 : 2;
  def_[v] = -def_[v];
  side_[v] ^= 1;
}

void Bisection::invert() {
  for (auto& s : side_) s ^= 1;
  asum_ = -asum_;
}

Bisection Bisection::swapped(const Graph& g, const StubbornnessProfile& profile,
                             std::span<const Vertex> a, std::span<const Vertex> b) const {
  if (a.size() != b.size()) fail(ErrorCode::InvalidArgument, "swap sets must have equal size");
  Bisection out = *this;
  for (Vertex x : a) {
    if (!out.in_s(x)) fail(ErrorCode::InvalidArgument, "swap: vertex " + std::to_string(x) + " not in S");
    out.move(g, profile, x);
  }
  for (Vertex y : b) {
    if (out.in_s(y) || in_s(y)) fail(ErrorCode::InvalidArgument, "swap: vertex " + std::to_string(y) + " not in S-bar");
    out.move(g, profile, y);
  }
  out.check_balanced();
  return out;
}

Bisection Bisection::mirrored_with(const Graph& g, const StubbornnessProfile& profile,
                                   Vertex u) const {
  if (!in_s(u)) fail(ErrorCode::InvalidArgument, "mirror: vertex " + std::to_string(u) + " not in S");
  Bisection out = *this;
  out.invert();
  out.move(g, profile, u);
  out.check_balanced();
  return out;
}

bool Bisection::caches_consistent(const Graph& g, const StubbornnessProfile& profile) const {
  Bisection fresh = *this;
  fresh.recompute(g, profile);
  return fresh.def_ == def_ && fresh.cut_ == cut_ && fresh.asum_ == asum_;
}

std::string Bisection::str() const {
  std::string out;
  for (auto s : side_) out.push_back(s ? '1' : '0');
  return out;
}

std::int64_t deficiency(const Bisection& b, Vertex x) { return b.def(x); }

std::int64_t rank(const Bisection& b, const StubbornnessProfile& profile, Vertex u) {
  return ceil_div(profile.a(u) + 1 - b.def(u), 2);
}

std::int64_t potential2(const Bisection& b) { return b.phi2(); }

std::int64_t swap_delta2(const Graph& g, const StubbornnessProfile& profile, const Bisection& b,
                         std::span<const Vertex> a, std::span<const Vertex> bset) {
  return 2 * (key_leaving_s(g, profile, b, a) + key_leaving_sbar(g, profile, b, bset) +
              2 * cross_edges(g, a, bset));
}

Bisection local_search_k_minimal(const Graph& g, const StubbornnessProfile& profile, int k,
                                 std::optional<Bisection> seed, LocalSearchStats* stats) {
  if (k < 1) fail(ErrorCode::InvalidK, "local search needs k >= 1, got " + std::to_string(k));
  check_odd(g.n());
  Bisection current = seed ? std::move(*seed) : Bisection::lowest_ids(g, profile);
  if (current.n() != g.n()) fail(ErrorCode::InvalidArgument, "seed bisection size mismatch");
  while (true) {
    bool improved = false;
    for (int t = 1; t <= k && !improved; ++t) {
      if (auto swap = first_improving_swap(g, profile, current, t)) {
        current = current.swapped(g, profile, swap->a, swap->b);
        improved = true;
        if (stats) {
          ++stats->accepted_swaps;
          ++stats->swaps_by_size[std::min(t, 3)];
        }
      }
    }
    if (!improved) break;
  }
  return current;
}

bool is_k_minimal(const Graph& g, const StubbornnessProfile& profile, const Bisection& b, int k) {
  for (int t = 1; t <= k; ++t) {
    if (first_improving_swap(g, profile, b, t)) return false;
  }
  return true;
}

Classification classify(const Bisection& b, const StubbornnessProfile& profile) {
  Classification c;
  for (Vertex v = 0; v < b.n(); ++v) {
    if (!b.in_s(v)) continue;
    if (b.def(v) >= profile.a(v) + 1) c.good_vertices.push_back(v);
    if (b.def(v) < -profile.a(v)) c.obstructions.push_back(v);
  }
  return c;
}

bool is_good_with(const Bisection& b, const StubbornnessProfile& profile, Vertex u) {
  auto c = classify(b, profile);
  return c.obstructions.empty() &&
         std::find(c.good_vertices.begin(), c.good_vertices.end(), u) != c.good_vertices.end();
}

UPairShape u_pair_shape(const Graph& g, const StubbornnessProfile& profile, const Bisection& b,
                        Vertex u) {
  UPairShape shape;
  const std::int64_t r = rank(b, profile, u);
  const bool u_in_s = b.in_s(u);
  if (u_in_s) {
    shape.size_a = shape.size_b = std::max<std::int64_t>(r, 0);
  } else {
    shape.size_a = std::max<std::int64_t>(r, 1);
    shape.size_b = shape.size_a - 1;
  }
  const bool any_a = !u_in_s && r <= 0;
  for (Vertex v = 0; v < b.n(); ++v) {
    if (v == u) continue;
    const bool adj = g.adjacent(u, v);
    if (b.in_s(v)) {
      if (any_a || (u_in_s ? !adj : adj)) shape.pool_a.push_back(v);
    } else {
      if (u_in_s ? adj : !adj) shape.pool_b.push_back(v);
    }
  }
  return shape;
}

bool u_pair_exists(const Graph& g, const StubbornnessProfile& profile, const Bisection& b,
                   Vertex u) {
  return u_pair_shape(g, profile, b, u).feasible();
}

namespace {

bool contains(const std::vector<Vertex>& xs, Vertex v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

std::vector<Vertex> pick(const std::vector<Vertex>& pool, std::int64_t size,
                         const std::vector<Vertex>& must, const std::vector<Vertex>& prefer,
                         Vertex u, char which) {
  std::vector<Vertex> out;
  for (Vertex v : must) {
    check_invariant(contains(pool, v), "pair-constraints",
                    std::string("vertex ") + std::to_string(v) + " required in " + which + "_" +
                        std::to_string(u) + " is not a candidate");
    if (!contains(out, v)) out.push_back(v);
  }
  check_invariant(static_cast<std::int64_t>(out.size()) <= size, "pair-constraints",
                  std::string("too many required vertices for ") + which + "_" + std::to_string(u));
  for (Vertex v : pool) {
    if (static_cast<std::int64_t>(out.size()) >= size) break;
    if (contains(prefer, v) && !contains(out, v)) out.push_back(v);
  }
  for (Vertex v : pool) {
    if (static_cast<std::int64_t>(out.size()) >= size) break;
    if (!contains(out, v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

UPair build_u_pair(const Graph& g, const StubbornnessProfile& profile, const Bisection& b,
                   Vertex u, const UPairConstraints& constraints) {
  if (!g.valid_vertex(u)) fail(ErrorCode::InvalidArgument, "u-pair: vertex out of range");
  if (is_stubborn(g, profile, u)) {
    fail(ErrorCode::NoPairExists, "vertex " + std::to_string(u) + " is stubborn; no u-pair exists");
  }
  auto shape = u_pair_shape(g, profile, b, u);
  check_invariant(shape.feasible(), "pair-exists-for-non-stubborn",
                  "non-stubborn vertex " + std::to_string(u) + " has too few u-pair candidates");
  UPair pair;
  pair.u = u;
  pair.a = pick(shape.pool_a, shape.size_a, constraints.must_include_a, constraints.prefer_a, u, 'A');
  pair.b = pick(shape.pool_b, shape.size_b, constraints.must_include_b, {}, u, 'B');
  return pair;
}

Bisection apply_u_pair(const Graph& g, const StubbornnessProfile& profile, const Bisection& b,
                       const UPair& pair) {
  const Vertex u = pair.u;
  for (Vertex x : pair.a) {
    if (!b.in_s(x)) fail(ErrorCode::InvalidArgument, "u-pair: A member " + std::to_string(x) + " not in S");
  }
  for (Vertex y : pair.b) {
    if (b.in_s(y)) fail(ErrorCode::InvalidArgument, "u-pair: B member " + std::to_string(y) + " not in S-bar");
  }
  Bisection t = b;
  if (b.in_s(u)) {
    if (pair.a.size() != pair.b.size()) fail(ErrorCode::InvalidArgument, "u-pair sizes differ for u in S");
    t = b.swapped(g, profile, pair.a, pair.b);
  } else {
    if (pair.a.size() != pair.b.size() + 1) {
      fail(ErrorCode::InvalidArgument, "u-pair needs |A| = |B| + 1 for u in S-bar");
    }
    // (S-bar \ B u A, S \ A u B): swap roles, then move A and B across.
    t.invert();
    for (Vertex x : pair.a) t.move(g, profile, x);
    for (Vertex y : pair.b) t.move(g, profile, y);
    t.check_balanced();
  }
  check_invariant(t.def(u) >= profile.a(u) + 1, "pair-makes-good-vertex",
                  "def_T(" + std::to_string(u) + ") = " + std::to_string(t.def(u)) +
                      " below a+1 = " + std::to_string(profile.a(u) + 1) + " after pair A=" +
                      list_str(pair.a) + " B=" + list_str(pair.b));
  return t;
}

}  // namespace dpg
