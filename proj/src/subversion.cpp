#include "dpg/subversion.hpp"

#include <algorithm>
#include <optional>

#include "dpg/error.hpp"

namespace dpg {

std::string_view to_string(ReturnPoint p) {
  switch (p) {
    case ReturnPoint::WarmupFlipNegative: return "warmup-flip-negative";
    case ReturnPoint::WarmupAlreadyGood: return "warmup-already-good";
    case ReturnPoint::WarmupGoodInSbar: return "warmup-good-in-sbar";
    case ReturnPoint::WarmupNegativeMinRank: return "warmup-negative-min-rank";
    case ReturnPoint::NotSPairGood: return "nots-pair-good";
    case ReturnPoint::NotSObstructionPair: return "nots-obstruction-pair";
    case ReturnPoint::NotSStubbornSide: return "nots-stubborn-side";
    case ReturnPoint::SPairGood: return "s-pair-good";
    case ReturnPoint::SNegativeObstruction: return "s-negative-obstruction";
    case ReturnPoint::SMirrorPairGood: return "s-mirror-pair-good";
    case ReturnPoint::SLowerRankGood: return "s-lower-rank-good";
    case ReturnPoint::SLowerRankObstruction: return "s-lower-rank-obstruction";
    case ReturnPoint::SSwapPairGood: return "s-swap-pair-good";
    case ReturnPoint::SNegativeMinRank: return "s-negative-min-rank";
    case ReturnPoint::SPartnerPairGood: return "s-partner-pair-good";
    case ReturnPoint::STriangle: return "s-triangle";
    case ReturnPoint::SDelegateNotS: return "s-delegate-nots";
    case ReturnPoint::SFinalPairGood: return "s-final-pair-good";
    case ReturnPoint::SFinalObstruction: return "s-final-obstruction";
  }
  return "unknown";
}

const std::array<ReturnPoint, kReturnPointCount>& all_return_points() {
  static const std::array<ReturnPoint, kReturnPointCount> points = {
      ReturnPoint::WarmupFlipNegative,    ReturnPoint::WarmupAlreadyGood,
      ReturnPoint::WarmupGoodInSbar,      ReturnPoint::WarmupNegativeMinRank,
      ReturnPoint::NotSPairGood,          ReturnPoint::NotSObstructionPair,
      ReturnPoint::NotSStubbornSide,      ReturnPoint::SPairGood,
      ReturnPoint::SNegativeObstruction,  ReturnPoint::SMirrorPairGood,
      ReturnPoint::SLowerRankGood,        ReturnPoint::SLowerRankObstruction,
      ReturnPoint::SSwapPairGood,         ReturnPoint::SNegativeMinRank,
      ReturnPoint::SPartnerPairGood,      ReturnPoint::STriangle,
      ReturnPoint::SDelegateNotS,         ReturnPoint::SFinalPairGood,
      ReturnPoint::SFinalObstruction,
  };
  return points;
}

MinRank min_rank_set(const Graph& g, const StubbornnessProfile& profile, const Bisection& b) {
  MinRank m;
  bool found = false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (is_stubborn(g, profile, v)) continue;
    const auto r = rank(b, profile, v);
    if (!found || r < m.rank) {
      m.rank = r;
      m.vertices.clear();
      found = true;
    }
    if (r == m.rank) m.vertices.push_back(v);
  }
  if (!found) fail(ErrorCode::AllStubborn, "all vertices stubborn");
  return m;
}

namespace {

std::string set_str(const std::vector<Vertex>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

bool contains(const std::vector<Vertex>& xs, Vertex v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

class Run {
 public:
  Run(const Graph& g, const StubbornnessProfile& p) : g(g), p(p) {}

  const Graph& g;
  const StubbornnessProfile& p;
  std::vector<ReturnPoint> path;
  std::vector<std::string> log;

  void note(std::string line) { log.push_back(std::move(line)); }

  void check(bool ok, std::string_view id, const std::string& detail) {
    check_invariant(ok, id, detail);
    log.push_back("ok " + std::string(id) + ": " + detail);
  }

  std::int64_t a(Vertex v) const { return p.a(v); }
  std::int64_t rk(const Bisection& b, Vertex v) const { return rank(b, p, v); }
  bool stubborn(Vertex v) const { return is_stubborn(g, p, v); }
  bool adj(Vertex x, Vertex y) const { return g.adjacent(x, y); }

  Bisection pair_bisection(const Bisection& b, Vertex u, const UPairConstraints& c = {},
                           UPair* out = nullptr) {
    check(!stubborn(u), "pair-vertex-non-stubborn", "pair requested for vertex " + std::to_string(u));
    UPair pair = build_u_pair(g, p, b, u, c);
    note("pair for " + std::to_string(u) + ": A=" + set_str(pair.a) + " B=" + set_str(pair.b));
    Bisection t = apply_u_pair(g, p, b, pair);
    if (out) *out = std::move(pair);
    return t;
  }

  GoodBisection finish(const Bisection& t, Vertex u, ReturnPoint point) {
    path.push_back(point);
    auto cls = classify(t, p);
    check(is_good_with(t, p, u), "result-good",
          std::string(to_string(point)) + " returns vertex " + std::to_string(u) + " with " +
              std::to_string(cls.obstructions.size()) + " obstruction(s)");
    note("return " + std::string(to_string(point)) + " good vertex " + std::to_string(u));
    return GoodBisection{t, u, std::move(path), std::move(log)};
  }

  // Lowest-id obstruction of t.
  std::optional<Vertex> obstruction(const Bisection& t) const {
    auto cls = classify(t, p);
    if (cls.obstructions.empty()) return std::nullopt;
    return cls.obstructions.front();
  }

  bool good(const Bisection& t) const { return classify(t, p).obstructions.empty(); }

  GoodBisection min_rank_in_not_s(const Bisection& s);
  GoodBisection min_rank_in_s(const Bisection& s);
  GoodBisection top(const Bisection& s);
};

GoodBisection Run::min_rank_in_not_s(const Bisection& s) {
  const auto m = min_rank_set(g, p, s);
  const std::int64_t ell = m.rank;
  note("min-rank-in-sbar: rank " + std::to_string(ell) + " M=" + set_str(m.vertices));
  check(std::any_of(m.vertices.begin(), m.vertices.end(), [&](Vertex v) { return !s.in_s(v); }),
        "min-rank-in-sbar", "some minimum-rank vertex lies in S-bar");

  struct Obstructed {
    Vertex u;
    Vertex y;
    std::int64_t b_size;
  };
  std::optional<Obstructed> first;
  auto consider = [&](Vertex u, const UPairConstraints& c) -> std::optional<Bisection> {
    UPair pair;
    Bisection t = pair_bisection(s, u, c, &pair);
    if (good(t)) return t;
    if (!first) first = Obstructed{u, *obstruction(t), static_cast<std::int64_t>(pair.b.size())};
    return std::nullopt;
  };

  for (Vertex u : m.vertices) {
    if (s.in_s(u)) continue;
    bool tried = false;
    for (Vertex v : m.vertices) {
      if (!s.in_s(v) || !adj(u, v)) continue;
      tried = true;
      if (auto t = consider(u, {{v}, {}, {}})) return finish(*t, u, ReturnPoint::NotSPairGood);
    }
    if (!tried) {
      // No minimum-rank neighbour in S: fall back to an unconstrained pair so
      // that an obstruction is still available below.
      note("no minimum-rank neighbour in S for " + std::to_string(u) + "; unconstrained pair");
      if (auto t = consider(u, {})) return finish(*t, u, ReturnPoint::NotSPairGood);
    }
  }
  check(first.has_value(), "nots-obstruction-found", "some constructed pair was obstructed");
  const Vertex y = first->y;
  note("obstruction " + std::to_string(y) + " for pair of " + std::to_string(first->u));
  check(!s.in_s(y), "obstruction-side", "obstruction " + std::to_string(y) + " lies in S-bar");
  check(s.def(y) <= -a(y) + 2 * first->b_size - 1, "nots-obstruction-deficiency",
        "def(" + std::to_string(y) + ") = " + std::to_string(s.def(y)) + " <= " +
            std::to_string(-a(y) + 2 * first->b_size - 1));

  std::optional<Vertex> v;
  for (Vertex x : s.s_members()) {
    if (!stubborn(x)) {
      v = x;
      break;
    }
  }
  if (v) {
    check(adj(*v, y), "nots-partner-adjacent",
          std::to_string(*v) + " adjacent to obstruction " + std::to_string(y));
    check(rk(s, *v) == ell, "nots-partner-min-rank",
          "rank(" + std::to_string(*v) + ") = " + std::to_string(rk(s, *v)));
    Bisection t = pair_bisection(s, *v, {{}, {y}, {}});
    return finish(t, *v, ReturnPoint::NotSObstructionPair);
  }

  std::optional<Vertex> w;
  for (Vertex x : s.s_members()) {
    if (!adj(x, y)) {
      w = x;
      break;
    }
  }
  check(w.has_value(), "nots-nonneighbour-exists",
        "S contains a non-neighbour of obstruction " + std::to_string(y));
  const std::vector<Vertex> wa{*w}, yb{y};
  Bisection s1 = s.swapped(g, p, wa, yb);
  check(rk(s1, y) <= ell - 1, "nots-swapped-rank",
        "rank(" + std::to_string(y) + ") after swap = " + std::to_string(rk(s1, y)));
  Bisection t = pair_bisection(s1, y);
  return finish(t, y, ReturnPoint::NotSStubbornSide);
}

GoodBisection Run::min_rank_in_s(const Bisection& s) {
  const auto m = min_rank_set(g, p, s);
  const std::int64_t ell = m.rank;
  note("min-rank-in-s: rank " + std::to_string(ell) + " M=" + set_str(m.vertices));
  for (Vertex u : m.vertices) {
    check(s.in_s(u) && s.def(u) >= 0, "min-rank-in-s",
          "minimum-rank vertex " + std::to_string(u) + " in S with def " + std::to_string(s.def(u)));
  }

  std::vector<Vertex> obstructions;
  for (Vertex u : m.vertices) {
    for (Vertex v : g.neighbors(u)) {
      if (s.in_s(v)) continue;
      Bisection t = pair_bisection(s, u, {{}, {v}, {}});
      auto cls = classify(t, p);
      if (cls.obstructions.empty()) return finish(t, u, ReturnPoint::SPairGood);
      for (Vertex y : cls.obstructions) {
        check(s.in_s(y), "obstruction-side", "obstruction " + std::to_string(y) + " lies in S");
      }
      for (Vertex y : cls.obstructions) {
        if (s.def(y) >= 0) continue;
        check(rk(s, y) > ell, "s-negative-obstruction-rank",
              "rank(" + std::to_string(y) + ") = " + std::to_string(rk(s, y)) + " > " + std::to_string(ell));
        Bisection s0 = s.mirrored_with(g, p, y);
        check(rk(s0, y) <= ell, "mirrored-rank",
              "rank(" + std::to_string(y) + ") after mirroring = " + std::to_string(rk(s0, y)));
        Bisection t0 = pair_bisection(s0, y);
        return finish(t0, y, ReturnPoint::SNegativeObstruction);
      }
      for (Vertex y : cls.obstructions) {
        if (!contains(obstructions, y)) obstructions.push_back(y);
      }
    }
  }
  check(!obstructions.empty(), "s-obstruction-found", "some constructed pair was obstructed");
  Vertex y = obstructions.front();
  for (Vertex x : obstructions) {
    if (a(x) % 2 == 1) {
      y = x;
      break;
    }
  }
  note("chosen obstruction y=" + std::to_string(y) + " a=" + std::to_string(a(y)));
  check(s.def(y) == 0 && rk(s, y) == ell && ell == ceil_div(a(y) + 1, 2), "zero-obstruction",
        "def(" + std::to_string(y) + ") = 0 and rank " + std::to_string(ell) + " = ceil((a+1)/2)");

  Bisection s1 = s.mirrored_with(g, p, y);
  std::vector<Vertex> o;
  for (Vertex w : s.sbar_members()) {
    if (!adj(w, y) && s.def(w) == a(y) - a(w) + 1) o.push_back(w);
  }
  note("O=" + set_str(o));
  UPair pair1;
  Bisection t1 = pair_bisection(s1, y, {{}, {}, o}, &pair1);
  if (good(t1)) return finish(t1, y, ReturnPoint::SMirrorPairGood);

  std::optional<Vertex> y1;
  for (Vertex w = 0; w < g.n(); ++w) {
    if (w == y || s.in_s(w) || contains(pair1.a, w) || adj(w, y)) continue;
    if (s.def(w) == a(y) - a(w)) {
      y1 = w;
      break;
    }
  }
  if (y1) {
    note("y1=" + std::to_string(*y1) + " by deficiency");
  } else {
    y1 = obstruction(t1);
    note("y1=" + std::to_string(*y1) + " as obstruction");
  }
  check(*y1 != y && !s.in_s(*y1), "partner-side", std::to_string(*y1) + " lies in S-bar");
  check(!adj(y, *y1), "partner-non-adjacent",
        std::to_string(y) + " and " + std::to_string(*y1) + " not adjacent");
  const bool exact = s.def(*y1) == a(y) - a(*y1);
  check(exact || (a(y) % 2 == 0 && s.def(*y1) == a(y) - a(*y1) + 1), "partner-deficiency",
        "def(" + std::to_string(*y1) + ") = " + std::to_string(s.def(*y1)));

  const std::vector<Vertex> ya{y}, y1b{*y1};
  Bisection s2 = s.swapped(g, p, ya, y1b);
  check(rk(s2, y) == ell && rk(s2, *y1) == ell, "swapped-ranks",
        "ranks of " + std::to_string(y) + "," + std::to_string(*y1) + " stay " + std::to_string(ell));

  std::optional<Vertex> lower;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!stubborn(v) && rk(s2, v) < rk(s2, y)) {
      lower = v;
      break;
    }
  }
  if (lower) {
    note("lower-rank vertex " + std::to_string(*lower));
    Bisection t2 = pair_bisection(s2, *lower);
    if (good(t2)) return finish(t2, *lower, ReturnPoint::SLowerRankGood);
    const Vertex y2 = *obstruction(t2);
    check(s2.in_s(y2), "obstruction-side", "obstruction " + std::to_string(y2) + " lies in S");
    Bisection s3 = s2.mirrored_with(g, p, y2);
    Bisection t3 = pair_bisection(s3, y2);
    return finish(t3, y2, ReturnPoint::SLowerRankObstruction);
  }

  Bisection t4 = pair_bisection(s2, y);
  if (good(t4)) return finish(t4, y, ReturnPoint::SSwapPairGood);

  const auto m2 = min_rank_set(g, p, s2);
  for (Vertex w : m2.vertices) {
    if (!s2.in_s(w) || s2.def(w) >= 0) continue;
    note("negative minimum-rank vertex " + std::to_string(w) + " after swap");
    Bisection s4 = s2.mirrored_with(g, p, w);
    Bisection t5 = pair_bisection(s4, w, {{y}, {}, {}});
    return finish(t5, w, ReturnPoint::SNegativeMinRank);
  }

  const Vertex y4 = *obstruction(t4);
  note("y4=" + std::to_string(y4));
  check(!s2.in_s(y4) && adj(*y1, y4), "y4-neighbour",
        std::to_string(y4) + " in S-bar and adjacent to " + std::to_string(*y1));
  Bisection t6 = pair_bisection(s2, *y1, {{}, {y4}, {}});
  if (good(t6)) return finish(t6, *y1, ReturnPoint::SPartnerPairGood);

  const Vertex y6 = *obstruction(t6);
  note("y6=" + std::to_string(y6));
  check(s2.in_s(y6), "obstruction-side", "obstruction " + std::to_string(y6) + " lies in S");
  if (adj(y6, y) && adj(y4, y) && adj(y6, y4) && !adj(*y1, y6)) {
    Bisection s5 = s2.mirrored_with(g, p, y6);
    Bisection t7 = pair_bisection(s5, y);
    return finish(t7, y, ReturnPoint::STriangle);
  }

  const std::vector<Vertex> y6a{y6}, y4b{y4};
  Bisection s6 = s2.swapped(g, p, y6a, y4b);
  check(s6.phi2() == s.phi2(), "potential-preserved",
        "phi2 " + std::to_string(s6.phi2()) + " = " + std::to_string(s.phi2()));
  for (Vertex x : s6.sbar_members()) {
    if (!stubborn(x) && rk(s6, x) == ell - 1) {
      note("rank " + std::to_string(ell - 1) + " vertex " + std::to_string(x) + " in S-bar; delegating");
      path.push_back(ReturnPoint::SDelegateNotS);
      return min_rank_in_not_s(s6);
    }
  }

  Bisection t8 = pair_bisection(s6, *y1);
  if (good(t8)) return finish(t8, *y1, ReturnPoint::SFinalPairGood);
  const Vertex y8 = *obstruction(t8);
  note("y8=" + std::to_string(y8));
  Bisection s7 = s6.mirrored_with(g, p, y8);
  Bisection t9 = pair_bisection(s7, y8);
  return finish(t9, y8, ReturnPoint::SFinalObstruction);
}

GoodBisection Run::top(const Bisection& s) {
  note("start bisection " + s.str() + " phi2=" + std::to_string(s.phi2()));
  const auto m = min_rank_set(g, p, s);
  const std::int64_t ell = m.rank;
  note("minimum rank " + std::to_string(ell) + " M=" + set_str(m.vertices));

  const auto s_side = s.s_members();
  for (Vertex u : s_side) {
    if (s.def(u) <= -a(u) - 1) return finish(s.mirrored_with(g, p, u), u, ReturnPoint::WarmupFlipNegative);
  }
  for (Vertex u : s_side) {
    if (s.def(u) >= a(u) + 1) return finish(s, u, ReturnPoint::WarmupAlreadyGood);
  }
  for (Vertex u : s.sbar_members()) {
    if (s.def(u) >= a(u) + 1) {
      return finish(s.mirrored_with(g, p, s_side.front()), u, ReturnPoint::WarmupGoodInSbar);
    }
  }
  for (Vertex u : m.vertices) {
    if (!s.in_s(u) || s.def(u) >= 0) continue;
    Bisection s1 = s.mirrored_with(g, p, u);
    check(rk(s1, u) <= ell - 1, "mirrored-rank",
          "rank(" + std::to_string(u) + ") after mirroring = " + std::to_string(rk(s1, u)));
    Bisection t = pair_bisection(s1, u);
    return finish(t, u, ReturnPoint::WarmupNegativeMinRank);
  }
  for (Vertex u : m.vertices) {
    if (!s.in_s(u)) return min_rank_in_not_s(s);
  }
  return min_rank_in_s(s);
}

void check_input(const Graph& g, const StubbornnessProfile& profile) {
  if (g.n() % 2 == 0) fail(ErrorCode::EvenN, "the graph needs an odd number of vertices, got " + std::to_string(g.n()));
  if (profile.size() != g.n()) fail(ErrorCode::InvalidArgument, "stubbornness profile size does not match the graph");
  if (all_stubborn(g, profile)) fail(ErrorCode::AllStubborn, "all vertices stubborn");
}

}  // namespace

GoodBisection compute_good_bisection(const Graph& g, const StubbornnessProfile& profile) {
  check_input(g, profile);
  LocalSearchStats stats;
  Bisection s = local_search_k_minimal(g, profile, 3, std::nullopt, &stats);
  Run run(g, profile);
  run.note("local search: " + std::to_string(stats.accepted_swaps) + " accepted swaps");
  return run.top(s);
}

GoodBisection compute_good_bisection_from(const Graph& g, const StubbornnessProfile& profile,
                                          const Bisection& start) {
  check_input(g, profile);
  return Run(g, profile).top(start);
}

GoodBisection min_rank_in_not_s(const Graph& g, const StubbornnessProfile& profile,
                                const Bisection& b) {
  check_input(g, profile);
  return Run(g, profile).min_rank_in_not_s(b);
}

GoodBisection min_rank_in_s(const Graph& g, const StubbornnessProfile& profile,
                            const Bisection& b) {
  check_input(g, profile);
  return Run(g, profile).min_rank_in_s(b);
}

SubversionResult belief_from_good_bisection(const StubbornnessProfile& profile,
                                            const Bisection& b, Vertex u) {
  if (u < 0 || u >= b.n() || !is_good_with(b, profile, u)) {
    fail(ErrorCode::NotGood, "bisection " + b.str() + " is not good with vertex " + std::to_string(u));
  }
  SubversionResult r;
  r.beliefs = BeliefAssignment(std::vector<std::uint8_t>(static_cast<std::size_t>(b.n()), 0));
  for (Vertex x = 0; x < b.n(); ++x) {
    if (b.in_s(x) && x != u) r.beliefs.bits[x] = 1;
  }
  r.swing = u;
  r.witness_bisection = b;
  r.good_vertex = u;
  return r;
}

SubversionResult find_subversion(const Graph& g, const StubbornnessProfile& profile) {
  auto gb = compute_good_bisection(g, profile);
  auto r = belief_from_good_bisection(profile, gb.bisection, gb.good_vertex);
  r.path = std::move(gb.path);
  r.log = std::move(gb.log);
  return r;
}

}  // namespace dpg
