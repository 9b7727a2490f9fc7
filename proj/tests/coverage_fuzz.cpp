// Searches for games whose 3-minimal bisections drive the good-bisection
// procedure through each return point, and writes a few witnesses per point.
//
//   coverage_fuzz --small 7 --profiles 20 --random 2000 --seed 1 --out tests/data/coverage

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>

#include "CLI11.hpp"
#include "corpus.hpp"
#include "dpg/error.hpp"
#include "dpg/io.hpp"
#include "dpg/subversion.hpp"
#include "graphs.hpp"

using namespace dpg;
using namespace dpg::testing;

namespace {

// Position of a return point along the procedure, for the mutation search.
std::size_t depth(ReturnPoint p) {
  switch (p) {
    case ReturnPoint::NotSPairGood: return 1;
    case ReturnPoint::NotSObstructionPair: return 3;
    case ReturnPoint::NotSStubbornSide: return 3;
    case ReturnPoint::SPairGood: return 1;
    case ReturnPoint::SNegativeObstruction: return 2;
    case ReturnPoint::SMirrorPairGood: return 3;
    case ReturnPoint::SLowerRankGood: return 4;
    case ReturnPoint::SLowerRankObstruction: return 4;
    case ReturnPoint::SSwapPairGood: return 5;
    case ReturnPoint::SNegativeMinRank: return 6;
    case ReturnPoint::SPartnerPairGood: return 7;
    case ReturnPoint::STriangle: return 8;
    case ReturnPoint::SDelegateNotS: return 9;
    case ReturnPoint::SFinalPairGood: return 9;
    case ReturnPoint::SFinalObstruction: return 10;
    default: return 0;
  }
}

// Number of vertices that send the procedure into the lower-rank branch,
// recovered from the y and y1 recorded in the log.
std::size_t lower_rank_count(const Graph& g, const StubbornnessProfile& p, const Bisection& s,
                             const std::vector<std::string>& log) {
  int y = -1, y1 = -1;
  for (const auto& line : log) {
    if (line.rfind("chosen obstruction y=", 0) == 0) y = std::stoi(line.substr(21));
    if (line.rfind("y1=", 0) == 0) y1 = std::stoi(line.substr(3));
  }
  if (y < 0 || y1 < 0) return 9;
  const std::vector<Vertex> ya{y}, y1b{y1};
  Bisection s2 = s.swapped(g, p, ya, y1b);
  std::size_t count = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!is_stubborn(g, p, v) && rank(s2, p, v) < rank(s2, p, y)) ++count;
  }
  return count;
}

// Smallest def(x) + a_x over S; negative exactly when an obstruction exists.
std::size_t obstruction_slack(const StubbornnessProfile& p, const Bisection& b) {
  std::int64_t slack = 1 << 20;
  for (Vertex x : b.s_members()) slack = std::min(slack, b.def(x) + p.a(x));
  return static_cast<std::size_t>(std::max<std::int64_t>(slack, 0));
}

struct Tally {
  std::map<ReturnPoint, std::int64_t> hits;
  std::map<ReturnPoint, std::vector<CorpusEntry>> keep;
  std::int64_t runs = 0;
  std::int64_t violations = 0;
  std::size_t keep_per_point = 3;

  // Returns the log length of the run, a rough measure of branch depth.
  std::size_t run(const Graph& g, const StubbornnessProfile& p, const Bisection& start) {
    ++runs;
    try {
      auto gb = compute_good_bisection_from(g, p, start);
      for (auto point : gb.path) {
        ++hits[point];
        auto& k = keep[point];
        if (k.size() < keep_per_point) k.push_back({std::string(to_string(point)), g, p, start.sides()});
      }
      std::size_t stage = 0;
      for (auto point : gb.path) stage = std::max(stage, depth(point));
      std::size_t bonus = gb.log.size();
      if (stage == 4) bonus = 900 - std::min<std::size_t>(900, 100 * lower_rank_count(g, p, start, gb.log));
      if (stage == 5) bonus = 900 - 100 * std::min<std::size_t>(9, obstruction_slack(p, gb.bisection));
      return stage * 1000 + bonus;
    } catch (const InvariantViolation& e) {
      if (violations++ < 20) {
        std::cerr << "violation: " << e.what() << "\n"
                  << format_corpus_entry({"violation", g, p, start.sides()});
      }
      return 100000;
    }
  }

  // Runs every 3-minimal bisection of a small game; returns the deepest log.
  std::size_t run_all(const Graph& g, const StubbornnessProfile& p) {
    if (all_stubborn(g, p)) return 0;
    std::size_t best = 0;
    for (const auto& side : all_bisection_sides(g.n())) {
      auto b = Bisection::from_sides(g, p, side);
      if (is_k_minimal(g, p, b, 3)) best = std::max(best, run(g, p, b));
    }
    return best;
  }
};

StubbornnessProfile skewed_profile(Vertex n, std::mt19937_64& rng) {
  // Mostly small a with occasional large ones.
  std::uniform_int_distribution<int> a(0, 4);
  std::vector<Rational> alpha;
  for (Vertex v = 0; v < n; ++v) {
    const int k = a(rng);
    // (2k+1)/(2k+3) gives a = k.
    alpha.emplace_back(2 * k + 1, 2 * k + 3);
  }
  return StubbornnessProfile(std::move(alpha));
}

StubbornnessProfile pick_profile(Vertex n, std::mt19937_64& rng, int which) {
  switch (which % 3) {
    case 0: return random_standard_profile(n, rng);
    case 1: return random_rational_profile(n, rng, 12);
    default: return skewed_profile(n, rng);
  }
}

struct Candidate {
  Graph g;
  StubbornnessProfile p;
  std::size_t score = 0;
};

Candidate mutate(const Candidate& c, Vertex max_n, std::mt19937_64& rng) {
  auto edges = c.g.edges();
  auto alpha = c.p.alphas();
  Vertex n = c.g.n();
  std::uniform_int_distribution<int> kind(0, 9);
  const int steps = 1 + static_cast<int>(rng() % 3);
  for (int s = 0; s < steps; ++s) {
    const int k = kind(rng);
    if (k < 6) {
      Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
      if (u == v) continue;
      Edge e{std::min(u, v), std::max(u, v)};
      auto it = std::find(edges.begin(), edges.end(), e);
      if (it == edges.end()) edges.push_back(e);
      else edges.erase(it);
    } else if (k < 9) {
      const int a = static_cast<int>(rng() % 5);
      alpha[rng() % n] = Rational(2 * a + 1, 2 * a + 3);
    } else if (n + 2 <= max_n) {
      alpha.emplace_back(1, 3);
      alpha.emplace_back(1, 3);
      n += 2;
    } else if (n > 5) {
      n -= 2;
      alpha.resize(n);
      std::erase_if(edges, [&](const Edge& e) { return e.second >= n; });
    }
  }
  std::sort(edges.begin(), edges.end());
  return {Graph(n, edges), StubbornnessProfile(std::move(alpha)), 0};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coverage search for the good-bisection procedure"};
  Vertex small = 7;
  int profiles = 10;
  std::int64_t random_runs = 0;
  std::vector<Vertex> random_sizes{9, 11, 13};
  std::uint64_t seed = 1;
  std::string out;
  app.add_option("--small", small, "exhaust all graphs and 3-minimal bisections up to this odd n");
  app.add_option("--profiles", profiles, "profiles per small graph");
  app.add_option("--random", random_runs, "random larger instances");
  app.add_option("--sizes", random_sizes, "vertex counts for random instances");
  app.add_option("--seed", seed);
  std::int64_t evolve = 0;
  Vertex evolve_n = 9;
  app.add_option("--evolve", evolve, "mutation rounds aimed at deep branches");
  app.add_option("--evolve-n", evolve_n, "largest n during mutation");
  double seconds = 0;
  app.add_option("--seconds", seconds, "stop mutating after this much wall time");
  Vertex exhaust_n = 0;
  int exhaust_a = 2;
  app.add_option("--exhaust-n", exhaust_n, "every graph on this many vertices with every a-vector");
  app.add_option("--exhaust-a", exhaust_a, "largest a in the exhaustive a-vectors");
  std::string replay;
  app.add_option("--replay", replay, "print the procedure log for every entry of a corpus file");
  std::string from;
  app.add_option("--from", from, "corpus file whose games seed the mutation pool");
  bool show_best = false;
  app.add_flag("--show-best", show_best, "print the log of the deepest instance found");
  app.add_option("--out", out, "directory for witness files");
  CLI11_PARSE(app, argc, argv);

  if (!replay.empty()) {
    for (const auto& e : parse_corpus(io::read_file(replay))) {
      auto b = Bisection::from_sides(e.graph, e.profile, e.start);
      std::cout << format_corpus_entry(e);
      try {
        for (const auto& line : compute_good_bisection_from(e.graph, e.profile, b).log) std::cout << "  " << line << "\n";
      } catch (const Error& err) {
        std::cout << "  error: " << err.what() << "\n";
      }
    }
    return 0;
  }

  std::mt19937_64 rng(seed);
  Tally tally;
  for (Vertex n = 3; n <= small; n += 2) {
    const auto graphs = graphs_up_to_isomorphism(n, false);
    const auto sides = all_bisection_sides(n);
    for (const auto& g : graphs) {
      for (int i = 0; i < profiles; ++i) {
        auto p = pick_profile(n, rng, i);
        if (all_stubborn(g, p)) continue;
        for (const auto& side : sides) {
          auto b = Bisection::from_sides(g, p, side);
          if (is_k_minimal(g, p, b, 3)) tally.run(g, p, b);
        }
      }
    }
    std::cerr << "n=" << n << " done, runs " << tally.runs << "\n";
  }
  for (std::int64_t r = 0; r < random_runs; ++r) {
    const Vertex n = random_sizes[r % random_sizes.size()];
    std::uniform_real_distribution<double> dens(0.15, 0.7);
    Graph g = random_graph(n, dens(rng), rng);
    auto p = pick_profile(n, rng, static_cast<int>(r));
    if (all_stubborn(g, p)) continue;
    std::vector<Vertex> ids(n);
    for (Vertex v = 0; v < n; ++v) ids[v] = v;
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize((n + 1) / 2);
    auto start = local_search_k_minimal(g, p, 3, Bisection::from_members(g, p, ids));
    tally.run(g, p, start);
  }

  if (evolve > 0) {
    std::vector<Candidate> pool;
    if (!from.empty()) {
      for (const auto& e : parse_corpus(io::read_file(from))) {
        Candidate c{e.graph, e.profile, 0};
        c.score = tally.run_all(c.g, c.p);
        pool.push_back(std::move(c));
      }
    }
    std::uniform_real_distribution<double> dens(0.2, 0.6);
    while (pool.size() < 32) {
      Candidate c{random_graph(7, dens(rng), rng), {}, 0};
      c.p = pick_profile(7, rng, 2);
      c.score = tally.run_all(c.g, c.p);
      pool.push_back(std::move(c));
    }
    const auto t0 = std::chrono::steady_clock::now();
    for (std::int64_t r = 0; r < evolve; ++r) {
      if (seconds > 0 && std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > seconds) break;
      std::sort(pool.begin(), pool.end(), [](auto& x, auto& y) { return x.score > y.score; });
      const auto& parent = pool[std::min<std::size_t>(rng() % pool.size(), rng() % pool.size())];
      Candidate child = mutate(parent, evolve_n, rng);
      child.score = tally.run_all(child.g, child.p);
      if (child.score >= pool.back().score) pool.back() = std::move(child);
      if (r % 10000 == 0) std::cerr << "round " << r << " best " << pool.front().score << "\n";
    }
    if (show_best) {
      std::sort(pool.begin(), pool.end(), [](auto& x, auto& y) { return x.score > y.score; });
      const auto& best = pool.front();
      for (const auto& side : all_bisection_sides(best.g.n())) {
        auto b = Bisection::from_sides(best.g, best.p, side);
        if (!is_k_minimal(best.g, best.p, b, 3)) continue;
        auto gb = compute_good_bisection_from(best.g, best.p, b);
        std::size_t stage = 0;
        for (auto point : gb.path) stage = std::max(stage, depth(point));
        if (stage * 1000 < best.score - 999) continue;
        std::cerr << format_corpus_entry({"best", best.g, best.p, b.sides()});
        for (const auto& line : gb.log) std::cerr << "  " << line << "\n";
        break;
      }
    }
  }

  if (exhaust_n > 0) {
    // The procedure sees stubbornness only through the integer a values.
    for (const auto& g : graphs_up_to_isomorphism(exhaust_n, false)) {
      std::vector<int> a(exhaust_n, 0);
      while (true) {
        std::vector<Rational> alpha;
        for (int k : a) alpha.emplace_back(2 * k + 1, 2 * k + 3);
        tally.run_all(g, StubbornnessProfile(std::move(alpha)));
        Vertex i = 0;
        while (i < exhaust_n && a[i] == exhaust_a) a[i++] = 0;
        if (i == exhaust_n) break;
        ++a[i];
      }
    }
  }

  std::cout << "runs " << tally.runs << "\nviolations " << tally.violations << "\n";
  for (auto point : all_return_points()) {
    std::cout << to_string(point) << " " << tally.hits[point] << "\n";
  }
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    for (const auto& [point, entries] : tally.keep) {
      std::string text;
      for (const auto& e : entries) text += format_corpus_entry(e);
      io::write_file(std::filesystem::path(out) / (std::string(to_string(point)) + ".txt"), text);
    }
  }
  return tally.violations == 0 ? 0 : 1;
}
