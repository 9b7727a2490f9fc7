#include <algorithm>
#include <set>

#include "doctest.h"
#include "dpg/error.hpp"
#include "dpg/hardness.hpp"
#include "dpg/io.hpp"
#include "expect.hpp"
#include "naive.hpp"

using namespace dpg;
using namespace dpg::testing;

namespace {

std::string fixture() { return io::read_file(std::string(DPG_TEST_DATA) + "/fixture_2p2n.cnf"); }

// The fixture twice over, on variables 1-3 and 4-6.
std::string doubled_fixture() {
  return "p cnf 6 8\n1 2 3 0\n1 -2 -3 0\n-1 2 -3 0\n-1 -2 3 0\n"
         "4 5 6 0\n4 -5 -6 0\n-4 5 -6 0\n-4 -5 6 0\n";
}

int edges_within(const Graph& g, Vertex lo, Vertex hi) {
  int count = 0;
  for (auto [u, v] : g.edges())
    if (u >= lo && u < hi && v >= lo && v < hi) ++count;
  return count;
}

void check_structure(const ReductionInstance& inst) {
  const Graph& g = inst.graph;
  const int C = inst.params.C, V = inst.params.V;
  const std::int64_t N = inst.params.N;
  CHECK(g.n() == 2 * (N + 147 * C / 4) + 1);
  CHECK(static_cast<std::int64_t>(inst.roles.size()) == g.n());

  for (int k = 0; k < V; ++k) {
    Vertex base = inst.variable_base(k);
    CHECK(edges_within(g, base, base + 25) == 50);
    Vertex w0 = base + 17;
    CHECK(g.degree(w0) == 22);
    for (Vertex v = base + 2; v <= base + 16; ++v) CHECK(g.adjacent(w0, v));
    for (Vertex v = base + 18; v < base + 25; ++v) CHECK(g.adjacent(w0, v));
    CHECK(inst.roles[base] == Role::Literal);
    CHECK(inst.roles[base + 1] == Role::Literal);
    CHECK(inst.roles[base + 16] == Role::VarHub);
    CHECK(inst.roles[w0] == Role::VarHub);
  }
  for (int j = 0; j < C; ++j) {
    Vertex base = inst.clause_base(j);
    CHECK(edges_within(g, base, base + 18) == 32);
    CHECK(inst.roles[base] == Role::Clause);
    std::set<Vertex> literal_nbrs, expect;
    for (Vertex v : g.neighbors(base))
      if (v < inst.clause_base(0)) literal_nbrs.insert(v);
    for (int lit : inst.formula.clauses[j]) {
      int var = std::abs(lit) - 1;
      expect.insert(inst.variable_base(var) + (lit > 0 ? 0 : 1));
    }
    CHECK(literal_nbrs == expect);
  }
  for (int k = 0; k < V; ++k) {
    for (Vertex lit : {inst.variable_base(k), inst.variable_base(k) + 1}) {
      int clause_nbrs = 0;
      for (Vertex v : g.neighbors(lit))
        if (v >= inst.clause_base(0) && v < inst.clique_base()) ++clause_nbrs;
      CHECK(clause_nbrs == 2);
    }
  }
  // Gadgets connect to nothing outside the gadget region.
  for (auto [u, v] : g.edges()) CHECK(inst.is_gadget_vertex(u) == inst.is_gadget_vertex(v));

  Vertex cb = inst.clique_base();
  Vertex clique_size = static_cast<Vertex>(N + 6 * C + 1);
  CHECK(edges_within(g, cb, cb + clique_size) == clique_size * (clique_size - 1) / 2);
  for (Vertex v = cb; v < cb + clique_size; ++v) CHECK(g.degree(v) == clique_size - 1);
  for (Vertex v = cb; v < cb + N; ++v) {
    CHECK(inst.roles[v] == Role::CliqueAsocial);
    CHECK(naive_stubborn(g, inst.profile, v));
  }
  for (int i = 0; i <= 6 * C; ++i) {
    Vertex c = inst.indexed_clique_vertex(i);
    CHECK(inst.roles[c] == Role::CliqueIndexed);
    CHECK(inst.role_index[c] == i);
  }
  Vertex iso = inst.isolated_base();
  CHECK(g.n() - iso == N + 123 * C / 4);
  for (Vertex v = iso; v < g.n(); ++v) {
    CHECK(g.degree(v) == 0);
    CHECK(inst.roles[v] == Role::Isolated);
  }
  for (Vertex v = 0; v < cb; ++v) CHECK(inst.profile.alpha(v) == Rational(1, 3));
  for (Vertex v = iso; v < g.n(); ++v) CHECK(inst.profile.alpha(v) == Rational(1, 3));
}

}  // namespace

TEST_CASE("parse the fixture") {
  auto f = parse_2p2n_3sat(fixture());
  CHECK(f.variables == 3);
  CHECK(f.clause_count() == 4);
  CHECK(f.clauses[1] == std::array<int, 3>{1, -2, -3});
  CHECK(f.satisfied_by({true, true, true}));
  CHECK_FALSE(f.satisfied_by({true, false, true}));
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_2p2n_3sat("p cnf 3 4\n1 2 3 0\n1 2 -3 0\n-1 2 -3 0\n-1 -2 3 0\n"); }) ==
        ErrorCode::Not2P2N);
  CHECK(code_of([] { parse_2p2n_3sat("p cnf 3 4\n1 2 3 0\n1 -2 -3 0\n-1 2 -3 0\n-1 -2 0\n"); }) ==
        ErrorCode::Not3SAT);
  CHECK(code_of([] { parse_2p2n_3sat("p cnf 0 0\n"); }) == ErrorCode::Not3SAT);
  CHECK(code_of([] { parse_2p2n_3sat("p cnf 3 4\n1 1 3 0\n1 -2 -3 0\n-1 2 -3 0\n-1 -2 3 0\n"); }) ==
        ErrorCode::Not3SAT);
  CHECK(code_of([] { parse_2p2n_3sat("p cnf 3 4\n1 two 3 0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_2p2n_3sat("1 2 3 0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_2p2n_3sat("p cnf 3 4\n1 2 4 0\n1 -2 -3 0\n-1 2 -3 0\n-1 -2 3 0\n"); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("padding bounds and parameter errors") {
  CHECK(max_clique_padding(4, Rational(1, 2)) == 119);
  auto f = parse_2p2n_3sat(fixture());
  CHECK(code_of([&] { build_reduction(f, Rational(1, 2), 25); }) == ErrorCode::InvalidParams);
  CHECK(code_of([&] { build_reduction(f, Rational(1, 2), 24); }) == ErrorCode::InvalidParams);
  CHECK(code_of([&] { build_reduction(f, Rational(1, 2), 120); }) == ErrorCode::InvalidParams);
  CHECK(code_of([&] { build_reduction(f, Rational(133, 155), 26); }) == ErrorCode::InvalidParams);
  CHECK(code_of([&] { build_reduction(f, Rational(0), 26); }) == ErrorCode::InvalidParams);
  CHECK(code_of([&] { build_reduction(f, Rational(1, 2), 26); }) == std::nullopt);
  CHECK(code_of([&] { build_reduction(f, Rational(1, 2), 118); }) == std::nullopt);
}

TEST_CASE("fixture reduction with N = 26") {
  auto inst = build_reduction(parse_2p2n_3sat(fixture()), Rational(1, 2), 26);
  CHECK(inst.graph.n() == 347);
  CHECK(3 * 25 + 4 * 18 + (26 + 24 + 1) + (26 + 123) == 347);
  check_structure(inst);
}

TEST_CASE("structure for other parameters") {
  auto f8 = parse_2p2n_3sat(doubled_fixture());
  CHECK(f8.variables == 6);
  for (std::int64_t N : {50, 64, 100}) check_structure(build_reduction(f8, Rational(1, 3), N));
  auto f4 = parse_2p2n_3sat(fixture());
  for (std::int64_t N : {28, 40, 118}) check_structure(build_reduction(f4, Rational(1, 2), N));
}

TEST_CASE("indexed clique vertices flip exactly at their threshold") {
  auto inst = build_reduction(parse_2p2n_3sat(fixture()), Rational(1, 2), 26);
  const Graph& g = inst.graph;
  const std::int64_t N = inst.params.N;
  const int C = inst.params.C;
  Vertex cb = inst.clique_base();
  Vertex clique_size = static_cast<Vertex>(N + 6 * C + 1);
  std::vector<std::uint8_t> b(g.n(), 0);
  for (int i = 0; i <= 6 * C; ++i) {
    Vertex c = inst.indexed_clique_vertex(i);
    for (std::int64_t j = 0; j <= N + 6 * C; ++j) {
      std::vector<std::uint8_t> s(g.n(), 0);
      std::int64_t placed = 0;
      for (Vertex v = cb; v < cb + clique_size && placed < j; ++v)
        if (v != c) s[v] = 1, ++placed;
      CHECK(naive_improving(g, inst.profile, b, s, c) == (j >= N + i));
    }
  }
}

TEST_CASE("proper assignment") {
  auto inst = build_reduction(parse_2p2n_3sat(fixture()), Rational(1, 2), 26);
  auto b = proper_assignment(inst);
  CHECK(b.ones() == 40);
  CHECK(Rational(b.ones()) <= Rational((inst.graph.n() - 1) / 2) * (Rational(1) - inst.params.epsilon));
  for (int k = 0; k < 3; ++k) {
    CHECK(b[inst.variable_base(k)] == 1);
    CHECK(b[inst.variable_base(k) + 1] == 0);
    CHECK(b[inst.variable_base(k) + 17] == 1);
  }
  for (int j = 0; j < 4; ++j) {
    CHECK(b[inst.clause_base(j) + 1] == 1);
    CHECK(b[inst.clause_base(j) + 2] == 1);
  }
  auto flipped = proper_assignment(inst, std::vector<bool>{true, false, true});
  std::vector<Vertex> diff;
  for (Vertex v = 0; v < inst.graph.n(); ++v)
    if (b[v] != flipped[v]) diff.push_back(v);
  CHECK(diff == std::vector<Vertex>{inst.variable_base(1), inst.variable_base(1) + 1});
}

TEST_CASE("property: proper assignments stay below the ones budget for every accepted N") {
  auto f = parse_2p2n_3sat(fixture());
  for (Rational eps : {Rational(1, 10), Rational(1, 3), Rational(1, 2), Rational(4, 5)}) {
    auto hi = max_clique_padding(4, eps);
    for (std::int64_t N = 26; N <= std::min<std::int64_t>(hi, 400); N += 2) {
      auto inst = build_reduction(f, eps, N);
      auto b = proper_assignment(inst);
      CHECK(b.ones() == 2 * 3 + 2 * 4 + N);
      CHECK(Rational(b.ones()) <= Rational((inst.graph.n() - 1) / 2) * (Rational(1) - eps));
    }
  }
}

TEST_CASE("guided run on the fixture reaches a majority of ones") {
  auto inst = build_reduction(parse_2p2n_3sat(fixture()), Rational(1, 2), 26);
  std::vector<bool> truth{true, true, true};
  auto run = guided_subversion_run(inst, truth);
  CHECK(run.reached_equilibrium);
  CHECK(run.final_state.ones() == 26 + 147 * 4 / 4 + 1);
  CHECK(run.final_state.ones() == (inst.graph.n() + 1) / 2);
  for (int k = 0; k < 3; ++k) CHECK(variable_gadget_ones(inst, run.final_state, k) == 17);
  for (const Move& m : run.trace.moves) CHECK(inst.roles[m.vertex] != Role::CliqueAsocial);
  for (int i = 0; i <= 24; ++i) CHECK(run.trace.moves[i].vertex == inst.indexed_clique_vertex(i));

  CHECK(code_of([&] { guided_subversion_run(inst, {true, false, true}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("guided runs for every satisfying assignment") {
  auto f = parse_2p2n_3sat(fixture());
  auto inst = build_reduction(f, Rational(1, 2), 26);
  int satisfying = 0;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<bool> truth{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    if (!f.satisfied_by(truth)) continue;
    ++satisfying;
    auto run = guided_subversion_run(inst, truth);
    CHECK(run.reached_equilibrium);
    CHECK(run.final_state.ones() == (inst.graph.n() + 1) / 2);
    for (int k = 0; k < 3; ++k) CHECK(variable_gadget_ones(inst, run.final_state, k) == 17);
  }
  CHECK(satisfying == 4);
}

TEST_CASE("roles text") {
  auto inst = build_reduction(parse_2p2n_3sat(fixture()), Rational(1, 2), 26);
  auto text = inst.roles_text();
  CHECK(std::count(text.begin(), text.end(), '\n') == 347);
  CHECK(text.rfind("literal\nliteral\n", 0) == 0);
  CHECK(text.find("clique_indexed 24\n") != std::string::npos);
}
