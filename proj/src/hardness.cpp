#include "dpg/hardness.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "dpg/error.hpp"

namespace dpg {

bool Formula2P2N::satisfied_by(const std::vector<bool>& truth) const {
  if (static_cast<int>(truth.size()) != variables) return false;
  for (const auto& clause : clauses) {
    bool sat = false;
    for (int lit : clause) {
      const bool value = truth[std::abs(lit) - 1];
      if ((lit > 0) == value) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

Formula2P2N parse_2p2n_3sat(std::string_view text) {
  Formula2P2N f;
  bool header = false;
  int declared_clauses = 0;
  std::vector<std::vector<int>> raw;
  std::vector<int> current;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string line(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::istringstream in(line);
    std::string tok;
    if (!(in >> tok)) continue;
    if (tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      std::string fmt;
      if (header || !(in >> fmt >> f.variables >> declared_clauses) || fmt != "cnf" ||
          f.variables < 0 || declared_clauses < 0) {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad 'p cnf V C' header");
      }
      header = true;
      continue;
    }
    if (!header) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": clause before 'p cnf' header");
    do {
      int lit = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      }
      if (std::abs(lit) > f.variables) {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": variable " +
                                        std::to_string(std::abs(lit)) + " exceeds declared count");
      }
      if (lit == 0) {
        raw.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    } while (in >> tok);
  }
  if (!header) fail(ErrorCode::ParseError, "missing 'p cnf V C' header");
  if (!current.empty()) raw.push_back(std::move(current));
  if (static_cast<int>(raw.size()) != declared_clauses) {
    fail(ErrorCode::ParseError, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                    std::to_string(raw.size()));
  }
  if (raw.empty() || raw.size() % 4 != 0) {
    fail(ErrorCode::Not3SAT, "clause count must be a positive multiple of 4, got " + std::to_string(raw.size()));
  }
  std::vector<int> pos(f.variables + 1, 0), neg(f.variables + 1, 0);
  for (std::size_t j = 0; j < raw.size(); ++j) {
    const auto& c = raw[j];
    if (c.size() != 3) {
      fail(ErrorCode::Not3SAT, "clause " + std::to_string(j + 1) + " has " + std::to_string(c.size()) + " literals");
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
      fail(ErrorCode::Not3SAT, "clause " + std::to_string(j + 1) + " repeats a literal");
    }
    for (int lit : c) ++(lit > 0 ? pos : neg)[std::abs(lit)];
    f.clauses.push_back({c[0], c[1], c[2]});
  }
  for (int v = 1; v <= f.variables; ++v) {
    if (pos[v] != 2 || neg[v] != 2) {
      fail(ErrorCode::Not2P2N, "variable " + std::to_string(v) + " occurs " + std::to_string(pos[v]) +
                                   " times positively and " + std::to_string(neg[v]) + " times negatively");
    }
  }
  return f;
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Literal: return "literal";
    case Role::VarInternal: return "var_internal";
    case Role::VarHub: return "var_hub";
    case Role::Clause: return "clause";
    case Role::ClauseInternal: return "clause_internal";
    case Role::CliqueAsocial: return "clique_asocial";
    case Role::CliqueIndexed: return "clique_indexed";
    case Role::Isolated: return "isolated";
  }
  return "unknown";
}

std::string ReductionInstance::roles_text() const {
  std::string out;
  for (std::size_t v = 0; v < roles.size(); ++v) {
    out += to_string(roles[v]);
    if (roles[v] == Role::CliqueIndexed) out += " " + std::to_string(role_index[v]);
    out += "\n";
  }
  return out;
}

std::int64_t max_clique_padding(int clauses, const Rational& epsilon) {
  const std::int64_t p = epsilon.num(), q = epsilon.den();
  return floor_div((133 * q - 147 * p) * clauses, 4 * p);
}

ReductionInstance build_reduction(const Formula2P2N& formula, const Rational& epsilon,
                                  std::int64_t N) {
  const int C = formula.clause_count();
  const int V = formula.variables;
  if (C <= 0 || C % 4 != 0 || 3 * C != 4 * V) {
    fail(ErrorCode::InvalidParams, "formula sizes violate 3C = 4V with C a positive multiple of 4");
  }
  if (!(Rational(0) < epsilon && epsilon < Rational(133, 155))) {
    fail(ErrorCode::InvalidParams, "epsilon must satisfy 0 < eps < 133/155, got " + epsilon.str());
  }
  if (N % 2 != 0) fail(ErrorCode::InvalidParams, "N must be even, got " + std::to_string(N));
  if (N < 6 * C + 2) {
    fail(ErrorCode::InvalidParams, "N >= 6C+2 = " + std::to_string(6 * C + 2) + " required, got " + std::to_string(N));
  }
  const std::int64_t upper = max_clique_padding(C, epsilon);
  if (N > upper) {
    fail(ErrorCode::InvalidParams, "N <= floor((133-147 eps)C/(4 eps)) = " + std::to_string(upper) +
                                       " required, got " + std::to_string(N));
  }

  ReductionInstance inst;
  inst.formula = formula;
  inst.params = {C, V, N, epsilon};
  const std::int64_t n64 = 2 * (N + 147 * static_cast<std::int64_t>(C) / 4) + 1;
  if (n64 > (std::int64_t{1} << 30)) fail(ErrorCode::InvalidParams, "instance too large");
  const Vertex n = static_cast<Vertex>(n64);
  inst.roles.assign(n, Role::Isolated);
  inst.role_index.assign(n, -1);
  std::vector<Rational> alpha(n, Rational(1, 3));
  std::vector<Edge> edges;
  auto edge = [&](Vertex a, Vertex b) { edges.emplace_back(std::min(a, b), std::max(a, b)); };

  for (int k = 0; k < V; ++k) {
    const Vertex base = inst.variable_base(k);
    const Vertex x = base, xbar = base + 1, v0 = base + 16, w0 = base + 17;
    auto vx = [&](int i) { return base + 1 + i; };      // v_i(x), i = 1..7
    auto vxbar = [&](int i) { return base + 8 + i; };   // v_i(x-bar)
    auto wi = [&](int i) { return base + 17 + i; };     // w_i(x)
    for (int i = 1; i <= 7; ++i) {
      edge(x, vx(i));
      edge(xbar, vxbar(i));
      edge(w0, wi(i));
      edge(w0, vx(i));
      edge(w0, vxbar(i));
    }
    for (int i = 1; i <= 6; ++i) {
      edge(vx(i), vx(i + 1));
      edge(vxbar(i), vxbar(i + 1));
    }
    edge(v0, vx(7));
    edge(v0, vxbar(7));
    edge(v0, w0);
    for (Vertex v = base; v < base + ReductionInstance::kVariableGadget; ++v) inst.roles[v] = Role::VarInternal;
    inst.roles[x] = inst.roles[xbar] = Role::Literal;
    inst.roles[v0] = inst.roles[w0] = Role::VarHub;
  }
  for (int j = 0; j < C; ++j) {
    const Vertex base = inst.clause_base(j);
    const Vertex c = base, u1 = base + 1, u2 = base + 2;
    edge(c, u1);
    edge(c, u2);
    for (int i = 1; i <= 15; ++i) {
      edge(u1, base + 2 + i);
      edge(u2, base + 2 + i);
    }
    for (Vertex v = base; v < base + ReductionInstance::kClauseGadget; ++v) inst.roles[v] = Role::ClauseInternal;
    inst.roles[c] = Role::Clause;
    for (int lit : formula.clauses[j]) {
      edge(c, inst.variable_base(std::abs(lit) - 1) + (lit > 0 ? 0 : 1));
    }
  }
  const Vertex clique = inst.clique_base();
  const Vertex clique_size = static_cast<Vertex>(N + 6 * C + 1);
  for (Vertex a = clique; a < clique + clique_size; ++a) {
    for (Vertex b = a + 1; b < clique + clique_size; ++b) edge(a, b);
  }
  const std::int64_t social = N + 6 * C;
  for (Vertex a = clique; a < clique + N; ++a) {
    inst.roles[a] = Role::CliqueAsocial;
    alpha[a] = Rational(2 * social + 1, 2 * social + 2);
  }
  for (int i = 0; i <= 6 * C; ++i) {
    const Vertex v = inst.indexed_clique_vertex(i);
    inst.roles[v] = Role::CliqueIndexed;
    inst.role_index[v] = i;
    alpha[v] = Rational(N - 6 * C + 2 * i - 1, N - 6 * C + 2 * i);
  }
  std::sort(edges.begin(), edges.end());
  inst.graph = Graph(n, edges);
  inst.profile = StubbornnessProfile(std::move(alpha));
  return inst;
}

BeliefAssignment proper_assignment(const ReductionInstance& inst,
                                   const std::optional<std::vector<bool>>& truth) {
  if (truth && static_cast<int>(truth->size()) != inst.params.V) {
    fail(ErrorCode::InvalidArgument, "truth assignment needs " + std::to_string(inst.params.V) + " values");
  }
  BeliefAssignment b(inst.graph.n(), 0);
  for (int k = 0; k < inst.params.V; ++k) {
    const Vertex base = inst.variable_base(k);
    b[base + 17] = 1;
    b[base + ((truth && !(*truth)[k]) ? 1 : 0)] = 1;
  }
  for (int j = 0; j < inst.params.C; ++j) {
    b[inst.clause_base(j) + 1] = 1;
    b[inst.clause_base(j) + 2] = 1;
  }
  for (Vertex a = inst.clique_base(); a < inst.clique_base() + inst.params.N; ++a) b[a] = 1;
  return b;
}

GuidedRun guided_subversion_run(const ReductionInstance& inst, const std::vector<bool>& truth) {
  if (!inst.formula.satisfied_by(truth)) {
    fail(ErrorCode::InvalidArgument, "assignment does not satisfy the formula");
  }
  const auto& g = inst.graph;
  const auto& p = inst.profile;
  const BeliefAssignment beliefs = proper_assignment(inst, truth);
  GuidedRun run;
  run.final_state = truthful_state(beliefs);
  Vertex ones = run.final_state.ones();
  std::int64_t step = 0;
  for (int i = 0; i <= 6 * inst.params.C; ++i) {
    const Vertex c = inst.indexed_clique_vertex(i);
    if (run.final_state[c] != 0 || !improving_flip(g, p, beliefs, run.final_state, c)) {
      fail(ErrorCode::ReductionMismatch, "clique vertex c_" + std::to_string(i) + " has no improving flip to 1");
    }
    run.final_state[c] = 1;
    ++ones;
    run.trace.moves.push_back({++step, c, 1, ones});
  }
  Scheduler gadgets = Scheduler::prefer_flip_to_one();
  gadgets.allowed.assign(g.n(), 0);
  for (Vertex v = 0; v < inst.clique_base(); ++v) gadgets.allowed[v] = 1;
  auto rest = run_to_equilibrium(g, p, beliefs, run.final_state, gadgets);
  for (auto m : rest.trace.moves) {
    m.step = ++step;
    run.trace.moves.push_back(m);
  }
  run.final_state = std::move(rest.final_state);
  run.reached_equilibrium = rest.reached_equilibrium;
  return run;
}

int variable_gadget_ones(const ReductionInstance& inst, const OpinionState& s, int k) {
  int c = 0;
  for (Vertex v = inst.variable_base(k); v < inst.variable_base(k) + ReductionInstance::kVariableGadget; ++v) c += s[v];
  return c;
}

int clause_gadget_ones(const ReductionInstance& inst, const OpinionState& s, int j) {
  int c = 0;
  for (Vertex v = inst.clause_base(j); v < inst.clause_base(j) + ReductionInstance::kClauseGadget; ++v) c += s[v];
  return c;
}

}  // namespace dpg
