#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpg/dynamics.hpp"
#include "dpg/game.hpp"
#include "dpg/graph.hpp"
#include "dpg/rational.hpp"

namespace dpg {

// Literals are signed 1-based variable ids as in DIMACS.
struct Formula2P2N {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
  bool satisfied_by(const std::vector<bool>& truth) const;
};

// DIMACS CNF ("p cnf V C", clauses terminated by 0, 'c' comments). Throws
// Not3SAT for clauses without exactly three literals, a repeated literal, or a
// clause count that is not a positive multiple of 4; Not2P2N unless every
// variable occurs exactly twice positively and twice negatively; ParseError for
// malformed text.
Formula2P2N parse_2p2n_3sat(std::string_view text);

enum class Role {
  Literal,
  VarInternal,
  VarHub,
  Clause,
  ClauseInternal,
  CliqueAsocial,
  CliqueIndexed,
  Isolated,
};

std::string_view to_string(Role r);

struct ReductionParams {
  int C = 0;
  int V = 0;
  std::int64_t N = 0;
  Rational epsilon;
};

// Vertex layout, in id order:
//   variable gadget k (25 ids from 25k):
//     x, x-bar, v1..v7(x), v1..v7(x-bar), v0, w0, w1..w7
//   clause gadget j (18 ids from 25V + 18j): c, u1, u2, upsilon1..upsilon15
//   clique: N asocial vertices, then c_0..c_{6C}
//   isolated: N + 123C/4 vertices
struct ReductionInstance {
  Formula2P2N formula;
  ReductionParams params;
  Graph graph;
  StubbornnessProfile profile;
  std::vector<Role> roles;
  std::vector<int> role_index;  // i for c_i, -1 elsewhere

  static constexpr int kVariableGadget = 25;
  static constexpr int kClauseGadget = 18;

  Vertex variable_base(int k) const { return kVariableGadget * k; }
  Vertex clause_base(int j) const { return kVariableGadget * params.V + kClauseGadget * j; }
  Vertex clique_base() const { return clause_base(params.C); }
  Vertex indexed_clique_vertex(int i) const { return clique_base() + static_cast<Vertex>(params.N) + i; }
  Vertex isolated_base() const { return indexed_clique_vertex(6 * params.C + 1); }

  bool is_gadget_vertex(Vertex v) const { return v < clique_base(); }

  // One role label per line ("clique_indexed i" for c_i).
  std::string roles_text() const;
};

// Largest N allowed by epsilon: floor((133 - 147 eps) C / (4 eps)).
std::int64_t max_clique_padding(int clauses, const Rational& epsilon);

// Throws InvalidParams naming the violated condition: 0 < eps < 133/155,
// N even, 6C + 2 <= N <= max_clique_padding(C, eps).
ReductionInstance build_reduction(const Formula2P2N& formula, const Rational& epsilon,
                                  std::int64_t N);

// Belief 1 on every w0, one literal per variable (the true one; positive when
// no truth assignment is given), u1 and u2 of every clause, and the N asocial
// clique vertices.
BeliefAssignment proper_assignment(const ReductionInstance& instance,
                                   const std::optional<std::vector<bool>>& truth = std::nullopt);

struct GuidedRun {
  OpinionState final_state;
  MoveTrace trace;
  bool reached_equilibrium = false;
};

// From the truthful state of the proper assignment for `truth`: flips c_0..c_6C
// in order (ReductionMismatch if one of them has no improving flip), then runs
// the prefer-one scheduler restricted to gadget vertices. Throws
// InvalidArgument if `truth` does not satisfy the formula.
GuidedRun guided_subversion_run(const ReductionInstance& instance, const std::vector<bool>& truth);

// Opinion-1 vertices inside variable gadget k / clause gadget j.
int variable_gadget_ones(const ReductionInstance& instance, const OpinionState& s, int k);
int clause_gadget_ones(const ReductionInstance& instance, const OpinionState& s, int j);

}  // namespace dpg
