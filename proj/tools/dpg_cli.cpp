// dpg: command-line front end.
//
// Exit status: 0 success, 1 domain error (all stubborn, not good, failed
// verification, ...), 2 usage or input-format error, 3 internal algorithm
// invariant violated.

#include <filesystem>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "dpg/bisection.hpp"
#include "dpg/dynamics.hpp"
#include "dpg/error.hpp"
#include "dpg/hardness.hpp"
#include "dpg/io.hpp"
#include "dpg/oracle.hpp"
#include "dpg/subversion.hpp"

namespace fs = std::filesystem;
using namespace dpg;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;
constexpr int kInvariant = 3;

struct GameFiles {
  std::string graph;
  std::string stubbornness;
};

void add_game_options(CLI::App* cmd, GameFiles& files) {
  cmd->add_option("--graph", files.graph, "graph file ('n m' then edges)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--stubbornness", files.stubbornness, "stubbornness file (one p/q per line)")
      ->required()
      ->check(CLI::ExistingFile);
}

struct Game {
  Graph g;
  StubbornnessProfile p;
};

Game load_game(const GameFiles& files) {
  Game game{io::parse_graph(io::read_file(files.graph)),
            io::parse_stubbornness(io::read_file(files.stubbornness))};
  if (game.p.size() != game.g.n()) {
    fail(ErrorCode::ParseError, files.stubbornness + ": expected " + std::to_string(game.g.n()) +
                                    " lines, got " + std::to_string(game.p.size()));
  }
  return game;
}

BeliefAssignment load_beliefs(const std::string& path, Vertex n) {
  auto bits = io::parse_bits(io::read_file(path));
  if (static_cast<Vertex>(bits.size()) != n) {
    fail(ErrorCode::ParseError, path + ": expected " + std::to_string(n) + " bits, got " +
                                    std::to_string(bits.size()));
  }
  return BeliefAssignment(std::move(bits));
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int run_subvert(const GameFiles& files, bool show_log, const std::string& out, Vertex max_n) {
  auto game = load_game(files);
  auto r = find_subversion(game.g, game.p);
  std::cout << "beliefs " << r.beliefs.str() << "\n";
  std::cout << "swing " << r.swing << "\n";
  std::cout << "bisection " << r.witness_bisection.str() << "\n";
  for (auto point : r.path) std::cout << "return " << to_string(point) << "\n";
  const bool swing_ok = verify_swing(game.g, game.p, r.beliefs, r.swing);
  std::cout << "verify_swing " << yes_no(swing_ok) << "\n";
  bool all_ok = swing_ok;
  if (game.g.n() <= max_n) {
    ScheduleMode mode;
    mode.max_n = max_n;
    const bool schedules = check_all_schedules_subvert(game.g, game.p, r.beliefs, r.swing, mode);
    std::cout << "all_schedules_subvert " << yes_no(schedules) << "\n";
    all_ok = all_ok && schedules;
  }
  if (show_log) {
    for (const auto& line : r.log) std::cout << "log " << line << "\n";
  }
  if (!out.empty()) io::write_file(out, io::format_bits(r.beliefs.bits));
  if (!all_ok) {
    std::cerr << "error: verification of the computed assignment failed\n";
    return kDomain;
  }
  return kOk;
}

int run_simulate(const GameFiles& files, const std::string& beliefs_path, const std::string& initial_path,
                 const std::string& scheduler, std::uint64_t seed, const std::string& script_path,
                 std::int64_t max_steps) {
  auto game = load_game(files);
  auto beliefs = load_beliefs(beliefs_path, game.g.n());
  OpinionState initial = initial_path.empty()
                             ? truthful_state(beliefs)
                             : OpinionState(load_beliefs(initial_path, game.g.n()).bits);
  Scheduler s;
  s.policy = script_path.empty() ? parse_scheduler_policy(scheduler) : SchedulerPolicy::Scripted;
  s.seed = seed;
  if (!script_path.empty()) s.script = io::parse_script(io::read_file(script_path));
  std::optional<std::int64_t> limit;
  if (max_steps >= 0) limit = max_steps;
  auto r = run_to_equilibrium(game.g, game.p, beliefs, initial, s, limit);
  std::cout << r.trace.tsv();
  std::cerr << "final " << r.final_state.str() << " ones " << r.final_state.ones() << " equilibrium "
            << yes_no(r.reached_equilibrium) << "\n";
  if (!r.reached_equilibrium && s.policy != SchedulerPolicy::Scripted) {
    std::cerr << "error: no equilibrium within " << r.trace.moves.size() << " steps\n";
    return kDomain;
  }
  return kOk;
}

int run_bisect(const GameFiles& files, int k, std::optional<std::uint64_t> random_seed, bool good) {
  auto game = load_game(files);
  const Vertex n = game.g.n();
  std::optional<Bisection> seed;
  if (random_seed) {
    std::vector<Vertex> ids(n);
    for (Vertex v = 0; v < n; ++v) ids[v] = v;
    std::mt19937_64 rng(*random_seed);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize((n + 1) / 2);
    seed = Bisection::from_members(game.g, game.p, ids);
  }
  LocalSearchStats stats;
  Bisection b = local_search_k_minimal(game.g, game.p, k, seed, &stats);
  std::cout << "bisection " << b.str() << "\n";
  std::cout << "phi2 " << b.phi2() << "\n";
  std::cout << "cut " << b.cut() << "\n";
  std::cout << "accepted_swaps " << stats.accepted_swaps << "\n";
  std::cout << "vertex\tside\tdef\trank\tstubborn\n";
  for (Vertex v = 0; v < n; ++v) {
    std::cout << v << '\t' << (b.in_s(v) ? "S" : "Sbar") << '\t' << b.def(v) << '\t'
              << rank(b, game.p, v) << '\t' << yes_no(is_stubborn(game.g, game.p, v)) << "\n";
  }
  auto cls = classify(b, game.p);
  std::cout << "good_vertices";
  for (Vertex v : cls.good_vertices) std::cout << ' ' << v;
  std::cout << "\nobstructions";
  for (Vertex v : cls.obstructions) std::cout << ' ' << v;
  std::cout << "\n";
  if (good) {
    auto gb = compute_good_bisection_from(game.g, game.p, b);
    std::cout << "good_bisection " << gb.bisection.str() << "\n";
    std::cout << "good_vertex " << gb.good_vertex << "\n";
    for (auto point : gb.path) std::cout << "return " << to_string(point) << "\n";
  }
  return kOk;
}

int run_oracle(const GameFiles& files, const std::string& beliefs_path, bool characterization,
               Vertex max_n, bool exact_half) {
  auto game = load_game(files);
  OracleOptions opts{max_n, exact_half};
  if (!beliefs_path.empty()) {
    auto b = load_beliefs(beliefs_path, game.g.n());
    std::cout << "subvertable " << yes_no(is_subvertable_assignment(game.g, game.p, b, opts)) << "\n";
  }
  if (characterization) {
    const bool non_stubborn = !all_stubborn(game.g, game.p);
    auto found = exists_subvertable_assignment(game.g, game.p, opts);
    std::cout << "non_stubborn_vertex " << yes_no(non_stubborn) << "\n";
    std::cout << "subvertable_assignment " << (found ? found->str() : std::string("none")) << "\n";
    const bool holds = found.has_value() == non_stubborn;
    std::cout << "characterization " << yes_no(holds) << "\n";
    if (!holds) return kDomain;
  }
  if (beliefs_path.empty() && !characterization) {
    auto found = exists_subvertable_assignment(game.g, game.p, opts);
    std::cout << "subvertable_assignment " << (found ? found->str() : std::string("none")) << "\n";
  }
  return kOk;
}

int run_reduce(const std::string& cnf, const std::string& epsilon, std::int64_t N,
               const std::string& assignment, const std::string& out_dir, bool guided) {
  auto formula = parse_2p2n_3sat(io::read_file(cnf));
  auto inst = build_reduction(formula, Rational::parse(epsilon), N);
  std::optional<std::vector<bool>> truth;
  if (!assignment.empty()) {
    auto bits = io::parse_bits(io::read_file(assignment));
    if (static_cast<int>(bits.size()) != formula.variables) {
      fail(ErrorCode::ParseError, assignment + ": expected " + std::to_string(formula.variables) + " bits");
    }
    truth.emplace(bits.begin(), bits.end());
  }
  auto beliefs = proper_assignment(inst, truth);
  fs::create_directories(out_dir);
  io::write_file(fs::path(out_dir) / "graph.txt", io::format_graph(inst.graph));
  io::write_file(fs::path(out_dir) / "stubbornness.txt", io::format_stubbornness(inst.profile));
  io::write_file(fs::path(out_dir) / "beliefs.txt", io::format_bits(beliefs.bits));
  io::write_file(fs::path(out_dir) / "roles.txt", inst.roles_text());
  std::cout << "n " << inst.graph.n() << "\n";
  std::cout << "m " << inst.graph.m() << "\n";
  std::cout << "belief_ones " << beliefs.ones() << "\n";
  if (guided) {
    if (!truth) fail(ErrorCode::InvalidArgument, "--guided needs --assignment");
    auto run = guided_subversion_run(inst, *truth);
    io::write_file(fs::path(out_dir) / "trace.tsv", run.trace.tsv());
    std::cout << "guided_final_ones " << run.final_state.ones() << "\n";
    std::cout << "guided_equilibrium " << yes_no(run.reached_equilibrium) << "\n";
  }
  return kOk;
}

int run_verify(const GameFiles& files, const std::string& beliefs_path, Vertex swing,
               std::int64_t samples, std::uint64_t seed, Vertex max_n) {
  auto game = load_game(files);
  auto beliefs = load_beliefs(beliefs_path, game.g.n());
  const bool swing_ok = verify_swing(game.g, game.p, beliefs, swing);
  std::cout << "verify_swing " << yes_no(swing_ok) << "\n";
  if (!swing_ok) {
    std::cerr << "error: " << swing << " is not a swing vertex for these beliefs\n";
    return kDomain;
  }
  ScheduleMode mode;
  mode.max_n = max_n;
  mode.seed = seed;
  if (samples > 0 || game.g.n() > max_n) {
    mode.exhaustive = false;
    mode.samples = samples > 0 ? samples : 1000;
  }
  ScheduleStats stats;
  const bool all = check_all_schedules_subvert(game.g, game.p, beliefs, swing, mode, &stats);
  std::cout << "mode " << (mode.exhaustive ? "exhaustive" : "sampled") << "\n";
  std::cout << "all_schedules_subvert " << yes_no(all) << "\n";
  std::cout << "min_ones " << stats.min_ones << "\n";
  if (!all) {
    std::cerr << "error: some schedule does not keep the majority\n";
    return kDomain;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete preference games: subversion, dynamics, oracle, reductions"};
  app.require_subcommand(1);

  GameFiles files;
  std::string beliefs_path, initial_path, script_path, out_path, scheduler = "lowest-id";
  std::uint64_t seed = 0;
  std::int64_t max_steps = -1, samples = 0, N = 0;
  Vertex max_n = 0, swing = -1;
  int k = 3;
  bool show_log = false, characterization = false, exact_half = false, good = false, guided = false;
  std::optional<std::uint64_t> random_seed;
  std::string cnf, epsilon, assignment, out_dir;

  auto* subvert = app.add_subcommand("subvert", "compute a subvertable assignment and swing vertex");
  add_game_options(subvert, files);
  subvert->add_flag("--log", show_log, "print the decision and invariant log");
  subvert->add_option("--out", out_path, "also write the beliefs to this file");
  subvert->add_option("--max-n", max_n, "exhaustively check all schedules up to this n")->default_val(11);

  auto* simulate = app.add_subcommand("simulate", "run best-response dynamics and print the trace");
  add_game_options(simulate, files);
  simulate->add_option("--beliefs", beliefs_path, "belief file")->required()->check(CLI::ExistingFile);
  simulate->add_option("--initial", initial_path, "initial opinions (default: truthful)")->check(CLI::ExistingFile);
  simulate->add_option("--scheduler", scheduler, "lowest-id | highest-gain | prefer-one | random")
      ->default_val("lowest-id");
  simulate->add_option("--seed", seed, "seed for the random scheduler");
  simulate->add_option("--script", script_path, "scripted moves, one vertex per line")->check(CLI::ExistingFile);
  simulate->add_option("--max-steps", max_steps, "step limit (default 4n(maxdeg+1))");

  auto* bisect = app.add_subcommand("bisect", "k-minimal local search and bisection report");
  add_game_options(bisect, files);
  bisect->add_option("--k", k, "swap size bound")->default_val(3);
  bisect->add_option("--random-seed", random_seed, "start from a random bisection with this seed");
  bisect->add_flag("--good", good, "continue to a good bisection");

  auto* oracle = app.add_subcommand("oracle", "brute-force subvertability");
  add_game_options(oracle, files);
  oracle->add_option("--beliefs", beliefs_path, "decide this assignment")->check(CLI::ExistingFile);
  oracle->add_flag("--check-characterization", characterization, "compare against the stubbornness criterion");
  oracle->add_option("--max-n", max_n, "size bound")->default_val(15);
  oracle->add_flag("--exact-half", exact_half, "only assignments with exactly (n+1)/2 zeros");

  auto* reduce = app.add_subcommand("reduce", "build a hardness instance from a 2P2N-3SAT formula");
  reduce->add_option("--cnf", cnf, "DIMACS CNF file")->required()->check(CLI::ExistingFile);
  reduce->add_option("--epsilon", epsilon, "p/q in (0, 133/155)")->required();
  reduce->add_option("--N", N, "even clique padding")->required();
  reduce->add_option("--assignment", assignment, "variable truth values as one line of bits")
      ->check(CLI::ExistingFile);
  reduce->add_option("--out-dir", out_dir, "output directory")->default_val(".");
  reduce->add_flag("--guided", guided, "also run the guided subversion schedule");

  auto* verify = app.add_subcommand("verify", "check a swing vertex and all schedules");
  add_game_options(verify, files);
  verify->add_option("--beliefs", beliefs_path, "belief file")->required()->check(CLI::ExistingFile);
  verify->add_option("--swing", swing, "swing vertex")->required();
  verify->add_option("--samples", samples, "sampled schedules instead of exhaustive search");
  verify->add_option("--seed", seed, "seed for sampled schedules");
  verify->add_option("--max-n", max_n, "exhaustive search bound")->default_val(11);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*subvert) return run_subvert(files, show_log, out_path, max_n);
    if (*simulate) return run_simulate(files, beliefs_path, initial_path, scheduler, seed, script_path, max_steps);
    if (*bisect) return run_bisect(files, k, random_seed, good);
    if (*oracle) return run_oracle(files, beliefs_path, characterization, max_n, exact_half);
    if (*reduce) return run_reduce(cnf, epsilon, N, assignment, out_dir, guided);
    if (*verify) return run_verify(files, beliefs_path, swing, samples, seed, max_n);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidArgument;
    return usage ? kUsage : kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
