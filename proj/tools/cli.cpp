#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "play_session.hpp"
#include "spinlab/angle.hpp"
#include "spinlab/bell.hpp"
#include "spinlab/boxes.hpp"
#include "spinlab/errors.hpp"
#include "spinlab/io.hpp"
#include "spinlab/measure.hpp"
#include "spinlab/quoin.hpp"

namespace spinlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  bool degrees = false;
};

AngleUnit unit_of(const RunConfig& cfg) { return cfg.degrees ? AngleUnit::degrees : AngleUnit::radians; }

double angle_arg(const std::string& text, const RunConfig& cfg, const char* what) {
  const auto v = parse_angle(text, unit_of(cfg));
  if (!v) throw UsageError(std::string("malformed angle for ") + what + ": '" + text + "'");
  return *v;
}

Json vec_json(Vec3 v) { return Json::array({v.x, v.y, v.z}); }

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& node, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    return;
  }
  if (node.is_array()) {
    const bool scalars = std::all_of(node.begin(), node.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalars) {
      const bool strings = !node.empty() && node[0].is_string();
      std::string joined;
      for (std::size_t i = 0; i < node.size(); ++i) joined += (i ? (strings ? " | " : " ") : "") + scalar_text(node[i]);
      rows.emplace_back(prefix, joined);
      return;
    }
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "[" + std::to_string(i) + "]", rows);
    return;
  }
  rows.emplace_back(prefix, scalar_text(node));
}

void render_text(const Json& report, std::ostream& os) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
}

void render_csv(const Json& report, std::ostream& os) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  os << "key,value\n";
  for (const auto& [k, v] : rows) {
    const bool quote = v.find_first_of(",\" ") != std::string::npos;
    if (!quote) {
      os << k << ',' << v << '\n';
      continue;
    }
    std::string escaped;
    for (char c : v) escaped += c == '"' ? std::string("\"\"") : std::string(1, c);
    os << k << ",\"" << escaped << "\"\n";
  }
}

int emit(Json report, const RunConfig& cfg, Streams io, bool ok) {
  report["verdict"] = ok ? "pass" : "fail";
  if (cfg.format == "json") {
    io.out << report.dump(2) << '\n';
    render_text(report, io.err);
  } else if (cfg.format == "csv") {
    render_csv(report, io.out);
  } else {
    render_text(report, io.out);
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

Json base_report(const char* command, const RunConfig& cfg) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["seed"] = cfg.seed;
  return j;
}

// ---------------------------------------------------------------------------

struct ProjectArgs {
  std::string theta;
  std::optional<std::uint64_t> trials;
};

int cmd_project(const ProjectArgs& a, const RunConfig& cfg, Streams io) {
  const double theta = angle_arg(a.theta, cfg, "--theta");
  const SGSetup setup = SGSetup::in_xz_plane(theta);
  const auto probs = projection_probabilities(setup);
  Json r = base_report("project", cfg);
  r["theta"] = theta;
  r["p_plus"] = probs.p_plus;
  r["p_minus"] = probs.p_minus;
  r["mean"] = expected_outcome(setup);
  r["classical_projection"] = classical_projection(setup);
  bool ok = true;
  if (a.trials) {
    if (*a.trials == 0) throw UsageError("--trials must be at least 1");
    const OutcomeSample s = sample_outcomes(setup, *a.trials, cfg.seed);
    const double band = binomial_band(probs.p_plus, s.n);
    const bool in_band = std::abs(s.fraction_plus() - probs.p_plus) <= band;
    ok = in_band;
    r["sample"] = {{"n", s.n},
                   {"n_plus", s.n_plus},
                   {"n_minus", s.n_minus},
                   {"fraction_plus", s.fraction_plus()},
                   {"mean", s.mean()},
                   {"band_3sigma", band},
                   {"within_band", in_band}};
  }
  return emit(std::move(r), cfg, io, ok);
}

// ---------------------------------------------------------------------------

struct BellArgs {
  std::string kind;
  std::string plane;
  std::string a = "0";
  std::string b = "0";
  std::optional<std::uint64_t> trials;
};

int cmd_bell(const BellArgs& args, const RunConfig& cfg, Streams io) {
  const auto kind = parse_bell_kind(args.kind);
  if (!kind) throw UsageError("unknown Bell state '" + args.kind + "' (singlet, psi+, phi-, phi+)");
  const auto sym = symmetry_plane(*kind);
  Plane plane = sym.value_or(Plane::xz);
  if (!args.plane.empty()) {
    const auto p = parse_plane(args.plane);
    if (!p) throw UsageError("unknown plane '" + args.plane + "' (xy, yz, xz)");
    if (sym && *p != *sym) {
      throw UsageError(std::string(to_string(*kind)) + " has symmetry plane " +
                       std::string(to_string(*sym)) + ", not " + std::string(to_string(*p)));
    }
    plane = *p;
  }
  const double a = angle_arg(args.a, cfg, "--a");
  const double b = angle_arg(args.b, cfg, "--b");
  const Vec3 a_dir = in_plane_direction(plane, a);
  const Vec3 b_dir = in_plane_direction(plane, b);
  const JointProbabilities jp = joint_probabilities(*kind, a_dir, b_dir);
  const JointProbabilities closed = closed_form_joint(*kind, std::acos(std::clamp(dot(a_dir, b_dir), -1.0, 1.0)));
  double closed_dev = 0.0;
  for (std::size_t i = 0; i < 4; ++i) closed_dev = std::max(closed_dev, std::abs(jp.as_array()[i] - closed.as_array()[i]));

  Json r = base_report("bell", cfg);
  r["kind"] = to_string(*kind);
  r["plane"] = to_string(plane);
  r["a"] = a;
  r["b"] = b;
  r["a_dir"] = vec_json(a_dir);
  r["b_dir"] = vec_json(b_dir);
  r["p_pp"] = jp.p_pp;
  r["p_pm"] = jp.p_pm;
  r["p_mp"] = jp.p_mp;
  r["p_mm"] = jp.p_mm;
  r["correlator"] = jp.correlator();
  r["bob_given_alice_plus"] = conditional_average(*kind, a_dir, b_dir, +1);
  r["bob_given_alice_minus"] = conditional_average(*kind, a_dir, b_dir, -1);
  r["closed_form_deviation"] = closed_dev;
  bool ok = closed_dev <= kExactTol;
  if (args.trials) {
    if (*args.trials == 0) throw UsageError("--trials must be at least 1");
    const JointSample s = sample_joint(*kind, a_dir, b_dir, *args.trials, cfg.seed);
    const double expected = conditional_average(*kind, a_dir, b_dir, +1);
    const double alice_plus_trials = static_cast<double>(s.counts[0] + s.counts[1]);
    const double band = 3.0 * std::sqrt(std::max(0.0, 1.0 - expected * expected) / alice_plus_trials);
    const double empirical = s.conditional_bob_given_alice_plus();
    const bool in_band = std::abs(empirical - expected) <= band;
    ok = ok && in_band;
    r["sample"] = {{"n", s.n},
                   {"counts", s.counts},
                   {"bob_given_alice_plus", empirical},
                   {"band_3sigma", band},
                   {"within_band", in_band}};
  }
  return emit(std::move(r), cfg, io, ok);
}

// ---------------------------------------------------------------------------

struct ChshArgs {
  std::string source = "quantum";
  std::string kind = "singlet";
  std::string plane;
  std::optional<std::string> a, a_prime, b, b_prime;
  int scan = 180;
};

Json box_report(const BehaviorBox& box) {
  Json j;
  const ChshResult c = chsh_value(box);
  const NoSignallingReport ns = no_signalling_check(box);
  const ConservationVerdict cv = conservation_filter(box);
  j["chsh"] = c.value;
  j["correlators"] = {{"ab", c.correlators[0][0]},
                      {"ab'", c.correlators[0][1]},
                      {"a'b", c.correlators[1][0]},
                      {"a'b'", c.correlators[1][1]}};
  j["negative_term"] = std::string(c.negative_x ? "a'" : "a") + (c.negative_y ? "b'" : "b");
  j["no_signalling"] = ns.no_signalling;
  j["no_signalling_violations"] = ns.violations;
  j["conservation"] = to_string(cv.status);
  j["conservation_trace"] = cv.trace;
  j["box"] = Json::parse(box_to_string(box));
  return j;
}

int cmd_chsh(const ChshArgs& args, const RunConfig& cfg, Streams io) {
  const bool any_angle = args.a || args.a_prime || args.b || args.b_prime;
  Json r = base_report("chsh", cfg);
  r["source"] = args.source;
  bool ok = true;
  if (args.source == "prbox") {
    if (any_angle) throw UsageError("the PR-box takes no measurement angles");
    Json body = box_report(pr_box());
    ok = body["no_signalling"].get<bool>() && body["chsh"].get<double>() == 4.0 &&
         body["conservation"] == "inconsistent";
    r.update(body);
  } else if (args.source == "lhv") {
    if (any_angle) throw UsageError("the local enumeration takes no measurement angles");
    const LhvResult l = lhv_max_chsh();
    r["chsh"] = l.value;
    r["strategies_checked"] = l.strategies_checked;
    r["maximizing_count"] = l.maximizing_count;
    r["witness"] = {{"alice", l.witness.alice}, {"bob", l.witness.bob}};
    ok = l.value == 2.0;
  } else if (args.source == "quantum") {
    const auto kind = parse_bell_kind(args.kind);
    if (!kind) throw UsageError("unknown Bell state '" + args.kind + "'");
    const auto sym = symmetry_plane(*kind);
    Plane plane = sym.value_or(Plane::xz);
    if (!args.plane.empty()) {
      const auto p = parse_plane(args.plane);
      if (!p || (sym && *p != *sym)) throw UsageError("invalid plane '" + args.plane + "' for " + args.kind);
      plane = *p;
    }
    if (args.scan < 1) throw UsageError("--scan must be at least 1");
    const double pi = std::numbers::pi;
    const double a0 = args.a ? angle_arg(*args.a, cfg, "--a") : 0.0;
    const double a1 = args.a_prime ? angle_arg(*args.a_prime, cfg, "--a-prime") : pi / 2.0;
    const double b0 = args.b ? angle_arg(*args.b, cfg, "--b") : pi / 4.0;
    const double b1 = args.b_prime ? angle_arg(*args.b_prime, cfg, "--b-prime") : 3.0 * pi / 4.0;
    const BehaviorBox box = quantum_box(*kind, {in_plane_direction(plane, a0), in_plane_direction(plane, a1)},
                                        {in_plane_direction(plane, b0), in_plane_direction(plane, b1)});
    r["kind"] = to_string(*kind);
    r["plane"] = to_string(plane);
    r["angles"] = {{"a", a0}, {"a'", a1}, {"b", b0}, {"b'", b1}};
    Json body = box_report(box);
    const double bound = 2.0 * std::numbers::sqrt2;
    const ChshScanResult scan = tsirelson_scan(*kind, plane, args.scan);
    body["scan"] = {{"grid", args.scan},
                    {"points", scan.points},
                    {"max", scan.max_value},
                    {"best_alpha", scan.best_alpha},
                    {"best_beta", scan.best_beta},
                    {"tsirelson_bound", bound},
                    {"within_bound", scan.max_value <= bound + kScanTol}};
    ok = body["no_signalling"].get<bool>() && body["chsh"].get<double>() <= bound + kScanTol &&
         scan.max_value <= bound + kScanTol;
    r.update(body);
  } else {
    throw UsageError("unknown source '" + args.source + "' (quantum, prbox, lhv)");
  }
  return emit(std::move(r), cfg, io, ok);
}

// ---------------------------------------------------------------------------

struct GameArgs {
  std::string strategy = "quoin";
  std::uint64_t games = 10000;
  std::string mechanics = "quoin";
  std::string transcript;
  std::string input;
};

GameConfig game_config(const GameArgs& args) {
  GameConfig config;
  if (args.mechanics == "quoin") {
    config.mechanics = QuoinMechanics::quoin();
  } else if (args.mechanics == "quantum") {
    config.mechanics = QuoinMechanics::quantum_coin();
  } else {
    throw UsageError("unknown mechanics '" + args.mechanics + "' (quoin, quantum)");
  }
  return config;
}

Strategy strategy_arg(const GameArgs& args, const GameConfig& config) {
  const auto s = parse_strategy(args.strategy);
  if (!s) throw UsageError("unknown strategy '" + args.strategy + "' (quoin, random, classical:K)");
  if (s->kind == StrategyKind::classical_bits && (s->k < 0 || s->k > config.lanes)) {
    throw UsageError("classical:K needs 0 <= K <= " + std::to_string(config.lanes));
  }
  return *s;
}

int cmd_game_simulate(const GameArgs& args, const RunConfig& cfg, Streams io) {
  const GameConfig config = game_config(args);
  const Strategy strategy = strategy_arg(args, config);
  if (args.games == 0) throw UsageError("--games must be at least 1");
  const MonteCarloSummary s = monte_carlo(strategy, args.games, cfg.seed, config);
  if (!args.transcript.empty()) {
    std::ofstream f(args.transcript);
    if (!f) throw UsageError("cannot open transcript file '" + args.transcript + "'");
    write_game_records(f, simulate_records(strategy, args.games, cfg.seed, config));
  }
  Json r = base_report("game simulate", cfg);
  r["strategy"] = strategy.name();
  r["mechanics"] = args.mechanics;
  r["games"] = s.games;
  r["wins"] = s.wins;
  r["win_rate"] = s.win_rate;
  r["mean_chips_net"] = s.mean_chips_net;
  r["ci_halfwidth"] = s.ci_halfwidth;
  return emit(std::move(r), cfg, io, true);
}

int cmd_game_play(const GameArgs& args, const RunConfig& cfg, Streams io) {
  const GameConfig config = game_config(args);
  const Strategy strategy = strategy_arg(args, config);
  std::ifstream script;
  std::istream* in = &io.in;
  if (!args.input.empty()) {
    script.open(args.input);
    if (!script) throw UsageError("cannot open input script '" + args.input + "'");
    in = &script;
  } else if (!io.interactive) {
    io.err << "game play needs an interactive terminal (or --input SCRIPT)\n";
    return kExitUsage;
  }
  // The session talks on stderr when stdout carries machine-readable output.
  std::ostream& talk = cfg.format == "text" ? io.out : io.err;
  PlaySession session(strategy, config, dealer_seed_for(cfg.seed), mech_seed_for(cfg.seed));
  const std::optional<GameRecord> rec = session.run(*in, talk);
  if (!rec) {
    io.err << "game abandoned before a guess was made\n";
    return kExitVerificationFailed;
  }
  Json r = base_report("game play", cfg);
  r.update(Json::parse(game_record_to_json(*rec).dump()));
  r["schema"] = 1;
  if (cfg.format == "text") return kExitOk;  // the session already printed the ledger
  return emit(std::move(r), cfg, io, true);
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"spinlab: qubit, Bell-state, CHSH, PR-box and quoin-game calculations"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "RNG seed (default " + std::to_string(kDefaultSeed) + ")");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--degrees", cfg.degrees, "Read plain-number angles as degrees");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--degrees", cfg.degrees, "Read plain-number angles as degrees");
  };

  ProjectArgs project;
  auto* p = app.add_subcommand("project", "Single-qubit projection probabilities and sampling");
  p->add_option("--theta", project.theta, "Angle between preparation and measurement")->required();
  p->add_option("--trials", project.trials, "Monte Carlo trials");
  add_common(p);

  BellArgs bell;
  auto* b = app.add_subcommand("bell", "Bell-state joint probabilities");
  b->add_option("--kind", bell.kind, "singlet | psi+ | phi- | phi+")->required();
  b->add_option("--plane", bell.plane, "Measurement plane (xy, yz, xz)");
  b->add_option("--a", bell.a, "Alice's in-plane angle");
  b->add_option("--b", bell.b, "Bob's in-plane angle");
  b->add_option("--trials", bell.trials, "Monte Carlo trials");
  add_common(b);

  ChshArgs chsh;
  auto* c = app.add_subcommand("chsh", "CHSH analysis of quantum, PR-box and local boxes");
  c->add_option("--source", chsh.source, "quantum | prbox | lhv");
  c->add_option("--kind", chsh.kind, "Bell state for the quantum source");
  c->add_option("--plane", chsh.plane, "Measurement plane for the quantum source");
  c->add_option("--a", chsh.a, "Alice setting a");
  c->add_option("--a-prime", chsh.a_prime, "Alice setting a'");
  c->add_option("--b", chsh.b, "Bob setting b");
  c->add_option("--b-prime", chsh.b_prime, "Bob setting b'");
  c->add_option("--scan", chsh.scan, "Grid size N for the N x N angle scan");
  add_common(c);

  GameArgs game;
  auto* g = app.add_subcommand("game", "Quoin guessing game");
  g->require_subcommand(1);
  auto* gs = g->add_subcommand("simulate", "Monte Carlo over many games");
  auto* gp = g->add_subcommand("play", "Play one game as Alice");
  for (auto* sub : {gs, gp}) {
    sub->add_option("--strategy", game.strategy, "quoin | random | classical:K");
    sub->add_option("--mechanics", game.mechanics, "quoin | quantum");
    add_common(sub);
  }
  gs->add_option("--games", game.games, "Number of games");
  gs->add_option("--transcript", game.transcript, "Write one JSON GameRecord per line to FILE");
  gp->add_option("--input", game.input, "Read session commands from FILE instead of the terminal");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, io.out, io.err);
    return kExitUsage;
  }

  try {
    if (p->parsed()) return cmd_project(project, cfg, io);
    if (b->parsed()) return cmd_bell(bell, cfg, io);
    if (c->parsed()) return cmd_chsh(chsh, cfg, io);
    if (gs->parsed()) return cmd_game_simulate(game, cfg, io);
    if (gp->parsed()) return cmd_game_play(game, cfg, io);
  } catch (const UsageError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spinlab::cli
