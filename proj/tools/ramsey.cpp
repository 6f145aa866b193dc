// Command-line front end: play single games, run the exact solver, print
// round bounds, and drive the verification suites.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ramsey/arena.hpp"
#include "ramsey/builders.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/golden.hpp"
#include "ramsey/painter.hpp"
#include "ramsey/solver.hpp"

namespace {

int cmd_play(const std::string& red, const std::string& blue, const std::string& builder_name,
             const std::string& painter_name, std::uint64_t seed, int max_rounds,
             const std::string& transcript_path) {
    const ramsey::TargetSpec target = ramsey::parse_target(red, blue);
    if (max_rounds <= 0) max_rounds = ramsey::default_max_rounds(target);
    auto builder = ramsey::make_builder(builder_name, target, seed, max_rounds);
    auto painter = ramsey::make_painter(painter_name, seed);
    const ramsey::GameResult result =
        ramsey::play_game(*builder, *painter, target, max_rounds, seed);
    std::cout << "target: " << target.str() << "\n";
    std::cout << "builder: " << result.builder_id << "  painter: " << result.painter_id
              << "  seed: " << result.seed << "\n";
    std::cout << "outcome: " << ramsey::outcome_str(result.outcome)
              << "  rounds: " << result.rounds << "\n";
    if (!transcript_path.empty()) {
        ramsey::write_transcript(result, transcript_path);
        std::cout << "transcript: " << transcript_path << "\n";
    }
    return result.outcome == ramsey::Outcome::Aborted ? 2 : 0;
}

int cmd_solve(const std::string& red, const std::string& blue, int budget, int board,
              const std::string& emit_path) {
    const ramsey::TargetSpec target = ramsey::parse_target(red, blue);
    ramsey::SolveOptions opt;
    opt.board = board;
    ramsey::Solver solver(target, opt);
    const ramsey::SolveResult result = solver.solve(budget);
    std::cout << "target: " << target.str();
    if (board > 0) std::cout << "  board: K_" << board;
    std::cout << "  budget: " << budget << "\n";
    if (result.value) {
        std::cout << "value: " << *result.value << "\n";
    } else {
        std::cout << "value: above budget\n";
    }
    std::cout << "states expanded: " << result.stats.expanded
              << "  table hits: " << result.stats.tt_hits << "\n";
    if (!emit_path.empty()) {
        if (!result.value) {
            std::cerr << "cannot emit a strategy: no value within budget\n";
            return 2;
        }
        const ramsey::StrategyTree tree = solver.extract_strategy(result);
        std::ofstream out(emit_path);
        if (!out) throw ramsey::IoError("cannot open " + emit_path);
        tree.write(out);
        std::cout << "strategy tree (depth " << tree.depth() << "): " << emit_path << "\n";
    }
    return 0;
}

int cmd_bound(int n, int m) {
    std::cout << "lower bound ceil(phi*n + m - 2*phi + 1): " << ramsey::lower_bound(n, m)
              << "  (exact " << ramsey::lower_bound_exact(n, m).str() << ")\n";
    if (m >= n) {
        const int k = ramsey::compute_k(n, m);
        std::cout << "turan completion upper bound 3n + C(k,2) - k - 3: "
                  << ramsey::theorem5_round_bound(n, m) << "  (k = " << k << ")\n";
    } else {
        std::cout << "path upper bound 3n - 4: " << 3 * n - 4 << "\n";
    }
    const ramsey::GoldenNumber corollary_low(n - 2, n);  // (phi+1)n - 2phi
    std::cout << "path-target endpoints: " << corollary_low.ceil_value()
              << " <= rounds(c3 vs path:" << n << ") <= " << 3 * n - 4 << "\n";
    return 0;
}

int cmd_verify(const std::string& suite) {
    bool ok = true;
    if (suite == "all") {
        for (const auto& name : ramsey::suite_names()) ok = ramsey::verify_suite(name, std::cout) && ok;
    } else {
        ok = ramsey::verify_suite(suite, std::cout);
    }
    std::cout << (ok ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Builder-Painter online size Ramsey games: engine, strategies, exact solver"};
    app.require_subcommand(1);

    std::string red = "c3", blue = "path:5";
    std::string builder_name = "theorem3", painter_name = "potential";
    std::uint64_t seed = 0;
    int max_rounds = 0;
    std::string transcript_path;

    auto* play = app.add_subcommand("play", "play one game");
    play->add_option("--red", red, "red target: c3 | codd");
    play->add_option("--blue", blue, "blue target: path:N | con:N:M | aux:N:M");
    play->add_option("--builder", builder_name, "theorem3 | theorem5 | random");
    play->add_option("--painter", painter_name, "potential | greedy | random | allred | allblue");
    play->add_option("--seed", seed, "seed for randomized strategies");
    play->add_option("--max-rounds", max_rounds, "abort after this many rounds");
    play->add_option("--transcript", transcript_path, "write the move list to this file");

    int budget = 8, board = 0;
    std::string emit_path;
    auto* solve = app.add_subcommand("solve", "exact minimax value of a small game");
    solve->add_option("--red", red, "red target: c3 | p3");
    solve->add_option("--blue", blue, "blue target: path:N");
    solve->add_option("--budget", budget, "round budget")->required();
    solve->add_option("--board", board, "restrict Builder to vertices 0..V-1");
    solve->add_option("--emit-strategy", emit_path, "write the winning tree to this file");

    int n = 5, m = 4;
    auto* bound = app.add_subcommand("bound", "print proven round bounds for (n, m)");
    bound->add_option("--n", n, "vertex target")->required();
    bound->add_option("--m", m, "edge target")->required();

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "golden | board | painter | builder3 | builder5 | solver-exact | bounds | all");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(play))
            return cmd_play(red, blue, builder_name, painter_name, seed, max_rounds,
                            transcript_path);
        if (app.got_subcommand(solve)) return cmd_solve(red, blue, budget, board, emit_path);
        if (app.got_subcommand(bound)) return cmd_bound(n, m);
        if (app.got_subcommand(verify)) return cmd_verify(suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
