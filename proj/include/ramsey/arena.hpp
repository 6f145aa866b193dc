#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "ramsey/board.hpp"
#include "ramsey/strategy.hpp"

namespace ramsey {

enum class Outcome { RedFamilyHit, BlueFamilyHit, DoubleHit, Aborted };

const char* outcome_str(Outcome o);

struct MoveRecord {
    int round;
    int u, v;
    Color color;
};

struct GameResult {
    int rounds = 0;
    Outcome outcome = Outcome::Aborted;
    std::vector<MoveRecord> transcript;
    std::string builder_id;
    std::string painter_id;
    std::uint64_t seed = 0;
    TargetSpec target;
    int max_rounds = 0;
};

// Board limits sized for a target: the caps stay at their defaults for small
// games and scale with n so long strategy games never trip them.
ColoredGraph::Limits limits_for_target(const TargetSpec& t);

// 3n-4 plus slack for path targets; the Turan-phase bound plus slack for
// connected ones.
int default_max_rounds(const TargetSpec& t);

// Alternating proposal/coloring loop with the referee evaluated after every
// Painter reply. Illegal proposals raise StrategyError. Deterministic given
// the strategies' seeds.
GameResult play_game(BuilderStrategy& builder, PainterStrategy& painter, const TargetSpec& t,
                     int max_rounds, std::uint64_t seed = 0);

// Transcript files: `# key value` headers, then `<round> <u> <v> <R|B>`
// per move. Reading replays the moves through the referee and throws
// ReplayMismatchError when the file's claimed outcome or round count
// disagrees.
void write_transcript(const GameResult& r, const std::string& path);
GameResult read_transcript(const std::string& path);
void write_transcript(const GameResult& r, std::ostream& os);
GameResult read_transcript(std::istream& is);

// Parses CLI-style target halves, e.g. ("c3", "path:5") or ("codd", "aux:4:4").
TargetSpec parse_target(const std::string& red, const std::string& blue);

// Strategy factories keyed by the CLI names. Builders that need the target
// size read it from `t`.
std::unique_ptr<BuilderStrategy> make_builder(const std::string& name, const TargetSpec& t,
                                              std::uint64_t seed, int max_rounds);
std::unique_ptr<PainterStrategy> make_painter(const std::string& name, std::uint64_t seed);

// Worker count: RAMSEY_ARENA_THREADS when set, hardware concurrency
// otherwise.
int arena_threads();

// Runs fn(0..jobs-1) on the worker pool; rethrows the first failure.
void parallel_for(int jobs, const std::function<void(int)>& fn);

// Named verification suites; each prints one line per check with expected
// and actual values and returns overall success.
bool verify_suite(const std::string& name, std::ostream& os);
const std::vector<std::string>& suite_names();

}  // namespace ramsey
