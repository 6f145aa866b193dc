#include "ramsey/arena.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ramsey/builders.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/painter.hpp"

namespace ramsey {

const char* outcome_str(Outcome o) {
    switch (o) {
        case Outcome::RedFamilyHit: return "red";
        case Outcome::BlueFamilyHit: return "blue";
        case Outcome::DoubleHit: return "double";
        case Outcome::Aborted: return "aborted";
    }
    return "?";
}

ColoredGraph::Limits limits_for_target(const TargetSpec& t) {
    ColoredGraph::Limits limits;
    limits.component_cap = std::max(limits.component_cap, 2 * t.n + 6);
    return limits;
}

int default_max_rounds(const TargetSpec& t) {
    if (t.blue == TargetSpec::BlueFamily::Path) return 3 * t.n - 4 + 10;
    if (t.blue == TargetSpec::BlueFamily::Connected && t.m >= t.n)
        return static_cast<int>(theorem5_round_bound(t.n, t.m)) + 10;
    if (t.blue == TargetSpec::BlueFamily::Connected) return 3 * t.n - 4 + 10;
    return 4 * (t.n + t.m) + 20;
}

GameResult play_game(BuilderStrategy& builder, PainterStrategy& painter, const TargetSpec& t,
                     int max_rounds, std::uint64_t seed) {
    if (max_rounds < 1) throw PreconditionError("play_game: max_rounds must be >= 1");
    t.validate();
    GameResult result;
    result.target = t;
    result.seed = seed;
    result.max_rounds = max_rounds;
    result.builder_id = builder.id();
    result.painter_id = painter.id();

    ColoredGraph g(limits_for_target(t));
    for (int round = 1; round <= max_rounds; ++round) {
        int u, v;
        try {
            std::tie(u, v) = builder.propose(g);
        } catch (const StageViolationError& e) {
            throw StrategyError(std::string("builder ") + builder.id() + ": " + e.what());
        }
        if (u < 0 || v < 0 || u == v)
            throw StrategyError("builder " + builder.id() + ": proposed loop or bad vertex");
        if (g.has_edge(u, v))
            throw StrategyError("builder " + builder.id() + ": proposed duplicate edge");
        const Color c = painter.choose(g, u, v);
        g.add_edge(u, v, c);
        builder.observe(g, u, v, c);
        painter.observe(g, u, v, c);
        result.transcript.push_back({round, u, v, c});
        const RefereeVerdict verdict = g.referee(t);
        if (verdict.over()) {
            result.rounds = round;
            result.outcome = verdict.red_hit && verdict.blue_hit ? Outcome::DoubleHit
                             : verdict.red_hit                   ? Outcome::RedFamilyHit
                                                                 : Outcome::BlueFamilyHit;
            return result;
        }
    }
    result.rounds = max_rounds;
    result.outcome = Outcome::Aborted;
    return result;
}

// ---------------------------------------------------------------- transcripts

void write_transcript(const GameResult& r, std::ostream& os) {
    os << "# format ramsey-transcript 1\n";
    os << "# red " << r.target.red_str() << "\n";
    os << "# blue " << r.target.blue_str() << "\n";
    os << "# builder " << r.builder_id << "\n";
    os << "# painter " << r.painter_id << "\n";
    os << "# seed " << r.seed << "\n";
    os << "# max_rounds " << r.max_rounds << "\n";
    os << "# outcome " << outcome_str(r.outcome) << "\n";
    os << "# rounds " << r.rounds << "\n";
    for (const auto& m : r.transcript)
        os << m.round << " " << m.u << " " << m.v << " " << color_char(m.color) << "\n";
}

void write_transcript(const GameResult& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open transcript for writing: " + path);
    write_transcript(r, out);
    if (!out) throw IoError("failed while writing transcript: " + path);
}

GameResult read_transcript(std::istream& is) {
    GameResult r;
    std::string red_s = "c3", blue_s = "path:3", outcome_s;
    int claimed_rounds = -1;
    std::string line;
    std::vector<MoveRecord> moves;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string key;
            ls >> key;
            if (key == "red") ls >> red_s;
            else if (key == "blue") ls >> blue_s;
            else if (key == "builder") ls >> r.builder_id;
            else if (key == "painter") ls >> r.painter_id;
            else if (key == "seed") ls >> r.seed;
            else if (key == "max_rounds") ls >> r.max_rounds;
            else if (key == "outcome") ls >> outcome_s;
            else if (key == "rounds") ls >> claimed_rounds;
            continue;
        }
        std::istringstream ls(line);
        MoveRecord m{};
        char c;
        if (!(ls >> m.round >> m.u >> m.v >> c) || (c != 'R' && c != 'B'))
            throw IoError("transcript: bad move line: " + line);
        m.color = c == 'R' ? Color::Red : Color::Blue;
        moves.push_back(m);
    }
    r.target = parse_target(red_s, blue_s);
    r.transcript = std::move(moves);

    // Replay through the referee and compare with the header's claim.
    ColoredGraph g(limits_for_target(r.target));
    Outcome replayed = Outcome::Aborted;
    int end_round = static_cast<int>(r.transcript.size());
    for (std::size_t i = 0; i < r.transcript.size(); ++i) {
        const auto& m = r.transcript[i];
        if (m.round != static_cast<int>(i) + 1)
            throw ReplayMismatchError("transcript: move rounds are not sequential");
        try {
            g.add_edge(m.u, m.v, m.color);
        } catch (const std::runtime_error& e) {
            throw ReplayMismatchError(std::string("transcript: illegal move: ") + e.what());
        }
        const RefereeVerdict verdict = g.referee(r.target);
        if (verdict.over()) {
            if (i + 1 != r.transcript.size())
                throw ReplayMismatchError("transcript: moves continue past game end");
            replayed = verdict.red_hit && verdict.blue_hit ? Outcome::DoubleHit
                       : verdict.red_hit                   ? Outcome::RedFamilyHit
                                                           : Outcome::BlueFamilyHit;
        }
    }
    r.rounds = end_round;
    r.outcome = replayed;
    if (claimed_rounds >= 0 && claimed_rounds != end_round)
        throw ReplayMismatchError("transcript: claimed rounds " + std::to_string(claimed_rounds) +
                                  " but replay gives " + std::to_string(end_round));
    if (!outcome_s.empty() && outcome_s != outcome_str(replayed))
        throw ReplayMismatchError("transcript: claimed outcome '" + outcome_s +
                                  "' but replay gives '" + outcome_str(replayed) + "'");
    return r;
}

GameResult read_transcript(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open transcript for reading: " + path);
    return read_transcript(in);
}

// --------------------------------------------------------------- target parse

TargetSpec parse_target(const std::string& red, const std::string& blue) {
    TargetSpec t;
    if (red == "c3") {
        t.red = TargetSpec::RedFamily::TriangleOnly;
    } else if (red == "codd") {
        t.red = TargetSpec::RedFamily::AllOddCycles;
    } else if (red.size() >= 2 && red[0] == 'p') {
        t.red = TargetSpec::RedFamily::RedPath;
        t.red_n = std::atoi(red.c_str() + 1);
    } else {
        throw InvalidTargetError("unknown red family: " + red);
    }
    auto parse_nm = [&](const std::string& s, bool needs_m) {
        std::istringstream ss(s);
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(ss, part, ':')) parts.push_back(part);
        if (parts.size() != (needs_m ? 3u : 2u))
            throw InvalidTargetError("bad blue target: " + s);
        t.n = std::atoi(parts[1].c_str());
        if (needs_m) t.m = std::atoi(parts[2].c_str());
        else t.m = t.n - 1;
    };
    if (blue.rfind("path:", 0) == 0) {
        t.blue = TargetSpec::BlueFamily::Path;
        parse_nm(blue, false);
    } else if (blue.rfind("con:", 0) == 0) {
        t.blue = TargetSpec::BlueFamily::Connected;
        parse_nm(blue, true);
    } else if (blue.rfind("aux:", 0) == 0) {
        t.blue = TargetSpec::BlueFamily::AuxiliaryG;
        parse_nm(blue, true);
    } else {
        throw InvalidTargetError("unknown blue family: " + blue);
    }
    t.validate();
    return t;
}

// ------------------------------------------------------------------ factories

std::unique_ptr<BuilderStrategy> make_builder(const std::string& name, const TargetSpec& t,
                                              std::uint64_t seed, int max_rounds) {
    if (name == "theorem3") return std::make_unique<Theorem3Builder>(t.n);
    if (name == "theorem5") return std::make_unique<Theorem5Builder>(t.n, t.m);
    if (name == "random") return std::make_unique<RandomBuilder>(seed);
    if (name == "sweep") {
        int k = 3;
        while (static_cast<long long>(k) * (k - 1) / 2 < max_rounds) ++k;
        return std::make_unique<SweepBuilder>(k);
    }
    throw InvalidTargetError("unknown builder: " + name);
}

std::unique_ptr<PainterStrategy> make_painter(const std::string& name, std::uint64_t seed) {
    if (name == "potential") return std::make_unique<PotentialPainter>();
    if (name == "greedy") return std::make_unique<GreedyPainter>();
    if (name == "random") return std::make_unique<RandomPainter>(seed);
    if (name == "allred") return std::make_unique<AllRedPainter>();
    if (name == "allblue") return std::make_unique<AllBluePainter>();
    throw InvalidTargetError("unknown painter: " + name);
}

// ---------------------------------------------------------------- worker pool

int arena_threads() {
    if (const char* env = std::getenv("RAMSEY_ARENA_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(int jobs, const std::function<void(int)>& fn) {
    const int workers = std::min(arena_threads(), std::max(jobs, 1));
    if (workers <= 1) {
        for (int i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::string first_error;
    auto run = [&] {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= jobs) return;
            try {
                fn(i);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (first_error.empty()) first_error = e.what();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (!first_error.empty()) throw InvariantViolation("worker failure: " + first_error);
}

}  // namespace ramsey
