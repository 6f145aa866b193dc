#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <sstream>
#include <vector>

#include "ramsey/arena.hpp"
#include "ramsey/builders.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/painter.hpp"

using namespace ramsey;

namespace {

struct StuckBuilder final : BuilderStrategy {
    std::pair<int, int> propose(const ColoredGraph&) override { return {0, 1}; }
    std::unique_ptr<BuilderStrategy> clone() const override {
        return std::make_unique<StuckBuilder>(*this);
    }
    std::string id() const override { return "stuck"; }
};

}  // namespace

TEST_CASE("target parsing mirrors the CLI flags") {
    const TargetSpec a = parse_target("c3", "path:5");
    CHECK(a.red == TargetSpec::RedFamily::TriangleOnly);
    CHECK(a.n == 5);
    const TargetSpec b = parse_target("codd", "con:9:9");
    CHECK(b.red == TargetSpec::RedFamily::AllOddCycles);
    CHECK(b.m == 9);
    const TargetSpec c = parse_target("p3", "path:4");
    CHECK(c.red == TargetSpec::RedFamily::RedPath);
    CHECK(c.red_n == 3);
    const TargetSpec d = parse_target("codd", "aux:4:4");
    CHECK(d.blue == TargetSpec::BlueFamily::AuxiliaryG);
    CHECK_THROWS_AS(parse_target("c4", "path:5"), InvalidTargetError);
    CHECK_THROWS_AS(parse_target("c3", "con:3:99"), InvalidTargetError);
}

TEST_CASE("the loop referees after every painter reply") {
    Theorem3Builder b(5);
    PotentialPainter p;
    const GameResult r = play_game(b, p, TargetSpec::c3_vs_path(5), 20);
    CHECK(r.outcome != Outcome::Aborted);
    CHECK(r.rounds >= 10);  // ceil((phi+1)5 - 2phi)
    CHECK(r.rounds <= 11);  // 3n - 4
    CHECK(static_cast<int>(r.transcript.size()) == r.rounds);
}

TEST_CASE("random builder vs potential painter on the auxiliary game") {
    const TargetSpec t = TargetSpec::codd_vs_aux(4, 4);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        RandomBuilder b(seed);
        PotentialPainter p;
        const GameResult r = play_game(b, p, t, 200, seed);
        CHECK(r.outcome != Outcome::RedFamilyHit);
        CHECK(r.outcome != Outcome::DoubleHit);
        if (r.outcome == Outcome::BlueFamilyHit) CHECK(r.rounds >= 9);  // ceil(2phi+5)
    }
}

TEST_CASE("illegal proposals are attributed to the builder") {
    StuckBuilder b;
    AllRedPainter p;
    // StuckBuilder re-proposes {0,1} forever; the second round must throw.
    CHECK_THROWS_AS(play_game(b, p, TargetSpec::c3_vs_path(4), 5), StrategyError);
}

TEST_CASE("transcript round trip and replay validation") {
    RandomBuilder b(99);
    RandomPainter p(99);
    const GameResult r = play_game(b, p, TargetSpec::c3_vs_path(4), 8, 99);
    std::ostringstream out;
    write_transcript(r, out);

    std::istringstream in(out.str());
    const GameResult back = read_transcript(in);
    CHECK(back.rounds == r.rounds);
    CHECK(back.outcome == r.outcome);
    CHECK(back.transcript.size() == r.transcript.size());
    CHECK(back.seed == r.seed);

    // Flip the final move's color: outcome or round count must disagree.
    std::string text = out.str();
    const auto pos = text.find_last_of("RB");
    text[pos] = text[pos] == 'R' ? 'B' : 'R';
    std::istringstream bad(text);
    CHECK_THROWS_AS(read_transcript(bad), ReplayMismatchError);
}

TEST_CASE("empty transcript stays valid") {
    GameResult r;
    r.target = TargetSpec::c3_vs_path(4);
    r.outcome = Outcome::Aborted;
    r.rounds = 0;
    r.max_rounds = 0;
    r.builder_id = "none";
    r.painter_id = "none";
    std::ostringstream out;
    write_transcript(r, out);
    std::istringstream in(out.str());
    const GameResult back = read_transcript(in);
    CHECK(back.rounds == 0);
    CHECK(back.outcome == Outcome::Aborted);
}

TEST_CASE("identical seeds produce byte-identical transcripts") {
    auto run = [] {
        RandomBuilder b(4242);
        RandomPainter p(777);
        const GameResult r = play_game(b, p, TargetSpec::codd_vs_aux(4, 4), 60, 4242);
        std::ostringstream out;
        write_transcript(r, out);
        return out.str();
    };
    CHECK(run() == run());
}

TEST_CASE("factories cover the CLI names") {
    const TargetSpec t = TargetSpec::c3_vs_path(5);
    CHECK(make_builder("theorem3", t, 1, 20)->id() == "theorem3");
    CHECK(make_builder("random", t, 1, 20)->id() == "random");
    CHECK(make_painter("potential", 1)->id() == "potential");
    CHECK(make_painter("allblue", 1)->id() == "allblue");
    CHECK_THROWS_AS(make_builder("nope", t, 1, 20), InvalidTargetError);
    const TargetSpec c = TargetSpec::codd_vs_con(9, 9);
    CHECK(make_builder("theorem5", c, 1, 40)->id() == "theorem5");
}

TEST_CASE("default round limits leave slack above the proven bounds") {
    CHECK(default_max_rounds(TargetSpec::c3_vs_path(5)) == 3 * 5 - 4 + 10);
    CHECK(default_max_rounds(TargetSpec::codd_vs_con(9, 9)) == 33 + 10);
}

TEST_CASE("parallel_for covers every index exactly once") {
    std::vector<std::atomic<int>> hits(503);
    parallel_for(503, [&](int i) { hits[i]++; });
    for (auto& h : hits) CHECK(h.load() == 1);
}
