#include "gameprob/analysis.hpp"

#include "support/random_program.hpp"

#include <doctest.h>

using namespace gameprob;

namespace {

Analysis run(const char* src, Bounds b = {}) {
    AnalysisOptions o;
    o.bounds = std::move(b);
    return analyze_source(src, o);
}

const char* const kExample2 =
    "n:expint10, abort:com |- new_int x := 0 in while (!x < n) do x := !x + 1; if (!x > 1) then abort else skip : com";
const char* const kExample3 =
    "f:com->expint10, abort:com |- new_int x:=0 in if (f(x:=!x+1)+!x>3) then skip else abort : com";

Rational q(long long n, long long d) { return Rational(n) / d; }

}  // namespace

TEST_CASE("behaviour counts") {
    CHECK(behaviour_count(1, 5) == 5);
    CHECK(behaviour_count(2, 3) == 7);
    CHECK(behaviour_count(3, 1) == 1);
    CHECK(behaviour_count(0, 4) == 1);
    CHECK(behaviour_count_after(1, 5, 2) == 3);
    CHECK(behaviour_count_after(2, 3, 0) == 7);
    CHECK(behaviour_count_after(2, 3, 2) == 1);
}

TEST_CASE("input domain sizes") {
    Analysis a = run(kExample3);
    for (const auto& p : a.plays) CHECK(id_size(p) == 50);
    Analysis b = run("n:expint10, m:expbool |- if m then n else 0 : expint10");
    for (const auto& p : b.plays) CHECK(id_size(p) == (p.inputs.size() == 2 ? 20 : 2));
}

TEST_CASE("example 3 per-play probabilities") {
    Analysis a = run(kExample3);
    std::vector<Rational> unsafe;
    for (const auto& sp : a.report.unsafe) unsafe.push_back(sp.probability.value);
    CHECK(unsafe == std::vector<Rational>{q(4, 50), q(3, 50), q(2, 50), q(1, 50), 0});
}

TEST_CASE("confidence grows with the while depth") {
    const Rational want[] = {q(1, 10), q(28, 100), q(496, 1000), q(6976, 10000)};
    for (int d = 0; d <= 3; ++d) {
        Bounds b;
        b.while_depth = d;
        Analysis a = run(kExample2, b);
        CHECK(a.report.confidence == want[d]);
        CHECK(a.report.confidence == 1 - a.report.grey);
    }
}

TEST_CASE("play probabilities lie in [0, 1] and sum to 1") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        AnalysisOptions o;
        o.bounds = testing::random_bounds(rng);
        o.play_cap = 20000;
        std::string src = testing::random_program(rng);
        try {
            Analysis a = analyze_source(src, o);
            Rational total = 0;
            for (const auto& p : a.plays) {
                Rational v = play_probability(p).value;
                CHECK(v >= 0);
                CHECK(v <= 1);
                total += v;
            }
            CHECK(total == 1);
            CHECK(a.report.success + a.report.failure + a.report.grey == 1);
        } catch (const ResourceLimit&) {
        }
    }
}

TEST_CASE("aggregate rejects an incomplete partition") {
    Analysis a = run("n:expint10, abort:com |- if (n >= 5) then skip else abort : com");
    PlaySets partial;
    partial.safe = a.sets.safe;
    CHECK_THROWS_AS(aggregate(partial), InternalError);
}

TEST_CASE("percent rendering") {
    CHECK(to_percent_string(q(1, 2)) == "50.0000%");
    CHECK(to_percent_string(q(1, 6)) == "16.6667%");
    CHECK(to_percent_string(0) == "0%");
    CHECK(to_percent_string(1) == "100%");
    CHECK(to_percent_string(q(1, 80000)) == "0.0013%");
    CHECK(to_percent_string(q(2, 3)) == "66.6667%");
    CHECK(to_fraction_string(q(10, 50)) == "1/5");
    CHECK(to_fraction_string(1) == "1");
}
