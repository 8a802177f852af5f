#include "gameprob/explorer.hpp"
#include "gameprob/model.hpp"
#include "gameprob/parser.hpp"

#include "support/random_program.hpp"

#include <doctest.h>

using namespace gameprob;

namespace {

SymbolicModel model_of(const char* src, Bounds b = {}) { return build_model(typecheck(parse(src)), b); }

}  // namespace

TEST_CASE("skip has a single run/done play") {
    SymbolicModel m = model_of("|- skip : com");
    auto plays = enumerate_play_list(m);
    REQUIRE(plays.size() == 1);
    CHECK(format_play(plays[0]) == "SAFE | run;done | true |  | ");
    CHECK(m.accepting().size() == 1);
    CHECK(m.failing().empty());
}

TEST_CASE("abort reaches a failing state") {
    SymbolicModel m = model_of("abort:com |- abort : com");
    CHECK(m.failing().size() == 1);
    CHECK(m.accepting().empty());
}

TEST_CASE("branches carry complementary guards") {
    SymbolicModel m = model_of("n:expint10, abort:com |- if (n >= 5) then skip else abort : com");
    int splits = 0;
    for (StateId s = 0; s < m.state_count(); ++s) {
        const auto& out = m.outgoing(s);
        if (out.size() != 2) continue;
        ++splits;
        const Edge& a = m.edges()[out[0]];
        const Edge& b = m.edges()[out[1]];
        REQUIRE(a.guard.atoms().size() == 1);
        REQUIRE(b.guard.atoms().size() == 1);
        CHECK(a.guard.atoms()[0].negated() == b.guard.atoms()[0]);
        CHECK(a.move.is_internal());
    }
    CHECK(splits == 1);
}

TEST_CASE("random models are acyclic") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        std::string src = testing::random_program(rng);
        Bounds b = testing::random_bounds(rng);
        BuildLimits limits;
        limits.max_leaves = 20000;
        try {
            CHECK(build_model(typecheck(parse(src)), b, limits).is_acyclic());
        } catch (const ResourceLimit&) {
        }
    }
}

TEST_CASE("undefined function strategy has sum n^k plays") {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 1; d <= 4; ++d) {
            SymbolicModel m = undefined_function_strategy(std::vector<BaseType>(n, BaseType::com()), BaseType::integer(4), d);
            long long want = 0, p = 1;
            for (int k = 0; k < d; ++k, p *= n) want += p;
            CHECK(static_cast<long long>(enumerate_plays(m).size()) == want);
        }
    }
}

TEST_CASE("a function with bound 1 never calls its arguments") {
    SymbolicModel m = undefined_function_strategy({BaseType::com(), BaseType::integer(3)}, BaseType::com(), 1);
    auto plays = enumerate_play_list(m);
    REQUIRE(plays.size() == 1);
    CHECK(plays[0].calls.size() == 1);
    CHECK(plays[0].calls[0].arg_calls.empty());
    CHECK(plays[0].calls[0].returned);
}

TEST_CASE("argument calls are recorded in order") {
    SymbolicModel m = undefined_function_strategy({BaseType::com(), BaseType::com()}, BaseType::integer(2), 3);
    auto plays = enumerate_play_list(m);
    CHECK(plays.size() == 7);
    std::set<std::vector<int>> patterns;
    for (const auto& p : plays) patterns.insert(p.calls.at(0).arg_calls);
    CHECK(patterns.size() == 7);
    CHECK(patterns.count({2, 1}) == 1);
}

TEST_CASE("bounded while cuts on the extra true guard") {
    TypedTerm t = typecheck(parse("n:expint10 |- new_int x := 0 in while (!x < n) do x := !x + 1 : com"));
    for (int d = 0; d <= 3; ++d) {
        PlaySets s = enumerate_plays(bounded_while_strategy(t, d));
        CHECK(s.grey.size() == 1);
        CHECK(s.safe.size() == static_cast<std::size_t>(d + 1));
        CHECK(s.grey[0].inputs.size() == static_cast<std::size_t>(d + 1));
    }
}

TEST_CASE("loop overrides apply per loop") {
    Bounds b;
    b.while_depth = 0;
    b.loop_depth[2] = 2;
    SymbolicModel m = model_of("|- while false do skip; while true do skip : com", b);
    PlaySets s = enumerate_plays(m);
    REQUIRE(s.grey.size() == 1);
    CHECK(s.safe.empty());
}

TEST_CASE("bounds are validated") {
    Bounds b;
    b.while_depth = -1;
    CHECK_THROWS_AS(b.validate(), Error);
    Bounds f;
    f.fn_bound["g"] = 0;
    CHECK_THROWS_AS(f.validate(), Error);
}

TEST_CASE("play cap is enforced") {
    BuildLimits limits;
    limits.max_leaves = 10;
    TypedTerm t = typecheck(parse("n:expint10 |- while (n > 0) do skip : com"));
    Bounds b;
    b.while_depth = 20;
    CHECK_THROWS_AS(build_model(t, b, limits), ResourceLimit);
}

TEST_CASE("dump lists every edge") {
    SymbolicModel m = model_of("n:expint10 |- n : expint10");
    std::string dump = dump_model(m);
    CHECK(std::count(dump.begin(), dump.end(), '\n') >= static_cast<long>(m.edges().size()));
    CHECK(dump.find("?N1:10") != std::string::npos);
}
