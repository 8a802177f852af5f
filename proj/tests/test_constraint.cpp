#include "gameprob/constraint.hpp"
#include "gameprob/counter.hpp"

#include "support/random_program.hpp"

#include <doctest.h>

using namespace gameprob;

namespace {

// Every point of the box, as a symbol environment.
template <class F>
void each_point(const std::vector<SymbolDomain>& ds, F f) {
    std::map<std::string, BigInt> env;
    std::vector<int> at(ds.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < ds.size(); ++i) env[ds[i].name] = at[i];
        f(env, at);
        std::size_t i = 0;
        while (i < ds.size() && ++at[i] == ds[i].bound) at[i++] = 0;
        if (i == ds.size()) return;
    }
}

std::vector<BigInt> as_point(const std::vector<int>& at) { return {at.begin(), at.end()}; }

}  // namespace

TEST_CASE("polynomial arithmetic") {
    Poly x = Poly::symbol("X");
    Poly y = Poly::symbol("Y");
    Poly p = Poly(2) * x + y - Poly(3);
    CHECK(p.coeff("X") == 2);
    CHECK(p.constant_term() == -3);
    CHECK(p.is_linear());
    CHECK_FALSE((x * y).is_linear());
    CHECK((x * y).degree() == 2);
    CHECK(to_string(Poly(1) + x) == "X + 1");
    CHECK(to_string(Poly(3) - Poly::symbol("N1")) == "-N1 + 3");
    CHECK(p.substitute("X", Poly(4)) == y + Poly(5));
    CHECK((x - x).is_constant());
}

TEST_CASE("constraint text round trip") {
    for (const char* s : {"true", "false", "X1 = 0 && X1 < N1", "N2 + 2*X1 != 3", "-N1 + 3 >= 0"}) {
        CHECK(to_string(parse_constraint(s)) == s);
    }
}

TEST_CASE("normalize N < 5 over int_10") {
    auto systems = normalize(parse_constraint("N < 5"), {{"N", 10}});
    REQUIRE(systems.size() == 1);
    const auto& rows = systems[0].rows;
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == LinearSystem::Row{{1}, 9});
    CHECK(rows[1] == LinearSystem::Row{{-1}, 0});
    CHECK(rows[2] == LinearSystem::Row{{1}, 4});
}

TEST_CASE("equalities become two rows and != splits") {
    CHECK(normalize(parse_constraint("A = B"), {{"A", 3}, {"B", 3}})[0].rows.size() == 6);
    auto split = normalize(parse_constraint("A != 1 && B != 2"), {{"A", 3}, {"B", 3}});
    CHECK(split.size() == 4);
}

TEST_CASE("unsatisfiable constants drop out") {
    CHECK(normalize(parse_constraint("1 > 2"), {{"A", 3}}).empty());
    CHECK(normalize(Constraint::falsity(), {{"A", 3}}).empty());
}

TEST_CASE("nonlinear atoms and unknown symbols are rejected") {
    CHECK_THROWS_AS(normalize(parse_constraint("A*B < 2"), {{"A", 3}, {"B", 3}}), UnsupportedConstraint);
    CHECK_THROWS_AS(normalize(parse_constraint("C < 2"), {{"A", 3}}), UnsupportedConstraint);
}

TEST_CASE("simplification propagates constant bindings") {
    CHECK(substitute_and_simplify(parse_constraint("X = 0 && X > 1")).is_false());
    Constraint s = substitute_and_simplify(parse_constraint("X = 0 && X2 = X + 1 && X2 <= 1"));
    CHECK(to_string(s) == "X = 0 && X2 = 1");
    CHECK(substitute_and_simplify(parse_constraint("2*X = 3")).is_false());
    CHECK_FALSE(substitute_and_simplify(parse_constraint("B + 2*C = 0")).is_false());
}

TEST_CASE("simplification keeps the solution set") {
    std::mt19937_64 rng(3);
    const std::vector<SymbolDomain> ds{{"A", 4}, {"B", 5}, {"C", 3}};
    for (int i = 0; i < 300; ++i) {
        Constraint c = testing::random_conjunction(rng, 3, 5, 6);
        if (i % 3 == 0) c.add(Atom{Poly::symbol("A"), CmpOp::Eq, Poly(i % 4)});
        Constraint s = substitute_and_simplify(c);
        INFO(to_string(c));
        each_point(ds, [&](const auto& env, const auto&) { CHECK(c.evaluate(env) == (!s.is_false() && s.evaluate(env))); });
    }
}

TEST_CASE("normalized systems are sound, complete and disjoint") {
    std::mt19937_64 rng(5);
    const std::vector<SymbolDomain> ds{{"A", 4}, {"B", 3}, {"C", 5}};
    for (int i = 0; i < 300; ++i) {
        Constraint c = testing::random_conjunction(rng, 3, 5, 6);
        auto systems = normalize(c, ds);
        INFO(to_string(c));
        each_point(ds, [&](const auto& env, const auto& at) {
            int hits = 0;
            for (const auto& s : systems) hits += s.satisfied_by(as_point(at));
            CHECK(hits == (c.evaluate(env) ? 1 : 0));
        });
    }
}
