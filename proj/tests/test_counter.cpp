#include "gameprob/counter.hpp"

#include "support/random_program.hpp"

#include <doctest.h>

using namespace gameprob;

namespace {

BigInt n(const char* c, std::vector<SymbolDomain> ds) { return count(parse_constraint(c), ds).count; }

const char* const kExample2 = "X1 = 0 && X1 < N1 && X2 = X1 + 1 && X2 >= N2 && X2 <= 1";
const std::vector<SymbolDomain> kExample2Domains{{"N1", 10}, {"N2", 10}, {"X1", 10}, {"X2", 10}};

}  // namespace

TEST_CASE("small counts") {
    CHECK(n("N < 5", {{"N", 10}}) == 5);
    CHECK(n(kExample2, kExample2Domains) == 18);
    CHECK(count(Constraint::falsity(), {{"A", 10}}).count == 0);
    CHECK(n("true", {{"A", 10}, {"B", 10}}) == 100);
    CHECK(n("X = 2 && Z + X > 3", {{"Z", 10}, {"X", 10}}) == 8);
    CHECK(n("true", {}) == 1);
    CHECK(n("A != B", {{"A", 10}, {"B", 10}}) == 90);
}

TEST_CASE("counts multiply across independent variables") {
    CHECK(n("A < 3 && B >= 7", {{"A", 10}, {"B", 10}, {"C", 4}}) == 3 * 3 * 4);
}

TEST_CASE("projection handles unit equalities") {
    CountMethod m = CountMethod::Enumeration;
    auto sys = normalize(parse_constraint("X2 = X1 + 1 && X2 < N"), {{"N", 10}, {"X1", 10}, {"X2", 10}});
    REQUIRE(sys.size() == 1);
    CHECK(count_system(sys[0], &m) == 36);
    CHECK(m == CountMethod::Projection);
}

TEST_CASE("large domains stay exact") {
    CHECK(n("A + B < 1000000", {{"A", 1000000}, {"B", 1000000}}) == BigInt(1000000) * 1000001 / 2);
    CHECK(n("A < 5", {{"A", 1000000000}, {"B", 1000000000}}) == BigInt(5) * 1000000000);
}

TEST_CASE("LattE export") {
    auto one = normalize(parse_constraint("N < 5"), {{"N", 10}});
    CHECK(export_latte(one[0]) == "3 2\n9 -1\n0 1\n4 -1\n");
    auto box = normalize(Constraint::truth(), {{"N", 10}});
    CHECK(export_latte(box[0]) == "2 2\n9 -1\n0 1\n");
    auto ex2 = normalize(parse_constraint(kExample2), kExample2Domains);
    REQUIRE(ex2.size() == 1);
    std::string text = export_latte(ex2[0]);
    CHECK(text.rfind("15 5\n", 0) == 0);
}

TEST_CASE("LattE import inverts export") {
    auto sys = normalize(parse_constraint("2*A - B <= 3 && A + B >= 2"), {{"A", 5}, {"B", 6}});
    LinearSystem back = import_latte(export_latte(sys[0]));
    CHECK(back.rows == sys[0].rows);
    CHECK(count_system(back) == count_system(sys[0]));
    LinearSystem eq = import_latte("3 2\n9 -1\n0 1\n4 -1\nlinearity 1 3\n");
    CHECK(count_system(eq) == 1);
    CHECK_THROWS_AS(import_latte("2 2\n9\n"), ParseError);
}

TEST_CASE("adding atoms never increases the count") {
    std::mt19937_64 rng(17);
    const std::vector<SymbolDomain> ds{{"A", 7}, {"B", 5}, {"C", 6}};
    for (int i = 0; i < 200; ++i) {
        Constraint c = testing::random_conjunction(rng, 3, 4, 8);
        Constraint more = c.conj(testing::random_conjunction(rng, 3, 2, 8));
        CHECK(count(more, ds).count <= count(c, ds).count);
    }
}

TEST_CASE("counter agrees with brute force") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        const int vars = 1 + i % 4;
        std::vector<SymbolDomain> ds;
        for (int v = 0; v < vars; ++v) ds.push_back({std::string(1, char('A' + v)), 1 + (i * 7 + v * 5) % 12});
        Constraint c = testing::random_conjunction(rng, vars, 6, 12);
        INFO(to_string(c));
        CHECK(count(c, ds).count == count_bruteforce(c, ds));
    }
}

TEST_CASE("brute force refuses oversized boxes") {
    CHECK_THROWS_AS(count_bruteforce(Constraint::truth(), {{"A", 100000}, {"B", 100000}}, 1000), ResourceLimit);
}
