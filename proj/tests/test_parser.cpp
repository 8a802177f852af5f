#include "gameprob/parser.hpp"

#include "support/random_program.hpp"

#include <doctest.h>

using namespace gameprob;

TEST_CASE("parses the running example") {
    Judgment j = parse("n:expint10, abort:com |- if (n >= 5) then skip else abort : com");
    REQUIRE(j.context.entries().size() == 2);
    CHECK(j.context.find("n")->type == IdentType::of(BaseType::integer(10)));
    CHECK(j.context.find("abort")->type == IdentType::of(BaseType::com()));
    CHECK(j.declared == BaseType::com());
    REQUIRE(j.term->kind == TermKind::If);
    CHECK(j.term->args[0]->kind == TermKind::Cmp);
    CHECK(j.term->args[0]->cmp == CmpOp::Ge);
}

TEST_CASE("function and cell types") {
    Judgment j = parse("f:com->expint3->expint10, v:varint4, w:varint |- skip : com");
    const IdentType& f = j.context.find("f")->type;
    CHECK(f.is_function());
    CHECK(f.args == std::vector<BaseType>{BaseType::com(), BaseType::integer(3)});
    CHECK(f.base == BaseType::integer(10));
    CHECK(j.context.find("v")->type == IdentType::variable(4));
    CHECK(j.context.find("w")->type.var_bound == 0);
}

TEST_CASE("sequence is right-nested and new_int scopes to the end") {
    TermPtr t = parse_term("new_int x := 0 in x := 1; skip; abort");
    REQUIRE(t->kind == TermKind::New);
    CHECK(t->new_bound == 0);
    const Term& body = *t->args[1];
    REQUIRE(body.kind == TermKind::Seq);
    CHECK(body.args[0]->kind == TermKind::Assign);
    CHECK(body.args[1]->kind == TermKind::Seq);
}

TEST_CASE("while body is a single command") {
    TermPtr t = parse_term("while (!x < n) do x := !x + 1; abort");
    REQUIRE(t->kind == TermKind::Seq);
    CHECK(t->args[0]->kind == TermKind::While);
    CHECK(t->args[0]->loop_id == 1);
}

TEST_CASE("loops are numbered in source order") {
    TermPtr t = parse_term("while true do (while false do skip); while true do skip");
    CHECK(t->args[0]->loop_id == 1);
    CHECK(t->args[0]->args[1]->loop_id == 2);
    CHECK(t->args[1]->loop_id == 3);
}

TEST_CASE("operator precedence") {
    CHECK(print(*parse_term("1 + 2 * n < 3 && not b || c")) == "1 + 2 * n < 3 && not b || c");
    TermPtr t = parse_term("a || b && c");
    CHECK(t->kind == TermKind::Or);
    CHECK(t->args[1]->kind == TermKind::And);
    TermPtr s = parse_term("n - 1 - 2");
    CHECK(s->args[0]->kind == TermKind::Arith);
    CHECK(print(*parse_term("n - (1 - 2)")) == "n - (1 - 2)");
}

TEST_CASE("new_intK sets the local domain") {
    TermPtr t = parse_term("new_int4 c := 0 in skip");
    CHECK(t->new_bound == 4);
}

TEST_CASE("errors carry a position") {
    auto message = [](const char* src) {
        try {
            parse(src);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("|- skip") == "1:8: expected ':' before the judgment type, found end of input");
    CHECK(message("n:expint10 |-\n  if n then skip : com").rfind("2:", 0) == 0);
    CHECK(message("|- -1 : expint3").find("negative literals") != std::string::npos);
    CHECK(message("n:expint10, n:expbool |- skip : com").find("n") != std::string::npos);
    CHECK_FALSE(message("|- skip $ : com").empty());
    CHECK_FALSE(message("x:foo |- skip : com").empty());
    CHECK_FALSE(message("|- (skip : com").empty());
}

TEST_CASE("comments are ignored") {
    Judgment j = parse("// header\n|- skip // trailing\n : com");
    CHECK(j.term->kind == TermKind::Skip);
}

TEST_CASE("printing then parsing gives back the same term") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        std::string src = testing::random_program(rng);
        Judgment a = parse(src);
        std::string printed = print(a);
        Judgment b = parse(printed);
        INFO(src);
        INFO(printed);
        REQUIRE(same_shape(*a.term, *b.term));
        CHECK(a.context == b.context);
        CHECK(print(b) == printed);
    }
}
