#include "gameprob/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace gameprob {
namespace {

enum class Tok {
    Ident,
    Number,
    Turnstile,  // |-
    Colon,
    Comma,
    Arrow,      // ->
    Assign,     // :=
    Semi,
    LParen,
    RParen,
    Bang,
    Plus,
    Minus,
    Star,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
    AndAnd,
    OrOr,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    SourceLoc loc;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto peek = [&](std::size_t off) { return i + off < src.size() ? src[i + off] : '\0'; };

    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && peek(1) == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        SourceLoc loc{line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), loc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Number, std::string(src.substr(i, j - i)), loc});
            advance(j - i);
            continue;
        }
        auto two = [&](char a, char b) { return c == a && peek(1) == b; };
        Tok kind;
        std::size_t len = 2;
        if (two('|', '-')) kind = Tok::Turnstile;
        else if (two('|', '|')) kind = Tok::OrOr;
        else if (two('&', '&')) kind = Tok::AndAnd;
        else if (two('-', '>')) kind = Tok::Arrow;
        else if (two(':', '=')) kind = Tok::Assign;
        else if (two('<', '=')) kind = Tok::Le;
        else if (two('>', '=')) kind = Tok::Ge;
        else if (two('!', '=')) kind = Tok::Ne;
        else if (two('=', '=')) kind = Tok::Eq;
        else {
            len = 1;
            switch (c) {
                case ':': kind = Tok::Colon; break;
                case ',': kind = Tok::Comma; break;
                case ';': kind = Tok::Semi; break;
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                case '!': kind = Tok::Bang; break;
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '<': kind = Tok::Lt; break;
                case '>': kind = Tok::Gt; break;
                case '=': kind = Tok::Eq; break;
                default:
                    throw ParseError(loc, std::string("unexpected character '") + c + "'");
            }
        }
        out.push_back({kind, std::string(src.substr(i, len)), loc});
        advance(len);
    }
    out.push_back({Tok::End, "", {line, col}});
    return out;
}

bool is_keyword(const std::string& s) {
    static const char* const kKeywords[] = {"skip", "if",   "then",  "else", "while",
                                            "do",   "in",   "true",  "false", "not"};
    for (const char* k : kKeywords) {
        if (s == k) return true;
    }
    return s.rfind("new_int", 0) == 0;
}

// "expint10" -> 10 when `word` is `prefix` followed by a decimal number.
std::optional<int> suffix_number(const std::string& word, std::string_view prefix) {
    if (word.size() <= prefix.size() || word.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    int value = 0;
    const char* first = word.data() + prefix.size();
    const char* last = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Judgment judgment() {
        Judgment j;
        if (!at(Tok::Turnstile)) {
            do {
                const Token& name = expect(Tok::Ident, "declaration name");
                if (is_keyword(name.text)) throw ParseError(name.loc, "keyword '" + name.text + "' cannot be declared");
                expect(Tok::Colon, "':'");
                j.context.add({name.text, ident_type(), name.loc});
            } while (accept(Tok::Comma));
        }
        expect(Tok::Turnstile, "'|-'");
        j.term = term();
        expect(Tok::Colon, "':' before the judgment type");
        SourceLoc loc = cur().loc;
        IdentType t = ident_type();
        if (t.kind != IdentType::Kind::Base) throw ParseError(loc, "judgment type must be com, expbool or expintK");
        j.declared = t.base;
        expect(Tok::End, "end of input");
        return j;
    }

    TermPtr bare_term() {
        TermPtr t = term();
        expect(Tok::End, "end of input");
        return t;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    bool at(Tok k) const { return cur().kind == k; }
    bool at_word(const char* w) const { return at(Tok::Ident) && cur().text == w; }

    bool accept(Tok k) {
        if (!at(k)) return false;
        ++pos_;
        return true;
    }
    bool accept_word(const char* w) {
        if (!at_word(w)) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string found = at(Tok::End) ? "end of input" : "'" + cur().text + "'";
        throw ParseError(cur().loc, "expected " + expected + ", found " + found);
    }

    const Token& expect(Tok k, const std::string& what) {
        if (!at(k)) fail(what);
        return toks_[pos_++];
    }
    void expect_word(const char* w) {
        if (!accept_word(w)) fail(std::string("'") + w + "'");
    }

    BaseType base_type() {
        const Token& t = expect(Tok::Ident, "a type");
        if (t.text == "com") return BaseType::com();
        if (t.text == "expbool") return BaseType::boolean();
        if (auto k = suffix_number(t.text, "expint")) {
            if (*k < 1) throw ParseError(t.loc, "expint bound must be at least 1");
            return BaseType::integer(*k);
        }
        throw ParseError(t.loc, "unknown type '" + t.text + "'");
    }

    IdentType ident_type() {
        if (at(Tok::Ident) && (cur().text == "varint" || suffix_number(cur().text, "varint"))) {
            const Token& t = toks_[pos_++];
            auto k = suffix_number(t.text, "varint");
            if (k && *k < 1) throw ParseError(t.loc, "varint bound must be at least 1");
            return IdentType::variable(k.value_or(0));  // 0: resolved against the context later
        }
        std::vector<BaseType> parts{base_type()};
        while (accept(Tok::Arrow)) parts.push_back(base_type());
        if (parts.size() == 1) return IdentType::of(parts.front());
        BaseType result = parts.back();
        parts.pop_back();
        return IdentType::function(std::move(parts), result);
    }

    TermPtr node(TermKind k, SourceLoc loc) {
        auto t = std::make_unique<Term>();
        t->kind = k;
        t->loc = loc;
        return t;
    }

    TermPtr binary(TermKind k, SourceLoc loc, TermPtr l, TermPtr r) {
        auto t = node(k, loc);
        t->args.push_back(std::move(l));
        t->args.push_back(std::move(r));
        return t;
    }

    // term := command (';' command)*, right-nested; `new_int` scopes to the end.
    TermPtr term() {
        TermPtr first = command();
        if (!at(Tok::Semi)) return first;
        SourceLoc loc = cur().loc;
        ++pos_;
        return binary(TermKind::Seq, loc, std::move(first), term());
    }

    TermPtr command() {
        SourceLoc loc = cur().loc;
        if (at(Tok::Ident) && cur().text.rfind("new_int", 0) == 0) {
            const Token& kw = toks_[pos_++];
            auto t = node(TermKind::New, loc);
            if (kw.text != "new_int") {
                auto k = suffix_number(kw.text, "new_int");
                if (!k || *k < 1) throw ParseError(kw.loc, "malformed '" + kw.text + "'");
                t->new_bound = *k;
            }
            t->name = identifier("local variable name");
            expect(Tok::Assign, "':='");
            t->args.push_back(expr());
            expect_word("in");
            t->args.push_back(term());
            return t;
        }
        if (accept_word("if")) {
            auto t = node(TermKind::If, loc);
            t->args.push_back(expr());
            expect_word("then");
            t->args.push_back(command());
            expect_word("else");
            t->args.push_back(command());
            return t;
        }
        if (accept_word("while")) {
            auto t = node(TermKind::While, loc);
            t->loop_id = ++loops_;
            t->args.push_back(expr());
            expect_word("do");
            t->args.push_back(command());
            return t;
        }
        if (at(Tok::Ident) && !is_keyword(cur().text) && toks_[pos_ + 1].kind == Tok::Assign) {
            auto t = node(TermKind::Assign, loc);
            t->name = toks_[pos_].text;
            pos_ += 2;
            t->args.push_back(expr());
            return t;
        }
        return expr();
    }

    std::string identifier(const char* what) {
        const Token& t = expect(Tok::Ident, what);
        if (is_keyword(t.text)) throw ParseError(t.loc, std::string("expected ") + what + ", found keyword '" + t.text + "'");
        return t.text;
    }

    TermPtr expr() {
        TermPtr l = conjunction();
        while (at(Tok::OrOr)) {
            SourceLoc loc = cur().loc;
            ++pos_;
            l = binary(TermKind::Or, loc, std::move(l), conjunction());
        }
        return l;
    }

    TermPtr conjunction() {
        TermPtr l = negation();
        while (at(Tok::AndAnd)) {
            SourceLoc loc = cur().loc;
            ++pos_;
            l = binary(TermKind::And, loc, std::move(l), negation());
        }
        return l;
    }

    TermPtr negation() {
        SourceLoc loc = cur().loc;
        if (accept_word("not")) {
            auto t = node(TermKind::Not, loc);
            t->args.push_back(negation());
            return t;
        }
        return comparison();
    }

    TermPtr comparison() {
        TermPtr l = sum();
        std::optional<CmpOp> op;
        switch (cur().kind) {
            case Tok::Lt: op = CmpOp::Lt; break;
            case Tok::Le: op = CmpOp::Le; break;
            case Tok::Gt: op = CmpOp::Gt; break;
            case Tok::Ge: op = CmpOp::Ge; break;
            case Tok::Eq: op = CmpOp::Eq; break;
            case Tok::Ne: op = CmpOp::Ne; break;
            default: return l;
        }
        SourceLoc loc = cur().loc;
        ++pos_;
        auto t = binary(TermKind::Cmp, loc, std::move(l), sum());
        t->cmp = *op;
        return t;
    }

    TermPtr sum() {
        TermPtr l = product();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            ArithOp op = at(Tok::Plus) ? ArithOp::Add : ArithOp::Sub;
            SourceLoc loc = cur().loc;
            ++pos_;
            l = binary(TermKind::Arith, loc, std::move(l), product());
            l->arith = op;
        }
        return l;
    }

    TermPtr product() {
        TermPtr l = atom();
        while (at(Tok::Star)) {
            SourceLoc loc = cur().loc;
            ++pos_;
            l = binary(TermKind::Arith, loc, std::move(l), atom());
            l->arith = ArithOp::Mul;
        }
        return l;
    }

    TermPtr atom() {
        SourceLoc loc = cur().loc;
        if (accept(Tok::LParen)) {
            TermPtr t = term();
            expect(Tok::RParen, "')'");
            return t;
        }
        if (accept(Tok::Bang)) {
            auto t = node(TermKind::Deref, loc);
            t->name = identifier("variable name after '!'");
            return t;
        }
        if (at(Tok::Number)) {
            const Token& n = toks_[pos_++];
            auto t = node(TermKind::IntLit, loc);
            auto [ptr, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), t->value);
            if (ec != std::errc()) throw ParseError(loc, "integer literal too large");
            return t;
        }
        if (at(Tok::Minus)) throw ParseError(loc, "negative literals are not supported");
        if (accept_word("skip")) return node(TermKind::Skip, loc);
        if (accept_word("true") || at_word("false")) {
            auto t = node(TermKind::BoolLit, loc);
            t->value = accept_word("false") ? 0 : 1;
            return t;
        }
        if (at(Tok::Ident) && !is_keyword(cur().text)) {
            auto t = node(TermKind::Ident, loc);
            t->name = toks_[pos_++].text;
            if (accept(Tok::LParen)) {
                do {
                    t->args.push_back(term());
                } while (accept(Tok::Comma));
                expect(Tok::RParen, "')' after arguments");
            }
            return t;
        }
        fail("a term");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int loops_ = 0;
};

// Binding strength used by the printer: higher binds tighter.
int level(const Term& t) {
    switch (t.kind) {
        case TermKind::Seq: return 0;
        case TermKind::New: return 0;  // extends to the right as far as possible
        case TermKind::If:
        case TermKind::While:
        case TermKind::Assign: return 1;
        case TermKind::Or: return 2;
        case TermKind::And: return 3;
        case TermKind::Not: return 4;
        case TermKind::Cmp: return 5;
        case TermKind::Arith: return t.arith == ArithOp::Mul ? 7 : 6;
        default: return 8;
    }
}

void print_at(std::ostringstream& os, const Term& t, int min_level);

void print_term(std::ostringstream& os, const Term& t) {
    switch (t.kind) {
        case TermKind::Skip: os << "skip"; break;
        case TermKind::IntLit: os << t.value; break;
        case TermKind::BoolLit: os << (t.value ? "true" : "false"); break;
        case TermKind::Ident:
            os << t.name;
            if (!t.args.empty()) {
                os << "(";
                for (std::size_t i = 0; i < t.args.size(); ++i) {
                    if (i) os << ", ";
                    print_at(os, *t.args[i], 0);
                }
                os << ")";
            }
            break;
        case TermKind::New:
            os << "new_int";
            if (t.new_bound) os << t.new_bound;
            os << " " << t.name << " := ";
            print_at(os, *t.args[0], 2);
            os << " in ";
            print_at(os, *t.args[1], 0);
            break;
        case TermKind::Deref: os << "!" << t.name; break;
        case TermKind::Assign:
            os << t.name << " := ";
            print_at(os, *t.args[0], 2);
            break;
        case TermKind::Seq:
            print_at(os, *t.args[0], 1);
            os << "; ";
            print_at(os, *t.args[1], 0);
            break;
        case TermKind::Arith: {
            int l = level(t);
            print_at(os, *t.args[0], l);
            os << " " << to_string(t.arith) << " ";
            print_at(os, *t.args[1], l + 1);
            break;
        }
        case TermKind::Cmp:
            print_at(os, *t.args[0], 6);
            os << " " << to_string(t.cmp) << " ";
            print_at(os, *t.args[1], 6);
            break;
        case TermKind::And:
            print_at(os, *t.args[0], 3);
            os << " && ";
            print_at(os, *t.args[1], 4);
            break;
        case TermKind::Or:
            print_at(os, *t.args[0], 2);
            os << " || ";
            print_at(os, *t.args[1], 3);
            break;
        case TermKind::Not:
            os << "not ";
            print_at(os, *t.args[0], 4);
            break;
        case TermKind::If:
            os << "if ";
            print_at(os, *t.args[0], 2);
            os << " then ";
            print_at(os, *t.args[1], 1);
            os << " else ";
            print_at(os, *t.args[2], 1);
            break;
        case TermKind::While:
            os << "while ";
            print_at(os, *t.args[0], 2);
            os << " do ";
            print_at(os, *t.args[1], 1);
            break;
    }
}

void print_at(std::ostringstream& os, const Term& t, int min_level) {
    // Trailing-open constructs (if/while/new/assign) are always bracketed when
    // nested below their own level, so nothing after them gets captured.
    bool paren = level(t) < min_level;
    if (paren) os << "(";
    print_term(os, t);
    if (paren) os << ")";
}

}  // namespace

Judgment parse(std::string_view source) { return Parser(source).judgment(); }

TermPtr parse_term(std::string_view source) { return Parser(source).bare_term(); }

std::string print(const Term& term) {
    std::ostringstream os;
    print_at(os, term, 0);
    return os.str();
}

std::string print(const Judgment& j) {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : j.context.entries()) {
        if (!first) os << ", ";
        first = false;
        os << e.name << ":" << to_string(e.type);
    }
    os << (first ? "|- " : " |- ") << print(*j.term) << " : " << to_string(j.declared);
    return os.str();
}

}  // namespace gameprob
