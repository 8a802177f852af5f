#include "gameprob/typecheck.hpp"

#include <algorithm>
#include <map>

namespace gameprob {
namespace {

class Checker {
public:
    Checker(const Context& ctx, int literal_bound) : ctx_(ctx), literal_bound_(literal_bound) {}

    BaseType check(Term& t) {
        t.type = infer(t);
        return t.type;
    }

private:
    [[noreturn]] static void fail(const Term& t, const std::string& msg) { throw TypeError(t.loc, msg); }

    void expect_int(Term& t, const char* where) {
        if (!check(t).is_int()) fail(t, std::string(where) + " must be an integer expression, got " + to_string(t.type));
    }
    void expect_bool(Term& t, const char* where) {
        if (!check(t).is_bool()) fail(t, std::string(where) + " must be boolean, got " + to_string(t.type));
    }

    // Resolves `name` as a cell: returns its domain.
    int cell(Term& t) {
        if (auto it = locals_.find(t.name); it != locals_.end() && !it->second.empty()) {
            t.free_var = false;
            return it->second.back();
        }
        const ContextEntry* e = ctx_.find(t.name);
        if (e == nullptr) fail(t, "use of undeclared identifier '" + t.name + "'");
        if (!e->type.is_var()) fail(t, "'" + t.name + "' is not a variable");
        t.free_var = true;
        return e->type.var_bound;
    }

    BaseType infer(Term& t) {
        switch (t.kind) {
            case TermKind::Skip:
                return BaseType::com();
            case TermKind::IntLit:
                if (t.value < 0 || t.value >= literal_bound_) {
                    fail(t, "integer literal " + std::to_string(t.value) + " outside [0, " +
                                std::to_string(literal_bound_) + ")");
                }
                return BaseType::integer(0);
            case TermKind::BoolLit:
                return BaseType::boolean();
            case TermKind::Ident:
                return identifier(t);
            case TermKind::New: {
                if (ctx_.find(t.name) != nullptr) fail(t, "local variable '" + t.name + "' shadows a free identifier");
                expect_int(*t.args[0], "initializer");
                int k = t.new_bound > 0 ? t.new_bound : ctx_.max_bound();
                if (k < 1) fail(t, "cannot infer the domain of '" + t.name + "'; write new_intK");
                t.var_bound = k;
                locals_[t.name].push_back(k);
                BaseType body = check(*t.args[1]);
                locals_[t.name].pop_back();
                return body;
            }
            case TermKind::Deref:
                t.var_bound = cell(t);
                return BaseType::integer(t.var_bound);
            case TermKind::Assign:
                t.var_bound = cell(t);
                expect_int(*t.args[0], "assigned value");
                return BaseType::com();
            case TermKind::Seq: {
                if (!check(*t.args[0]).is_com()) fail(*t.args[0], "left side of ';' must be a command");
                return check(*t.args[1]);
            }
            case TermKind::Arith:
                expect_int(*t.args[0], "operand");
                expect_int(*t.args[1], "operand");
                return BaseType::integer(0);
            case TermKind::Cmp: {
                BaseType l = check(*t.args[0]);
                BaseType r = check(*t.args[1]);
                bool equality = t.cmp == CmpOp::Eq || t.cmp == CmpOp::Ne;
                if (l.is_int() && r.is_int()) return BaseType::boolean();
                if (equality && l.is_bool() && r.is_bool()) return BaseType::boolean();
                fail(t, std::string("cannot compare ") + to_string(l) + " with " + to_string(r) + " using '" +
                            to_string(t.cmp) + "'");
            }
            case TermKind::And:
            case TermKind::Or:
                expect_bool(*t.args[0], "operand");
                expect_bool(*t.args[1], "operand");
                return BaseType::boolean();
            case TermKind::Not:
                expect_bool(*t.args[0], "operand of not");
                return BaseType::boolean();
            case TermKind::If: {
                expect_bool(*t.args[0], "guard of if");
                BaseType a = check(*t.args[1]);
                BaseType b = check(*t.args[2]);
                if (!a.same_kind(b)) fail(t, "branches of if have different types: " + to_string(a) + " and " + to_string(b));
                return a.is_int() ? BaseType::integer(0) : a;
            }
            case TermKind::While:
                expect_bool(*t.args[0], "guard of while");
                if (!check(*t.args[1]).is_com()) fail(*t.args[1], "body of while must be a command");
                return BaseType::com();
        }
        fail(t, "unknown term");
    }

    BaseType identifier(Term& t) {
        if (auto it = locals_.find(t.name); it != locals_.end() && !it->second.empty()) {
            fail(t, "variable '" + t.name + "' must be dereferenced with '!'");
        }
        const ContextEntry* e = ctx_.find(t.name);
        if (e == nullptr) fail(t, "use of undeclared identifier '" + t.name + "'");
        const IdentType& it = e->type;
        if (it.is_var()) fail(t, "variable '" + t.name + "' must be dereferenced with '!'");
        if (!it.is_function()) {
            if (!t.args.empty()) fail(t, "'" + t.name + "' is not a function");
            return it.base;
        }
        if (t.args.size() != it.args.size()) {
            fail(t, "'" + t.name + "' expects " + std::to_string(it.args.size()) + " argument(s), got " +
                        std::to_string(t.args.size()));
        }
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            BaseType got = check(*t.args[i]);
            if (!got.same_kind(it.args[i])) {
                fail(*t.args[i], "argument " + std::to_string(i + 1) + " of '" + t.name + "' must be " +
                                     to_string(it.args[i]) + ", got " + to_string(got));
            }
        }
        return it.base;
    }

    const Context& ctx_;
    int literal_bound_;
    std::map<std::string, std::vector<int>> locals_;
};

int max_new_bound(const Term& t) {
    int best = t.kind == TermKind::New ? t.new_bound : 0;
    for (const auto& a : t.args) best = std::max(best, max_new_bound(*a));
    return best;
}

// Bare `varint` takes the largest declared K.
Context resolve_context(const Context& ctx) {
    int k = ctx.max_bound();
    Context out;
    for (auto e : ctx.entries()) {
        if (e.type.is_var() && e.type.var_bound == 0) {
            if (k < 1) throw TypeError(e.loc, "cannot infer the domain of varint '" + e.name + "'; write varintK");
            e.type = IdentType::variable(k);
        }
        if (e.name == "abort" && !(e.type.kind == IdentType::Kind::Base && e.type.base.is_com())) {
            throw TypeError(e.loc, "'abort' must have type com");
        }
        out.add(e);
    }
    return out;
}

}  // namespace

TypedTerm typecheck(const Term& term, const Context& ctx) {
    Context resolved = resolve_context(ctx);
    auto copy = std::shared_ptr<Term>(term.clone());
    int literal_bound = std::max(resolved.max_bound(), max_new_bound(term));
    Checker checker(resolved, literal_bound);
    BaseType t = checker.check(*copy);
    return TypedTerm{std::move(copy), std::move(resolved), t, literal_bound};
}

TypedTerm typecheck(const Judgment& j) {
    TypedTerm typed = typecheck(*j.term, j.context);
    if (!typed.type.same_kind(j.declared)) {
        throw TypeError(j.term->loc, "term has type " + to_string(typed.type) + " but the judgment declares " +
                                         to_string(j.declared));
    }
    typed.type = j.declared;
    return typed;
}

}  // namespace gameprob
