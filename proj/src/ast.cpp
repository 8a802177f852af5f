#include "gameprob/ast.hpp"

#include <algorithm>

namespace gameprob {

void Context::add(ContextEntry entry) {
    if (find(entry.name) != nullptr) {
        throw ParseError(entry.loc, "duplicate declaration of '" + entry.name + "'");
    }
    entries_.push_back(std::move(entry));
}

const ContextEntry* Context::find(const std::string& name) const {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const ContextEntry& e) { return e.name == name; });
    return it == entries_.end() ? nullptr : &*it;
}

int Context::max_bound() const {
    int best = 0;
    for (const auto& e : entries_) {
        best = std::max(best, e.type.var_bound);
        if (e.type.base.is_int()) best = std::max(best, e.type.base.bound);
        for (const auto& a : e.type.args) {
            if (a.is_int()) best = std::max(best, a.bound);
        }
    }
    return best;
}

const char* to_string(ArithOp op) {
    switch (op) {
        case ArithOp::Add: return "+";
        case ArithOp::Sub: return "-";
        case ArithOp::Mul: return "*";
    }
    return "?";
}

const char* to_string(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
    }
    return "?";
}

TermPtr Term::clone() const {
    auto t = std::make_unique<Term>();
    t->kind = kind;
    t->loc = loc;
    t->name = name;
    t->value = value;
    t->arith = arith;
    t->cmp = cmp;
    t->new_bound = new_bound;
    t->loop_id = loop_id;
    t->type = type;
    t->var_bound = var_bound;
    t->free_var = free_var;
    t->args.reserve(args.size());
    for (const auto& a : args) t->args.push_back(a->clone());
    return t;
}

bool same_shape(const Term& a, const Term& b) {
    if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
    switch (a.kind) {
        case TermKind::IntLit:
        case TermKind::BoolLit:
            if (a.value != b.value) return false;
            break;
        case TermKind::Arith:
            if (a.arith != b.arith) return false;
            break;
        case TermKind::Cmp:
            if (a.cmp != b.cmp) return false;
            break;
        case TermKind::New:
            if (a.new_bound != b.new_bound) return false;
            break;
        default:
            break;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!same_shape(*a.args[i], *b.args[i])) return false;
    }
    return true;
}

std::string to_string(const BaseType& t) {
    switch (t.kind) {
        case BaseKind::Com: return "com";
        case BaseKind::ExpBool: return "expbool";
        case BaseKind::ExpInt: return t.bound > 0 ? "expint" + std::to_string(t.bound) : "expint";
    }
    return "?";
}

std::string to_string(const IdentType& t) {
    switch (t.kind) {
        case IdentType::Kind::Base: return to_string(t.base);
        case IdentType::Kind::Var: return "varint" + std::to_string(t.var_bound);
        case IdentType::Kind::Function: {
            std::string out;
            for (const auto& a : t.args) out += to_string(a) + " -> ";
            return out + to_string(t.base);
        }
    }
    return "?";
}

}  // namespace gameprob
