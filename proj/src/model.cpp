#include "gameprob/model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace gameprob {

Polarity Move::polarity() const {
    switch (payload) {
        case Payload::Run:
        case Payload::Q:
        case Payload::Write: return Polarity::Question;
        case Payload::Done:
        case Payload::Value:
        case Payload::Ok: return Polarity::Answer;
        default: return Polarity::Internal;
    }
}

std::string to_string(const Move& m) {
    std::string head;
    switch (m.payload) {
        case Payload::Run: head = "run"; break;
        case Payload::Done: head = "done"; break;
        case Payload::Q: head = "q"; break;
        case Payload::Ok: head = "ok"; break;
        case Payload::Value: head = to_string(m.value); break;
        case Payload::Write: head = "write(" + to_string(m.value) + ")"; break;
        case Payload::Tau: head = "tau"; break;
        case Payload::Cut: return "#cut";
        case Payload::Overflow: head = "overflow"; break;
    }
    if (m.tag.empty()) return head;
    head += "^";
    for (std::size_t i = 0; i < m.tag.size(); ++i) head += (i ? "," : "") + m.tag[i];
    return head;
}

int Bounds::depth_for_loop(int loop_id) const {
    auto it = loop_depth.find(loop_id);
    return it == loop_depth.end() ? while_depth : it->second;
}

int Bounds::bound_for_function(const std::string& name) const {
    auto it = fn_bound.find(name);
    return it == fn_bound.end() ? fn_call_bound : it->second;
}

void Bounds::validate() const {
    if (while_depth < 0) throw Error("while depth must be >= 0");
    if (fn_call_bound < 1) throw Error("function call bound must be >= 1");
    for (const auto& [id, d] : loop_depth) {
        if (d < 0) throw Error("while depth for loop " + std::to_string(id) + " must be >= 0");
    }
    for (const auto& [f, d] : fn_bound) {
        if (d < 1) throw Error("call bound for '" + f + "' must be >= 1");
    }
}

StateId SymbolicModel::add_state() {
    kinds_.push_back(StateKind::Inner);
    out_.emplace_back();
    return kinds_.size() - 1;
}

std::size_t SymbolicModel::add_edge(Edge e) {
    out_[e.from].push_back(edges_.size());
    edges_.push_back(std::move(e));
    return edges_.size() - 1;
}

std::vector<StateId> SymbolicModel::accepting() const {
    std::vector<StateId> r;
    for (StateId s = 0; s < kinds_.size(); ++s) {
        if (kinds_[s] == StateKind::Accept) r.push_back(s);
    }
    return r;
}

std::vector<StateId> SymbolicModel::failing() const {
    std::vector<StateId> r;
    for (StateId s = 0; s < kinds_.size(); ++s) {
        if (kinds_[s] == StateKind::Fail || kinds_[s] == StateKind::Overflow) r.push_back(s);
    }
    return r;
}

bool SymbolicModel::is_acyclic() const {
    std::vector<std::size_t> indegree(kinds_.size(), 0);
    for (const auto& e : edges_) ++indegree[e.to];
    std::vector<StateId> ready;
    for (StateId s = 0; s < kinds_.size(); ++s) {
        if (indegree[s] == 0) ready.push_back(s);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        StateId s = ready.back();
        ready.pop_back();
        ++seen;
        for (std::size_t e : out_[s]) {
            if (--indegree[edges_[e].to] == 0) ready.push_back(edges_[e].to);
        }
    }
    return seen == kinds_.size();
}

namespace {

// Closed range of values an expression can take, if bounded.
struct Range {
    std::optional<BigInt> lo;
    std::optional<BigInt> hi;
};

struct LocalCell {
    std::string symbol;
    int bound = 0;
};

// Per-path builder state. Copied at every branch.
struct Cursor {
    StateId at = 0;
    std::map<std::string, LocalCell> locals;
    std::map<std::string, int> counters;  // symbol base -> last index used
    std::map<std::string, Range> ranges;   // symbol -> value range
    bool aborted = false;
};

using Cont = std::function<void(Cursor, Poly)>;

std::string symbol_base(const std::string& ident) {
    std::string base;
    for (char c : ident) base += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (std::isdigit(static_cast<unsigned char>(base.back()))) base += "_";
    return base;
}

Range range_of(const Poly& p, const std::map<std::string, Range>& ranges) {
    Range total{BigInt(0), BigInt(0)};
    for (const auto& [mono, coeff] : p.terms()) {
        Range r{coeff, coeff};
        for (const auto& s : mono) {
            auto it = ranges.find(s);
            if (it == ranges.end() || !it->second.lo || !it->second.hi || !r.lo || !r.hi) return {};
            BigInt c[4] = {*r.lo * *it->second.lo, *r.lo * *it->second.hi, *r.hi * *it->second.lo,
                           *r.hi * *it->second.hi};
            r.lo = *std::min_element(c, c + 4);
            r.hi = *std::max_element(c, c + 4);
        }
        if (!r.lo || !r.hi) return {};
        *total.lo += *r.lo;
        *total.hi += *r.hi;
    }
    return total;
}

class Builder {
public:
    Builder(SymbolicModel& model, const Context& ctx, const Bounds& bounds, const BuildLimits& limits)
        : model_(model), ctx_(ctx), bounds_(bounds), limits_(limits) {}

    void top(const Term& term) {
        Cursor c;
        c.at = model_.add_state();
        const bool command = term.type.is_com();
        c = emit(std::move(c), {}, Move::make(command ? Payload::Run : Payload::Q));
        eval(term, std::move(c), [this, command](Cursor c, Poly v) {
            Move answer = command ? Move::make(Payload::Done) : Move::make(Payload::Value, {}, std::move(v));
            bool aborted = c.aborted;
            c = emit(std::move(c), {}, std::move(answer));
            leaf(c, aborted ? StateKind::Fail : StateKind::Accept);
        });
    }

private:
    Cursor emit(Cursor c, Constraint guard, Move move, std::optional<Binder> fresh = std::nullopt) {
        if (model_.edges().size() >= limits_.max_edges) {
            throw ResourceLimit("symbolic model exceeds " + std::to_string(limits_.max_edges) + " edges");
        }
        StateId next = model_.add_state();
        model_.add_edge(Edge{c.at, next, std::move(guard), std::move(move), std::move(fresh)});
        c.at = next;
        return c;
    }

    void leaf(const Cursor& c, StateKind kind) {
        if (++leaves_ > limits_.max_leaves) {
            throw ResourceLimit("more than " + std::to_string(limits_.max_leaves) +
                                " plays; lower the exploration bounds or raise the play cap");
        }
        model_.set_kind(c.at, kind);
    }

    Binder fresh(Cursor& c, const std::string& ident, int bound, bool input) {
        std::string base = symbol_base(ident);
        std::string name = base + std::to_string(++c.counters[base]);
        c.ranges[name] = Range{BigInt(0), BigInt(bound - 1)};
        return Binder{name, bound, input};
    }

    // Environment answer: `q^tag` then `?S^tag`.
    void read(Cursor c, std::vector<std::string> tag, int bound, const Cont& k) {
        c = emit(std::move(c), {}, Move::make(Payload::Q, tag));
        Binder b = fresh(c, tag.front(), bound, true);
        Poly sym = Poly::symbol(b.symbol);
        c = emit(std::move(c), {}, Move::make(Payload::Value, std::move(tag), sym), b);
        k(std::move(c), std::move(sym));
    }

    // Two tau edges guarded by `a` and its negation.
    void split(Cursor c, const Atom& a, const std::function<void(Cursor)>& yes, const std::function<void(Cursor)>& no) {
        Cursor other = c;
        yes(emit(std::move(c), Constraint({a}), Move::make(Payload::Tau)));
        no(emit(std::move(other), Constraint({a.negated()}), Move::make(Payload::Tau)));
    }

    void truth(Cursor c, const Poly& v, const std::function<void(Cursor)>& yes, const std::function<void(Cursor)>& no) {
        if (v.is_constant()) {
            (v.constant_term() != 0 ? yes : no)(std::move(c));
            return;
        }
        split(std::move(c), Atom{v, CmpOp::Eq, Poly(1)}, yes, no);
    }

    // Stores `v` into a fresh symbol of `cell_name`; out-of-domain values end
    // the play with an overflow move.
    void store(Cursor c, const std::string& var, int bound, const Poly& v, const std::function<void(Cursor, std::string)>& k) {
        Range r = range_of(v, c.ranges);
        const BigInt top = bound - 1;
        auto overflow = [&](Cursor c2, Constraint guard) {
            c2 = emit(std::move(c2), std::move(guard), Move::make(Payload::Overflow, {var}));
            leaf(c2, StateKind::Overflow);
        };
        if ((r.lo && *r.lo > top) || (r.hi && *r.hi < 0)) {
            overflow(std::move(c), {});
            return;
        }
        auto commit = [&, bound](Cursor c2) {
            Binder b = fresh(c2, var, bound, false);
            Range stored = range_of(v, c2.ranges);
            Range& dst = c2.ranges[b.symbol];
            if (stored.lo && *stored.lo > 0) dst.lo = stored.lo;
            if (stored.hi && *stored.hi < top) dst.hi = stored.hi;
            Atom eq{Poly::symbol(b.symbol), CmpOp::Eq, v};
            std::string sym = b.symbol;
            c2 = emit(std::move(c2), Constraint({eq}), Move::make(Payload::Tau), b);
            k(std::move(c2), sym);
        };
        auto upper = [&](Cursor c2) {
            if (r.hi && *r.hi <= top) {
                commit(std::move(c2));
                return;
            }
            Atom fits{v, CmpOp::Le, Poly::constant(top)};
            Cursor other = c2;
            commit(emit(std::move(c2), Constraint({fits}), Move::make(Payload::Tau)));
            overflow(std::move(other), Constraint({fits.negated()}));
        };
        if (r.lo && *r.lo >= 0) {
            upper(std::move(c));
            return;
        }
        Atom nonneg{v, CmpOp::Ge, Poly(0)};
        Cursor other = c;
        upper(emit(std::move(c), Constraint({nonneg}), Move::make(Payload::Tau)));
        overflow(std::move(other), Constraint({nonneg.negated()}));
    }

    void eval(const Term& t, Cursor c, const Cont& k) {
        switch (t.kind) {
            case TermKind::Skip:
                k(std::move(c), Poly());
                return;
            case TermKind::IntLit:
            case TermKind::BoolLit:
                k(std::move(c), Poly(t.value));
                return;
            case TermKind::Ident:
                identifier(t, std::move(c), k);
                return;
            case TermKind::Deref: {
                if (t.free_var) {
                    read(std::move(c), {t.name}, t.var_bound, k);
                    return;
                }
                Poly v = Poly::symbol(c.locals.at(t.name).symbol);
                k(std::move(c), std::move(v));
                return;
            }
            case TermKind::Assign:
                eval(*t.args[0], std::move(c), [this, &t, k](Cursor c, Poly v) {
                    if (t.free_var) {
                        c = emit(std::move(c), {}, Move::make(Payload::Write, {t.name}, v));
                        c = emit(std::move(c), {}, Move::make(Payload::Ok, {t.name}));
                        k(std::move(c), Poly());
                        return;
                    }
                    store(std::move(c), t.name, t.var_bound, v, [&t, k](Cursor c, std::string sym) {
                        c.locals[t.name].symbol = std::move(sym);
                        k(std::move(c), Poly());
                    });
                });
                return;
            case TermKind::New:
                eval(*t.args[0], std::move(c), [this, &t, k](Cursor c, Poly v) {
                    std::optional<LocalCell> saved;
                    if (auto it = c.locals.find(t.name); it != c.locals.end()) saved = it->second;
                    store(std::move(c), t.name, t.var_bound, v, [this, &t, k, saved](Cursor c, std::string sym) {
                        c.locals[t.name] = LocalCell{std::move(sym), t.var_bound};
                        eval(*t.args[1], std::move(c), [&t, k, saved](Cursor c, Poly v) {
                            if (saved) c.locals[t.name] = *saved;
                            else c.locals.erase(t.name);
                            k(std::move(c), std::move(v));
                        });
                    });
                });
                return;
            case TermKind::Seq:
                eval(*t.args[0], std::move(c), [this, &t, k](Cursor c, Poly) { eval(*t.args[1], std::move(c), k); });
                return;
            case TermKind::Arith:
                eval(*t.args[0], std::move(c), [this, &t, k](Cursor c, Poly l) {
                    eval(*t.args[1], std::move(c), [&t, k, l](Cursor c, Poly r) {
                        switch (t.arith) {
                            case ArithOp::Add: k(std::move(c), l + r); break;
                            case ArithOp::Sub: k(std::move(c), l - r); break;
                            case ArithOp::Mul: k(std::move(c), l * r); break;
                        }
                    });
                });
                return;
            case TermKind::Cmp:
                eval(*t.args[0], std::move(c), [this, &t, k](Cursor c, Poly l) {
                    eval(*t.args[1], std::move(c), [this, &t, k, l](Cursor c, Poly r) {
                        Poly d = l - r;
                        if (d.is_constant()) {
                            k(std::move(c), Poly(holds(t.cmp, d.constant_term(), 0) ? 1 : 0));
                            return;
                        }
                        split(std::move(c), Atom{l, t.cmp, r}, [&k](Cursor c) { k(std::move(c), Poly(1)); },
                              [&k](Cursor c) { k(std::move(c), Poly(0)); });
                    });
                });
                return;
            case TermKind::And:
                eval(*t.args[0], std::move(c), [this, &t, k](Cursor c, Poly l) {
                    truth(std::move(c), l, [&](Cursor c) { eval(*t.args[1], std::move(c), k); },
                          [&](Cursor c) { k(std::move(c), Poly(0)); });
                });
                return;
            case TermKind::Or:
                eval(*t.args[0], std::move(c), [this, &t, k](Cursor c, Poly l) {
                    truth(std::move(c), l, [&](Cursor c) { k(std::move(c), Poly(1)); },
                          [&](Cursor c) { eval(*t.args[1], std::move(c), k); });
                });
                return;
            case TermKind::Not:
                eval(*t.args[0], std::move(c), [k](Cursor c, Poly v) { k(std::move(c), Poly(1) - v); });
                return;
            case TermKind::If:
                eval(*t.args[0], std::move(c), [this, &t, k](Cursor c, Poly g) {
                    truth(std::move(c), g, [&](Cursor c) { eval(*t.args[1], std::move(c), k); },
                          [&](Cursor c) { eval(*t.args[2], std::move(c), k); });
                });
                return;
            case TermKind::While:
                loop(t, 0, std::move(c), k);
                return;
        }
    }

    // Guard true on the (depth+1)-th evaluation leads to a cut edge.
    void loop(const Term& t, int iteration, Cursor c, const Cont& k) {
        const int depth = bounds_.depth_for_loop(t.loop_id);
        eval(*t.args[0], std::move(c), [this, &t, iteration, depth, k](Cursor c, Poly g) {
            truth(
                std::move(c), g,
                [&](Cursor c) {
                    if (iteration >= depth) {
                        c = emit(std::move(c), {}, Move::make(Payload::Cut));
                        leaf(c, StateKind::Grey);
                        return;
                    }
                    eval(*t.args[1], std::move(c),
                         [this, &t, iteration, k](Cursor c, Poly) { loop(t, iteration + 1, std::move(c), k); });
                },
                [&](Cursor c) { k(std::move(c), Poly()); });
        });
    }

    void identifier(const Term& t, Cursor c, const Cont& k) {
        const ContextEntry& e = *ctx_.find(t.name);
        if (e.type.is_function()) {
            call(t, e.type, std::move(c), k);
            return;
        }
        if (e.type.base.is_com()) {
            c = emit(std::move(c), {}, Move::make(Payload::Run, {t.name}));
            c = emit(std::move(c), {}, Move::make(Payload::Done, {t.name}));
            if (t.name == "abort") c.aborted = true;
            k(std::move(c), Poly());
            return;
        }
        read(std::move(c), {t.name}, e.type.base.domain_size(), k);
    }

    void call(const Term& t, const IdentType& sig, Cursor c, const Cont& k) {
        const int bound = bounds_.bound_for_function(t.name);
        const bool com = sig.base.is_com();
        model_.declare_function(t.name, FunctionInfo{static_cast<int>(sig.args.size()), bound, com});
        c = emit(std::move(c), {}, Move::make(com ? Payload::Run : Payload::Q, {t.name}));
        behave(t, sig, bound, 0, std::move(c), k);
    }

    // After `calls` argument calls: return now, or call one more argument.
    void behave(const Term& t, const IdentType& sig, int bound, int calls, Cursor c, const Cont& k) {
        Cursor ret = c;
        if (sig.base.is_com()) {
            ret = emit(std::move(ret), {}, Move::make(Payload::Done, {t.name}));
            k(std::move(ret), Poly());
        } else {
            Binder b = fresh(ret, t.name, sig.base.domain_size(), true);
            Poly sym = Poly::symbol(b.symbol);
            ret = emit(std::move(ret), {}, Move::make(Payload::Value, {t.name}, sym), b);
            k(std::move(ret), std::move(sym));
        }
        if (calls + 1 >= bound) return;
        for (std::size_t i = 0; i < sig.args.size(); ++i) {
            const bool com = sig.args[i].is_com();
            std::vector<std::string> tag{t.name, std::to_string(i + 1)};
            Cursor arg = emit(c, {}, Move::make(com ? Payload::Run : Payload::Q, tag));
            eval(*t.args[i], std::move(arg), [this, &t, &sig, bound, calls, com, tag, k](Cursor c, Poly v) {
                c = emit(std::move(c), {}, com ? Move::make(Payload::Done, tag) : Move::make(Payload::Value, tag, v));
                behave(t, sig, bound, calls + 1, std::move(c), k);
            });
        }
    }

    SymbolicModel& model_;
    const Context& ctx_;
    const Bounds& bounds_;
    const BuildLimits& limits_;
    std::size_t leaves_ = 0;
};

}  // namespace

SymbolicModel build_model(const TypedTerm& term, const Bounds& bounds, const BuildLimits& limits) {
    bounds.validate();
    SymbolicModel model;
    Builder(model, term.context, bounds, limits).top(*term.term);
    return model;
}

SymbolicModel undefined_function_strategy(const std::vector<BaseType>& args, BaseType result, int d_f) {
    if (args.empty()) throw Error("an undefined function needs at least one argument");
    Context ctx;
    ctx.add({"f", IdentType::function(args, result), {}});
    auto app = std::make_unique<Term>();
    app->kind = TermKind::Ident;
    app->name = "f";
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string name = "x" + std::to_string(i + 1);
        ctx.add({name, IdentType::of(args[i]), {}});
        auto arg = std::make_unique<Term>();
        arg->kind = TermKind::Ident;
        arg->name = name;
        app->args.push_back(std::move(arg));
    }
    Bounds bounds;
    bounds.fn_call_bound = d_f;
    return build_model(typecheck(*app, ctx), bounds);
}

SymbolicModel bounded_while_strategy(const TypedTerm& term, int d_w, const BuildLimits& limits) {
    Bounds bounds;
    bounds.while_depth = d_w;
    return build_model(term, bounds, limits);
}

std::string dump_model(const SymbolicModel& model) {
    std::ostringstream os;
    for (const auto& e : model.edges()) {
        os << e.from << " -[" << to_string(e.guard) << " | " << to_string(e.move) << " | ";
        if (e.fresh) os << "?" << e.fresh->symbol << ":" << e.fresh->bound << (e.fresh->input ? "" : " internal");
        os << "]-> " << e.to;
        switch (model.kind(e.to)) {
            case StateKind::Accept: os << " (accept)"; break;
            case StateKind::Fail: os << " (fail)"; break;
            case StateKind::Grey: os << " (grey)"; break;
            case StateKind::Overflow: os << " (overflow)"; break;
            case StateKind::Inner: break;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace gameprob
