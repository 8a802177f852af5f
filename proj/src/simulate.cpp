#include "gameprob/simulate.hpp"

namespace gameprob {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Success: return "success";
        case Outcome::Abort: return "abort";
        case Outcome::ExceededBound: return "exceeded-bound";
    }
    return "?";
}

namespace {

// Thrown to stop execution early.
struct Halt {
    Outcome outcome;
};

class Interpreter {
public:
    Interpreter(const Context& ctx, ConcreteScript script, const Bounds& bounds)
        : ctx_(ctx), script_(std::move(script)), bounds_(bounds) {}

    SimulationResult run(const Term& t) {
        try {
            eval(t);
            result_.outcome = aborted_ ? Outcome::Abort : Outcome::Success;
        } catch (const Halt& h) {
            result_.outcome = aborted_ ? Outcome::Abort : h.outcome;
        }
        return std::move(result_);
    }

private:
    long long answer(const std::string& ident, int domain) {
        if (next_ >= script_.answers.size()) throw ScriptUnderrun(ScriptUnderrun::Need::Answer, ident, domain);
        long long v = script_.answers[next_++];
        if (v < 0 || v >= domain) {
            throw ScriptError("answer " + std::to_string(v) + " for '" + ident + "' outside [0, " +
                              std::to_string(domain) + ")");
        }
        result_.inputs.push_back({ident, v});
        return v;
    }

    long long eval(const Term& t) {
        switch (t.kind) {
            case TermKind::Skip: return 0;
            case TermKind::IntLit:
            case TermKind::BoolLit: return t.value;
            case TermKind::Ident: return identifier(t);
            case TermKind::Deref:
                if (t.free_var) return answer(t.name, t.var_bound);
                return locals_.at(t.name).back();
            case TermKind::Assign: {
                long long v = eval(*t.args[0]);
                if (t.free_var) return 0;
                locals_.at(t.name).back() = checked(v, t.var_bound);
                return 0;
            }
            case TermKind::New: {
                long long v = checked(eval(*t.args[0]), t.var_bound);
                locals_[t.name].push_back(v);
                long long r = eval(*t.args[1]);
                locals_[t.name].pop_back();
                return r;
            }
            case TermKind::Seq:
                eval(*t.args[0]);
                return eval(*t.args[1]);
            case TermKind::Arith: {
                long long l = eval(*t.args[0]);
                long long r = eval(*t.args[1]);
                switch (t.arith) {
                    case ArithOp::Add: return l + r;
                    case ArithOp::Sub: return l - r;
                    case ArithOp::Mul: return l * r;
                }
                return 0;
            }
            case TermKind::Cmp: {
                long long l = eval(*t.args[0]);
                long long r = eval(*t.args[1]);
                return holds(t.cmp, l, r) ? 1 : 0;
            }
            case TermKind::And: return eval(*t.args[0]) ? eval(*t.args[1]) : 0;
            case TermKind::Or: return eval(*t.args[0]) ? 1 : eval(*t.args[1]);
            case TermKind::Not: return 1 - eval(*t.args[0]);
            case TermKind::If: return eval(*t.args[0]) ? eval(*t.args[1]) : eval(*t.args[2]);
            case TermKind::While: {
                const int depth = bounds_.depth_for_loop(t.loop_id);
                for (int i = 0;; ++i) {
                    if (!eval(*t.args[0])) return 0;
                    if (i >= depth) throw Halt{Outcome::ExceededBound};
                    eval(*t.args[1]);
                }
            }
        }
        return 0;
    }

    long long checked(long long v, int bound) {
        if (v < 0 || v >= bound) throw Halt{Outcome::Abort};
        return v;
    }

    long long identifier(const Term& t) {
        const ContextEntry& e = *ctx_.find(t.name);
        if (e.type.is_function()) return call(t, e.type);
        if (e.type.base.is_com()) {
            if (t.name == "abort") aborted_ = true;
            return 0;
        }
        return answer(t.name, e.type.base.domain_size());
    }

    long long call(const Term& t, const IdentType& sig) {
        auto& queue = script_.behaviors[t.name];
        if (queue.empty()) throw ScriptUnderrun(ScriptUnderrun::Need::Behavior, t.name, 0);
        FnBehavior b = queue.front();
        queue.pop_front();
        const int bound = bounds_.bound_for_function(t.name);
        if (static_cast<int>(b.arg_calls.size()) > bound - 1) {
            throw ScriptError("behaviour of '" + t.name + "' calls its arguments more than " +
                              std::to_string(bound - 1) + " times");
        }
        std::size_t index = result_.calls.size();
        result_.calls.push_back(CallRecord{t.name, static_cast<int>(sig.args.size()), bound, {}, false});
        for (int a : b.arg_calls) {
            if (a < 1 || a > static_cast<int>(sig.args.size())) {
                throw ScriptError("behaviour of '" + t.name + "' calls nonexistent argument " + std::to_string(a));
            }
            result_.calls[index].arg_calls.push_back(a);
            eval(*t.args[static_cast<std::size_t>(a - 1)]);
        }
        result_.calls[index].returned = true;
        if (sig.base.is_com()) return 0;
        const int domain = sig.base.domain_size();
        if (b.result < 0 || b.result >= domain) {
            throw ScriptError("result " + std::to_string(b.result) + " of '" + t.name + "' outside [0, " +
                              std::to_string(domain) + ")");
        }
        result_.inputs.push_back({t.name, b.result});
        return b.result;
    }

    const Context& ctx_;
    ConcreteScript script_;
    const Bounds& bounds_;
    std::size_t next_ = 0;
    std::map<std::string, std::vector<long long>> locals_;
    bool aborted_ = false;
    SimulationResult result_;
};

}  // namespace

SimulationResult simulate_concrete(const TypedTerm& term, const ConcreteScript& script, const Bounds& bounds) {
    bounds.validate();
    return Interpreter(term.context, script, bounds).run(*term.term);
}

}  // namespace gameprob
