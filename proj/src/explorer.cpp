#include "gameprob/explorer.hpp"

namespace gameprob {

const char* to_string(PlayClass c) {
    switch (c) {
        case PlayClass::Safe: return "SAFE";
        case PlayClass::Unsafe: return "UNSAFE";
        case PlayClass::Grey: return "GREY";
    }
    return "?";
}

std::vector<SymbolDomain> Play::domains() const {
    std::vector<SymbolDomain> d = inputs;
    d.insert(d.end(), internals.begin(), internals.end());
    return d;
}

namespace {

class Walker {
public:
    Walker(const SymbolicModel& model, std::size_t cap) : model_(model), cap_(cap) {}

    std::vector<Play> run() {
        walk(model_.initial());
        return std::move(plays_);
    }

private:
    void walk(StateId s) {
        const auto& out = model_.outgoing(s);
        if (out.empty()) {
            finish(s);
            return;
        }
        for (std::size_t e : out) {
            path_.push_back(e);
            walk(model_.edges()[e].to);
            path_.pop_back();
        }
    }

    void finish(StateId leaf) {
        if (plays_.size() >= cap_) {
            throw ResourceLimit("more than " + std::to_string(cap_) + " plays; lower the exploration bounds");
        }
        Play p;
        bool failed = false;
        std::vector<std::size_t> open;  // indices into p.calls
        for (std::size_t id : path_) {
            const Edge& e = model_.edges()[id];
            p.condition.add(e.guard);
            if (e.fresh) {
                (e.fresh->input ? p.inputs : p.internals).push_back({e.fresh->symbol, e.fresh->bound});
            }
            const Move& m = e.move;
            if (m.payload == Payload::Overflow) failed = true;
            if (!m.tag.empty() && m.tag.front() == "abort") failed = true;
            track_call(m, p.calls, open);
            if (m.payload != Payload::Tau) p.moves.push_back(m);
        }
        StateKind kind = model_.kind(leaf);
        if (failed) p.cls = PlayClass::Unsafe;
        else if (kind == StateKind::Grey) p.cls = PlayClass::Grey;
        else p.cls = PlayClass::Safe;
        if (kind == StateKind::Inner || (kind == StateKind::Accept && failed) || (kind == StateKind::Fail && !failed)) {
            throw InternalError("leaf state classification disagrees with its play");
        }
        plays_.push_back(std::move(p));
    }

    // Calls are well bracketed: an argument question belongs to the
    // innermost open invocation of its function.
    void track_call(const Move& m, std::vector<CallRecord>& calls, std::vector<std::size_t>& open) const {
        if (m.tag.empty()) return;
        auto fn = model_.functions().find(m.tag.front());
        if (fn == model_.functions().end()) return;
        auto innermost = [&]() -> CallRecord& {
            for (auto it = open.rbegin(); it != open.rend(); ++it) {
                if (calls[*it].function == m.tag.front()) return calls[*it];
            }
            throw InternalError("move " + to_string(m) + " outside any call of its function");
        };
        const bool question = m.polarity() == Polarity::Question;
        if (m.tag.size() == 1 && question) {
            open.push_back(calls.size());
            calls.push_back(CallRecord{fn->first, fn->second.arity, fn->second.bound, {}, false});
        } else if (m.tag.size() == 1) {
            innermost().returned = true;
            for (auto it = open.rbegin(); it != open.rend(); ++it) {
                if (calls[*it].function == m.tag.front()) {
                    open.erase(std::next(it).base());
                    break;
                }
            }
        } else if (question) {
            innermost().arg_calls.push_back(std::stoi(m.tag[1]));
        }
    }

    const SymbolicModel& model_;
    std::size_t cap_;
    std::vector<std::size_t> path_;
    std::vector<Play> plays_;
};

std::string join_domains(const std::vector<SymbolDomain>& ds) {
    std::string out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i) out += ",";
        out += ds[i].name + ":" + std::to_string(ds[i].bound);
    }
    return out;
}

}  // namespace

std::vector<Play> enumerate_play_list(const SymbolicModel& model, std::size_t cap) {
    if (!model.is_acyclic()) throw InternalError("cannot enumerate plays of a cyclic model");
    return Walker(model, cap).run();
}

PlaySets enumerate_plays(const SymbolicModel& model, std::size_t cap) {
    PlaySets sets;
    for (auto& p : enumerate_play_list(model, cap)) {
        switch (p.cls) {
            case PlayClass::Safe: sets.safe.push_back(std::move(p)); break;
            case PlayClass::Unsafe: sets.unsafe.push_back(std::move(p)); break;
            case PlayClass::Grey: sets.grey.push_back(std::move(p)); break;
        }
    }
    return sets;
}

std::string format_play(const Play& play) {
    std::string moves;
    for (std::size_t i = 0; i < play.moves.size(); ++i) {
        if (i) moves += ";";
        moves += to_string(play.moves[i]);
    }
    return std::string(to_string(play.cls)) + " | " + moves + " | " + to_string(play.condition) + " | " +
           join_domains(play.inputs) + " | " + join_domains(play.internals);
}

}  // namespace gameprob
