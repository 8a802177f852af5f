#pragma once

#include "gameprob/model.hpp"

#include <string>
#include <vector>

namespace gameprob {

enum class PlayClass { Safe, Unsafe, Grey };

const char* to_string(PlayClass c);

/// One invocation of an undefined function along a play.
struct CallRecord {
    std::string function;
    int arity = 0;
    int bound = 1;
    std::vector<int> arg_calls;  // 1-based argument indices, in call order
    bool returned = false;

    bool operator==(const CallRecord& o) const = default;
};

struct Play {
    std::vector<Move> moves;  // internal (tau) steps omitted
    Constraint condition;     // conjunction of all edge guards
    std::vector<SymbolDomain> inputs;     // environment answers, in instantiation order
    std::vector<SymbolDomain> internals;  // local-variable chain symbols
    std::vector<CallRecord> calls;        // in call order
    PlayClass cls = PlayClass::Safe;

    /// inputs followed by internals: the counting domain of the condition.
    std::vector<SymbolDomain> domains() const;
};

struct PlaySets {
    std::vector<Play> safe;
    std::vector<Play> unsafe;
    std::vector<Play> grey;

    std::size_t size() const { return safe.size() + unsafe.size() + grey.size(); }
};

inline constexpr std::size_t kDefaultPlayCap = 1'000'000;

/// Depth-first enumeration of every maximal path. Plays whose condition is
/// unsatisfiable are kept. A play is unsafe if it fires an `abort` move or
/// overflows, otherwise grey if it ends at a cut, otherwise safe.
/// Throws ResourceLimit past `cap` plays.
PlaySets enumerate_plays(const SymbolicModel& model, std::size_t cap = kDefaultPlayCap);

/// Same plays in enumeration order, unclassified into sets.
std::vector<Play> enumerate_play_list(const SymbolicModel& model, std::size_t cap = kDefaultPlayCap);

/// `CLASS | move;move;... | condition | inputs | internals`
std::string format_play(const Play& play);

}  // namespace gameprob
