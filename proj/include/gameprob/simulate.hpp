#pragma once

// Concrete interpreter for typed terms against a scripted environment.
// Used as a differential oracle for the symbolic pipeline.

#include "gameprob/explorer.hpp"
#include "gameprob/model.hpp"
#include "gameprob/typecheck.hpp"

#include <deque>
#include <map>
#include <string>
#include <vector>

namespace gameprob {

/// One environment-chosen behaviour of an undefined function: which
/// arguments it calls (1-based, in order) and the value it returns.
struct FnBehavior {
    std::vector<int> arg_calls;
    long long result = 0;  // ignored for com results
};

struct ConcreteScript {
    std::vector<long long> answers;  // one per expression read / cell read, in order
    std::map<std::string, std::deque<FnBehavior>> behaviors;  // per function, one per invocation
};

enum class Outcome { Success, Abort, ExceededBound };

const char* to_string(Outcome o);

/// A value the environment supplied, in instantiation order.
struct TraceEntry {
    std::string ident;
    long long value = 0;
};

struct SimulationResult {
    Outcome outcome = Outcome::Success;
    std::vector<TraceEntry> inputs;  // answers and function results, in order
    std::vector<CallRecord> calls;   // invocations, in call order
};

/// The script ran out. Says what the environment was asked for next.
class ScriptUnderrun : public Error {
public:
    enum class Need { Answer, Behavior };

    ScriptUnderrun(Need need, std::string ident, int domain)
        : Error("script underrun: no " + std::string(need == Need::Answer ? "answer" : "behaviour") + " for '" +
                ident + "'"),
          need(need),
          ident(std::move(ident)),
          domain(domain) {}

    Need need;
    std::string ident;
    int domain;  // Answer: size of the value domain; Behavior: unused
};

/// Value outside its domain, or a behaviour with too many/invalid calls.
class ScriptError : public Error {
public:
    using Error::Error;
};

/// Runs `term` against `script`. Overflowing stores count as Abort; a loop
/// whose guard holds for the (d_w+1)-th time yields ExceededBound unless an
/// abort already happened.
SimulationResult simulate_concrete(const TypedTerm& term, const ConcreteScript& script, const Bounds& bounds);

}  // namespace gameprob
