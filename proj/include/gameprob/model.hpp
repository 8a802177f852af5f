#pragma once

// Symbolic game models: finite, acyclic guarded automata over symbolic
// moves, built from typed terms under the while and undefined-function
// exploration bounds.

#include "gameprob/constraint.hpp"
#include "gameprob/typecheck.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gameprob {

enum class Payload {
    Run,       // question to a command
    Done,      // answer of a command
    Q,         // question to an expression or cell read
    Value,     // answer carrying a value (fresh input symbol or expression)
    Write,     // write request to a free cell, carrying the value
    Ok,        // acknowledgement of a write
    Tau,       // internal step: branch or local assignment
    Cut,       // grey marker: exploration bound reached
    Overflow,  // store outside a local variable's domain
};

enum class Polarity { Question, Answer, Internal };

struct Move {
    Payload payload = Payload::Tau;
    std::vector<std::string> tag;  // e.g. {"f", "1"}; empty for the term itself
    Poly value;                    // Value / Write

    Polarity polarity() const;
    bool is_internal() const { return polarity() == Polarity::Internal; }
    bool operator==(const Move& o) const = default;

    static Move make(Payload p, std::vector<std::string> tag = {}, Poly value = {}) {
        return Move{p, std::move(tag), std::move(value)};
    }
};

/// "run", "q^n", "N1^n", "done^f,1", "write(X1 + 1)^v", "#cut", "overflow^x".
std::string to_string(const Move& m);

/// Instantiation of a fresh symbol `?N` over [0, bound).
struct Binder {
    std::string symbol;
    int bound = 0;
    bool input = true;  // environment answer (counts toward #(ID_p)); false for local-variable chains
    bool operator==(const Binder& o) const = default;
};

using StateId = std::size_t;

struct Edge {
    StateId from = 0;
    StateId to = 0;
    Constraint guard;
    Move move;
    std::optional<Binder> fresh;
};

enum class StateKind {
    Inner,
    Accept,    // top-level completion without abort
    Fail,      // top-level completion after abort
    Grey,      // reached through a cut edge
    Overflow,  // reached through an overflow edge
};

/// Signature and bound of an undefined function, as used by the model.
struct FunctionInfo {
    int arity = 0;
    int bound = 1;  // d_f: at most bound - 1 argument calls per invocation
    bool returns_com = false;
};

/// Exploration bounds. Overrides key loops by source order (1-based) and
/// functions by name.
struct Bounds {
    int while_depth = 3;
    int fn_call_bound = 5;
    std::map<int, int> loop_depth;
    std::map<std::string, int> fn_bound;

    int depth_for_loop(int loop_id) const;
    int bound_for_function(const std::string& name) const;
    void validate() const;  // throws Error on while_depth < 0 or fn bound < 1
};

class SymbolicModel {
public:
    StateId initial() const { return 0; }
    std::size_t state_count() const { return kinds_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& outgoing(StateId s) const { return out_[s]; }
    StateKind kind(StateId s) const { return kinds_[s]; }
    const std::map<std::string, FunctionInfo>& functions() const { return functions_; }

    std::vector<StateId> accepting() const;
    std::vector<StateId> failing() const;

    /// Topological check; build_model only produces acyclic models.
    bool is_acyclic() const;

    // Construction.
    StateId add_state();
    std::size_t add_edge(Edge e);
    void set_kind(StateId s, StateKind k) { kinds_[s] = k; }
    void declare_function(const std::string& name, FunctionInfo info) { functions_[name] = info; }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<StateKind> kinds_;
    std::map<std::string, FunctionInfo> functions_;
};

struct BuildLimits {
    std::size_t max_leaves = 1'000'000;
    std::size_t max_edges = 50'000'000;
};

/// Symbolic model of a typed term. Each read of a free expression
/// identifier binds one fresh input symbol; each store to a local variable
/// binds one fresh internal symbol constrained by equality to the stored
/// expression. Throws ResourceLimit when `limits` are exceeded.
SymbolicModel build_model(const TypedTerm& term, const Bounds& bounds, const BuildLimits& limits = {});

/// Model of `f : sig |- f(x1, ..., xn)` where each xi is a free identifier
/// of the i-th argument type: a question to f, at most d_f - 1 argument
/// calls in any order, then a fresh result. Has sum_{k<d_f} n^k plays.
SymbolicModel undefined_function_strategy(const std::vector<BaseType>& args, BaseType result, int d_f);

/// Model of a term whose loops are all unrolled to `d_w` iterations, the
/// (d_w+1)-th true guard leading to a cut edge.
SymbolicModel bounded_while_strategy(const TypedTerm& term, int d_w, const BuildLimits& limits = {});

/// One line per edge: `state -[guard | move | fresh]-> state`.
std::string dump_model(const SymbolicModel& model);

}  // namespace gameprob
