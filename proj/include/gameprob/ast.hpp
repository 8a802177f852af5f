#pragma once

// Abstract syntax of open terms: types, free-identifier contexts and terms.

#include "gameprob/error.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gameprob {

enum class BaseKind { Com, ExpBool, ExpInt };

/// com, expbool, or expint_k with values in [0, k).
struct BaseType {
    BaseKind kind = BaseKind::Com;
    int bound = 0;  // k for expint; 0 for an unbounded intermediate integer

    static BaseType com() { return {BaseKind::Com, 0}; }
    static BaseType boolean() { return {BaseKind::ExpBool, 0}; }
    static BaseType integer(int k) { return {BaseKind::ExpInt, k}; }

    bool is_com() const { return kind == BaseKind::Com; }
    bool is_bool() const { return kind == BaseKind::ExpBool; }
    bool is_int() const { return kind == BaseKind::ExpInt; }

    /// Number of values an environment answer of this type can take.
    int domain_size() const { return is_bool() ? 2 : bound; }

    bool same_kind(const BaseType& o) const { return kind == o.kind; }
    bool operator==(const BaseType& o) const = default;
};

/// Type of a free identifier: a base type, an integer cell, or a
/// first-order function over base types.
struct IdentType {
    enum class Kind { Base, Var, Function };

    Kind kind = Kind::Base;
    BaseType base;               // Base: the type; Function: the result type
    int var_bound = 0;           // Var: cell holds values in [0, var_bound)
    std::vector<BaseType> args;  // Function only, nonempty

    static IdentType of(BaseType b) { return {Kind::Base, b, 0, {}}; }
    static IdentType variable(int k) { return {Kind::Var, BaseType::integer(k), k, {}}; }
    static IdentType function(std::vector<BaseType> args, BaseType result) {
        return {Kind::Function, result, 0, std::move(args)};
    }

    bool is_function() const { return kind == Kind::Function; }
    bool is_var() const { return kind == Kind::Var; }
    bool operator==(const IdentType& o) const = default;
};

struct ContextEntry {
    std::string name;
    IdentType type;
    SourceLoc loc;

    /// Label used as the superscript on this identifier's moves.
    const std::string& tag() const { return name; }

    /// Ignores the source location.
    bool operator==(const ContextEntry& o) const { return name == o.name && type == o.type; }
};

/// Ordered free-identifier environment (Gamma).
class Context {
public:
    /// Throws ParseError on a duplicate name.
    void add(ContextEntry entry);

    const ContextEntry* find(const std::string& name) const;
    const std::vector<ContextEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Largest K among declared expint/varint types (including function
    /// signatures), or 0 when there is none.
    int max_bound() const;

    bool operator==(const Context& o) const = default;

private:
    std::vector<ContextEntry> entries_;
};

enum class TermKind {
    Skip,
    IntLit,
    BoolLit,
    Ident,   // free identifier use; `args` non-empty for applications
    New,     // new_int name := args[0] in args[1]
    Deref,   // !name
    Assign,  // name := args[0]
    Seq,     // args[0] ; args[1]
    Arith,   // args[0] op args[1]
    Cmp,     // args[0] op args[1]
    And,
    Or,
    Not,
    If,      // args: guard, then, else
    While,   // args: guard, body
};

enum class ArithOp { Add, Sub, Mul };
enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne };

const char* to_string(ArithOp op);
const char* to_string(CmpOp op);

struct Term;
using TermPtr = std::unique_ptr<Term>;

struct Term {
    TermKind kind = TermKind::Skip;
    SourceLoc loc;
    std::string name;        // Ident, New, Deref, Assign
    long long value = 0;     // IntLit; BoolLit uses 0/1
    ArithOp arith = ArithOp::Add;
    CmpOp cmp = CmpOp::Eq;
    int new_bound = 0;       // New: explicit K from `new_intK`, else 0
    int loop_id = 0;         // While: 1-based source order
    std::vector<TermPtr> args;

    // Filled in by typecheck().
    BaseType type;
    int var_bound = 0;       // Deref/Assign/New: domain of the cell
    bool free_var = false;   // Deref/Assign: cell is a free varint identifier

    TermPtr clone() const;
};

/// Structural equality, ignoring source locations and type annotations.
bool same_shape(const Term& a, const Term& b);

/// `<decls> |- <term> : <type>`
struct Judgment {
    Context context;
    TermPtr term;
    BaseType declared;
};

std::string to_string(const BaseType& t);
std::string to_string(const IdentType& t);

}  // namespace gameprob
