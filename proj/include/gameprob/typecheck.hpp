#pragma once

#include "gameprob/ast.hpp"

#include <memory>

namespace gameprob {

/// A well-typed judgment: every node of `term` carries its type, and
/// cells carry their domains.
struct TypedTerm {
    std::shared_ptr<const Term> term;
    Context context;
    BaseType type;
    int literal_bound = 0;  // literals must lie in [0, literal_bound)
};

/// Throws TypeError on a type mismatch, an undeclared identifier, an
/// assignment to a non-variable, a literal outside the declared domains,
/// or an arity mismatch in an application.
TypedTerm typecheck(const Term& term, const Context& ctx);

/// Checks the term against the judgment's declared type as well.
TypedTerm typecheck(const Judgment& judgment);

}  // namespace gameprob
