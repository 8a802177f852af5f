#pragma once

// Linear-integer-arithmetic play conditions and their normalization into
// disjoint `Ax <= b` systems over a bounded box.

#include "gameprob/ast.hpp"
#include "gameprob/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gameprob {

/// Integer polynomial over named symbols. Monomials are sorted symbol lists;
/// the empty monomial is the constant term. Zero coefficients are never stored.
class Poly {
public:
    using Monomial = std::vector<std::string>;

    Poly() = default;
    Poly(long long c);  // NOLINT(google-explicit-constructor): constants read naturally
    static Poly constant(BigInt c);
    static Poly symbol(const std::string& name);

    bool is_constant() const;
    BigInt constant_term() const;
    bool is_linear() const;
    int degree() const;

    /// Coefficient of a degree-1 monomial.
    BigInt coeff(const std::string& sym) const;
    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    std::vector<std::string> symbols() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;

    /// Replaces `sym` by `value` everywhere.
    Poly substitute(const std::string& sym, const Poly& value) const;
    BigInt evaluate(const std::map<std::string, BigInt>& env) const;

    bool operator==(const Poly& o) const = default;

private:
    void add_term(const Monomial& m, const BigInt& c);
    std::map<Monomial, BigInt> terms_;
};

std::string to_string(const Poly& p);

/// Ordering used in atoms: CmpOp from the AST.
CmpOp negate(CmpOp op);
bool holds(CmpOp op, const BigInt& lhs, const BigInt& rhs);

/// lhs <op> rhs
struct Atom {
    Poly lhs;
    CmpOp op = CmpOp::Eq;
    Poly rhs;

    Atom negated() const { return {lhs, negate(op), rhs}; }
    bool operator==(const Atom& o) const = default;
};

std::string to_string(const Atom& a);

/// Conjunction of atoms; the empty conjunction is `true`.
class Constraint {
public:
    Constraint() = default;
    explicit Constraint(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
    static Constraint truth() { return {}; }
    static Constraint falsity();

    bool is_false() const { return false_; }
    bool is_true() const { return !false_ && atoms_.empty(); }
    const std::vector<Atom>& atoms() const { return atoms_; }

    Constraint& add(Atom a);
    Constraint& add(const Constraint& c);
    Constraint conj(const Constraint& c) const;

    std::vector<std::string> symbols() const;
    bool evaluate(const std::map<std::string, BigInt>& env) const;

    bool operator==(const Constraint& o) const = default;

private:
    std::vector<Atom> atoms_;
    bool false_ = false;
};

/// Infix atoms joined by `&&`, e.g. "X1 = 0 && X1 < N1"; "true", "false".
std::string to_string(const Constraint& c);

/// Inverse of to_string(Constraint). Throws ParseError.
Constraint parse_constraint(std::string_view text);

/// A symbol together with its domain [0, bound).
struct SymbolDomain {
    std::string name;
    int bound = 0;
    bool operator==(const SymbolDomain& o) const = default;
};

/// Rows `a . x <= b` over `vars`.
struct LinearSystem {
    struct Row {
        std::vector<BigInt> a;
        BigInt b;
        bool operator==(const Row& o) const = default;
    };

    std::vector<SymbolDomain> vars;
    std::vector<Row> rows;

    bool satisfied_by(const std::vector<BigInt>& point) const;
};

/// Propagates `X = constant` equalities through the conjunction; folds
/// constant atoms. The result has exactly the same solutions as `c`.
Constraint substitute_and_simplify(const Constraint& c);

/// Disjoint systems whose union is the set of solutions of `c` inside the
/// domain box. Each system starts with the box rows `x <= k-1`, `-x <= 0`
/// for every variable in `domains` order; each `!=` atom splits in two.
/// Throws UnsupportedConstraint on nonlinear atoms or unknown symbols.
std::vector<LinearSystem> normalize(const Constraint& c, const std::vector<SymbolDomain>& domains);

}  // namespace gameprob
