#include "gameprob/constraint.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace gameprob {

// ---------------------------------------------------------------- Poly

Poly::Poly(long long c) {
    if (c != 0) terms_[{}] = c;
}

Poly Poly::constant(BigInt c) {
    Poly p;
    p.add_term({}, c);
    return p;
}

Poly Poly::symbol(const std::string& name) {
    Poly p;
    p.terms_[{name}] = 1;
    return p;
}

void Poly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

BigInt Poly::constant_term() const {
    auto it = terms_.find({});
    return it == terms_.end() ? BigInt(0) : it->second;
}

int Poly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

bool Poly::is_linear() const { return degree() <= 1; }

BigInt Poly::coeff(const std::string& sym) const {
    auto it = terms_.find({sym});
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::string> Poly::symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_) out.insert(m.begin(), m.end());
    return {out.begin(), out.end()};
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

Poly Poly::substitute(const std::string& sym, const Poly& value) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(c);
        for (const auto& s : m) term = term * (s == sym ? value : Poly::symbol(s));
        r = r + term;
    }
    return r;
}

BigInt Poly::evaluate(const std::map<std::string, BigInt>& env) const {
    BigInt total = 0;
    for (const auto& [m, c] : terms_) {
        BigInt v = c;
        for (const auto& s : m) {
            auto it = env.find(s);
            if (it == env.end()) throw UnsupportedConstraint("no value for symbol '" + s + "'");
            v *= it->second;
        }
        total += v;
    }
    return total;
}

std::string to_string(const Poly& p) {
    if (p.terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Poly::Monomial& m, const BigInt& c) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.empty()) {
            os << mag;
            return;
        }
        if (mag != 1) os << mag << "*";
        for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "*" : "") << m[i];
    };
    // Symbolic part first, constant last: "X1 + 1".
    for (const auto& [m, c] : p.terms()) {
        if (!m.empty()) emit(m, c);
    }
    if (auto c = p.constant_term(); c != 0) emit({}, c);
    return os.str();
}

// ---------------------------------------------------------------- Atom

CmpOp negate(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return CmpOp::Ge;
        case CmpOp::Le: return CmpOp::Gt;
        case CmpOp::Gt: return CmpOp::Le;
        case CmpOp::Ge: return CmpOp::Lt;
        case CmpOp::Eq: return CmpOp::Ne;
        case CmpOp::Ne: return CmpOp::Eq;
    }
    return op;
}

bool holds(CmpOp op, const BigInt& l, const BigInt& r) {
    switch (op) {
        case CmpOp::Lt: return l < r;
        case CmpOp::Le: return l <= r;
        case CmpOp::Gt: return l > r;
        case CmpOp::Ge: return l >= r;
        case CmpOp::Eq: return l == r;
        case CmpOp::Ne: return l != r;
    }
    return false;
}

std::string to_string(const Atom& a) { return to_string(a.lhs) + " " + to_string(a.op) + " " + to_string(a.rhs); }

// ---------------------------------------------------------------- Constraint

Constraint Constraint::falsity() {
    Constraint c;
    c.false_ = true;
    return c;
}

Constraint& Constraint::add(Atom a) {
    if (!false_) atoms_.push_back(std::move(a));
    return *this;
}

Constraint& Constraint::add(const Constraint& c) {
    if (c.false_) {
        false_ = true;
        atoms_.clear();
    } else if (!false_) {
        atoms_.insert(atoms_.end(), c.atoms_.begin(), c.atoms_.end());
    }
    return *this;
}

Constraint Constraint::conj(const Constraint& c) const {
    Constraint r = *this;
    r.add(c);
    return r;
}

std::vector<std::string> Constraint::symbols() const {
    std::set<std::string> out;
    for (const auto& a : atoms_) {
        for (auto& s : a.lhs.symbols()) out.insert(s);
        for (auto& s : a.rhs.symbols()) out.insert(s);
    }
    return {out.begin(), out.end()};
}

bool Constraint::evaluate(const std::map<std::string, BigInt>& env) const {
    if (false_) return false;
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [&](const Atom& a) { return holds(a.op, a.lhs.evaluate(env), a.rhs.evaluate(env)); });
}

std::string to_string(const Constraint& c) {
    if (c.is_false()) return "false";
    if (c.atoms().empty()) return "true";
    std::string out;
    for (std::size_t i = 0; i < c.atoms().size(); ++i) {
        if (i) out += " && ";
        out += to_string(c.atoms()[i]);
    }
    return out;
}

namespace {

class ConstraintParser {
public:
    explicit ConstraintParser(std::string_view s) : s_(s) {}

    Constraint parse() {
        skip_ws();
        Constraint c;
        do {
            skip_ws();
            if (word("true")) continue;
            if (word("false")) {
                c = Constraint::falsity();
                continue;
            }
            Poly l = sum();
            CmpOp op = relation();
            Poly r = sum();
            c.add(Atom{std::move(l), op, std::move(r)});
        } while (literal("&&"));
        skip_ws();
        if (pos_ != s_.size()) error("unexpected trailing text");
        return c;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        throw ParseError({1, static_cast<int>(pos_) + 1}, "constraint: " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool literal(std::string_view lit) {
        skip_ws();
        if (s_.substr(pos_, lit.size()) != lit) return false;
        pos_ += lit.size();
        return true;
    }

    bool word(std::string_view w) {
        skip_ws();
        if (s_.substr(pos_, w.size()) != w) return false;
        std::size_t end = pos_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
        pos_ = end;
        return true;
    }

    CmpOp relation() {
        if (literal("<=")) return CmpOp::Le;
        if (literal(">=")) return CmpOp::Ge;
        if (literal("!=")) return CmpOp::Ne;
        if (literal("==")) return CmpOp::Eq;
        if (literal("<")) return CmpOp::Lt;
        if (literal(">")) return CmpOp::Gt;
        if (literal("=")) return CmpOp::Eq;
        error("expected a relation");
    }

    Poly sum() {
        Poly p = literal("-") ? -product() : product();
        for (;;) {
            if (literal("+")) p = p + product();
            else if (literal("-")) p = p - product();
            else return p;
        }
    }

    Poly product() {
        Poly p = factor();
        while (literal("*")) p = p * factor();
        return p;
    }

    Poly factor() {
        skip_ws();
        if (literal("(")) {
            Poly p = sum();
            if (!literal(")")) error("expected ')'");
            return p;
        }
        std::size_t start = pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly::constant(BigInt(std::string(s_.substr(start, pos_ - start))));
        }
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return Poly::symbol(std::string(s_.substr(start, pos_ - start)));
        }
        error("expected a number or symbol");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

// `a . x + c` with `a` over `vars`.
struct Affine {
    std::vector<BigInt> a;
    BigInt c;
};

Affine to_affine(const Poly& p, const std::vector<SymbolDomain>& vars) {
    Affine out{std::vector<BigInt>(vars.size()), p.constant_term()};
    for (const auto& [m, c] : p.terms()) {
        if (m.empty()) continue;
        if (m.size() > 1) throw UnsupportedConstraint("nonlinear term in constraint: " + to_string(p));
        auto it = std::find_if(vars.begin(), vars.end(), [&](const SymbolDomain& d) { return d.name == m[0]; });
        if (it == vars.end()) throw UnsupportedConstraint("symbol '" + m[0] + "' has no domain");
        out.a[static_cast<std::size_t>(it - vars.begin())] = c;
    }
    return out;
}

// If `a` pins a single symbol to a constant (c*X = k with c | k), returns it.
std::optional<std::pair<std::string, BigInt>> binding(const Atom& a) {
    if (a.op != CmpOp::Eq) return std::nullopt;
    Poly d = a.lhs - a.rhs;
    if (!d.is_linear()) return std::nullopt;
    std::optional<std::pair<std::string, BigInt>> found;
    for (const auto& [m, c] : d.terms()) {
        if (m.empty()) continue;
        if (found) return std::nullopt;
        found = {m[0], c};
    }
    if (!found) return std::nullopt;
    BigInt k = -d.constant_term();
    if (k % found->second != 0) return std::nullopt;
    return std::make_pair(found->first, BigInt(k / found->second));
}

}  // namespace

Constraint parse_constraint(std::string_view text) { return ConstraintParser(text).parse(); }

bool LinearSystem::satisfied_by(const std::vector<BigInt>& point) const {
    for (const auto& row : rows) {
        BigInt lhs = 0;
        for (std::size_t i = 0; i < row.a.size(); ++i) lhs += row.a[i] * point[i];
        if (lhs > row.b) return false;
    }
    return true;
}

Constraint substitute_and_simplify(const Constraint& c) {
    if (c.is_false()) return c;
    std::vector<Atom> atoms = c.atoms();
    std::vector<bool> pinned(atoms.size(), false);

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (pinned[i]) continue;
            Poly d = atoms[i].lhs - atoms[i].rhs;
            if (d.is_constant()) continue;
            auto b = binding(atoms[i]);
            if (!b) {
                // c*X = k with c not dividing k has no integer solution.
                if (atoms[i].op == CmpOp::Eq && d.is_linear() && d.symbols().size() == 1) return Constraint::falsity();
                continue;
            }
            const auto& [sym, value] = *b;
            atoms[i] = Atom{Poly::symbol(sym), CmpOp::Eq, Poly::constant(value)};
            pinned[i] = true;
            changed = true;
            for (std::size_t j = 0; j < atoms.size(); ++j) {
                if (j == i) continue;
                atoms[j].lhs = atoms[j].lhs.substitute(sym, Poly::constant(value));
                atoms[j].rhs = atoms[j].rhs.substitute(sym, Poly::constant(value));
            }
        }
    }

    Constraint out;
    for (const auto& a : atoms) {
        Poly d = a.lhs - a.rhs;
        if (d.is_constant()) {
            if (!holds(a.op, d.constant_term(), 0)) return Constraint::falsity();
            continue;
        }
        if (std::find(out.atoms().begin(), out.atoms().end(), a) == out.atoms().end()) out.add(a);
    }
    return out;
}

std::vector<LinearSystem> normalize(const Constraint& c, const std::vector<SymbolDomain>& domains) {
    if (c.is_false()) return {};
    const std::size_t n = domains.size();

    LinearSystem base;
    base.vars = domains;
    for (std::size_t i = 0; i < n; ++i) {
        if (domains[i].bound < 1) throw UnsupportedConstraint("empty domain for '" + domains[i].name + "'");
        std::vector<BigInt> up(n), down(n);
        up[i] = 1;
        down[i] = -1;
        base.rows.push_back({up, domains[i].bound - 1});
        base.rows.push_back({down, 0});
    }

    std::vector<LinearSystem> systems{base};
    auto add_row = [&](std::vector<LinearSystem>& sys, std::vector<BigInt> a, BigInt b) {
        for (auto& s : sys) s.rows.push_back({a, b});
    };

    for (const auto& atom : c.atoms()) {
        // lhs - rhs = a.x + k  <op>  0   =>   a.x <op> -k
        Affine d = to_affine(atom.lhs - atom.rhs, domains);
        BigInt b = -d.c;
        bool constant = std::all_of(d.a.begin(), d.a.end(), [](const BigInt& v) { return v == 0; });
        if (constant) {
            if (!holds(atom.op, 0, b)) return {};
            continue;
        }
        std::vector<BigInt> neg(n);
        for (std::size_t i = 0; i < n; ++i) neg[i] = -d.a[i];
        switch (atom.op) {
            case CmpOp::Le: add_row(systems, d.a, b); break;
            case CmpOp::Lt: add_row(systems, d.a, b - 1); break;
            case CmpOp::Ge: add_row(systems, neg, -b); break;
            case CmpOp::Gt: add_row(systems, neg, -b - 1); break;
            case CmpOp::Eq:
                add_row(systems, d.a, b);
                add_row(systems, neg, -b);
                break;
            case CmpOp::Ne: {
                std::vector<LinearSystem> above = systems;
                add_row(systems, d.a, b - 1);
                add_row(above, neg, -b - 1);
                systems.insert(systems.end(), above.begin(), above.end());
                break;
            }
        }
    }
    return systems;
}

}  // namespace gameprob
