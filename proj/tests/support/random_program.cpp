#include "random_program.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace gameprob::testing {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

struct Fn {
    std::string name;
    std::vector<std::string> args;  // "com" or "int"
    bool returns_int = false;
};

class Generator {
public:
    Generator(std::mt19937_64& rng, const ProgramShape& shape) : rng_(rng), shape_(shape) {}

    std::string program() {
        std::ostringstream decls;
        auto bound = [&] { return uniform(rng_, 2, shape_.max_domain); };
        int k = bound();
        ints_.push_back("n");
        decls << "n:expint" << k;
        literal_limit_ = k;
        if (coin(rng_, 0.4)) {
            int k2 = bound();
            ints_.push_back("m");
            decls << ", m:expint" << k2;
            literal_limit_ = std::min(literal_limit_, k2);
        }
        if (coin(rng_, 0.3)) {
            bools_.push_back("b");
            decls << ", b:expbool";
        }
        if (coin(rng_, 0.3)) {
            int kv = bound();
            cells_.push_back("v");
            decls << ", v:varint" << kv;
            literal_limit_ = std::min(literal_limit_, kv);
        }
        if (coin(rng_, 0.4)) {
            Fn f{"f", {coin(rng_) ? "com" : "int"}, true};
            if (coin(rng_, 0.3)) f.args.push_back("com");
            int kf = bound();
            literal_limit_ = std::min(literal_limit_, kf);
            decls << ", f:";
            for (const auto& a : f.args) decls << (a == "com" ? "com" : "expint" + std::to_string(kf)) << "->";
            decls << "expint" << kf;
            fns_.push_back(f);
        }
        if (coin(rng_, 0.3)) {
            fns_.push_back(Fn{"g", {"int"}, false});
            int kg = bound();
            literal_limit_ = std::min(literal_limit_, kg);
            decls << ", g:expint" << kg << "->com";
        }
        decls << ", abort:com";
        std::string body = command(shape_.max_depth);
        return decls.str() + " |- " + body + " : com";
    }

private:
    std::string literal() { return std::to_string(uniform(rng_, 0, literal_limit_ - 1)); }

    std::string command(int depth) {
        const int choice = depth <= 1 ? uniform(rng_, 0, 3) : uniform(rng_, 0, 10);
        switch (choice) {
            case 0: return "skip";
            case 1: return "abort";
            case 2:
                if (!locals_.empty()) {
                    return locals_[static_cast<std::size_t>(uniform(rng_, 0, static_cast<int>(locals_.size()) - 1))] +
                           " := " + int_expr(depth - 1);
                }
                return "skip";
            case 3:
                if (!cells_.empty()) return cells_.front() + " := " + int_expr(depth - 1);
                return "abort";
            case 4:
            case 5: return "(" + command(depth - 1) + "; " + command(depth - 1) + ")";
            case 6:
                return "if " + bool_expr(depth - 1) + " then " + command(depth - 1) + " else " + command(depth - 1);
            case 7:
                if (loops_ < shape_.max_loops) {
                    ++loops_;
                    return "while " + bool_expr(depth - 1) + " do " + command(depth - 1);
                }
                return "skip";
            case 8:
            case 9: {
                std::string name = "x" + std::to_string(++local_count_);
                std::string init = int_expr(depth - 1);
                locals_.push_back(name);
                std::string body = command(depth - 1);
                locals_.pop_back();
                return "(new_int " + name + " := " + init + " in " + body + ")";
            }
            default:
                for (const auto& f : fns_) {
                    if (!f.returns_int) return call(f, depth);
                }
                return "skip";
        }
    }

    std::string call(const Fn& f, int depth) {
        std::string s = f.name + "(";
        for (std::size_t i = 0; i < f.args.size(); ++i) {
            if (i) s += ", ";
            s += f.args[i] == "com" ? command(depth - 1) : int_expr(depth - 1);
        }
        return s + ")";
    }

    std::string int_expr(int depth) {
        const int choice = depth <= 1 ? uniform(rng_, 0, 3) : uniform(rng_, 0, 7);
        switch (choice) {
            case 0: return literal();
            case 1: return ints_[static_cast<std::size_t>(uniform(rng_, 0, static_cast<int>(ints_.size()) - 1))];
            case 2:
                if (!locals_.empty()) {
                    return "!" + locals_[static_cast<std::size_t>(uniform(rng_, 0, static_cast<int>(locals_.size()) - 1))];
                }
                return literal();
            case 3:
                if (!cells_.empty()) return "!" + cells_.front();
                return ints_.front();
            case 4:
            case 5: return "(" + int_expr(depth - 1) + (coin(rng_) ? " + " : " - ") + int_expr(depth - 1) + ")";
            case 6: return "(" + literal() + " * " + int_expr(depth - 1) + ")";
            default:
                for (const auto& f : fns_) {
                    if (f.returns_int) return call(f, depth);
                }
                return literal();
        }
    }

    std::string bool_expr(int depth) {
        static const char* const kOps[] = {" < ", " <= ", " > ", " >= ", " = ", " != "};
        const int choice = depth <= 1 ? uniform(rng_, 0, 2) : uniform(rng_, 0, 6);
        switch (choice) {
            case 0:
                if (!bools_.empty()) return bools_.front();
                return coin(rng_) ? "true" : "false";
            case 1:
            case 2:
            case 3: return "(" + int_expr(depth - 1) + kOps[uniform(rng_, 0, 5)] + int_expr(depth - 1) + ")";
            case 4: return "(" + bool_expr(depth - 1) + " && " + bool_expr(depth - 1) + ")";
            case 5: return "(" + bool_expr(depth - 1) + " || " + bool_expr(depth - 1) + ")";
            default: return "not " + bool_expr(depth - 1);
        }
    }

    std::mt19937_64& rng_;
    ProgramShape shape_;
    std::vector<std::string> ints_;
    std::vector<std::string> bools_;
    std::vector<std::string> cells_;
    std::vector<Fn> fns_;
    std::vector<std::string> locals_;
    int local_count_ = 0;
    int loops_ = 0;
    int literal_limit_ = 1;
};

}  // namespace

std::string random_program(std::mt19937_64& rng, const ProgramShape& shape) { return Generator(rng, shape).program(); }

Bounds random_bounds(std::mt19937_64& rng, int max) {
    Bounds b;
    b.while_depth = uniform(rng, 0, max);
    b.fn_call_bound = uniform(rng, 1, max);
    return b;
}

Constraint random_conjunction(std::mt19937_64& rng, int vars, int max_atoms, int max_bound) {
    static const CmpOp kOps[] = {CmpOp::Lt, CmpOp::Le, CmpOp::Gt, CmpOp::Ge, CmpOp::Eq, CmpOp::Ne};
    Constraint c;
    const int atoms = uniform(rng, 0, max_atoms);
    for (int i = 0; i < atoms; ++i) {
        Poly lhs;
        for (int v = 0; v < vars; ++v) {
            if (coin(rng, 0.6)) lhs = lhs + Poly(uniform(rng, -3, 3)) * Poly::symbol(std::string(1, char('A' + v)));
        }
        if (coin(rng, 0.3)) lhs = lhs + Poly(uniform(rng, -max_bound, max_bound));
        Poly rhs = coin(rng, 0.7) ? Poly(uniform(rng, -max_bound, 2 * max_bound))
                                  : Poly::symbol(std::string(1, char('A' + uniform(rng, 0, vars - 1))));
        c.add(Atom{lhs, kOps[uniform(rng, 0, 5)], rhs});
    }
    return c;
}

}  // namespace gameprob::testing
