#include "gameprob/counter.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

namespace gameprob {
namespace {

// Removes variables pinned by a unit-coefficient equality (a row pair
// `a.x <= b`, `-a.x <= -b` with a_v = +-1) by substitution. Lattice points
// of the result are in bijection with those of the input.
bool eliminate_unit_equalities(LinearSystem& sys) {
    bool any = false;
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t i = 0; i < sys.rows.size() && !progress; ++i) {
            for (std::size_t j = i + 1; j < sys.rows.size() && !progress; ++j) {
                const auto& r = sys.rows[i];
                const auto& s = sys.rows[j];
                if (r.b != -s.b) continue;
                bool opposite = true;
                for (std::size_t k = 0; k < r.a.size() && opposite; ++k) opposite = r.a[k] == -s.a[k];
                if (!opposite) continue;
                auto v = std::find_if(r.a.begin(), r.a.end(), [](const BigInt& c) { return c == 1 || c == -1; });
                if (v == r.a.end()) continue;

                // x_v = sign * (b - sum_{u != v} a_u x_u)
                const std::size_t col = static_cast<std::size_t>(v - r.a.begin());
                const LinearSystem::Row eq = r;
                const BigInt sign = eq.a[col];
                std::vector<LinearSystem::Row> rows;
                for (std::size_t k = 0; k < sys.rows.size(); ++k) {
                    if (k == i || k == j) continue;
                    LinearSystem::Row row = sys.rows[k];
                    const BigInt f = row.a[col] * sign;
                    if (f != 0) {
                        for (std::size_t u = 0; u < row.a.size(); ++u) row.a[u] -= f * eq.a[u];
                        row.b -= f * eq.b;
                    }
                    row.a.erase(row.a.begin() + static_cast<std::ptrdiff_t>(col));
                    rows.push_back(std::move(row));
                }
                sys.rows = std::move(rows);
                sys.vars.erase(sys.vars.begin() + static_cast<std::ptrdiff_t>(col));
                progress = any = true;
            }
        }
    }
    return any;
}

template <class Int>
Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

template <class Int>
Int ceil_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

template <class Int>
struct Interval {
    std::optional<Int> lo;
    std::optional<Int> hi;

    bool empty() const { return lo && hi && *lo > *hi; }
    bool fixed() const { return lo && hi && *lo == *hi; }
};

template <class Int>
class BoxCounter {
public:
    struct Row {
        std::vector<Int> a;
        Int b;
    };

    BoxCounter(std::vector<Row> rows, std::size_t n) : rows_(std::move(rows)), n_(n) {}

    BigInt run(std::vector<Interval<Int>> box) { return count(std::move(box)); }

private:
    // Tightens every variable of `row` from the others' current ranges.
    // Returns false if the box became empty.
    bool tighten(const Row& row, std::vector<Interval<Int>>& box, bool& changed) const {
        for (std::size_t j = 0; j < n_; ++j) {
            if (row.a[j] == 0) continue;
            Int rest = row.b;
            bool bounded = true;
            for (std::size_t i = 0; i < n_ && bounded; ++i) {
                if (i == j || row.a[i] == 0) continue;
                const auto& iv = box[i];
                // subtract the minimum of a_i x_i
                if (row.a[i] > 0) {
                    if (!iv.lo) bounded = false;
                    else rest -= row.a[i] * *iv.lo;
                } else {
                    if (!iv.hi) bounded = false;
                    else rest -= row.a[i] * *iv.hi;
                }
            }
            if (!bounded) continue;
            auto& iv = box[j];
            if (row.a[j] > 0) {
                Int h = floor_div(rest, row.a[j]);
                if (!iv.hi || h < *iv.hi) {
                    iv.hi = h;
                    changed = true;
                }
            } else {
                Int l = ceil_div(rest, row.a[j]);
                if (!iv.lo || l > *iv.lo) {
                    iv.lo = l;
                    changed = true;
                }
            }
            if (iv.empty()) return false;
        }
        return true;
    }

    bool propagate(std::vector<Interval<Int>>& box, int max_rounds) const {
        for (int round = 0; round < max_rounds; ++round) {
            bool changed = false;
            for (const auto& row : rows_) {
                if (!tighten(row, box, changed)) return false;
            }
            if (!changed) break;
        }
        return true;
    }

    BigInt count(std::vector<Interval<Int>> box) const {
        if (!propagate(box, 32)) return 0;
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!box[i].lo || !box[i].hi) throw UnsupportedConstraint("variable is unbounded; cannot count");
            if (!box[i].fixed()) open.push_back(i);
        }
        if (open.empty()) {
            for (const auto& row : rows_) {
                Int lhs = 0;
                for (std::size_t i = 0; i < n_; ++i) lhs += row.a[i] * *box[i].lo;
                if (lhs > row.b) return 0;
            }
            return 1;
        }
        if (open.size() == 1) {
            // One pass is exact when a single variable is free.
            bool changed = false;
            for (const auto& row : rows_) {
                if (!tighten(row, box, changed)) return 0;
            }
            const auto& iv = box[open.front()];
            return BigInt(*iv.hi) - BigInt(*iv.lo) + 1;
        }
        std::size_t pick = *std::min_element(open.begin(), open.end(), [&](std::size_t x, std::size_t y) {
            return *box[x].hi - *box[x].lo < *box[y].hi - *box[y].lo;
        });
        BigInt total = 0;
        for (Int v = *box[pick].lo; v <= *box[pick].hi; ++v) {
            auto sub = box;
            sub[pick].lo = v;
            sub[pick].hi = v;
            total += count(std::move(sub));
        }
        return total;
    }

    std::vector<Row> rows_;
    std::size_t n_;
};

template <class Int>
BigInt count_with(const LinearSystem& sys) {
    const std::size_t n = sys.vars.size();
    std::vector<typename BoxCounter<Int>::Row> rows;
    for (const auto& r : sys.rows) {
        typename BoxCounter<Int>::Row row{std::vector<Int>(n), static_cast<Int>(r.b)};
        for (std::size_t i = 0; i < n; ++i) row.a[i] = static_cast<Int>(r.a[i]);
        rows.push_back(std::move(row));
    }
    std::vector<Interval<Int>> box(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sys.vars[i].bound > 0) {
            box[i].lo = Int(0);
            box[i].hi = Int(sys.vars[i].bound - 1);
        }
    }
    return BoxCounter<Int>(std::move(rows), n).run(std::move(box));
}

// Machine words are safe when every partial sum stays far below 2^63.
bool fits_machine_words(const LinearSystem& sys) {
    const BigInt coeff_limit = BigInt(1) << 24;
    const BigInt bound_limit = BigInt(1) << 36;
    for (const auto& v : sys.vars) {
        if (v.bound > (1 << 20)) return false;
    }
    for (const auto& r : sys.rows) {
        if (boost::multiprecision::abs(r.b) > bound_limit) return false;
        for (const auto& c : r.a) {
            if (boost::multiprecision::abs(c) > coeff_limit) return false;
        }
    }
    // Unbounded variables could be tightened to large values; stay exact.
    return std::all_of(sys.vars.begin(), sys.vars.end(), [](const SymbolDomain& d) { return d.bound > 0; }) &&
           sys.vars.size() <= 64;
}

}  // namespace

BigInt count_system(const LinearSystem& input, CountMethod* method) {
    LinearSystem sys = input;
    bool projected = eliminate_unit_equalities(sys);
    if (method != nullptr) *method = projected ? CountMethod::Projection : CountMethod::Enumeration;

    // Rows with no variables left are plain checks.
    std::vector<LinearSystem::Row> rows;
    for (auto& r : sys.rows) {
        if (std::all_of(r.a.begin(), r.a.end(), [](const BigInt& c) { return c == 0; })) {
            if (r.b < 0) return 0;
            continue;
        }
        rows.push_back(std::move(r));
    }
    sys.rows = std::move(rows);
    if (sys.vars.empty()) return 1;

    if (fits_machine_words(sys)) return count_with<long long>(sys);
    return count_with<BigInt>(sys);
}

CountResult count(const Constraint& c, const std::vector<SymbolDomain>& domains) {
    CountResult result;
    Constraint simplified = substitute_and_simplify(c);
    for (const auto& sys : normalize(simplified, domains)) {
        CountMethod m = CountMethod::Enumeration;
        result.count += count_system(sys, &m);
        if (m == CountMethod::Projection) result.method = CountMethod::Projection;
        ++result.systems_counted;
    }
    return result;
}

BigInt count_bruteforce(const Constraint& c, const std::vector<SymbolDomain>& domains, unsigned long long cap) {
    if (c.is_false()) return 0;
    BigInt points = 1;
    for (const auto& d : domains) points *= d.bound;
    if (points > cap) throw ResourceLimit("brute-force box has " + points.str() + " points (cap " + std::to_string(cap) + ")");
    for (const auto& s : c.symbols()) {
        if (std::none_of(domains.begin(), domains.end(), [&](const SymbolDomain& d) { return d.name == s; })) {
            throw UnsupportedConstraint("symbol '" + s + "' has no domain");
        }
    }

    auto holds_ll = [](CmpOp op, long long v) {
        switch (op) {
            case CmpOp::Lt: return v < 0;
            case CmpOp::Le: return v <= 0;
            case CmpOp::Gt: return v > 0;
            case CmpOp::Ge: return v >= 0;
            case CmpOp::Eq: return v == 0;
            case CmpOp::Ne: return v != 0;
        }
        return false;
    };

    // Linear atoms are compiled to machine-word rows; anything else is
    // evaluated through Poly.
    struct Compiled {
        std::vector<long long> a;
        long long k = 0;
        CmpOp op = CmpOp::Eq;
    };
    std::vector<Compiled> fast;
    std::vector<Atom> slow;
    for (const auto& atom : c.atoms()) {
        Poly d = atom.lhs - atom.rhs;
        bool small = d.is_linear();
        for (const auto& [m, coeff] : d.terms()) small = small && boost::multiprecision::abs(coeff) < (BigInt(1) << 40);
        if (!small) {
            slow.push_back(atom);
            continue;
        }
        Compiled cc{std::vector<long long>(domains.size()), static_cast<long long>(d.constant_term()), atom.op};
        for (std::size_t i = 0; i < domains.size(); ++i) cc.a[i] = static_cast<long long>(d.coeff(domains[i].name));
        fast.push_back(std::move(cc));
    }

    const std::size_t n = domains.size();
    if (std::any_of(domains.begin(), domains.end(), [](const SymbolDomain& d) { return d.bound < 1; })) return 0;
    std::vector<long long> x(n, 0);
    BigInt total = 0;
    for (;;) {
        bool ok = true;
        for (const auto& cc : fast) {
            long long v = cc.k;
            for (std::size_t i = 0; i < n; ++i) v += cc.a[i] * x[i];
            if (!holds_ll(cc.op, v)) {
                ok = false;
                break;
            }
        }
        if (ok && !slow.empty()) {
            std::map<std::string, BigInt> env;
            for (std::size_t i = 0; i < n; ++i) env[domains[i].name] = x[i];
            for (const auto& atom : slow) {
                if (!holds(atom.op, atom.lhs.evaluate(env), atom.rhs.evaluate(env))) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++total;

        std::size_t i = 0;
        while (i < n && ++x[i] == domains[i].bound) x[i++] = 0;
        if (i == n) break;
    }
    return total;
}

std::string export_latte(const LinearSystem& sys) {
    std::ostringstream os;
    os << sys.rows.size() << " " << sys.vars.size() + 1 << "\n";
    for (const auto& row : sys.rows) {
        os << row.b;
        for (const auto& a : row.a) os << " " << BigInt(-a);
        os << "\n";
    }
    return os.str();
}

LinearSystem import_latte(std::string_view text) {
    std::istringstream in{std::string(text)};
    auto fail = [](const std::string& msg) -> LinearSystem { throw ParseError({1, 1}, "latte: " + msg); };

    long long m = 0, cols = 0;
    if (!(in >> m >> cols) || m < 0 || cols < 1) return fail("bad header");
    LinearSystem sys;
    for (long long v = 1; v < cols; ++v) sys.vars.push_back({"x" + std::to_string(v), 0});
    for (long long r = 0; r < m; ++r) {
        LinearSystem::Row row;
        std::string tok;
        if (!(in >> tok)) return fail("missing row " + std::to_string(r + 1));
        row.b = BigInt(tok);
        for (long long c = 1; c < cols; ++c) {
            if (!(in >> tok)) return fail("short row " + std::to_string(r + 1));
            row.a.push_back(-BigInt(tok));
        }
        sys.rows.push_back(std::move(row));
    }
    std::string word;
    if (in >> word) {
        if (word != "linearity") return fail("unexpected '" + word + "'");
        long long k = 0;
        if (!(in >> k)) return fail("bad linearity line");
        for (long long i = 0; i < k; ++i) {
            long long idx = 0;
            if (!(in >> idx) || idx < 1 || idx > m) return fail("bad linearity index");
            LinearSystem::Row neg = sys.rows[static_cast<std::size_t>(idx - 1)];
            neg.b = -neg.b;
            for (auto& a : neg.a) a = -a;
            sys.rows.push_back(std::move(neg));
        }
    }
    return sys;
}

}  // namespace gameprob
