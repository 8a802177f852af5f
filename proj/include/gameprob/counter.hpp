#pragma once

// Exact lattice-point counting over bounded boxes, plus the LattE
// H-representation text format.

#include "gameprob/constraint.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gameprob {

enum class CountMethod {
    Enumeration,  // interval-propagating enumeration only
    Projection,   // unit equalities were eliminated first
};

struct CountResult {
    BigInt count;
    int systems_counted = 0;
    CountMethod method = CountMethod::Enumeration;
};

/// Number of integer points of one system.
BigInt count_system(const LinearSystem& sys, CountMethod* method = nullptr);

/// #(c) over the box given by `domains`. Simplifies, normalizes, and sums
/// the counts of the disjoint systems.
CountResult count(const Constraint& c, const std::vector<SymbolDomain>& domains);

inline constexpr unsigned long long kDefaultBruteForceCap = 10'000'000ULL;

/// Exhaustive enumeration of the box; test oracle. Throws ResourceLimit
/// when the box holds more than `cap` points.
BigInt count_bruteforce(const Constraint& c, const std::vector<SymbolDomain>& domains,
                        unsigned long long cap = kDefaultBruteForceCap);

/// LattE input: header `m n+1`, then one line `b -a1 ... -an` per row.
std::string export_latte(const LinearSystem& sys);

/// Reads the format written by export_latte (variables named x1..xn, box
/// rows kept as ordinary rows). A `linearity k i1 .. ik` line marks rows
/// as equalities. Throws ParseError.
LinearSystem import_latte(std::string_view text);

}  // namespace gameprob
