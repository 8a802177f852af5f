#pragma once

// Exhaustive differential oracle: runs the concrete interpreter against
// every environment behaviour and compares with the symbolic analysis.

#include "gameprob/analysis.hpp"
#include "gameprob/simulate.hpp"

#include <string>
#include <vector>

namespace gameprob::testing {

struct DiffReport {
    std::size_t runs = 0;
    bool exhausted = true;  // false when the run cap stopped the search
    Rational success;       // probability mass of concrete outcomes
    Rational failure;
    Rational grey;
    std::vector<std::string> mismatches;

    bool ok() const { return exhausted && mismatches.empty(); }
};

/// Enumerates every environment answer and every function behaviour
/// (weighted uniformly) and matches each concrete run with the unique
/// symbolic play whose moves and condition it realizes.
DiffReport differential(const Analysis& analysis, std::size_t max_runs = 2'000'000);

}  // namespace gameprob::testing
