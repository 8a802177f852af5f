#pragma once

// End-to-end pipeline: parse, typecheck, build the model, enumerate plays,
// count and aggregate. Plus report rendering.

#include "gameprob/parser.hpp"
#include "gameprob/probability.hpp"
#include "gameprob/typecheck.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gameprob {

struct AnalysisOptions {
    Bounds bounds;
    std::size_t play_cap = kDefaultPlayCap;
};

struct Analysis {
    TypedTerm term;
    Bounds bounds;
    SymbolicModel model;
    std::vector<Play> plays;  // enumeration order
    PlaySets sets;
    ProbabilityReport report;  // points into `sets`
};

Analysis analyze(TypedTerm term, const AnalysisOptions& options);
Analysis analyze_source(std::string_view source, const AnalysisOptions& options);

/// Human-readable report: totals as exact fractions and percentages,
/// bounds, class counts and one line per play.
std::string render_text(const Analysis& a);

/// Versioned machine-readable report (`"schema": 1`).
nlohmann::json render_json(const Analysis& a);

/// (file name, contents) for every normalized system of every play
/// condition: `play_<i>.hrep`, or `play_<i>_<j>.hrep` when a `!=` split
/// produced several systems. Plays are numbered from 1 in enumeration order.
std::vector<std::pair<std::string, std::string>> latte_files(const Analysis& a);

struct VerifyReport {
    std::size_t checked = 0;
    std::size_t skipped = 0;  // box too large for brute force
};

/// Recounts every play condition by brute force. Throws InternalError on
/// any disagreement.
VerifyReport verify_counts(const Analysis& a, unsigned long long cap = kDefaultBruteForceCap);

}  // namespace gameprob
