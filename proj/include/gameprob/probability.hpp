#pragma once

#include "gameprob/counter.hpp"
#include "gameprob/explorer.hpp"

#include <vector>

namespace gameprob {

/// Number of calling behaviours of an n-argument function that calls its
/// arguments at most d-1 times: 1 + n + ... + n^(d-1).
BigInt behaviour_count(int arity, int bound);

/// Behaviours still possible for an invocation cut off after `calls`
/// argument calls: 1 + n + ... + n^(d-1-calls).
BigInt behaviour_count_after(int arity, int bound, int calls);

/// #(ID_p): product of the input symbols' domain sizes times, per function
/// invocation started along the play, the behaviour count of its function
/// (so (1 + n + ... + n^(d-1))^m for m invocations). Internal symbols
/// contribute no factor.
BigInt id_size(const Play& play);

/// Behaviours of unfinished invocations compatible with the play prefix;
/// 1 when every invocation returned.
BigInt open_call_multiplicity(const Play& play);

struct PlayProbability {
    BigInt count;              // #(pc_p) over inputs and internals
    BigInt id_size;            // #(ID_p)
    BigInt multiplicity = 1;   // open_call_multiplicity
    Rational value;            // count * multiplicity / id_size
    int systems = 0;
};

/// Pr(p) = #(pc_p) / #(ID_p); 0 for unsatisfiable conditions.
PlayProbability play_probability(const Play& play);

struct ScoredPlay {
    const Play* play = nullptr;
    PlayProbability probability;
};

struct ProbabilityReport {
    Rational success;
    Rational failure;
    Rational grey;
    Rational confidence;
    std::vector<ScoredPlay> safe;
    std::vector<ScoredPlay> unsafe;
    std::vector<ScoredPlay> grey_plays;
};

/// Sums play probabilities per class. Throws InternalError unless the
/// three totals add up to exactly 1.
ProbabilityReport aggregate(const PlaySets& plays);

}  // namespace gameprob
