#include "gameprob/probability.hpp"

namespace gameprob {

BigInt behaviour_count(int arity, int bound) { return behaviour_count_after(arity, bound, 0); }

BigInt behaviour_count_after(int arity, int bound, int calls) {
    BigInt total = 0;
    BigInt power = 1;
    for (int k = 0; k <= bound - 1 - calls; ++k) {
        total += power;
        power *= arity;
    }
    return total;
}

BigInt id_size(const Play& play) {
    BigInt size = 1;
    for (const auto& s : play.inputs) size *= s.bound;
    for (const auto& c : play.calls) size *= behaviour_count(c.arity, c.bound);
    return size;
}

BigInt open_call_multiplicity(const Play& play) {
    BigInt m = 1;
    for (const auto& c : play.calls) {
        if (!c.returned) m *= behaviour_count_after(c.arity, c.bound, static_cast<int>(c.arg_calls.size()));
    }
    return m;
}

PlayProbability play_probability(const Play& play) {
    PlayProbability p;
    CountResult counted = count(play.condition, play.domains());
    p.count = counted.count;
    p.systems = counted.systems_counted;
    p.id_size = id_size(play);
    p.multiplicity = open_call_multiplicity(play);
    p.value = Rational(p.count * p.multiplicity, p.id_size);
    return p;
}

ProbabilityReport aggregate(const PlaySets& plays) {
    ProbabilityReport r;
    auto score = [](const std::vector<Play>& ps, std::vector<ScoredPlay>& out, Rational& total) {
        for (const auto& p : ps) {
            out.push_back({&p, play_probability(p)});
            total += out.back().probability.value;
        }
    };
    score(plays.safe, r.safe, r.success);
    score(plays.unsafe, r.unsafe, r.failure);
    score(plays.grey, r.grey_plays, r.grey);
    r.confidence = 1 - r.grey;
    if (r.success + r.failure + r.grey != 1) {
        throw InternalError("play probabilities sum to " + to_fraction_string(r.success + r.failure + r.grey) +
                            ", not 1");
    }
    return r;
}

}  // namespace gameprob
