#include "gameprob/analysis.hpp"

#include <sstream>

namespace gameprob {

Analysis analyze(TypedTerm term, const AnalysisOptions& options) {
    Analysis a;
    a.term = std::move(term);
    a.bounds = options.bounds;
    BuildLimits limits;
    limits.max_leaves = options.play_cap;
    a.model = build_model(a.term, a.bounds, limits);
    a.plays = enumerate_play_list(a.model, options.play_cap);
    for (const auto& p : a.plays) {
        switch (p.cls) {
            case PlayClass::Safe: a.sets.safe.push_back(p); break;
            case PlayClass::Unsafe: a.sets.unsafe.push_back(p); break;
            case PlayClass::Grey: a.sets.grey.push_back(p); break;
        }
    }
    a.report = aggregate(a.sets);
    return a;
}

Analysis analyze_source(std::string_view source, const AnalysisOptions& options) {
    Judgment j = parse(source);
    return analyze(typecheck(j), options);
}

namespace {

// Pairs each play (enumeration order) with its scored probability.
std::vector<ScoredPlay> scored_in_order(const Analysis& a) {
    std::vector<ScoredPlay> out;
    std::size_t s = 0, u = 0, g = 0;
    for (const auto& p : a.plays) {
        switch (p.cls) {
            case PlayClass::Safe: out.push_back(a.report.safe[s++]); break;
            case PlayClass::Unsafe: out.push_back(a.report.unsafe[u++]); break;
            case PlayClass::Grey: out.push_back(a.report.grey_plays[g++]); break;
        }
    }
    return out;
}

nlohmann::json integer(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        return static_cast<long long>(v);
    }
    return v.str();
}

nlohmann::json rational(const Rational& r) {
    return {{"num", integer(numerator_of(r))}, {"den", integer(denominator_of(r))}};
}

nlohmann::json domains(const std::vector<SymbolDomain>& ds) {
    auto out = nlohmann::json::array();
    for (const auto& d : ds) out.push_back({{"name", d.name}, {"bound", d.bound}});
    return out;
}

std::string bounds_line(const Bounds& b) {
    std::ostringstream os;
    os << "while_depth=" << b.while_depth << " fn_bound=" << b.fn_call_bound;
    for (const auto& [id, d] : b.loop_depth) os << " loop" << id << "=" << d;
    for (const auto& [f, d] : b.fn_bound) os << " " << f << "=" << d;
    return os.str();
}

}  // namespace

std::string render_text(const Analysis& a) {
    std::ostringstream os;
    const auto& r = a.report;
    auto line = [&](const char* name, const Rational& v) {
        os << name << " = " << to_fraction_string(v) << " (" << to_percent_string(v) << ")\n";
    };
    os << "bounds: " << bounds_line(a.bounds) << "\n";
    os << "plays: safe=" << a.sets.safe.size() << " unsafe=" << a.sets.unsafe.size() << " grey=" << a.sets.grey.size()
       << "\n";
    line("success", r.success);
    line("failure", r.failure);
    line("grey", r.grey);
    line("confidence", r.confidence);
    os << "per-play:\n";
    std::size_t index = 1;
    for (const auto& sp : scored_in_order(a)) {
        const auto& pp = sp.probability;
        os << "  [" << index++ << "] " << to_string(sp.play->cls) << " " << pp.count;
        if (pp.multiplicity != 1) os << "*" << pp.multiplicity;
        os << "/" << pp.id_size << " | ";
        for (std::size_t i = 0; i < sp.play->moves.size(); ++i) os << (i ? ";" : "") << to_string(sp.play->moves[i]);
        os << " | " << to_string(sp.play->condition) << "\n";
    }
    return os.str();
}

nlohmann::json render_json(const Analysis& a) {
    nlohmann::json j;
    j["schema"] = 1;
    nlohmann::json loops = nlohmann::json::object();
    for (const auto& [id, d] : a.bounds.loop_depth) loops[std::to_string(id)] = d;
    nlohmann::json fns = nlohmann::json::object();
    for (const auto& [f, d] : a.bounds.fn_bound) fns[f] = d;
    j["bounds"] = {{"while_depth", a.bounds.while_depth},
                   {"fn_bound", a.bounds.fn_call_bound},
                   {"loop_overrides", loops},
                   {"fn_overrides", fns}};
    auto plays = nlohmann::json::array();
    std::size_t index = 1;
    for (const auto& sp : scored_in_order(a)) {
        const Play& p = *sp.play;
        auto moves = nlohmann::json::array();
        for (const auto& m : p.moves) moves.push_back(to_string(m));
        plays.push_back({{"index", index++},
                         {"class", to_string(p.cls)},
                         {"moves", moves},
                         {"condition", to_string(p.condition)},
                         {"inputs", domains(p.inputs)},
                         {"internals", domains(p.internals)},
                         {"count", integer(sp.probability.count)},
                         {"id_size", integer(sp.probability.id_size)},
                         {"multiplicity", integer(sp.probability.multiplicity)},
                         {"probability", rational(sp.probability.value)}});
    }
    j["plays"] = plays;
    j["counts"] = {{"safe", a.sets.safe.size()}, {"unsafe", a.sets.unsafe.size()}, {"grey", a.sets.grey.size()}};
    j["totals"] = {{"success", rational(a.report.success)},
                   {"failure", rational(a.report.failure)},
                   {"grey", rational(a.report.grey)},
                   {"confidence", rational(a.report.confidence)}};
    return j;
}

std::vector<std::pair<std::string, std::string>> latte_files(const Analysis& a) {
    std::vector<std::pair<std::string, std::string>> files;
    for (std::size_t i = 0; i < a.plays.size(); ++i) {
        auto systems = normalize(a.plays[i].condition, a.plays[i].domains());
        const std::string stem = "play_" + std::to_string(i + 1);
        for (std::size_t s = 0; s < systems.size(); ++s) {
            std::string name = systems.size() == 1 ? stem : stem + "_" + std::to_string(s + 1);
            files.emplace_back(name + ".hrep", export_latte(systems[s]));
        }
    }
    return files;
}

VerifyReport verify_counts(const Analysis& a, unsigned long long cap) {
    VerifyReport v;
    for (const auto& sp : scored_in_order(a)) {
        BigInt box = 1;
        for (const auto& d : sp.play->domains()) box *= d.bound;
        if (box > cap) {
            ++v.skipped;
            continue;
        }
        BigInt brute = count_bruteforce(sp.play->condition, sp.play->domains(), cap);
        if (brute != sp.probability.count) {
            throw InternalError("count mismatch for condition " + to_string(sp.play->condition) + ": " +
                                sp.probability.count.str() + " vs brute force " + brute.str());
        }
        ++v.checked;
    }
    return v;
}

}  // namespace gameprob
