// gameprob: success/failure/grey probabilities of open programs.

#include "gameprob/analysis.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode {
    kOk = 0,
    kIoError = 1,
    kInputError = 2,
    kResourceLimit = 3,
    kInternalError = 4,
    kUnsupported = 5,
};

int parse_count(const std::string& text, const std::string& flag) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size()) throw gameprob::Error("bad value '" + text + "' for " + flag);
    return v;
}

// `N` sets the default; `L<k>=N` overrides loop k (1-based, source order).
void apply_while_depth(gameprob::Bounds& b, const std::string& arg) {
    auto eq = arg.find('=');
    if (eq == std::string::npos) {
        b.while_depth = parse_count(arg, "--while-depth");
        return;
    }
    std::string key = arg.substr(0, eq);
    if (key.size() < 2 || (key[0] != 'L' && key[0] != 'l')) {
        throw gameprob::Error("loop override must look like L<k>=N, got '" + arg + "'");
    }
    b.loop_depth[parse_count(key.substr(1), "--while-depth")] = parse_count(arg.substr(eq + 1), "--while-depth");
}

// `N` sets the default; `name=N` overrides one function.
void apply_fn_bound(gameprob::Bounds& b, const std::string& arg) {
    auto eq = arg.find('=');
    if (eq == std::string::npos) {
        b.fn_call_bound = parse_count(arg, "--fn-bound");
        return;
    }
    b.fn_bound[arg.substr(0, eq)] = parse_count(arg.substr(eq + 1), "--fn-bound");
}

struct AnalyzeArgs {
    std::string input;
    std::vector<std::string> while_depth;
    std::vector<std::string> fn_bound;
    bool json = false;
    std::string emit_latte;
    bool dump_model = false;
    bool verify = false;
};

int run_analyze(const AnalyzeArgs& args) {
    std::ifstream in(args.input);
    if (!in) {
        std::cerr << "gameprob: cannot read '" << args.input << "'\n";
        return kIoError;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    gameprob::AnalysisOptions options;
    for (const auto& w : args.while_depth) apply_while_depth(options.bounds, w);
    for (const auto& f : args.fn_bound) apply_fn_bound(options.bounds, f);
    if (const char* cap = std::getenv("GAMEPROB_PLAY_CAP")) {
        options.play_cap = static_cast<std::size_t>(std::stoull(cap));
    }

    gameprob::Analysis analysis = gameprob::analyze_source(buf.str(), options);

    if (args.dump_model) std::cerr << gameprob::dump_model(analysis.model);

    if (!args.emit_latte.empty()) {
        std::filesystem::create_directories(args.emit_latte);
        for (const auto& [name, text] : gameprob::latte_files(analysis)) {
            std::ofstream out(std::filesystem::path(args.emit_latte) / name);
            out << text;
            if (!out) {
                std::cerr << "gameprob: cannot write '" << name << "'\n";
                return kIoError;
            }
        }
    }

    std::optional<gameprob::VerifyReport> verified;
    if (args.verify) verified = gameprob::verify_counts(analysis);

    if (args.json) {
        nlohmann::json j = gameprob::render_json(analysis);
        if (verified) j["verify"] = {{"checked", verified->checked}, {"skipped", verified->skipped}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << gameprob::render_text(analysis);
        if (verified) {
            std::cout << "verify: " << verified->checked << " play counts match brute force, " << verified->skipped
                      << " skipped\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact success/failure probabilities of open programs via symbolic game models"};
    app.require_subcommand(1);

    AnalyzeArgs args;
    auto* analyze = app.add_subcommand("analyze", "Analyze one program file");
    analyze->add_option("file", args.input, "Program: <decls> |- <term> : <type>")->required();
    analyze->add_option("--while-depth", args.while_depth, "Loop iterations explored (default 3); L<k>=N for loop k")
        ->take_all();
    analyze->add_option("--fn-bound", args.fn_bound,
                        "Undefined functions call their arguments at most N-1 times (default 5); name=N per function")
        ->take_all();
    analyze->add_flag("--json", args.json, "Emit the JSON report");
    analyze->add_option("--emit-latte", args.emit_latte, "Write LattE H-representations of every play condition");
    analyze->add_flag("--dump-model", args.dump_model, "Print the symbolic model edge list to stderr");
    analyze->add_flag("--verify", args.verify, "Cross-check every play count by brute force");

    CLI11_PARSE(app, argc, argv);

    try {
        return run_analyze(args);
    } catch (const gameprob::ParseError& e) {
        std::cerr << args.input << ":" << e.what() << "\n";
        return kInputError;
    } catch (const gameprob::TypeError& e) {
        std::cerr << args.input << ":" << e.what() << "\n";
        return kInputError;
    } catch (const gameprob::ResourceLimit& e) {
        std::cerr << "gameprob: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const gameprob::InternalError& e) {
        std::cerr << "gameprob: internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const gameprob::UnsupportedConstraint& e) {
        std::cerr << "gameprob: unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const gameprob::Error& e) {
        std::cerr << "gameprob: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "gameprob: " << e.what() << "\n";
        return kIoError;
    }
}
