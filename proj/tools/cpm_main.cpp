// Command-line front end: exposes the encodings, the decay probabilities,
// the calculability checker, oracle refinement, and the tree of histories
// as subcommands emitting one JSON report per invocation on stdout and a
// one-line summary on stderr.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpm/report.hpp"

namespace {

int emit(const cpm::cli::Report& report) {
    std::cout << report.to_json().dump(2) << std::endl;
    std::cerr << report.summary << std::endl;
    return 0;
}

int emit_error(const std::string& cls, const std::string& message, int code) {
    nlohmann::json doc = {{"error", {{"class", cls}, {"message", message}}}};
    std::cout << doc.dump(2) << std::endl;
    std::cerr << "error: " << message << std::endl;
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computable physical models toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    bool decimal = false;
    app.add_flag("--decimal", decimal,
                 "also render rationals as (possibly truncated) decimals");

    std::string kind;
    std::vector<std::string> args;
    auto* encode = app.add_subcommand("encode", "encode values as a single code");
    encode->add_option("kind", kind, "pair | triple | int | rat | interval")->required();
    encode->add_option("args", args, "values to encode");

    auto* decode = app.add_subcommand("decode", "decode a code back into values");
    decode->add_option("kind", kind, "pair | triple | int | rat | interval")->required();
    decode->add_option("args", args, "the code to decode");

    std::string time, target;
    std::string condition;
    auto* decay = app.add_subcommand("decay", "exact decay-detector probabilities");
    decay->add_option("--time,-t", time, "time in half-life units (>= 1)")->required();
    decay->add_option("--target", target, "target history as a bit string, e.g. 011")
        ->required();
    decay->add_option("--condition", condition,
                      "conditioning prefix: bit string \"0\" or \"b1:0\" form");

    std::string model, inputs;
    std::string bound = "100000";
    std::string alpha, beta, gamma;
    auto* calc = app.add_subcommand("calc-check", "effective-calculability verdicts");
    calc->add_option("--model", model, "noisy | successor")->required();
    calc->add_option("--inputs", inputs, "input values, e.g. 1..10 or 1,4,9")->required();
    calc->add_option("--bound", bound, "state-scan bound (verdicts are relative to it)");
    calc->add_option("--alpha", alpha, "input observable (default per model)");
    calc->add_option("--beta", beta, "output observable (default per model)");
    calc->add_option("--gamma", gamma, "done observable (default per model)");

    std::string x0, t_text, eps;
    unsigned long max_depth = 64;
    auto* refine = app.add_subcommand("refine", "refine x0 + 3t to a width target");
    refine->add_option("--x0", x0, "initial position, rational")->required();
    refine->add_option("--t", t_text, "time, rational")->required();
    refine->add_option("--eps", eps, "width target, rational > 0")->required();
    refine->add_option("--max-depth", max_depth, "oracle depth cap (default 64)");

    std::string depth_text;
    auto* tree = app.add_subcommand("tree", "tree of histories of the noisy detector");
    tree->add_option("--depth", depth_text, "branch depth, 1..16")->required();

    std::string state;
    unsigned long depth = 8;
    auto* model6 = app.add_subcommand("model6-check", "line-model states and trajectories");
    model6->add_option("--state", state, "check membership of one state code");
    model6->add_option("--x0", x0, "initial position, rational (trajectory mode)");
    model6->add_option("--t", t_text, "time, rational (trajectory mode)");
    model6->add_option("--depth", depth, "trajectory depth (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cpm::cli::Render render{decimal, 12};
    try {
        if (encode->parsed()) return emit(cpm::cli::cmd_encode(kind, args, render));
        if (decode->parsed()) return emit(cpm::cli::cmd_decode(kind, args, render));
        if (decay->parsed()) {
            std::optional<std::string> cond;
            if (!condition.empty()) cond = condition;
            return emit(cpm::cli::cmd_decay(time, target, cond, render));
        }
        if (calc->parsed()) {
            auto opt = [](const std::string& s) {
                return s.empty() ? std::nullopt : std::optional<std::string>(s);
            };
            return emit(cpm::cli::cmd_calc_check(model, bound, inputs, opt(alpha), opt(beta),
                                                 opt(gamma)));
        }
        if (refine->parsed())
            return emit(cpm::cli::cmd_refine(x0, t_text, eps, max_depth, render));
        if (tree->parsed()) return emit(cpm::cli::cmd_tree(depth_text));
        if (model6->parsed()) {
            if (!state.empty()) return emit(cpm::cli::cmd_model6_check_state(state));
            if (x0.empty() || t_text.empty())
                throw cpm::ParseError("model6-check needs either --state or --x0 and --t");
            return emit(cpm::cli::cmd_model6_check_trajectory(x0, t_text, depth));
        }
    } catch (const cpm::ParseError& e) {
        return emit_error("parse", e.what(), 2);
    } catch (const cpm::Error& e) {
        return emit_error("domain", e.what(), 3);
    }
    return 1;
}
