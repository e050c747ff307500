#include "cpm/report.hpp"

#include <sstream>

#include "cpm/encoding.hpp"
#include "cpm/models.hpp"
#include "cpm/realcomp.hpp"

namespace cpm::cli {

using nlohmann::json;

namespace {

void require_args(const std::vector<std::string>& args, std::size_t n,
                  const std::string& what) {
    if (args.size() != n)
        throw ParseError(what + " takes " + std::to_string(n) + " argument(s), got " +
                         std::to_string(args.size()));
}

void add_decimal(json& obj, const std::string& key, const Rational& q, const Render& render) {
    if (!render.decimal) return;
    Decimal d = to_decimal(q, render.digits);
    obj[key + "_decimal"] = {{"value", d.text},
                             {"exact", d.exact},
                             {"note", d.exact ? "exact" : "truncated to " +
                                                              std::to_string(render.digits) +
                                                              " fractional digits"}};
}

json interval_json(const realcomp::Interval& iv, const Render& render) {
    json out = {{"interval", iv.str()}, {"lo", iv.lo.str()}, {"hi", iv.hi.str()},
                {"width", iv.width().str()}};
    add_decimal(out, "lo", iv.lo, render);
    add_decimal(out, "hi", iv.hi, render);
    return out;
}

// A conditioning prefix is either a bit string "011" or a comma list
// "b1:0,b2:1" whose indices must run 1..j.
models::DetectorHistory parse_condition(const std::string& text) {
    if (text.find(':') == std::string::npos) return models::DetectorHistory::parse(text);
    std::vector<int> bits;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (item.size() < 4 || item[0] != 'b' || colon == std::string::npos)
            throw ParseError("bad condition entry: " + item);
        Code index = parse_code(item.substr(1, colon - 1));
        std::string value = item.substr(colon + 1);
        if (index != Code(bits.size() + 1))
            throw ParseError("condition bits must form a prefix b1..bj, got " + text);
        if (value != "0" && value != "1") throw ParseError("bad condition bit: " + item);
        bits.push_back(value == "1" ? 1 : 0);
    }
    if (bits.empty()) throw ParseError("empty condition: " + text);
    return models::DetectorHistory(bits.size(), models::history_encode(bits));
}

struct NamedModel {
    modelcore::ComputableModel model;
    std::string alpha, beta, gamma;
};

NamedModel lookup_model(const std::string& name) {
    if (name == "noisy") return {models::noisy_model(), "time", "status", "trivial"};
    if (name == "successor")
        return {modelcore::as_computable(models::successor_fixture()), "input", "output",
                "done"};
    throw UnknownModel("calc-check: unknown model \"" + name +
                       "\" (available: noisy, successor)");
}

}  // namespace

json Report::to_json() const {
    return json{{"command", command}, {"inputs", inputs}, {"result", result}};
}

std::vector<Code> parse_input_list(const std::string& text) {
    std::vector<Code> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_code(item));
            continue;
        }
        Code lo = parse_code(item.substr(0, dots));
        Code hi = parse_code(item.substr(dots + 2));
        if (hi < lo) throw ParseError("descending range: " + item);
        if (hi - lo > 100000) throw ParseError("range too large: " + item);
        for (Code v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty input list: " + text);
    return out;
}

Report cmd_encode(const std::string& kind, const std::vector<std::string>& args,
                  const Render& render) {
    Report report;
    report.command = "encode";
    report.inputs["kind"] = kind;
    report.inputs["args"] = args;
    Code code;
    if (kind == "pair") {
        require_args(args, 2, "encode pair");
        code = encoding::pair(parse_code(args[0]), parse_code(args[1]));
    } else if (kind == "triple") {
        require_args(args, 3, "encode triple");
        code = encoding::triple(parse_code(args[0]), parse_code(args[1]), parse_code(args[2]));
    } else if (kind == "int") {
        require_args(args, 1, "encode int");
        code = encoding::zeta(parse_int(args[0]));
    } else if (kind == "rat") {
        require_args(args, 1, "encode rat");
        code = encoding::rho(Rational::parse(args[0]));
    } else if (kind == "interval") {
        require_args(args, 2, "encode interval");
        code = encoding::interval_code(Rational::parse(args[0]), Rational::parse(args[1]));
    } else {
        throw ParseError("encode: unknown kind \"" + kind +
                         "\" (pair, triple, int, rat, interval)");
    }
    report.result["code"] = code.get_str();
    report.summary = "encode " + kind + " -> " + code.get_str();
    (void)render;
    return report;
}

Report cmd_decode(const std::string& kind, const std::vector<std::string>& args,
                  const Render& render) {
    Report report;
    report.command = "decode";
    report.inputs["kind"] = kind;
    report.inputs["args"] = args;
    require_args(args, 1, "decode " + kind);
    Code code = parse_code(args[0]);
    std::string shown;
    if (kind == "pair") {
        auto [x, y] = encoding::unpair(code);
        report.result["x"] = x.get_str();
        report.result["y"] = y.get_str();
        shown = "(" + x.get_str() + "," + y.get_str() + ")";
    } else if (kind == "triple") {
        auto [x, y, z] = encoding::untriple(code);
        report.result["x"] = x.get_str();
        report.result["y"] = y.get_str();
        report.result["z"] = z.get_str();
        shown = "(" + x.get_str() + "," + y.get_str() + "," + z.get_str() + ")";
    } else if (kind == "int") {
        Int i = encoding::zeta_inv(code);
        report.result["int"] = i.get_str();
        shown = i.get_str();
    } else if (kind == "rat") {
        Rational q = encoding::rho_inv(code);
        report.result["rat"] = q.str();
        add_decimal(report.result, "rat", q, render);
        shown = q.str();
    } else if (kind == "interval") {
        realcomp::Interval iv = realcomp::Interval::decode(code);
        report.result.update(interval_json(iv, render));
        shown = iv.str();
    } else {
        throw ParseError("decode: unknown kind \"" + kind +
                         "\" (pair, triple, int, rat, interval)");
    }
    report.summary = "decode " + kind + " " + code.get_str() + " -> " + shown;
    return report;
}

Report cmd_decay(const std::string& time, const std::string& target,
                 const std::optional<std::string>& condition, const Render& render) {
    Report report;
    report.command = "decay";
    report.inputs["time"] = time;
    report.inputs["target"] = target;
    if (condition) report.inputs["condition"] = *condition;

    Code t = parse_code(time);
    if (t == 0) throw BadTime("decay: time must be >= 1");
    models::DetectorHistory target_history = models::DetectorHistory::parse(target);
    if (!mpz_fits_ulong_p(t.get_mpz_t()) || target_history.length != t.get_ui())
        throw ParseError("decay: target must have exactly t = " + time + " bits");
    std::optional<models::DetectorHistory> cond;
    if (condition) cond = parse_condition(*condition);

    models::DecayCensus census = models::decay_census(t, target_history.bits, cond);
    report.result["probability"] = census.probability.str();
    add_decimal(report.result, "probability", census.probability, render);
    json conditioned = json::array();
    for (const Code& s : census.conditioned)
        conditioned.push_back({{"code", s.get_str()}, {"state", models::decay_state_str(s)}});
    json matching = json::array();
    for (const Code& s : census.matching) matching.push_back(s.get_str());
    report.result["census"] = {{"conditioned_count", census.conditioned.size()},
                               {"matching_count", census.matching.size()},
                               {"conditioned", conditioned},
                               {"matching", matching}};
    report.summary = "P(history=" + target_history.str() + " at t=" + t.get_str() +
                     (cond ? " | prefix " + cond->str() : "") +
                     ") = " + census.probability.str();
    return report;
}

Report cmd_calc_check(const std::string& model, const std::string& bound,
                      const std::string& inputs, const std::optional<std::string>& alpha,
                      const std::optional<std::string>& beta,
                      const std::optional<std::string>& gamma) {
    Report report;
    report.command = "calc-check";
    report.inputs["model"] = model;
    report.inputs["bound"] = bound;
    report.inputs["inputs"] = inputs;

    NamedModel named = lookup_model(model);
    const std::string a = alpha.value_or(named.alpha);
    const std::string b = beta.value_or(named.beta);
    const std::string g = gamma.value_or(named.gamma);
    report.inputs["alpha"] = a;
    report.inputs["beta"] = b;
    report.inputs["gamma"] = g;

    std::vector<Code> xs = parse_input_list(inputs);
    auto verdicts =
        modelcore::check_effective_calculability(named.model, a, b, g, xs, parse_code(bound));

    json table = json::array();
    std::size_t witnessed = 0, ambiguous = 0;
    for (const auto& verdict : verdicts) {
        json row = {{"input", verdict.input.get_str()}};
        if (const auto* w = std::get_if<modelcore::Witnessed>(&verdict.outcome)) {
            row["verdict"] = "witnessed";
            row["value"] = w->value.get_str();
            ++witnessed;
        } else if (const auto* amb = std::get_if<modelcore::Ambiguous>(&verdict.outcome)) {
            row["verdict"] = "ambiguous";
            row["state1"] = amb->state1.get_str();
            row["state2"] = amb->state2.get_str();
            row["beta1"] = modelcore::observe(named.model, b, amb->state1).get_str();
            row["beta2"] = modelcore::observe(named.model, b, amb->state2).get_str();
            ++ambiguous;
        } else {
            row["verdict"] = "no_witness";
        }
        table.push_back(std::move(row));
    }
    report.result["verdicts"] = table;
    report.summary = model + ": " + std::to_string(witnessed) + " witnessed, " +
                     std::to_string(ambiguous) + " ambiguous, " +
                     std::to_string(verdicts.size() - witnessed - ambiguous) +
                     " without witness (bound " + bound + ")";
    return report;
}

Report cmd_refine(const std::string& x0, const std::string& t, const std::string& eps,
                  unsigned long max_depth, const Render& render) {
    Report report;
    report.command = "refine";
    report.inputs["x0"] = x0;
    report.inputs["t"] = t;
    report.inputs["eps"] = eps;
    report.inputs["max_depth"] = max_depth;

    Rational eps_value = Rational::parse(eps);
    realcomp::NestedOracle oracle =
        realcomp::delta_line(realcomp::rational_oracle(Rational::parse(x0)),
                             realcomp::rational_oracle(Rational::parse(t)));
    realcomp::Refined refined = realcomp::refine(oracle, eps_value, max_depth);
    report.result = interval_json(refined.interval, render);
    report.result["depth"] = refined.depth;
    report.summary = "x0 + 3t in " + refined.interval.str() + " at depth " +
                     std::to_string(refined.depth);
    return report;
}

Report cmd_tree(const std::string& depth) {
    Report report;
    report.command = "tree";
    report.inputs["depth"] = depth;

    Code d = parse_code(depth);
    if (d == 0) throw InvalidArgument("tree: depth must be >= 1");
    if (d > 16) throw DepthTooLarge("tree: depth " + depth + " exceeds the cap of 16");
    const unsigned long n = d.get_ui();

    json levels = json::array();
    for (unsigned long t = 1; t <= n; ++t)
        levels.push_back({{"time", t}, {"nodes", Code(Code(1) << t).get_str()}});

    json branches = json::array();
    for (Code h = 0; (h >> n) == 0; ++h) {
        models::DetectorHistory hist(n, h);
        std::vector<models::TreeNode> branch;
        for (unsigned long t = 1; t <= n; ++t) {
            Code prefix;
            mpz_fdiv_q_2exp(prefix.get_mpz_t(), h.get_mpz_t(), n - t);
            branch.push_back(models::TreeNode{encoding::pair(Code(t), prefix)});
        }
        json nodes = json::array();
        for (const auto& node : branch) nodes.push_back(node.state.get_str());
        json steps = json::array();
        for (const auto& step : models::branch_function(branch))
            steps.push_back({{"input", step.input.get_str()},
                             {"output", step.output.get_str()},
                             {"done", step.done.get_str()}});
        branches.push_back(
            {{"history", hist.str()}, {"nodes", nodes}, {"function", steps}});
    }
    report.result["levels"] = levels;
    report.result["branch_count"] = branches.size();
    report.result["branches"] = branches;
    report.summary = "tree of histories to depth " + depth + ": " +
                     std::to_string(branches.size()) + " branches";
    return report;
}

Report cmd_model6_check_state(const std::string& state) {
    Report report;
    report.command = "model6-check";
    report.inputs["state"] = state;

    Code code = parse_code(state);
    modelcore::ComputableModel m = models::line_model6();
    const bool member = m.is_state(code);
    report.result["is_state"] = member;
    auto [cab, ccd, cef] = encoding::untriple(code);
    json components = json::object();
    auto describe = [](const Code& c) -> json {
        auto iv = encoding::try_interval_decode(c);
        if (!iv) return {{"code", c.get_str()}, {"valid", false}};
        return {{"code", c.get_str()},
                {"valid", true},
                {"interval", "(" + iv->first.str() + ";" + iv->second.str() + ")"}};
    };
    components["initial"] = describe(cab);
    components["time"] = describe(ccd);
    components["position"] = describe(cef);
    report.result["components"] = components;
    report.summary = "state " + state + (member ? " is" : " is not") + " a line-model state";
    return report;
}

Report cmd_model6_check_trajectory(const std::string& x0, const std::string& t,
                                   unsigned long depth) {
    Report report;
    report.command = "model6-check";
    report.inputs["x0"] = x0;
    report.inputs["t"] = t;
    report.inputs["depth"] = depth;

    realcomp::NestedOracle phi = realcomp::rational_oracle(Rational::parse(x0));
    realcomp::NestedOracle psi = realcomp::rational_oracle(Rational::parse(t));
    modelcore::ComputableModel m = models::line_model6();

    json states = json::array();
    bool all_members = true;
    for (unsigned long i = 0; i <= depth; ++i) {
        Code s = realcomp::model6_trajectory(phi, psi, i);
        Code gamma = modelcore::observe(m, "position", s);
        Code expected = realcomp::xi_line(phi.at(i).encode(), psi.at(i).encode());
        const bool member = m.is_state(s);
        all_members = all_members && member && gamma == expected;
        states.push_back({{"depth", i},
                          {"state", s.get_str()},
                          {"is_state", member},
                          {"gamma", gamma.get_str()},
                          {"gamma_matches_xi", gamma == expected},
                          {"position", realcomp::Interval::decode(gamma).str()}});
    }
    report.result["trajectory"] = states;
    report.result["all_valid"] = all_members;
    report.summary = "trajectory for x0=" + x0 + ", t=" + t + " valid through depth " +
                     std::to_string(depth) + (all_members ? "" : " (violations found)");
    return report;
}

}  // namespace cpm::cli
