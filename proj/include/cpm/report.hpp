#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpm/numeric.hpp"

// Command layer shared by the CLI binary and the tests: each command
// parses its text arguments, runs the library, and produces one
// structured report. Integers are emitted as decimal strings, rationals
// as "a/b", intervals as "(lo;hi)", so every value survives a round trip
// through the report.
namespace cpm::cli {

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    std::string summary;  // one human-readable line, printed to stderr

    nlohmann::json to_json() const;
};

// Rendering options: --decimal adds decimal fields next to the exact
// values, each with an explicit exactness marker.
struct Render {
    bool decimal = false;
    unsigned digits = 12;
};

Report cmd_encode(const std::string& kind, const std::vector<std::string>& args,
                  const Render& render = {});
Report cmd_decode(const std::string& kind, const std::vector<std::string>& args,
                  const Render& render = {});

Report cmd_decay(const std::string& time, const std::string& target,
                 const std::optional<std::string>& condition, const Render& render = {});

Report cmd_calc_check(const std::string& model, const std::string& bound,
                      const std::string& inputs,
                      const std::optional<std::string>& alpha = std::nullopt,
                      const std::optional<std::string>& beta = std::nullopt,
                      const std::optional<std::string>& gamma = std::nullopt);

Report cmd_refine(const std::string& x0, const std::string& t, const std::string& eps,
                  unsigned long max_depth, const Render& render = {});

Report cmd_tree(const std::string& depth);

Report cmd_model6_check_state(const std::string& state);
Report cmd_model6_check_trajectory(const std::string& x0, const std::string& t,
                                   unsigned long depth);

// "1,2,3" or "0..5" (or a mix) to explicit codes.
std::vector<Code> parse_input_list(const std::string& text);

}  // namespace cpm::cli
