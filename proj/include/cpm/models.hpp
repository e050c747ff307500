#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cpm/model.hpp"

// Executable instances of the example models: the radioactive-decay
// detector with exact state-counting probabilities, the noisy detector
// and its tree of histories, the rational-coordinate moving particle,
// the interval-coded continuous line model, and a successor machine used
// to exercise function extraction.
namespace cpm::models {

// Detector history over `length` time steps; bit i (1-indexed from the
// left) is the detector status at t = i, so the value is sum b_i 2^(n-i).
struct DetectorHistory {
    unsigned long length = 0;
    Code bits;

    DetectorHistory() : bits(0) {}
    DetectorHistory(unsigned long length, Code bits);

    static DetectorHistory parse(const std::string& bit_text);  // e.g. "011"
    std::string str() const;

    bool operator==(const DetectorHistory& o) const {
        return length == o.length && bits == o.bits;
    }
};

Code history_encode(const std::vector<int>& bits);
std::vector<int> history_decode(const DetectorHistory& h);

// Decay detector: states are triples (t, 2^d - 1, k) with d <= t, t != 0
// and 2k <= 2^d - 1. Observables "history" -> h and "time" -> t (aliases
// "alpha", "beta").
modelcore::ComputableModel decay_model();

// All decay states with time observable exactly t, ascending. BadTime at
// t = 0. The census has 2^t members, so t is capped to keep it in memory.
std::vector<Code> decay_states_at(const Code& t);
inline constexpr unsigned long kDecayTimeCap = 20;

// Exact probability that the detector history at time t equals `target`,
// counting equally likely states, optionally conditioned on a status
// prefix observed earlier. EmptyConditioningSet when nothing matches the
// prefix.
Rational decay_probability(const Code& t, const Code& target,
                           const std::optional<DetectorHistory>& condition = std::nullopt);

// Probability plus the underlying state census, for reporting.
struct DecayCensus {
    std::vector<Code> conditioned;  // states at time t consistent with the prefix
    std::vector<Code> matching;     // subset whose history equals the target
    Rational probability;
};
DecayCensus decay_census(const Code& t, const Code& target,
                         const std::optional<DetectorHistory>& condition = std::nullopt);

// Renders a decay state as "(t,(bits)2,k)".
std::string decay_state_str(const Code& s);

// Noisy detector: states <t,h> with t != 0 and h <= 2^t - 1, every
// history possible. Observables "time" -> t, "status" -> h mod 2,
// "trivial" -> 1, "history" -> h (aliases "alpha".."delta").
modelcore::ComputableModel noisy_model();

// A node in the tree of histories of the noisy detector.
struct TreeNode {
    Code state;

    bool operator==(const TreeNode& o) const { return state == o.state; }
};

// The two prefix-extending children <t+1, 2h> and <t+1, 2h+1>.
std::array<TreeNode, 2> tree_children(const TreeNode& node);

// One step of the function computed along a branch: input alpha(s),
// output beta(s), done flag gamma(s).
struct BranchStep {
    Code input;
    Code output;
    Code done;

    bool operator==(const BranchStep& o) const {
        return input == o.input && output == o.output && done == o.done;
    }
};

// The (input, output, done) triples along a path in the tree of
// histories. NotABranch when consecutive nodes are not parent and child.
std::vector<BranchStep> branch_function(const std::vector<TreeNode>& branch);

// Moving particle with rational coordinates: states are triples
// (rho(x), rho(x0), rho(t)) with x = x0 + 3t and t > 0. Observables
// "position", "initial", "time" return the respective rational codes.
modelcore::ComputableModel particle_model_rational();

// Continuous line model on interval codes: states are triples
// <(a;b), (c;d), (a+3c;b+3d)> with a < b and c < d. Observables
// "initial", "time", "position" return the interval codes.
modelcore::ComputableModel line_model6();

// Successor machine: a state (x, c, f) counts c upward until it passes x,
// then raises the done flag with output x + 1. Extraction recovers
// psi(x) = x + 1. Observables "input", "output", "done".
modelcore::DeterministicModel successor_fixture();

}  // namespace cpm::models
