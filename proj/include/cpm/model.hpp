#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cpm/numeric.hpp"

// Model abstractions: computable physical models (a decidable state set
// plus total observables over codes) and discrete deterministic models
// (the same plus a unit-time step), together with executable versions of
// the effective-calculability conditions.
namespace cpm::modelcore {

using StatePredicate = std::function<bool(const Code&)>;
using Observable = std::function<Code(const Code&)>;

// Optional fast path: returns exactly the states <= bound, ascending.
// Must agree with is_state; enumerate_states_scan is the reference.
using StateEnumerator = std::function<std::vector<Code>(const Code& bound)>;

struct ComputableModel {
    std::string name;
    StatePredicate is_state;
    std::map<std::string, Observable> observables;
    StateEnumerator enumerate_hint;  // may be empty
};

// Discrete deterministic model: state set, observables, and a one-step
// evolution map that sends states to states. Evolution over a rational
// time t acts as floor(t) iterations of step.
struct DeterministicModel {
    std::string name;
    StatePredicate is_state;
    Observable step;
    std::map<std::string, Observable> observables;
    StateEnumerator enumerate_hint;
};

// Forgets the dynamics; states and observables carry over unchanged.
ComputableModel as_computable(const DeterministicModel& m);

struct Witnessed {
    Code value;
};
struct Ambiguous {
    Code state1;
    Code state2;
};
struct NoWitness {};

// Verdict of the calculability check for one input, relative to a state
// bound: either every witnessing state agrees on the output, or two
// witnesses disagree, or no witness exists below the bound.
struct CalcVerdict {
    Code input;
    std::variant<Witnessed, Ambiguous, NoWitness> outcome;

    bool witnessed() const { return std::holds_alternative<Witnessed>(outcome); }
    bool ambiguous() const { return std::holds_alternative<Ambiguous>(outcome); }
    bool no_witness() const { return std::holds_alternative<NoWitness>(outcome); }
};

// floor(t) iterations of step on s. Throws NotAState when s is outside
// the state set and InvalidArgument for negative t.
Code evolve(const DeterministicModel& m, const Code& s, const Rational& t);

// Applies the named observable; NotAState / UnknownObservable otherwise.
Code observe(const ComputableModel& m, const std::string& name, const Code& s);
Code observe(const DeterministicModel& m, const std::string& name, const Code& s);

// All states <= bound, ascending. Uses the model's enumerator when
// present, otherwise filters every code up to the bound.
std::vector<Code> enumerate_states(const ComputableModel& m, const Code& bound);

// Always filters every code <= bound; the slow reference path.
std::vector<Code> enumerate_states_scan(const ComputableModel& m, const Code& bound);

// For each input x, scans the states below the bound for witnesses with
// alpha = x and gamma = 1. Two witnesses with different beta values make
// the verdict Ambiguous (reported as the first such pair in ascending
// state order); one or more agreeing witnesses make it Witnessed; none
// make it NoWitness. Verdicts are relative to the bound.
std::vector<CalcVerdict> check_effective_calculability(const ComputableModel& m,
                                                       const std::string& alpha,
                                                       const std::string& beta,
                                                       const std::string& gamma,
                                                       const std::vector<Code>& inputs,
                                                       const Code& bound);

// Operationalizes function extraction from a deterministic model: find a
// state with alpha = x, run the dynamics until gamma reads 1 and keeps
// reading 1 for settle_window further steps, then report beta there.
// NoInputState when no state below search_bound carries the input;
// DidNotSettle when no candidate stabilizes within step_bound.
Code extract_function(const DeterministicModel& m, const std::string& alpha,
                      const std::string& beta, const std::string& gamma, const Code& x,
                      const Code& search_bound, unsigned long step_bound = 4096,
                      unsigned long settle_window = 16);

}  // namespace cpm::modelcore
