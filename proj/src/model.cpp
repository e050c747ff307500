#include "cpm/model.hpp"

#include <algorithm>

namespace cpm::modelcore {

namespace {

const Observable& resolve(const std::map<std::string, Observable>& observables,
                          const std::string& name, const std::string& model) {
    auto it = observables.find(name);
    if (it == observables.end())
        throw UnknownObservable(model + ": no observable named \"" + name + "\"");
    return it->second;
}

}  // namespace

ComputableModel as_computable(const DeterministicModel& m) {
    return ComputableModel{m.name, m.is_state, m.observables, m.enumerate_hint};
}

Code evolve(const DeterministicModel& m, const Code& s, const Rational& t) {
    if (t.sgn() < 0) throw InvalidArgument("evolve: time must be non-negative");
    if (!m.is_state(s)) throw NotAState(m.name + ": " + s.get_str() + " is not a state");
    Int steps = t.floor();
    Code cur = s;
    for (Int i = 0; i < steps; ++i) cur = m.step(cur);
    return cur;
}

Code observe(const ComputableModel& m, const std::string& name, const Code& s) {
    const Observable& f = resolve(m.observables, name, m.name);
    if (!m.is_state(s)) throw NotAState(m.name + ": " + s.get_str() + " is not a state");
    return f(s);
}

Code observe(const DeterministicModel& m, const std::string& name, const Code& s) {
    const Observable& f = resolve(m.observables, name, m.name);
    if (!m.is_state(s)) throw NotAState(m.name + ": " + s.get_str() + " is not a state");
    return f(s);
}

std::vector<Code> enumerate_states_scan(const ComputableModel& m, const Code& bound) {
    std::vector<Code> out;
    for (Code c = 0; c <= bound; ++c) {
        if (m.is_state(c)) out.push_back(c);
    }
    return out;
}

std::vector<Code> enumerate_states(const ComputableModel& m, const Code& bound) {
    if (m.enumerate_hint) return m.enumerate_hint(bound);
    return enumerate_states_scan(m, bound);
}

std::vector<CalcVerdict> check_effective_calculability(const ComputableModel& m,
                                                       const std::string& alpha,
                                                       const std::string& beta,
                                                       const std::string& gamma,
                                                       const std::vector<Code>& inputs,
                                                       const Code& bound) {
    const Observable& fa = resolve(m.observables, alpha, m.name);
    const Observable& fb = resolve(m.observables, beta, m.name);
    const Observable& fg = resolve(m.observables, gamma, m.name);

    struct Slot {
        bool seen = false;
        bool conflicted = false;
        Code first_state;
        Code first_beta;
        Code conflict_state;
    };
    std::map<Code, Slot> slots;
    for (const Code& x : inputs) slots.emplace(x, Slot{});

    // One ascending pass over the state set serves every input at once,
    // which keeps the reported witness pairs deterministic.
    for (const Code& s : enumerate_states(m, bound)) {
        if (fg(s) != 1) continue;
        auto it = slots.find(fa(s));
        if (it == slots.end()) continue;
        Slot& slot = it->second;
        if (slot.conflicted) continue;
        Code b = fb(s);
        if (!slot.seen) {
            slot.seen = true;
            slot.first_state = s;
            slot.first_beta = b;
        } else if (b != slot.first_beta) {
            slot.conflicted = true;
            slot.conflict_state = s;
        }
    }

    std::vector<CalcVerdict> verdicts;
    verdicts.reserve(inputs.size());
    for (const Code& x : inputs) {
        const Slot& slot = slots.at(x);
        if (slot.conflicted) {
            verdicts.push_back({x, Ambiguous{slot.first_state, slot.conflict_state}});
        } else if (slot.seen) {
            verdicts.push_back({x, Witnessed{slot.first_beta}});
        } else {
            verdicts.push_back({x, NoWitness{}});
        }
    }
    return verdicts;
}

Code extract_function(const DeterministicModel& m, const std::string& alpha,
                      const std::string& beta, const std::string& gamma, const Code& x,
                      const Code& search_bound, unsigned long step_bound,
                      unsigned long settle_window) {
    const Observable& fa = resolve(m.observables, alpha, m.name);
    const Observable& fb = resolve(m.observables, beta, m.name);
    const Observable& fg = resolve(m.observables, gamma, m.name);

    bool found_input = false;
    for (const Code& s : enumerate_states(as_computable(m), search_bound)) {
        if (fa(s) != x) continue;
        found_input = true;
        // Walk the trajectory, looking for a step where gamma reads 1 and
        // keeps reading 1 for the whole settle window.
        Code cur = s;
        unsigned long run = 0;
        Code candidate_beta;
        for (unsigned long u = 0; u <= step_bound + settle_window; ++u) {
            if (fg(cur) == 1) {
                if (run == 0) {
                    if (u > step_bound) break;
                    candidate_beta = fb(cur);
                }
                ++run;
                if (run > settle_window) return candidate_beta;
            } else {
                run = 0;
            }
            cur = m.step(cur);
        }
    }
    if (!found_input)
        throw NoInputState(m.name + ": no state with " + alpha + " = " + x.get_str() +
                           " below bound " + search_bound.get_str());
    throw DidNotSettle(m.name + ": " + gamma + " did not stabilize within " +
                       std::to_string(step_bound) + " steps for input " + x.get_str());
}

}  // namespace cpm::modelcore
