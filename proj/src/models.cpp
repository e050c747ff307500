#include "cpm/models.hpp"

#include <algorithm>

#include "cpm/encoding.hpp"

namespace cpm::models {

using encoding::pair;
using encoding::triple;
using encoding::try_interval_decode;
using encoding::try_rho_inv;
using encoding::unpair;
using encoding::untriple;

namespace {

// bitlen(0) = 0, else position of the highest set bit + 1.
unsigned long bitlen(const Code& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

bool fits_ulong(const Code& v) {
    return mpz_fits_ulong_p(v.get_mpz_t()) != 0;
}

// h <= 2^t - 1 without materializing 2^t.
bool history_fits(const Code& h, const Code& t) {
    if (h == 0) return true;
    return mpz_cmp_ui(t.get_mpz_t(), bitlen(h)) >= 0;
}

bool decay_is_state(const Code& c) {
    auto [t, h, k] = untriple(c);
    if (t == 0) return false;
    Code hp1 = h + 1;
    if (mpz_popcount(hp1.get_mpz_t()) != 1) return false;  // h must be 2^d - 1
    const unsigned long d = bitlen(hp1) - 1;
    if (mpz_cmp_ui(t.get_mpz_t(), d) < 0) return false;
    return 2 * k <= h;
}

bool noisy_is_state(const Code& c) {
    auto [t, h] = unpair(c);
    return t != 0 && history_fits(h, t);
}

std::vector<Code> noisy_enumerate(const Code& bound) {
    std::vector<Code> out;
    for (Code t = 1; pair(t, Code(0)) <= bound; ++t) {
        for (Code h = 0; history_fits(h, t); ++h) {
            Code c = pair(t, h);
            if (c > bound) break;
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Code> decay_enumerate(const Code& bound) {
    std::vector<Code> out;
    for (Code t = 1; triple(t, Code(0), Code(0)) <= bound; ++t) {
        Code h = 0;  // runs over 2^d - 1 for d = 0..t
        for (Code d = 0; d <= t; ++d, h = 2 * h + 1) {
            if (triple(t, h, Code(0)) > bound) break;
            for (Code k = 0; 2 * k <= h; ++k) {
                Code c = triple(t, h, k);
                if (c > bound) break;
                out.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool successor_is_state(const Code& c) {
    auto [x, counter, flag] = untriple(c);
    if (flag > 1) return false;
    if (flag == 1) return counter == x + 1;
    return counter <= x;
}

Code successor_step(const Code& c) {
    auto [x, counter, flag] = untriple(c);
    if (flag == 1) return c;  // done states are fixed points
    Code next = counter + 1;
    return triple(x, next, next > x ? Code(1) : Code(0));
}

std::vector<Code> successor_enumerate(const Code& bound) {
    std::vector<Code> out;
    for (Code x = 0; triple(x, Code(0), Code(0)) <= bound; ++x) {
        for (Code counter = 0; counter <= x; ++counter) {
            Code c = triple(x, counter, Code(0));
            if (c > bound) break;
            out.push_back(c);
        }
        Code done = triple(x, x + 1, Code(1));
        if (done <= bound) out.push_back(done);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

DetectorHistory::DetectorHistory(unsigned long length, Code bits)
    : length(length), bits(std::move(bits)) {
    if (this->bits < 0 || bitlen(this->bits) > length)
        throw InvalidArgument("DetectorHistory: value does not fit in " +
                              std::to_string(length) + " bits");
}

DetectorHistory DetectorHistory::parse(const std::string& bit_text) {
    std::vector<int> bits;
    bits.reserve(bit_text.size());
    for (char ch : bit_text) {
        if (ch != '0' && ch != '1') throw ParseError("bad bit string: " + bit_text);
        bits.push_back(ch - '0');
    }
    return DetectorHistory(bits.size(), history_encode(bits));
}

std::string DetectorHistory::str() const {
    std::string s(length, '0');
    for (unsigned long i = 0; i < length; ++i) {
        if (mpz_tstbit(bits.get_mpz_t(), length - 1 - i)) s[i] = '1';
    }
    return s;
}

Code history_encode(const std::vector<int>& bits) {
    Code h = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw InvalidArgument("history_encode: bits must be 0 or 1");
        h = 2 * h + b;
    }
    return h;
}

std::vector<int> history_decode(const DetectorHistory& h) {
    std::vector<int> bits(h.length, 0);
    for (unsigned long i = 0; i < h.length; ++i) {
        bits[i] = mpz_tstbit(h.bits.get_mpz_t(), h.length - 1 - i) ? 1 : 0;
    }
    return bits;
}

modelcore::ComputableModel decay_model() {
    modelcore::ComputableModel m;
    m.name = "decay";
    m.is_state = decay_is_state;
    auto history = [](const Code& s) { return untriple(s)[1]; };
    auto time = [](const Code& s) { return untriple(s)[0]; };
    m.observables["history"] = history;
    m.observables["alpha"] = history;
    m.observables["time"] = time;
    m.observables["beta"] = time;
    m.enumerate_hint = decay_enumerate;
    return m;
}

std::vector<Code> decay_states_at(const Code& t) {
    if (t == 0) throw BadTime("decay: states are defined for t >= 1");
    if (!fits_ulong(t) || t.get_ui() > kDecayTimeCap)
        throw InvalidArgument("decay: time " + t.get_str() + " exceeds the census cap of " +
                              std::to_string(kDecayTimeCap));
    std::vector<Code> out;
    Code h = 0;
    for (Code d = 0; d <= t; ++d, h = 2 * h + 1) {
        for (Code k = 0; 2 * k <= h; ++k) out.push_back(triple(t, h, k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

DecayCensus decay_census(const Code& t, const Code& target,
                         const std::optional<DetectorHistory>& condition) {
    if (t == 0) throw BadTime("decay: probabilities are defined for t >= 1");
    std::vector<Code> states = decay_states_at(t);  // validates t
    mp_bitcnt_t shift = 0;
    if (condition) {
        if (mpz_cmp_ui(t.get_mpz_t(), condition->length) < 0)
            throw InvalidArgument("decay: conditioning prefix longer than the time");
        shift = static_cast<mp_bitcnt_t>(t.get_ui() - condition->length);
    }
    DecayCensus census;
    for (const Code& s : states) {
        Code h = untriple(s)[1];
        if (condition) {
            Code head;
            mpz_fdiv_q_2exp(head.get_mpz_t(), h.get_mpz_t(), shift);
            if (head != condition->bits) continue;
        }
        census.conditioned.push_back(s);
        if (h == target) census.matching.push_back(s);
    }
    if (census.conditioned.empty())
        throw EmptyConditioningSet("decay: no state at t = " + t.get_str() +
                                   " matches the conditioning prefix");
    census.probability =
        Rational(Int(census.matching.size()), Int(census.conditioned.size()));
    return census;
}

Rational decay_probability(const Code& t, const Code& target,
                           const std::optional<DetectorHistory>& condition) {
    return decay_census(t, target, condition).probability;
}

std::string decay_state_str(const Code& s) {
    auto [t, h, k] = untriple(s);
    DetectorHistory hist(fits_ulong(t) ? t.get_ui() : bitlen(h), h);
    return "(" + t.get_str() + ",(" + hist.str() + ")2," + k.get_str() + ")";
}

modelcore::ComputableModel noisy_model() {
    modelcore::ComputableModel m;
    m.name = "noisy";
    m.is_state = noisy_is_state;
    auto time = [](const Code& s) { return unpair(s).first; };
    auto status = [](const Code& s) {
        return Code(mpz_odd_p(unpair(s).second.get_mpz_t()) ? 1 : 0);
    };
    auto trivial = [](const Code&) { return Code(1); };
    auto history = [](const Code& s) { return unpair(s).second; };
    m.observables["time"] = time;
    m.observables["alpha"] = time;
    m.observables["status"] = status;
    m.observables["beta"] = status;
    m.observables["trivial"] = trivial;
    m.observables["gamma"] = trivial;
    m.observables["history"] = history;
    m.observables["delta"] = history;
    m.enumerate_hint = noisy_enumerate;
    return m;
}

std::array<TreeNode, 2> tree_children(const TreeNode& node) {
    if (!noisy_is_state(node.state))
        throw NotAState("tree_children: " + node.state.get_str() + " is not a noisy state");
    auto [t, h] = unpair(node.state);
    return {TreeNode{pair(t + 1, 2 * h)}, TreeNode{pair(t + 1, 2 * h + 1)}};
}

std::vector<BranchStep> branch_function(const std::vector<TreeNode>& branch) {
    if (branch.empty()) throw NotABranch("branch_function: empty branch");
    std::vector<BranchStep> steps;
    steps.reserve(branch.size());
    Code prev_t, prev_h;
    bool have_prev = false;
    for (const TreeNode& node : branch) {
        if (!noisy_is_state(node.state))
            throw NotAState("branch_function: " + node.state.get_str() +
                            " is not a noisy state");
        auto [t, h] = unpair(node.state);
        if (have_prev) {
            Code head;
            mpz_fdiv_q_2exp(head.get_mpz_t(), h.get_mpz_t(), 1);
            if (t != prev_t + 1 || head != prev_h)
                throw NotABranch("branch_function: " + node.state.get_str() +
                                 " is not a child of the previous node");
        }
        steps.push_back({t, Code(mpz_odd_p(h.get_mpz_t()) ? 1 : 0), Code(1)});
        prev_t = t;
        prev_h = h;
        have_prev = true;
    }
    return steps;
}

modelcore::ComputableModel particle_model_rational() {
    modelcore::ComputableModel m;
    m.name = "particle";
    m.is_state = [](const Code& c) {
        auto [cx, cx0, ct] = untriple(c);
        auto x = try_rho_inv(cx);
        auto x0 = try_rho_inv(cx0);
        auto t = try_rho_inv(ct);
        if (!x || !x0 || !t) return false;
        return t->sgn() > 0 && *x == *x0 + Rational(3) * *t;
    };
    m.observables["position"] = [](const Code& s) { return untriple(s)[0]; };
    m.observables["alpha"] = m.observables["position"];
    m.observables["initial"] = [](const Code& s) { return untriple(s)[1]; };
    m.observables["beta"] = m.observables["initial"];
    m.observables["time"] = [](const Code& s) { return untriple(s)[2]; };
    m.observables["gamma"] = m.observables["time"];
    return m;
}

modelcore::ComputableModel line_model6() {
    modelcore::ComputableModel m;
    m.name = "line6";
    m.is_state = [](const Code& c) {
        auto [cab, ccd, cef] = untriple(c);
        auto ab = try_interval_decode(cab);
        auto cd = try_interval_decode(ccd);
        auto ef = try_interval_decode(cef);
        if (!ab || !cd || !ef) return false;
        const Rational three(3);
        return ef->first == ab->first + three * cd->first &&
               ef->second == ab->second + three * cd->second;
    };
    m.observables["initial"] = [](const Code& s) { return untriple(s)[0]; };
    m.observables["alpha"] = m.observables["initial"];
    m.observables["time"] = [](const Code& s) { return untriple(s)[1]; };
    m.observables["beta"] = m.observables["time"];
    m.observables["position"] = [](const Code& s) { return untriple(s)[2]; };
    m.observables["gamma"] = m.observables["position"];
    return m;
}

modelcore::DeterministicModel successor_fixture() {
    modelcore::DeterministicModel m;
    m.name = "successor";
    m.is_state = successor_is_state;
    m.step = successor_step;
    m.observables["input"] = [](const Code& s) { return untriple(s)[0]; };
    m.observables["alpha"] = m.observables["input"];
    m.observables["output"] = [](const Code& s) {
        auto [x, counter, flag] = untriple(s);
        (void)counter;
        return flag == 1 ? Code(x + 1) : Code(0);
    };
    m.observables["beta"] = m.observables["output"];
    m.observables["done"] = [](const Code& s) { return untriple(s)[2]; };
    m.observables["gamma"] = m.observables["done"];
    m.enumerate_hint = successor_enumerate;
    return m;
}

}  // namespace cpm::models
