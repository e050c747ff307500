#include "cpm/realcomp.hpp"

#include <mutex>
#include <ostream>

#include "cpm/encoding.hpp"

namespace cpm::realcomp {

Interval::Interval(Rational lo, Rational hi) : lo(std::move(lo)), hi(std::move(hi)) {
    if (!(this->lo < this->hi))
        throw InvalidEndpoints("Interval: endpoints must satisfy lo < hi, got (" +
                               this->lo.str() + ";" + this->hi.str() + ")");
}

Code Interval::encode() const {
    return encoding::interval_code(lo, hi);
}

Interval Interval::decode(const Code& c) {
    auto [q, r] = encoding::interval_decode(c);
    return Interval(std::move(q), std::move(r));
}

std::string Interval::str() const {
    return "(" + lo.str() + ";" + hi.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << iv.str();
}

struct NestedOracle::State {
    std::string label;
    Generator gen;
    mutable std::mutex mu;
    mutable std::vector<Interval> cache;
};

NestedOracle::NestedOracle(std::string label, Generator gen)
    : state_(std::make_shared<State>()) {
    state_->label = std::move(label);
    state_->gen = std::move(gen);
}

Interval NestedOracle::at(unsigned long m) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto& cache = state_->cache;
    while (cache.size() <= m) {
        const unsigned long k = cache.size();
        Interval next = state_->gen(k);
        if (k > 0) {
            const Interval& prev = cache[k - 1];
            if (next.lo < prev.lo || prev.hi < next.hi)
                throw NestingViolation("oracle " + state_->label + ": interval " + next.str() +
                                       " at depth " + std::to_string(k) +
                                       " is not contained in " + prev.str());
        }
        cache.push_back(std::move(next));
    }
    return cache[m];
}

const std::string& NestedOracle::label() const {
    return state_->label;
}

NestedOracle rational_oracle(const Rational& q) {
    return NestedOracle(q.str(), [q](unsigned long m) {
        Rational radius = Rational::pow2(-static_cast<long>(m));
        return Interval(q - radius, q + radius);
    });
}

Code xi_line(const Code& ab, const Code& cd) {
    auto [a, b] = encoding::interval_decode(ab);
    auto [c, d] = encoding::interval_decode(cd);
    const Rational three(3);
    return encoding::interval_code(a + three * c, b + three * d);
}

const IntervalMap& xi_line_map() {
    static const IntervalMap map{
        "xi_line", 2,
        [](std::span<const Code> codes) { return xi_line(codes[0], codes[1]); }};
    return map;
}

NestedOracle apply_map(const IntervalMap& map, const std::vector<NestedOracle>& oracles) {
    if (oracles.size() != map.arity)
        throw InvalidArgument("apply_map: " + map.name + " expects " +
                              std::to_string(map.arity) + " oracles, got " +
                              std::to_string(oracles.size()));
    std::string label = map.name + "(";
    for (std::size_t i = 0; i < oracles.size(); ++i) {
        if (i) label += ",";
        label += oracles[i].label();
    }
    label += ")";
    return NestedOracle(std::move(label), [map, oracles](unsigned long m) {
        std::vector<Code> codes;
        codes.reserve(oracles.size());
        for (const NestedOracle& oracle : oracles) codes.push_back(oracle.at(m).encode());
        return Interval::decode(map.apply(codes));
    });
}

Refined refine(const NestedOracle& oracle, const Rational& eps, unsigned long max_depth) {
    if (eps.sgn() <= 0) throw InvalidArgument("refine: eps must be positive");
    for (unsigned long m = 0; m <= max_depth; ++m) {
        Interval iv = oracle.at(m);
        if (iv.width() < eps) return Refined{std::move(iv), m};
    }
    throw PrecisionNotReached("refine: oracle " + oracle.label() + " did not reach width < " +
                              eps.str() + " within depth " + std::to_string(max_depth));
}

NestedOracle delta_line(const NestedOracle& x0, const NestedOracle& t) {
    return apply_map(xi_line_map(), {x0, t});
}

Code model6_trajectory(const NestedOracle& phi, const NestedOracle& psi, unsigned long m) {
    Code ab = phi.at(m).encode();
    Code cd = psi.at(m).encode();
    return encoding::triple(ab, cd, xi_line(ab, cd));
}

}  // namespace cpm::realcomp
