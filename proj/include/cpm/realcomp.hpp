#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cpm/numeric.hpp"

// Computable-analysis kernel: open rational intervals, nested oracles
// representing reals as shrinking interval sequences, interval maps that
// act on codes, and precision-driven refinement.
namespace cpm::realcomp {

// Open interval (lo, hi) with exact rational endpoints, lo < hi.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational lo, Rational hi);

    Rational width() const { return hi - lo; }
    bool contains(const Rational& q) const { return lo < q && q < hi; }

    Code encode() const;
    static Interval decode(const Code& c);

    // "(lo;hi)"
    std::string str() const;

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

// A real number as an on-demand sequence of nested intervals. Queries are
// memoized so repeated reads of the same index always agree, and the
// nesting invariant lo_m <= lo_{m+1} < hi_{m+1} <= hi_m is checked up to
// every queried depth (NestingViolation on failure). Copies share state;
// the memo is internally synchronized.
class NestedOracle {
public:
    using Generator = std::function<Interval(unsigned long)>;

    NestedOracle(std::string label, Generator gen);

    Interval at(unsigned long m) const;
    const std::string& label() const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

// Oracle for a known rational: at(m) = (q - 2^-m, q + 2^-m).
NestedOracle rational_oracle(const Rational& q);

// A total map on interval codes, the computability carrier for real
// functions: nested oracles in, nested oracle out, pointwise through
// apply_map.
struct IntervalMap {
    std::string name;
    std::size_t arity;
    std::function<Code(std::span<const Code>)> apply;
};

// xi for the uniformly moving line: ((a;b),(c;d)) -> (a+3c; b+3d).
Code xi_line(const Code& ab, const Code& cd);
const IntervalMap& xi_line_map();

// Pointwise image of the oracles under the map:
// at(m) = decode(map(encode(o1.at(m)), ...)). For inclusion-monotone maps
// the result is again a nested oracle; otherwise querying it raises
// NestingViolation at the offending depth.
NestedOracle apply_map(const IntervalMap& map, const std::vector<NestedOracle>& oracles);

struct Refined {
    Interval interval;
    unsigned long depth;
};

// First interval of the oracle with width < eps, searching depths
// 0..max_depth. PrecisionNotReached when the oracle does not get there.
Refined refine(const NestedOracle& oracle, const Rational& eps, unsigned long max_depth);

// Oracle for x0 + 3t given oracles for x0 and t.
NestedOracle delta_line(const NestedOracle& x0, const NestedOracle& t);

// The unique line-model state s_m with alpha(s_m) = phi(m) and
// beta(s_m) = psi(m); its gamma component is xi(phi(m), psi(m)).
Code model6_trajectory(const NestedOracle& phi, const NestedOracle& psi, unsigned long m);

}  // namespace cpm::realcomp
