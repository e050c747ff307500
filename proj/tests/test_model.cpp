#include <doctest.h>

#include <random>

#include "cpm/encoding.hpp"
#include "cpm/model.hpp"
#include "cpm/models.hpp"
#include "testutil.hpp"

using namespace cpm;
using namespace cpm::modelcore;

namespace {

// Counter machine on S = {s >= 1} with step s -> s + 1.
DeterministicModel counter_model() {
    DeterministicModel m;
    m.name = "counter";
    m.is_state = [](const Code& s) { return s >= 1; };
    m.step = [](const Code& s) { return s + 1; };
    m.observables["value"] = [](const Code& s) { return s; };
    return m;
}

// One state s0 = 0 with alpha = 0, beta = 9, gamma = 1.
ComputableModel single_state_model() {
    ComputableModel m;
    m.name = "single";
    m.is_state = [](const Code& s) { return s == 0; };
    m.observables["alpha"] = [](const Code&) { return Code(0); };
    m.observables["beta"] = [](const Code&) { return Code(9); };
    m.observables["gamma"] = [](const Code&) { return Code(1); };
    return m;
}

// gamma alternates 0,1,0,1,... along every trajectory, so it never
// settles.
DeterministicModel alternating_model() {
    DeterministicModel m;
    m.name = "alternating";
    m.is_state = [](const Code&) { return true; };
    m.step = [](const Code& s) { return s + 1; };
    m.observables["alpha"] = [](const Code&) { return Code(0); };
    m.observables["beta"] = [](const Code&) { return Code(7); };
    m.observables["gamma"] = [](const Code& s) {
        return Code(mpz_odd_p(s.get_mpz_t()) ? 1 : 0);
    };
    return m;
}

}  // namespace

TEST_CASE("evolve floors the time argument") {
    DeterministicModel m = counter_model();
    CHECK(evolve(m, Code(5), Rational(0)) == 5);
    CHECK(evolve(m, Code(5), Rational::parse("7/2")) == 8);
    CHECK(evolve(m, Code(1), Rational::parse("99/100")) == 1);
    CHECK_THROWS_AS(evolve(m, Code(0), Rational(1)), NotAState);
    CHECK_THROWS_AS(evolve(m, Code(5), Rational::parse("-1/2")), InvalidArgument);
}

TEST_CASE("evolution laws hold on random rational times") {
    DeterministicModel m = counter_model();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(0, 400), den(1, 40), st(1, 1000);
    for (int i = 0; i < 200; ++i) {
        Code s(st(rng));
        Rational t(Int(num(rng)), Int(den(rng)));
        CHECK(evolve(m, s, t) == evolve(m, s, Rational(t.floor())));
        // semigroup on integer times
        Rational t1(Int(num(rng) % 50)), t2(Int(num(rng) % 50));
        CHECK(evolve(m, s, t1 + t2) == evolve(m, evolve(m, s, t1), t2));
    }
}

TEST_CASE("observe checks membership and the name") {
    ComputableModel noisy = models::noisy_model();
    Code s11 = encoding::pair(Code(1), Code(1));
    CHECK(observe(noisy, "gamma", s11) == 1);
    CHECK(observe(noisy, "beta", s11) == 1);
    CHECK(observe(noisy, "trivial", encoding::pair(Code(3), Code(5))) == 1);
    CHECK_THROWS_AS(observe(noisy, "beta", Code(0)), NotAState);
    CHECK_THROWS_AS(observe(noisy, "nonsense", s11), UnknownObservable);
}

TEST_CASE("enumerate_states returns exactly the states below the bound") {
    ComputableModel noisy = models::noisy_model();
    CHECK(enumerate_states(noisy, Code(4)) == std::vector<Code>{2, 4});
    CHECK(enumerate_states(noisy, Code(0)).empty());
    ComputableModel decay = models::decay_model();
    CHECK(enumerate_states(decay, Code(5)) == std::vector<Code>{5});

    // models without a fast enumerator fall back to the scan
    ComputableModel particle = models::particle_model_rational();
    CHECK(!particle.enumerate_hint);
    Code least = encoding::triple(encoding::rho(Rational(3)), encoding::rho(Rational(0)),
                                  encoding::rho(Rational(1)));
    auto found = enumerate_states(particle, least);
    REQUIRE(!found.empty());
    CHECK(found.back() == least);
    for (const Code& s : found) CHECK(particle.is_state(s));
}

TEST_CASE("fast enumerators agree with the scan reference") {
    for (const ComputableModel& m :
         {models::noisy_model(), models::decay_model(),
          as_computable(models::successor_fixture())}) {
        REQUIRE(m.enumerate_hint);
        for (long bound : {0L, 1L, 5L, 100L, 2000L, 20000L}) {
            CAPTURE(m.name);
            CAPTURE(bound);
            CHECK(enumerate_states(m, Code(bound)) == enumerate_states_scan(m, Code(bound)));
        }
    }
}

TEST_CASE("calculability verdicts on the noisy detector") {
    ComputableModel noisy = models::noisy_model();
    auto verdicts = check_effective_calculability(noisy, "time", "status", "trivial",
                                                  {Code(2), Code(0)}, Code(10000));
    REQUIRE(verdicts.size() == 2);
    REQUIRE(verdicts[0].ambiguous());
    auto amb = std::get<Ambiguous>(verdicts[0].outcome);
    CHECK(amb.state1 == encoding::pair(Code(2), Code(0)));
    CHECK(amb.state2 == encoding::pair(Code(2), Code(1)));
    // time is never 0, so input 0 has no witness
    CHECK(verdicts[1].no_witness());
    CHECK_THROWS_AS(check_effective_calculability(noisy, "time", "status", "bogus",
                                                  {Code(1)}, Code(10)),
                    UnknownObservable);
}

TEST_CASE("a unique witness yields its output value") {
    auto verdicts = check_effective_calculability(single_state_model(), "alpha", "beta",
                                                  "gamma", {Code(0)}, Code(100));
    REQUIRE(verdicts.size() == 1);
    REQUIRE(verdicts[0].witnessed());
    CHECK(std::get<Witnessed>(verdicts[0].outcome).value == 9);
}

TEST_CASE("ambiguity is monotone in the bound") {
    ComputableModel noisy = models::noisy_model();
    std::vector<Code> inputs{Code(1), Code(2), Code(3)};
    auto at_small = check_effective_calculability(noisy, "time", "status", "trivial", inputs,
                                                  Code(100));
    auto at_large = check_effective_calculability(noisy, "time", "status", "trivial", inputs,
                                                  Code(100000));
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        CHECK(at_small[i].ambiguous());
        CHECK(at_large[i].ambiguous());
        // the first witness pair never changes once found
        CHECK(std::get<Ambiguous>(at_small[i].outcome).state1 ==
              std::get<Ambiguous>(at_large[i].outcome).state1);
        CHECK(std::get<Ambiguous>(at_small[i].outcome).state2 ==
              std::get<Ambiguous>(at_large[i].outcome).state2);
    }
}

TEST_CASE("extract_function recovers the successor") {
    DeterministicModel succ = models::successor_fixture();
    CHECK(extract_function(succ, "input", "output", "done", Code(0), Code(100000)) == 1);
    CHECK(extract_function(succ, "input", "output", "done", Code(4), Code(100000)) == 5);
    CHECK(extract_function(succ, "input", "output", "done", Code(9), Code(100000)) == 10);
    CHECK_THROWS_AS(
        extract_function(succ, "input", "output", "done", Code(1000), Code(100)),
        NoInputState);
}

TEST_CASE("an oscillating done-flag never settles") {
    CHECK_THROWS_AS(extract_function(alternating_model(), "alpha", "beta", "gamma", Code(0),
                                     Code(10), 64, 8),
                    DidNotSettle);
}

TEST_CASE("as_computable keeps states and observables") {
    ComputableModel m = as_computable(models::successor_fixture());
    Code done = encoding::triple(Code(4), Code(5), Code(1));
    CHECK(m.is_state(done));
    CHECK(observe(m, "output", done) == 5);
}
