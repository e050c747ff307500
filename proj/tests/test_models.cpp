#include <doctest.h>

#include <random>
#include <set>

#include "cpm/encoding.hpp"
#include "cpm/models.hpp"
#include "testutil.hpp"

using namespace cpm;
using namespace cpm::models;
using encoding::pair;
using encoding::triple;

TEST_CASE("history encoding reads bits left to right") {
    CHECK(history_encode({0, 0, 1, 1, 1}) == 7);
    CHECK(history_encode({}) == 0);
    CHECK(history_encode({1, 0}) == 2);
    CHECK_THROWS_AS(history_encode({0, 2}), InvalidArgument);

    DetectorHistory h = DetectorHistory::parse("00111");
    CHECK(h.length == 5);
    CHECK(h.bits == 7);
    CHECK(h.str() == "00111");
    CHECK(history_decode(h) == std::vector<int>{0, 0, 1, 1, 1});
    CHECK_THROWS_AS(DetectorHistory::parse("01x"), ParseError);
    CHECK_THROWS_AS(DetectorHistory(2, Code(4)), InvalidArgument);

    std::mt19937_64 rng(3);
    std::bernoulli_distribution bit(0.5);
    for (int i = 0; i < 100; ++i) {
        std::vector<int> bits;
        for (int j = rng() % 20; j > 0; --j) bits.push_back(bit(rng) ? 1 : 0);
        DetectorHistory round(bits.size(), history_encode(bits));
        CHECK(history_decode(round) == bits);
    }
}

TEST_CASE("decay state membership") {
    auto decay = decay_model();
    CHECK(decay.is_state(triple(Code(1), Code(0), Code(0))));
    CHECK(decay.is_state(triple(Code(3), Code(3), Code(1))));
    CHECK_FALSE(decay.is_state(triple(Code(3), Code(5), Code(0))));  // 5 is not 2^d - 1
    CHECK_FALSE(decay.is_state(triple(Code(0), Code(0), Code(0))));  // t = 0
    CHECK_FALSE(decay.is_state(triple(Code(2), Code(7), Code(0))));  // d > t
    CHECK_FALSE(decay.is_state(triple(Code(3), Code(3), Code(2))));  // 2k > h
    CHECK(modelcore::observe(decay, "history", triple(Code(3), Code(3), Code(1))) == 3);
    CHECK(modelcore::observe(decay, "time", triple(Code(3), Code(3), Code(1))) == 3);
}

TEST_CASE("decay states at a fixed time") {
    CHECK(decay_states_at(Code(1)) ==
          std::vector<Code>{triple(Code(1), Code(0), Code(0)),
                            triple(Code(1), Code(1), Code(0))});
    CHECK(decay_states_at(Code(2)).size() == 4);
    CHECK_THROWS_AS(decay_states_at(Code(0)), BadTime);
    CHECK_THROWS_AS(decay_states_at(Code(10000)), InvalidArgument);

    // census law and per-history multiplicity, against direct counting
    for (unsigned long t = 1; t <= 10; ++t) {
        auto states = decay_states_at(Code(t));
        CHECK(states.size() == (1ul << t));
        std::map<Code, unsigned long> by_history;
        for (const Code& s : states) ++by_history[encoding::untriple(s)[1]];
        Code h = 0;
        for (unsigned long d = 0; d <= t; ++d, h = 2 * h + 1)
            CHECK(by_history.at(h) == (d == 0 ? 1ul : 1ul << (d - 1)));
    }
}

TEST_CASE("decay probabilities reproduce the half-life behaviour") {
    DetectorHistory b1_zero(1, Code(0));
    CHECK(decay_probability(Code(3), Code(3), b1_zero) == Rational(Int(1), Int(2)));
    CHECK(decay_probability(Code(3), Code(0), b1_zero) == Rational(Int(1), Int(4)));
    CHECK(decay_probability(Code(1), Code(0), std::nullopt) == Rational(Int(1), Int(2)));

    // survival and one-step decay
    for (unsigned long t = 1; t <= 8; ++t) {
        CHECK(decay_probability(Code(t), Code(0), std::nullopt) ==
              Rational(Int(1), Int(1) << t));
        DetectorHistory alive(t, Code(0));
        CHECK(decay_probability(Code(t + 1), Code(1), alive) == Rational(Int(1), Int(2)));
        CHECK(decay_probability(Code(t + 1), Code(0), alive) == Rational(Int(1), Int(2)));
    }

    // probabilities over all possible histories sum to one exactly
    for (unsigned long t : {3ul, 5ul}) {
        Rational sum;
        Code h = 0;
        for (unsigned long d = 0; d <= t; ++d, h = 2 * h + 1)
            sum = sum + decay_probability(Code(t), h, std::nullopt);
        CHECK(sum == Rational(1));
        // same, conditioned on survival through t = 1
        DetectorHistory cond(1, Code(0));
        Rational cond_sum;
        h = 0;
        for (unsigned long d = 0; d <= t; ++d, h = 2 * h + 1)
            cond_sum = cond_sum + decay_probability(Code(t), h, cond);
        CHECK(cond_sum == Rational(1));
    }

    CHECK_THROWS_AS(decay_probability(Code(0), Code(0), std::nullopt), BadTime);
    // "decayed then alive" prefix matches no state
    CHECK_THROWS_AS(decay_probability(Code(2), Code(0), DetectorHistory(2, Code(2))),
                    EmptyConditioningSet);
    CHECK_THROWS_AS(decay_probability(Code(2), Code(0), DetectorHistory(3, Code(0))),
                    InvalidArgument);
}

TEST_CASE("the conditioned census is the expected set of states") {
    auto census = decay_census(Code(3), Code(3), DetectorHistory(1, Code(0)));
    std::vector<Code> expected_conditioned{
        triple(Code(3), Code(0), Code(0)), triple(Code(3), Code(1), Code(0)),
        triple(Code(3), Code(3), Code(0)), triple(Code(3), Code(3), Code(1))};
    std::sort(expected_conditioned.begin(), expected_conditioned.end());
    CHECK(census.conditioned == expected_conditioned);
    CHECK(census.matching.size() == 2);
    CHECK(census.probability == Rational(Int(1), Int(2)));
    CHECK(decay_state_str(triple(Code(3), Code(3), Code(1))) == "(3,(011)2,1)");
}

TEST_CASE("noisy detector membership and observables") {
    auto noisy = noisy_model();
    CHECK(noisy.is_state(pair(Code(1), Code(0))));
    CHECK(noisy.is_state(pair(Code(1), Code(1))));
    CHECK_FALSE(noisy.is_state(pair(Code(1), Code(2))));  // h > 2^t - 1
    CHECK_FALSE(noisy.is_state(pair(Code(0), Code(0))));  // t = 0
    CHECK(modelcore::observe(noisy, "history", pair(Code(2), Code(3))) == 3);
    CHECK(modelcore::observe(noisy, "delta", pair(Code(2), Code(3))) == 3);
    CHECK(modelcore::observe(noisy, "status", pair(Code(2), Code(2))) == 0);
    CHECK(modelcore::observe(noisy, "time", pair(Code(9), Code(77))) == 9);
}

TEST_CASE("tree children extend the history by one bit") {
    TreeNode root{pair(Code(1), Code(0))};
    auto kids = tree_children(root);
    CHECK(kids[0].state == pair(Code(2), Code(0)));
    CHECK(kids[1].state == pair(Code(2), Code(1)));
    auto kids2 = tree_children(TreeNode{pair(Code(2), Code(3))});
    CHECK(kids2[0].state == pair(Code(3), Code(6)));
    CHECK(kids2[1].state == pair(Code(3), Code(7)));
    CHECK_THROWS_AS(tree_children(TreeNode{Code(0)}), NotAState);

    // every generation doubles and stays inside the state set
    auto noisy = noisy_model();
    std::vector<TreeNode> level{root};
    for (int depth = 1; depth <= 6; ++depth) {
        std::vector<TreeNode> next;
        for (const TreeNode& node : level)
            for (const TreeNode& child : tree_children(node)) {
                CHECK(noisy.is_state(child.state));
                next.push_back(child);
            }
        CHECK(next.size() == (1u << depth));
        level = std::move(next);
    }
}

TEST_CASE("branch functions read off alpha, beta, gamma along the path") {
    std::vector<TreeNode> ones{TreeNode{pair(Code(1), Code(1))},
                               TreeNode{pair(Code(2), Code(3))},
                               TreeNode{pair(Code(3), Code(7))}};
    std::vector<BranchStep> expected{{Code(1), Code(1), Code(1)},
                                     {Code(2), Code(1), Code(1)},
                                     {Code(3), Code(1), Code(1)}};
    CHECK(branch_function(ones) == expected);

    std::vector<TreeNode> zeros{TreeNode{pair(Code(1), Code(0))},
                                TreeNode{pair(Code(2), Code(0))}};
    std::vector<BranchStep> expected0{{Code(1), Code(0), Code(1)},
                                      {Code(2), Code(0), Code(1)}};
    CHECK(branch_function(zeros) == expected0);

    CHECK_THROWS_AS(branch_function({}), NotABranch);
    CHECK_THROWS_AS(branch_function({TreeNode{pair(Code(1), Code(0))},
                                     TreeNode{pair(Code(3), Code(0))}}),
                    NotABranch);
    CHECK_THROWS_AS(branch_function({TreeNode{pair(Code(1), Code(1))},
                                     TreeNode{pair(Code(2), Code(0))}}),
                    NotABranch);

    // depth d reaches all 2^d output sequences
    const unsigned long d = 4;
    std::set<std::vector<int>> functions;
    for (Code h = 0; h < (Code(1) << d); ++h) {
        std::vector<TreeNode> branch;
        for (unsigned long t = 1; t <= d; ++t) {
            Code prefix;
            mpz_fdiv_q_2exp(prefix.get_mpz_t(), h.get_mpz_t(), d - t);
            branch.push_back(TreeNode{pair(Code(t), prefix)});
        }
        std::vector<int> outputs;
        for (const BranchStep& step : branch_function(branch))
            outputs.push_back(static_cast<int>(step.output.get_ui()));
        functions.insert(outputs);
    }
    CHECK(functions.size() == (1u << d));
}

TEST_CASE("rational particle states satisfy x = x0 + 3t") {
    auto particle = particle_model_rational();
    Code good = triple(encoding::rho(Rational(3)), encoding::rho(Rational(0)),
                       encoding::rho(Rational(1)));
    CHECK(particle.is_state(good));
    CHECK(modelcore::observe(particle, "position", good) == encoding::rho(Rational(3)));
    CHECK(modelcore::observe(particle, "initial", good) == 0);
    Code bad = triple(encoding::rho(Rational(1)), encoding::rho(Rational(0)),
                      encoding::rho(Rational(1)));
    CHECK_FALSE(particle.is_state(bad));
    // t = 0 is excluded
    Code frozen = triple(encoding::rho(Rational(0)), encoding::rho(Rational(0)),
                         encoding::rho(Rational(0)));
    CHECK_FALSE(particle.is_state(frozen));

    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        Rational x0 = testutil::random_rational(rng, 30, 10);
        Rational t = testutil::random_positive_rational(rng, 30, 10);
        Rational x = x0 + Rational(3) * t;
        CHECK(particle.is_state(
            triple(encoding::rho(x), encoding::rho(x0), encoding::rho(t))));
        CHECK_FALSE(particle.is_state(
            triple(encoding::rho(x + Rational(1)), encoding::rho(x0), encoding::rho(t))));
    }
}

TEST_CASE("line-model membership against a direct reconstruction") {
    auto m6 = line_model6();
    Code unit = encoding::interval_code(Rational(0), Rational(1));
    Code good = triple(unit, unit, encoding::interval_code(Rational(0), Rational(4)));
    CHECK(m6.is_state(good));
    CHECK(modelcore::observe(m6, "position", good) ==
          encoding::interval_code(Rational(0), Rational(4)));
    Code bad = triple(unit, unit, encoding::interval_code(Rational(0), Rational(5)));
    CHECK_FALSE(m6.is_state(bad));
    CHECK_FALSE(m6.is_state(Code(0)));

    // the defining identity, rebuilt from raw rationals
    std::mt19937_64 rng(47);
    for (int i = 0; i < 200; ++i) {
        Rational a = testutil::random_rational(rng, 20, 12);
        Rational b = a + testutil::random_positive_rational(rng, 20, 12);
        Rational c = testutil::random_rational(rng, 20, 12);
        Rational d = c + testutil::random_positive_rational(rng, 20, 12);
        const Rational three(3);
        Code state = triple(encoding::interval_code(a, b), encoding::interval_code(c, d),
                            encoding::interval_code(a + three * c, b + three * d));
        CHECK(m6.is_state(state));
        Code wrong = triple(encoding::interval_code(a, b), encoding::interval_code(c, d),
                            encoding::interval_code(a + three * c, b + three * d + 1));
        CHECK_FALSE(m6.is_state(wrong));
    }
}

TEST_CASE("successor fixture walks the counter to the done flag") {
    auto succ = successor_fixture();
    Code start = triple(Code(4), Code(0), Code(0));
    CHECK(succ.is_state(start));
    Code s = start;
    for (int i = 0; i < 5; ++i) {
        CHECK(modelcore::observe(succ, "done", s) == 0);
        s = succ.step(s);
    }
    CHECK(modelcore::observe(succ, "done", s) == 1);
    CHECK(modelcore::observe(succ, "output", s) == 5);
    CHECK(succ.step(s) == s);  // done states are fixed points
    CHECK_FALSE(succ.is_state(triple(Code(4), Code(6), Code(1))));
    CHECK_FALSE(succ.is_state(triple(Code(4), Code(5), Code(0))));
    CHECK_FALSE(succ.is_state(triple(Code(4), Code(0), Code(2))));
}
