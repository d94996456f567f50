#include <doctest.h>

#include "fixtures.hpp"
#include "moma/core/transform.hpp"
#include "moma/core/validation.hpp"
#include "moma/graph/end_components.hpp"
#include "moma/single/chain_evaluation.hpp"

using namespace moma;

namespace {

bool has(const ValidationReport& report, Assumption a, const std::string& text = {}) {
    for (const auto& v : report.violations) {
        if (v.assumption == a && v.message.find(text) != std::string::npos) {
            return true;
        }
    }
    return false;
}

MarkovAutomaton self_loop(double rate) {
    ModelBuilder b;
    b.add_markovian_state(rate, "s");
    b.add_transition(0, 1.0);
    return b.build(0);
}

// A probabilistic state a with a self-loop action, and a Markovian sink t reached by another action.
MarkovAutomaton loop_or_leave(double loopReward, bool reachable) {
    ModelBuilder b;
    ActionId stay = b.intern_action("stay");
    ActionId leave = b.intern_action("leave");
    b.add_probabilistic_state("init");
    b.add_choice(leave);
    b.add_transition(2, 1.0);
    b.add_probabilistic_state("a");
    b.add_choice(stay);
    b.add_transition(1, 1.0);
    b.add_choice(leave);
    b.add_transition(2, 1.0);
    b.add_markovian_state(1.0, "t");
    b.add_transition(2, 1.0);
    MarkovAutomaton m = b.build(reachable ? 1 : 0);
    RewardAssignment r = m.zero_reward("r");
    r.transition_rewards[m.transition_begin(m.choice_begin(1))] = loopReward;
    m.add_reward(r);
    return m;
}

}  // namespace

TEST_CASE("validate_model accepts the running example and a single self-loop") {
    CHECK(validate_model(test::fig1()).ok());
    CHECK(validate_model(self_loop(1.0)).ok());
}

TEST_CASE("validate_model reports a distribution that does not sum to one") {
    ModelBuilder b;
    b.add_markovian_state(1.0, "s");
    b.add_transition(1, 0.5);
    b.add_markovian_state(1.0, "t");
    b.add_transition(1, 1.0);
    ValidationReport report = validate_model(b.build(0));
    CHECK(has(report, Assumption::WellFormed, "distribution sums to 0.5"));
}

TEST_CASE("validate_model rejects rate zero") {
    CHECK(has(validate_model(self_loop(0.0)), Assumption::WellFormed, "rate must be positive"));
}

TEST_CASE("check_non_zeno") {
    MarkovAutomaton fig1 = test::fig1();
    CHECK(check_non_zeno(fig1, mec_decomposition(fig1)).ok());

    ModelBuilder b;
    ActionId alpha = b.intern_action("alpha");
    b.add_probabilistic_state("p");
    b.add_choice(alpha);
    b.add_transition(1, 1.0);
    b.add_probabilistic_state("q");
    b.add_choice(alpha);
    b.add_transition(0, 1.0);
    MarkovAutomaton zeno = b.build(0);
    ValidationReport report = check_non_zeno(zeno, mec_decomposition(zeno));
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].assumption == Assumption::NonZeno);
    CHECK(report.violations[0].location == "end component {p,q}");

    // A MEC with a Markovian state can still hide a probabilistic self-loop.
    ModelBuilder h;
    ActionId stay = h.intern_action("stay");
    ActionId go = h.intern_action("go");
    h.add_probabilistic_state("p");
    h.add_choice(stay);
    h.add_transition(0, 1.0);
    h.add_choice(go);
    h.add_transition(1, 1.0);
    h.add_markovian_state(1.0, "m");
    h.add_transition(0, 1.0);
    MarkovAutomaton hidden = h.build(0);
    ValidationReport inner = check_non_zeno(hidden, mec_decomposition(hidden));
    REQUIRE(inner.violations.size() == 1);
    CHECK(inner.violations[0].location == "end component {p,m}");
    CHECK(inner.violations[0].message == "contains end component {p} without Markovian state");

    DerivedModel embedded = embed_mdp(zeno);
    CHECK(check_non_zeno(embedded.model, mec_decomposition(embedded.model)).ok());
}

TEST_CASE("check_sign_consistency") {
    MarkovAutomaton m = test::fig1();
    auto mecs = mec_decomposition(m);
    const RewardAssignment* r2 = m.find_reward("R2");
    SignReport report = check_sign_consistency(m, {r2}, mecs);
    CHECK(report.report.ok());
    RewardAssignment zero = m.zero_reward("z");
    CHECK(check_sign_consistency(m, {&zero}, mecs).report.ok());

    // One MEC with internal rewards +1 and -1.
    ModelBuilder b;
    b.add_markovian_state(1.0, "x");
    b.add_transition(1, 1.0);
    b.add_markovian_state(1.0, "y");
    b.add_transition(0, 1.0);
    MarkovAutomaton cycle = b.build(0);
    RewardAssignment mixed = cycle.zero_reward("mixed");
    mixed.transition_rewards = {1.0, -1.0};
    SignReport bad = check_sign_consistency(cycle, {&mixed}, mec_decomposition(cycle));
    CHECK(has(bad.report, Assumption::SignConsistency));
}

TEST_CASE("check_finiteness") {
    MarkovAutomaton m = test::fig1();
    auto mecs = mec_decomposition(m);
    std::vector<const RewardAssignment*> totals{m.find_reward("R2")};
    auto signs = check_sign_consistency(m, totals, mecs).signs;
    CHECK(check_finiteness(m, totals, mecs, signs).ok());

    for (bool reachable : {true, false}) {
        MarkovAutomaton loop = loop_or_leave(1.0, reachable);
        auto loopMecs = mec_decomposition(loop);
        std::vector<const RewardAssignment*> r{&loop.rewards()[0]};
        auto loopSigns = check_sign_consistency(loop, r, loopMecs).signs;
        CHECK(check_finiteness(loop, r, loopMecs, loopSigns).ok() == !reachable);
    }
}

TEST_CASE("embed_mdp") {
    SUBCASE("one state with a rewarded self-loop") {
        ModelBuilder b;
        ActionId a = b.intern_action("a");
        b.add_probabilistic_state("s");
        b.add_choice(a);
        b.add_transition(0, 1.0);
        MarkovAutomaton mdp = b.build(0);
        RewardAssignment r = mdp.zero_reward("r");
        r.transition_rewards[0] = 5.0;
        mdp.add_reward(r);
        DerivedModel e = embed_mdp(mdp);
        REQUIRE(e.model.num_states() == 1);
        CHECK(e.model.is_markovian(0));
        CHECK(e.model.exit_rate(0) == 1.0);
        CHECK(e.model.rewards()[0].transition_rewards[0] == 5.0);
        CHECK(bscc_gain(e.model, e.model.rewards()[0]) == doctest::Approx(5.0).epsilon(1e-12));
    }
    SUBCASE("two-cycle with rewards 2 and 4") {
        ModelBuilder b;
        ActionId go = b.intern_action("go");
        b.add_probabilistic_state("a");
        b.add_choice(go);
        b.add_transition(1, 1.0);
        b.add_probabilistic_state("b");
        b.add_choice(go);
        b.add_transition(0, 1.0);
        MarkovAutomaton mdp = b.build(0);
        RewardAssignment r = mdp.zero_reward("r");
        r.transition_rewards = {2.0, 4.0};
        mdp.add_reward(r);
        DerivedModel e = embed_mdp(mdp);
        CHECK(bscc_gain(e.model, e.model.rewards()[0]) == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("two actions at one state are preserved") {
        ModelBuilder b;
        ActionId x = b.intern_action("x");
        ActionId y = b.intern_action("y");
        b.add_probabilistic_state("s");
        b.add_choice(x);
        b.add_transition(0, 1.0);
        b.add_choice(y);
        b.add_transition(1, 1.0);
        b.add_probabilistic_state("t");
        b.add_choice(x);
        b.add_transition(1, 1.0);
        MarkovAutomaton mdp = b.build(0);
        DerivedModel e = embed_mdp(mdp);
        CHECK_FALSE(e.model.is_markovian(0));
        CHECK(e.model.num_choices(0) == 2);
        CHECK(e.model.action_name(e.model.choice_action(e.model.choice_begin(0))) == "x");
        CHECK(e.model.action_name(e.model.choice_action(e.model.choice_begin(0) + 1)) == "y");
        CHECK(e.model.num_markovian_states() == e.model.num_states() - 1);
    }
    SUBCASE("Markovian input is rejected") {
        CHECK_THROWS_AS((void)embed_mdp(self_loop(1.0)), ModelError);
    }
}

TEST_CASE("induced_chain of the running example") {
    MarkovAutomaton m = test::fig1();
    MDStrategy sigma1(m.num_states());
    sigma1.set(2, 0);
    sigma1.set(3, 0);
    DerivedModel chain = induced_chain(m, sigma1);
    CHECK(is_deterministic(chain.model));
    // s3 moves to s1, s4 splits 0.6/0.4 between s2 and s6.
    auto find = [&](const std::string& name) { return *chain.model.find_state(name); };
    auto s3 = chain.model.transitions(chain.model.choice_begin(find("s3")));
    REQUIRE(s3.size() == 1);
    CHECK(chain.model.state_name(s3[0].target) == "s1");
    auto s4 = chain.model.transitions(chain.model.choice_begin(find("s4")));
    REQUIRE(s4.size() == 2);
    CHECK(chain.model.state_name(s4[0].target) == "s2");
    CHECK(s4[0].probability == 0.6);
    CHECK(chain.model.state_name(s4[1].target) == "s6");

    MDStrategy sigma2(m.num_states());
    sigma2.set(2, 1);
    sigma2.set(3, 0);
    ChainEvaluation e = evaluate_strategy(m, sigma2, {});
    REQUIRE(e.bsccs.size() == 2);
    CHECK(e.bsccs[0] == std::vector<StateId>{1, 3, 5});
    CHECK(e.bsccs[1] == std::vector<StateId>{4});

    MarkovAutomaton plain = self_loop(2.0);
    CHECK(induced_chain(plain, MDStrategy::first_choice(plain)).model == plain);
}
