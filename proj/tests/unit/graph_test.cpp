#include <doctest.h>

#include "fixtures.hpp"
#include "moma/graph/end_components.hpp"
#include "moma/graph/quotient.hpp"
#include "moma/graph/scc.hpp"

using namespace moma;

namespace {

// s enables alpha (self-loop) and beta (to a Markovian sink t).
MarkovAutomaton loop_with_exit() {
    ModelBuilder b;
    ActionId alpha = b.intern_action("alpha");
    ActionId beta = b.intern_action("beta");
    b.add_probabilistic_state("s");
    b.add_choice(alpha);
    b.add_transition(0, 1.0);
    b.add_choice(beta);
    b.add_transition(1, 1.0);
    b.add_markovian_state(1.0, "t");
    b.add_transition(1, 1.0);
    return b.build(0);
}

}  // namespace

TEST_CASE("strongly connected components in reverse topological order") {
    Digraph g;
    for (int i = 0; i < 4; ++i) {
        g.add_node();
        if (i == 0) {
            g.add_edge(1);
        } else if (i == 1) {
            g.add_edge(0);
            g.add_edge(2);
        } else if (i == 2) {
            g.add_edge(3);
        } else {
            g.add_edge(3);
        }
    }
    SccDecomposition scc = strongly_connected_components(g);
    CHECK(scc.count == 3);
    CHECK(scc.component[0] == scc.component[1]);
    CHECK(scc.component[3] == 0);
    std::vector<bool> bottom = bottom_components(g, scc);
    CHECK(bottom[scc.component[3]]);
    CHECK_FALSE(bottom[scc.component[0]]);
}

TEST_CASE("mec_decomposition of the running example") {
    MarkovAutomaton m = test::fig1();
    auto mecs = mec_decomposition(m);
    REQUIRE(mecs.size() == 2);
    CHECK(mecs[0].states == std::vector<StateId>{1, 3, 5});
    // s2's choice, both choices of s4, s6's choice.
    std::vector<std::size_t> choices{m.choice_begin(1), m.choice_begin(3), m.choice_begin(3) + 1, m.choice_begin(5)};
    CHECK(mecs[0].choices == choices);
    CHECK(mecs[1].states == std::vector<StateId>{4});
    for (const auto& ec : mecs) {
        CHECK(is_end_component(m, ec));
        CHECK(exits(m, ec).empty());
    }
}

TEST_CASE("mec_decomposition of trivial models") {
    ModelBuilder b;
    b.add_markovian_state(1.0, "s");
    b.add_transition(0, 1.0);
    auto single = mec_decomposition(b.build(0));
    REQUIRE(single.size() == 1);
    CHECK(single[0].states == std::vector<StateId>{0});

    ModelBuilder d;
    ActionId a = d.intern_action("a");
    d.add_probabilistic_state("x");
    d.add_choice(a);
    d.add_transition(1, 0.5);
    d.add_transition(2, 0.5);
    d.add_markovian_state(1.0, "y");
    d.add_transition(2, 1.0);
    d.add_markovian_state(3.0, "t");
    d.add_transition(2, 1.0);
    auto dag = mec_decomposition(d.build(0));
    REQUIRE(dag.size() == 1);
    CHECK(dag[0].states == std::vector<StateId>{2});
}

TEST_CASE("zero_mecs") {
    MarkovAutomaton m = test::fig1();
    CHECK(zero_mecs(m, {m.find_reward("R2")}) == mec_decomposition(m));
    CHECK(zero_mecs(m, {}) == mec_decomposition(m));

    // A cycle x -> y -> x where y's transition costs 1, and x may also loop for free.
    ModelBuilder b;
    ActionId loop = b.intern_action("loop");
    ActionId go = b.intern_action("go");
    b.add_probabilistic_state("x");
    b.add_choice(loop);
    b.add_transition(0, 1.0);
    b.add_choice(go);
    b.add_transition(1, 1.0);
    b.add_markovian_state(1.0, "y");
    b.add_transition(0, 1.0);
    MarkovAutomaton cyc = b.build(0);
    RewardAssignment r = cyc.zero_reward("r");
    r.transition_rewards[2] = -1.0;
    auto zero = zero_mecs(cyc, {&r});
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].states == std::vector<StateId>{0});
    CHECK(zero[0].choices == std::vector<std::size_t>{0});
}

TEST_CASE("exits and sub_ma") {
    MarkovAutomaton m = loop_with_exit();
    EndComponent ec{{0}, {0}};
    REQUIRE(is_end_component(m, ec));
    CHECK(exits(m, ec) == std::vector<std::size_t>{1});

    MarkovAutomaton fig1 = test::fig1();
    DerivedModel sub = sub_ma(fig1, mec_decomposition(fig1)[0]);
    CHECK(sub.model.num_states() == 3);
    CHECK(sub.model.num_choices(*sub.model.find_state("s4")) == 2);

    EndComponent whole{{0, 1}, {0, 1, 2}};
    CHECK(sub_ma(m, whole).model.num_states() == 2);
    CHECK(sub_ma(m, whole).model.num_choices() == m.num_choices());
}

TEST_CASE("quotient of the running example") {
    MarkovAutomaton m = test::fig1();
    QuotientModel q = quotient(m, mec_decomposition(m));
    // s1, s3, C1, C2, bottom.
    CHECK(q.model.num_states() == 5);
    for (StateId c : q.ec_state) {
        REQUIRE(q.model.num_choices(c) == 1);
        CHECK(q.choice_info[q.model.choice_begin(c)].kind == QuotientChoiceKind::Bottom);
    }
    CHECK(q.model.is_markovian(q.bottom_state));

    QuotientModel none = quotient(m, {});
    CHECK(none.model.num_states() == m.num_states() + 1);
    // The bottom state is isolated: only its own self-loop leads to it.
    for (StateId s = 0; s < none.model.num_states(); ++s) {
        for (std::size_t c : none.model.choices(s)) {
            for (const auto& t : none.model.transitions(c)) {
                CHECK((t.target != none.bottom_state || s == none.bottom_state));
            }
        }
    }

    MarkovAutomaton le = loop_with_exit();
    QuotientModel one = quotient(le, {EndComponent{{0}, {0}}});
    StateId c = one.ec_state[0];
    REQUIRE(one.model.num_choices(c) == 2);
    CHECK(one.choice_info[one.model.choice_begin(c)].kind == QuotientChoiceKind::Exit);
    CHECK(one.model.action_name(one.model.choice_action(one.model.choice_begin(c))) == "s.beta");
    CHECK(one.choice_info[one.model.choice_begin(c) + 1].kind == QuotientChoiceKind::Bottom);
}

TEST_CASE("lift_strategy follows exits and stays") {
    MarkovAutomaton le = loop_with_exit();
    QuotientModel q = quotient(le, {EndComponent{{0}, {0}}});
    MDStrategy exit(q.model.num_states());
    exit.set(q.ec_state[0], 0);
    MDStrategy lifted = lift_strategy(le, q, exit, {stay_within(le, q.ecs[0])});
    CHECK(le.action_name(lifted.action(le, 0)) == "beta");
    MDStrategy stay(q.model.num_states());
    stay.set(q.ec_state[0], 1);
    lifted = lift_strategy(le, q, stay, {stay_within(le, q.ecs[0])});
    CHECK(le.action_name(lifted.action(le, 0)) == "alpha");
}

TEST_CASE("reach_within walks backward toward the exit state") {
    // a and b form an EC; a moves to b with "right" or loops with "wait"; b exits.
    ModelBuilder bld;
    ActionId wait = bld.intern_action("wait");
    ActionId right = bld.intern_action("right");
    ActionId out = bld.intern_action("out");
    bld.add_probabilistic_state("a");
    bld.add_choice(wait);
    bld.add_transition(0, 1.0);
    bld.add_choice(right);
    bld.add_transition(1, 1.0);
    bld.add_probabilistic_state("b");
    bld.add_choice(wait);
    bld.add_transition(0, 1.0);
    bld.add_choice(out);
    bld.add_transition(2, 1.0);
    bld.add_markovian_state(1.0, "t");
    bld.add_transition(2, 1.0);
    MarkovAutomaton m = bld.build(0);
    EndComponent ec{{0, 1}, {0, 1, 2}};
    REQUIRE(is_end_component(m, ec));
    MDStrategy toward = reach_within(m, ec, 1);
    CHECK(m.action_name(toward.action(m, 0)) == "right");

    QuotientModel q = quotient(m, {ec});
    MDStrategy exit(q.model.num_states());
    exit.set(q.ec_state[0], 0);
    REQUIRE(q.choice_info[q.model.choice_begin(q.ec_state[0])].kind == QuotientChoiceKind::Exit);
    MDStrategy lifted = lift_strategy(m, q, exit, {stay_within(m, ec)});
    CHECK(m.action_name(lifted.action(m, 0)) == "right");
    CHECK(m.action_name(lifted.action(m, 1)) == "out");
}
