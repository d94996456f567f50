#include <doctest.h>

#include "fixtures.hpp"
#include "moma/pareto/approximation.hpp"
#include "moma/pareto/query.hpp"

using namespace moma;

namespace {

PreparedProblem fig1_problem() { return prepare_problem(test::fig1(), test::fig1_objectives()); }

bool near(const std::vector<ExtendedValue>& p, double x, double y) {
    return p[0].is_finite() && p[1].is_finite() && std::abs(p[0].value - x) <= 1e-6 && std::abs(p[1].value - y) <= 1e-6;
}

bool has_vertex(const QueryResult& r, double x, double y) {
    return std::any_of(r.vertices.begin(), r.vertices.end(), [&](std::size_t v) { return near(r.points[v], x, y); });
}

}  // namespace

TEST_CASE("refinement steps on the running example") {
    PreparedProblem problem = fig1_problem();
    WeightedSumSolver solver(problem, 1e-8);
    ApproximationState state(2);

    WeightSelection first = select_weight(state, 1e-4);
    REQUIRE(first.weights);
    CHECK(first.weights->entries() == std::vector<double>{1.0, 0.0});
    refine(state, solver, problem, *first.weights);
    REQUIRE(state.points().size() == 1);
    CHECK(near(state.points()[0].values, 4, -2));
    CHECK(state.halfspaces()[0].offset == doctest::Approx(4.0));

    WeightSelection second = select_weight(state, 1e-4);
    REQUIRE(second.weights);
    CHECK(second.weights->entries() == std::vector<double>{0.0, 1.0});
    refine(state, solver, problem, *second.weights);
    CHECK(near(state.points()[1].values, 3, 0));
    CHECK(std::abs(state.halfspaces()[1].offset) <= 1e-7);

    WeightSelection third = select_weight(state, 1e-4);
    REQUIRE(third.weights);
    CHECK((*third.weights)[0] == doctest::Approx(2.0 / 3.0));
    CHECK((*third.weights)[1] == doctest::Approx(1.0 / 3.0));
    refine(state, solver, problem, *third.weights);
    CHECK(state.history().back().value == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(precision_achieved(state) <= 1e-6);

    WeightSelection done = select_weight(state, 1e-4);
    CHECK_FALSE(done.weights);
    CHECK(done.converged);
}

TEST_CASE("a single objective converges after one refinement") {
    MarkovAutomaton m = test::fig1();
    PreparedProblem problem = prepare_problem(m, {test::fig1_objectives()[0]});
    Query query;
    QueryResult r = answer_query(problem, query);
    CHECK(r.termination == Termination::Converged);
    CHECK(r.iterations() == 1);
    CHECK(r.points[0][0].value == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("achievability queries on the running example") {
    PreparedProblem problem = fig1_problem();
    Query query;
    query.kind = QueryKind::Achievability;

    query.point = {3.5, -1};
    QueryResult yes = answer_query(problem, query);
    CHECK(yes.verdict == Verdict::Yes);
    REQUIRE(yes.witness);
    REQUIRE(yes.witness->points.size() == 2);
    CHECK(yes.witness->weights[0] == doctest::Approx(0.5));
    CHECK(yes.witness->weights[1] == doctest::Approx(0.5));

    query.point = {4, 0};
    QueryResult no = answer_query(problem, query);
    CHECK(no.verdict == Verdict::No);
    CHECK_FALSE(no.witness);

    query.point = {3, 0};
    CHECK(answer_query(problem, query).verdict == Verdict::Yes);
}

TEST_CASE("quantitative query on the running example") {
    PreparedProblem problem = fig1_problem();
    Query query;
    query.kind = QueryKind::Quantitative;
    query.thresholds = {0.0};
    QueryResult r = answer_query(problem, query);
    CHECK(r.verdict == Verdict::Yes);
    REQUIRE(r.lower.is_finite());
    REQUIRE(r.upper.is_finite());
    CHECK(r.lower.value <= 3.0 + 1e-6);
    CHECK(r.upper.value >= 3.0 - 1e-6);
    CHECK(r.upper.value - r.lower.value <= 1e-4);

    query.thresholds = {1.0};
    QueryResult none = answer_query(problem, query);
    CHECK(none.verdict == Verdict::No);
}

TEST_CASE("Pareto query on the running example") {
    PreparedProblem problem = fig1_problem();
    Query query;
    QueryResult r = answer_query(problem, query);
    CHECK(r.termination == Termination::Converged);
    CHECK(r.iterations() == 3);
    REQUIRE(r.vertices.size() == 2);
    CHECK(near(r.points[r.vertices[0]], 4, -2));
    CHECK(near(r.points[r.vertices[1]], 3, 0));
    REQUIRE(r.facets.size() == 1);
    CHECK(r.facets[0].normal[0] == doctest::Approx(2.0 / 3.0));
    CHECK(r.zero_ecs == 2);
}

TEST_CASE("an empty budget leaves the verdict unknown") {
    PreparedProblem problem = fig1_problem();
    Query query;
    query.max_iterations = 0;
    QueryResult r = answer_query(problem, query);
    CHECK(r.verdict == Verdict::Unknown);
    CHECK(r.termination == Termination::IterationLimit);
    CHECK(r.vertices.empty());
}

TEST_CASE("minimized objectives are reported in their own direction") {
    // Minimizing -R2 mirrors maximizing R2.
    MarkovAutomaton m = test::fig1();
    RewardAssignment cost = scaled_reward(*m.find_reward("R2"), -1.0, "cost");
    m.add_reward(cost);
    PreparedProblem problem = prepare_problem(m, {{ObjectiveKind::LongRunAverage, "R1", {}, Direction::Maximize},
                                                  {ObjectiveKind::Total, "cost", {}, Direction::Minimize}});
    Query query;
    QueryResult r = answer_query(problem, query);
    REQUIRE(r.vertices.size() == 2);
    CHECK(has_vertex(r, 3, 0));
    CHECK(has_vertex(r, 4, 2));
    // Halfspaces read normal . x <= offset in objective coordinates, so the normal of a
    // minimized coordinate is negative.
    for (const auto& h : r.halfspaces) {
        CHECK(h.normal[1] <= 0.0);
    }

    query.kind = QueryKind::Achievability;
    query.point = {3.5, 1};
    CHECK(answer_query(problem, query).verdict == Verdict::Yes);
    query.point = {3.5, 0.5};
    CHECK(answer_query(problem, query).verdict == Verdict::No);
}

TEST_CASE("reachability objectives") {
    MarkovAutomaton m = test::fig1();
    PreparedProblem problem = prepare_problem(m, {{ObjectiveKind::Reachability, {}, {4}, Direction::Maximize},
                                                  {ObjectiveKind::LongRunAverage, "R1", {}, Direction::Maximize}});
    Query query;
    QueryResult r = answer_query(problem, query);
    CHECK(r.termination == Termination::Converged);
    // Reaching s5 needs beta at s3: (0.5, 3); alpha gives (0, 4).
    REQUIRE(r.vertices.size() == 2);
    CHECK(has_vertex(r, 0, 4));
    CHECK(has_vertex(r, 0.5, 3));
}
