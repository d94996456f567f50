#include <doctest.h>

#include <stdexcept>

#include "moma/pareto/geometry.hpp"
#include "moma/pareto/linear_program.hpp"

using namespace moma;

TEST_CASE("simplex on a small program") {
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6.
    LpResult r = maximize({1, 1}, {{{1, 2}, ConstraintSense::LessEqual, 4}, {{3, 1}, ConstraintSense::LessEqual, 6}});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(2.8));
    CHECK(r.x[0] == doctest::Approx(1.6));
    CHECK(r.x[1] == doctest::Approx(1.2));

    CHECK(maximize({1}, {{{1}, ConstraintSense::GreaterEqual, 2}, {{1}, ConstraintSense::LessEqual, 1}}).status ==
          LpStatus::Infeasible);
    CHECK(maximize({1, 0}, {{{0, 1}, ConstraintSense::LessEqual, 1}}).status == LpStatus::Unbounded);
    LpResult eq = maximize({-1, -1}, {{{1, 1}, ConstraintSense::Equal, 3}});
    REQUIRE(eq.status == LpStatus::Optimal);
    CHECK(eq.objective == doctest::Approx(-3.0));
}

TEST_CASE("downward hull of the two running-example points") {
    DownwardHull h = downward_hull({{4, -2}, {3, 0}}, 2);
    CHECK(h.vertices == std::vector<std::size_t>{0, 1});
    auto lower = h.lower_facets();
    REQUIRE(lower.size() == 1);
    CHECK(lower[0].normal[0] == doctest::Approx(2.0 / 3.0));
    CHECK(lower[0].normal[1] == doctest::Approx(1.0 / 3.0));
    CHECK(lower[0].offset == doctest::Approx(2.0));
    CHECK(lower[0].points == std::vector<std::size_t>{0, 1});
    CHECK(h.contains({3.5, -1}));
    CHECK_FALSE(h.contains({4, 0}));
    CHECK(h.contains({-100, -100}));
}

TEST_CASE("downward hull of a single point has unit facets") {
    DownwardHull h = downward_hull({{1, 1}}, 2);
    REQUIRE(h.facets.size() == 2);
    CHECK(h.facets[0].normal == std::vector<double>{0, 1});
    CHECK(h.facets[1].normal == std::vector<double>{1, 0});
    CHECK(h.lower_facets().empty());
}

TEST_CASE("dominated points are not vertices") {
    DownwardHull h = downward_hull({{0, 0}, {1, 1}, {0.5, 0.4}}, 2);
    CHECK(h.vertices == std::vector<std::size_t>{1});
    DownwardHull g = downward_hull({{0, 1}, {1, 0}, {0.5, 0.4}}, 2);
    CHECK(g.vertices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("downward hull in three and four dimensions") {
    DownwardHull h3 = downward_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    CHECK(h3.vertices.size() == 3);
    auto lower = h3.lower_facets();
    REQUIRE(lower.size() == 1);
    CHECK(lower[0].offset == doctest::Approx(1.0 / 3.0));
    CHECK(h3.contains({0.3, 0.3, 0.3}));
    CHECK_FALSE(h3.contains({0.4, 0.4, 0.4}));

    DownwardHull h4 = downward_hull({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0.2, 0.2, 0.2, 0.2}}, 4);
    CHECK(h4.vertices.size() == 4);
    CHECK(h4.contains({0.25, 0.25, 0.25, 0.25}));
    CHECK_FALSE(h4.contains({0.26, 0.25, 0.25, 0.25}));

    CHECK_THROWS_AS((void)downward_hull({{1, 1, 1, 1, 1}}, 5), std::invalid_argument);
}
