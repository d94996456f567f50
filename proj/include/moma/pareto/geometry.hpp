#pragma once

#include <vector>

namespace moma {

using Point = std::vector<double>;

inline constexpr std::size_t kMaxDimension = 4;

// Relative slack used for membership tests: 1e-9 * max(1, |offset|).
[[nodiscard]] double geometry_tolerance(double offset);

// Supporting hyperplane normal . x <= offset with a nonnegative normal summing to one.
struct Facet {
    std::vector<double> normal;
    double offset = 0.0;
    // Indices of the input points lying on the facet.
    std::vector<std::size_t> points;
};

// Downward convex hull of a point set: every x dominated by a convex combination of the points.
struct DownwardHull {
    std::size_t dimension = 0;
    // Indices of the extreme points, ascending.
    std::vector<std::size_t> vertices;
    // All facets, including those with zero normal entries, ordered lexicographically by normal.
    std::vector<Facet> facets;

    [[nodiscard]] bool empty() const { return vertices.empty(); }
    [[nodiscard]] bool contains(const Point& x) const;
    // Facets whose normal is strictly positive in every coordinate.
    [[nodiscard]] std::vector<Facet> lower_facets() const;
};

// Exact facet enumeration for dimensions 1 to 4: every facet is spanned by some input points and
// some of the recession directions -e_j. Throws std::invalid_argument for other dimensions.
[[nodiscard]] DownwardHull downward_hull(const std::vector<Point>& points, std::size_t dimension);

[[nodiscard]] double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace moma
