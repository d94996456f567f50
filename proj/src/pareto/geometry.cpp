#include "moma/pareto/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace moma {

double geometry_tolerance(double offset) { return 1e-9 * std::max(1.0, std::abs(offset)); }

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        sum += a[j] * b[j];
    }
    return sum;
}

bool DownwardHull::contains(const Point& x) const {
    if (empty()) {
        return false;
    }
    return std::all_of(facets.begin(), facets.end(),
                       [&](const Facet& f) { return dot(f.normal, x) <= f.offset + geometry_tolerance(f.offset); });
}

std::vector<Facet> DownwardHull::lower_facets() const {
    std::vector<Facet> result;
    for (const auto& f : facets) {
        if (std::all_of(f.normal.begin(), f.normal.end(), [](double w) { return w > 0.0; })) {
            result.push_back(f);
        }
    }
    return result;
}

namespace {

double determinant(std::vector<std::vector<double>> a) {
    std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                pivot = r;
            }
        }
        if (a[pivot][col] == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            double factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= factor * a[col][c];
            }
        }
    }
    return det;
}

std::size_t rank(std::vector<std::vector<double>> rows, std::size_t dimension) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < dimension && r < rows.size(); ++col) {
        std::size_t pivot = r;
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (std::abs(rows[i][col]) > std::abs(rows[pivot][col])) {
                pivot = i;
            }
        }
        if (std::abs(rows[pivot][col]) <= 1e-9) {
            continue;
        }
        std::swap(rows[pivot], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            double factor = rows[i][col] / rows[r][col];
            for (std::size_t c = col; c < dimension; ++c) {
                rows[i][c] -= factor * rows[r][c];
            }
        }
        ++r;
    }
    return r;
}

// Vector orthogonal to the given dimension-1 rows, by cofactor expansion.
std::vector<double> orthogonal(const std::vector<std::vector<double>>& rows, std::size_t dimension) {
    std::vector<double> normal(dimension, 0.0);
    if (dimension == 1) {
        normal[0] = 1.0;
        return normal;
    }
    for (std::size_t i = 0; i < dimension; ++i) {
        std::vector<std::vector<double>> minor;
        for (const auto& row : rows) {
            std::vector<double> reduced;
            for (std::size_t j = 0; j < dimension; ++j) {
                if (j != i) {
                    reduced.push_back(row[j]);
                }
            }
            minor.push_back(std::move(reduced));
        }
        normal[i] = (i % 2 == 0 ? 1.0 : -1.0) * determinant(std::move(minor));
    }
    return normal;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> subset;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (subset.size() == k) {
            f(subset);
            return;
        }
        for (std::size_t i = start; i + (k - subset.size()) <= n; ++i) {
            subset.push_back(i);
            rec(i + 1);
            subset.pop_back();
        }
    };
    rec(0);
}

}  // namespace

DownwardHull downward_hull(const std::vector<Point>& points, std::size_t dimension) {
    if (dimension == 0 || dimension > kMaxDimension) {
        throw std::invalid_argument("exact hull geometry supports 1 to 4 objectives");
    }
    DownwardHull hull;
    hull.dimension = dimension;

    // Candidates: distinct points not dominated by another point.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point& p = points[i];
        bool redundant = false;
        for (std::size_t k = 0; k < points.size() && !redundant; ++k) {
            if (k == i) {
                continue;
            }
            const Point& q = points[k];
            bool geq = true;
            bool equal = true;
            for (std::size_t j = 0; j < dimension; ++j) {
                geq &= q[j] >= p[j];
                equal &= q[j] == p[j];
            }
            redundant = geq && (!equal || k < i);
        }
        if (!redundant) {
            candidates.push_back(i);
        }
    }
    if (candidates.empty()) {
        return hull;
    }

    auto isValid = [&](const std::vector<double>& normal, double& offset) {
        for (std::size_t i : candidates) {
            double v = dot(normal, points[i]);
            if (v > offset + geometry_tolerance(offset)) {
                return false;
            }
        }
        for (std::size_t i : candidates) {
            offset = std::max(offset, dot(normal, points[i]));
        }
        return true;
    };
    auto addFacet = [&](std::vector<double> normal, double offset) {
        for (const auto& f : hull.facets) {
            double diff = 0.0;
            for (std::size_t j = 0; j < dimension; ++j) {
                diff = std::max(diff, std::abs(f.normal[j] - normal[j]));
            }
            if (diff <= 1e-9) {
                return;
            }
        }
        hull.facets.push_back({std::move(normal), offset, {}});
    };

    for (std::size_t k = 1; k <= std::min(dimension, candidates.size()); ++k) {
        for_each_subset(candidates.size(), k, [&](const std::vector<std::size_t>& chosen) {
            for_each_subset(dimension, dimension - k, [&](const std::vector<std::size_t>& rays) {
                const Point& base = points[candidates[chosen[0]]];
                std::vector<std::vector<double>> rows;
                double scale = 1.0;
                for (std::size_t a = 1; a < chosen.size(); ++a) {
                    std::vector<double> row(dimension);
                    double norm = 0.0;
                    for (std::size_t j = 0; j < dimension; ++j) {
                        row[j] = points[candidates[chosen[a]]][j] - base[j];
                        norm = std::max(norm, std::abs(row[j]));
                    }
                    scale *= norm;
                    rows.push_back(std::move(row));
                }
                for (std::size_t j : rays) {
                    std::vector<double> row(dimension, 0.0);
                    row[j] = 1.0;
                    rows.push_back(std::move(row));
                }
                std::vector<double> normal = orthogonal(rows, dimension);
                double largest = 0.0;
                for (double w : normal) {
                    largest = std::max(largest, std::abs(w));
                }
                if (largest <= 1e-12 * scale || largest == 0.0) {
                    return;
                }
                bool nonnegative = std::all_of(normal.begin(), normal.end(), [&](double w) { return w >= -1e-12 * largest; });
                bool nonpositive = std::all_of(normal.begin(), normal.end(), [&](double w) { return w <= 1e-12 * largest; });
                if (!nonnegative && !nonpositive) {
                    return;
                }
                double sum = 0.0;
                for (double& w : normal) {
                    w = nonnegative ? std::max(w, 0.0) : std::max(-w, 0.0);
                    sum += w;
                }
                for (double& w : normal) {
                    w /= sum;
                }
                double offset = dot(normal, base);
                if (isValid(normal, offset)) {
                    addFacet(std::move(normal), offset);
                }
            });
        });
    }
    std::sort(hull.facets.begin(), hull.facets.end(),
              [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    for (auto& f : hull.facets) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (dot(f.normal, points[i]) >= f.offset - geometry_tolerance(f.offset)) {
                f.points.push_back(i);
            }
        }
    }
    for (std::size_t i : candidates) {
        std::vector<std::vector<double>> active;
        for (const auto& f : hull.facets) {
            if (dot(f.normal, points[i]) >= f.offset - geometry_tolerance(f.offset)) {
                active.push_back(f.normal);
            }
        }
        if (rank(active, dimension) == dimension) {
            hull.vertices.push_back(i);
        }
    }
    return hull;
}

}  // namespace moma
