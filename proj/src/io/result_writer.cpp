#include "moma/io/result_writer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace moma {

Json to_json(const ExtendedValue& v) {
    switch (v.kind) {
        case ExtendedValue::Kind::Finite:
            return v.value;
        case ExtendedValue::Kind::NegativeInfinity:
            return "-inf";
        case ExtendedValue::Kind::PositiveInfinity:
            return "+inf";
    }
    return nullptr;
}

namespace {

Json real(double v) {
    if (std::isinf(v)) {
        return v < 0 ? "-inf" : "+inf";
    }
    return v;
}

Json point_json(const std::vector<ExtendedValue>& values) {
    Json p = Json::array();
    for (const auto& v : values) {
        p.push_back(to_json(v));
    }
    return p;
}

Json facets_json(const std::vector<QueryFacet>& facets) {
    Json list = Json::array();
    for (const auto& f : facets) {
        Json j;
        j["normal"] = f.normal;
        j["offset"] = f.offset;
        list.push_back(std::move(j));
    }
    return list;
}

std::string format_real(double v) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    return std::string(buffer, ptr);
}

}  // namespace

Json strategy_to_json(const MarkovAutomaton& m, const MDStrategy& sigma) {
    Json choices = Json::object();
    for (StateId s = 0; s < m.num_states(); ++s) {
        if (m.is_markovian(s) || m.num_choices(s) < 2 || !sigma.is_set(s)) {
            continue;
        }
        choices[m.state_name(s)] = m.action_name(sigma.action(m, s));
    }
    return choices;
}

Json statistics_json(const PreparedProblem& problem, std::size_t zeroEcs, std::size_t statesInZeroEcs,
                     std::size_t iterations) {
    Json j;
    j["states"] = problem.model.num_states();
    j["markovian_states"] = problem.model.num_markovian_states();
    j["choices"] = problem.model.num_choices();
    j["zero_ecs"] = zeroEcs;
    j["states_in_zero_ecs"] = statesInZeroEcs;
    j["iterations"] = iterations;
    j["embedded_mdp"] = problem.embedded_mdp;
    return j;
}

Json result_to_json(const QueryResult& result, const QueryFile& query, const PreparedProblem& problem,
                    const MarkovAutomaton& input, const ResultOptions& options) {
    Json j;
    j["moma"] = "result";
    j["version"] = 1;
    j["query"] = query_to_json(query, input);
    j["status"] = to_string(result.termination);
    j["verdict"] = to_string(result.verdict);
    auto witness = [&]() -> Json {
        if (!result.witness) {
            return nullptr;
        }
        Json w;
        w["points"] = result.witness->points;
        w["weights"] = result.witness->weights;
        w["value"] = result.witness->value;
        return w;
    };
    if (result.kind == QueryKind::Achievability) {
        j["witness"] = witness();
    }
    if (result.kind == QueryKind::Quantitative) {
        j["lower"] = to_json(result.lower);
        j["upper"] = to_json(result.upper);
        j["witness"] = witness();
    }
    Json vertices = Json::array();
    for (std::size_t v : result.vertices) {
        vertices.push_back(point_json(result.points[v]));
    }
    j["vertices"] = std::move(vertices);
    j["vertex_points"] = result.vertices;
    j["facets"] = facets_json(result.facets);
    j["halfspaces"] = facets_json(result.halfspaces);
    j["precision_achieved"] = real(result.precision_achieved);
    Json points = Json::array();
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        Json p;
        p["value"] = point_json(result.points[i]);
        p["weights"] = result.history[i].weights;
        p["weighted_value"] = result.history[i].value;
        if (options.strategies) {
            p["strategy"] = strategy_to_json(problem.model, result.strategies[i]);
        }
        points.push_back(std::move(p));
    }
    j["points"] = std::move(points);
    Json stats = statistics_json(problem, result.zero_ecs, result.states_in_zero_ecs, result.iterations());
    if (options.wall_time) {
        stats["wall_time_seconds"] = *options.wall_time;
    }
    j["statistics"] = std::move(stats);
    return j;
}

std::string plot_csv(const QueryResult& result, std::size_t dimension) {
    std::string out;
    for (std::size_t j = 0; j < dimension; ++j) {
        out += "coord_" + std::to_string(j + 1) + ",";
    }
    out += "kind\n";
    for (std::size_t v : result.vertices) {
        for (const auto& value : result.points[v]) {
            out += format_real(value.value) + ",";
        }
        out += "vertex\n";
    }
    if (dimension != 2) {
        return out;
    }
    const auto& hs = result.halfspaces;
    auto inside = [&](double x, double y) {
        return std::all_of(hs.begin(), hs.end(), [&](const QueryFacet& h) {
            return h.normal[0] * x + h.normal[1] * y <= h.offset + 1e-9 * std::max(1.0, std::abs(h.offset));
        });
    };
    std::vector<std::pair<double, double>> corners;
    for (std::size_t a = 0; a < hs.size(); ++a) {
        for (std::size_t b = a + 1; b < hs.size(); ++b) {
            double det = hs[a].normal[0] * hs[b].normal[1] - hs[a].normal[1] * hs[b].normal[0];
            if (std::abs(det) <= 1e-12) {
                continue;
            }
            double x = (hs[a].offset * hs[b].normal[1] - hs[a].normal[1] * hs[b].offset) / det;
            double y = (hs[a].normal[0] * hs[b].offset - hs[a].offset * hs[b].normal[0]) / det;
            if (inside(x, y)) {
                corners.emplace_back(x, y);
            }
        }
    }
    std::sort(corners.begin(), corners.end());
    auto close = [](const std::pair<double, double>& p, const std::pair<double, double>& q) {
        return std::abs(p.first - q.first) <= 1e-9 * std::max(1.0, std::abs(p.first)) &&
               std::abs(p.second - q.second) <= 1e-9 * std::max(1.0, std::abs(p.second));
    };
    corners.erase(std::unique(corners.begin(), corners.end(), close), corners.end());
    for (const auto& [x, y] : corners) {
        out += format_real(x) + "," + format_real(y) + ",q_boundary\n";
    }
    return out;
}

}  // namespace moma
