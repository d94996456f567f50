#include "moma/io/query_format.hpp"

#include <charconv>
#include <cmath>

namespace moma {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message) {
    throw ModelError(where + ": " + message);
}

std::vector<double> number_array(const Json& j, const std::string& where) {
    if (!j.is_array()) {
        fail(where, "expected an array of numbers");
    }
    std::vector<double> values;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) {
            fail(where + "[" + std::to_string(i) + "]", "expected a number");
        }
        values.push_back(j[i].get<double>());
    }
    return values;
}

std::vector<std::string> split(std::string_view text, char separator) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(separator, start);
        parts.emplace_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (end == std::string_view::npos) {
            return parts;
        }
        start = end + 1;
    }
}

}  // namespace

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> values;
    for (const auto& part : split(text, ',')) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty() || !std::isfinite(v)) {
            throw ModelError("cannot read '" + part + "' as a number");
        }
        values.push_back(v);
    }
    return values;
}

Objective parse_objective_spec(std::string_view spec, const MarkovAutomaton& m) {
    std::vector<std::string> parts = split(spec, ':');
    std::string where = "objective '" + std::string(spec) + "'";
    if (parts.size() != 3) {
        fail(where, "expected direction:kind:target");
    }
    Json j;
    j["kind"] = parts[1];
    j["direction"] = parts[0];
    std::string target = parts[2];
    std::string goalList;
    if (parts[1] == "reach") {
        goalList = target;
    } else {
        auto at = target.find('@');
        j["reward"] = target.substr(0, at);
        if (at != std::string::npos) {
            goalList = target.substr(at + 1);
        }
    }
    if (!goalList.empty()) {
        Json goal = Json::array();
        for (const auto& name : split(goalList, ',')) {
            goal.push_back(name);
        }
        j["goal"] = std::move(goal);
    }
    return objective_from_json(j, m, where);
}

QueryFile parse_query_text(std::string_view text, const MarkovAutomaton& m) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, "malformed query");
    }
    const std::string top = "query";
    if (!j.is_object() || !j.contains("moma") || j.at("moma") != "query") {
        fail(top, "expected an object with \"moma\": \"query\"");
    }
    if (!j.contains("version") || j.at("version") != 1) {
        fail(top + ".version", "unsupported version");
    }
    QueryFile file;
    std::string type = j.contains("type") && j.at("type").is_string() ? j.at("type").get<std::string>() : "";
    if (type == "pareto") {
        file.query.kind = QueryKind::Pareto;
    } else if (type == "achievability") {
        file.query.kind = QueryKind::Achievability;
    } else if (type == "quantitative") {
        file.query.kind = QueryKind::Quantitative;
    } else {
        fail(top + ".type", "expected \"pareto\", \"achievability\" or \"quantitative\"");
    }
    if (j.contains("objectives")) {
        const Json& list = j.at("objectives");
        if (!list.is_array()) {
            fail(top + ".objectives", "expected an array");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            file.objectives.push_back(objective_from_json(list[i], m, "objectives[" + std::to_string(i) + "]"));
        }
    }
    if (j.contains("point")) {
        file.query.point = number_array(j.at("point"), top + ".point");
    }
    if (j.contains("thresholds")) {
        file.query.thresholds = number_array(j.at("thresholds"), top + ".thresholds");
    }
    auto positive = [&](const char* key, double& target) {
        if (j.contains(key)) {
            const Json& v = j.at(key);
            if (!v.is_number() || !(v.get<double>() > 0.0)) {
                fail(top + "." + key, "expected a positive number");
            }
            target = v.get<double>();
        }
    };
    positive("precision", file.query.precision);
    positive("solver_precision", file.query.solver_precision);
    if (j.contains("max_iterations")) {
        const Json& v = j.at("max_iterations");
        if (!v.is_number_unsigned()) {
            fail(top + ".max_iterations", "expected a nonnegative integer");
        }
        file.query.max_iterations = v.get<std::size_t>();
    }
    if (j.contains("time_limit")) {
        double limit = 0.0;
        positive("time_limit", limit);
        file.query.time_limit = limit;
    }
    auto flag = [&](const char* key, bool& target) {
        if (j.contains(key)) {
            if (!j.at(key).is_boolean()) {
                fail(top + "." + key, "expected true or false");
            }
            target = j.at(key).get<bool>();
        }
    };
    flag("emit_strategies", file.emit_strategies);
    flag("emit_plot", file.emit_plot);
    return file;
}

QueryFile parse_query(const std::filesystem::path& path, const MarkovAutomaton& m) {
    return parse_query_text(read_file(path), m);
}

Json query_to_json(const QueryFile& file, const MarkovAutomaton& m) {
    Json j;
    j["type"] = to_string(file.query.kind);
    Json objectives = Json::array();
    for (const auto& o : file.objectives) {
        objectives.push_back(objective_to_json(o, m));
    }
    j["objectives"] = std::move(objectives);
    if (file.query.kind == QueryKind::Achievability) {
        j["point"] = file.query.point;
    }
    if (file.query.kind == QueryKind::Quantitative) {
        j["thresholds"] = file.query.thresholds;
    }
    j["precision"] = file.query.precision;
    j["solver_precision"] = file.query.solver_precision;
    j["max_iterations"] = file.query.max_iterations;
    if (file.query.time_limit) {
        j["time_limit"] = *file.query.time_limit;
    }
    return j;
}

}  // namespace moma
