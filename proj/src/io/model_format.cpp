#include "moma/io/model_format.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "moma/core/validation.hpp"

namespace moma {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : ModelError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ModelError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message) {
    throw ModelError(where + ": " + message);
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string message = e.what();
        auto pos = message.find("syntax error");
        throw ParseError(line, column, pos == std::string::npos ? message : message.substr(pos));
    }
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) {
        fail(where, std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::string get_string(const Json& j, const char* key, const std::string& where) {
    const Json& v = member(j, key, where);
    if (!v.is_string()) {
        fail(where + "." + key, "expected a string");
    }
    return v.get<std::string>();
}

double get_number(const Json& v, const std::string& where) {
    if (!v.is_number()) {
        fail(where, "expected a number");
    }
    return v.get<double>();
}

StateId resolve_state(const std::map<std::string, StateId>& names, const Json& v, const std::string& where) {
    if (!v.is_string()) {
        fail(where, "expected a state name");
    }
    auto it = names.find(v.get<std::string>());
    if (it == names.end()) {
        fail(where, "unknown state '" + v.get<std::string>() + "'");
    }
    return it->second;
}

}  // namespace

Json objective_to_json(const Objective& objective, const MarkovAutomaton& m) {
    Json j;
    j["kind"] = to_string(objective.kind);
    if (objective.kind != ObjectiveKind::Reachability) {
        j["reward"] = objective.reward;
    }
    if (!objective.goal.empty()) {
        Json goal = Json::array();
        for (StateId s : objective.goal) {
            goal.push_back(m.state_name(s));
        }
        j["goal"] = std::move(goal);
    }
    j["direction"] = to_string(objective.direction);
    return j;
}

Objective objective_from_json(const Json& j, const MarkovAutomaton& m, const std::string& where) {
    if (!j.is_object()) {
        fail(where, "expected an object");
    }
    Objective o;
    std::string kind = get_string(j, "kind", where);
    if (kind == "lra") {
        o.kind = ObjectiveKind::LongRunAverage;
    } else if (kind == "total") {
        o.kind = ObjectiveKind::Total;
    } else if (kind == "reach") {
        o.kind = ObjectiveKind::Reachability;
    } else {
        fail(where + ".kind", "unknown objective kind '" + kind + "'");
    }
    if (o.kind != ObjectiveKind::Reachability) {
        o.reward = get_string(j, "reward", where);
        if (m.find_reward(o.reward) == nullptr) {
            fail(where + ".reward", "unknown reward '" + o.reward + "'");
        }
    }
    if (j.contains("goal")) {
        if (o.kind == ObjectiveKind::LongRunAverage) {
            fail(where + ".goal", "long-run average objectives take no goal");
        }
        const Json& goal = j.at("goal");
        if (!goal.is_array()) {
            fail(where + ".goal", "expected an array of state names");
        }
        for (std::size_t i = 0; i < goal.size(); ++i) {
            std::string w = where + ".goal[" + std::to_string(i) + "]";
            if (!goal[i].is_string()) {
                fail(w, "expected a state name");
            }
            auto s = m.find_state(goal[i].get<std::string>());
            if (!s) {
                fail(w, "unknown state '" + goal[i].get<std::string>() + "'");
            }
            o.goal.push_back(*s);
        }
        std::sort(o.goal.begin(), o.goal.end());
        o.goal.erase(std::unique(o.goal.begin(), o.goal.end()), o.goal.end());
    }
    if (o.kind == ObjectiveKind::Reachability && o.goal.empty()) {
        fail(where + ".goal", "reachability objectives need a nonempty goal");
    }
    std::string direction = j.contains("direction") ? get_string(j, "direction", where) : "max";
    if (direction == "max") {
        o.direction = Direction::Maximize;
    } else if (direction == "min") {
        o.direction = Direction::Minimize;
    } else {
        fail(where + ".direction", "expected \"max\" or \"min\"");
    }
    return o;
}

ModelFile parse_model_text(std::string_view text) {
    Json j = parse_json(text);
    const std::string top = "model";
    if (!j.is_object()) {
        fail(top, "expected a JSON object");
    }
    if (get_string(j, "moma", top) != "model") {
        fail(top + ".moma", "expected \"model\"");
    }
    const Json& version = member(j, "version", top);
    if (!version.is_number_integer() || version.get<int>() != 1) {
        fail(top + ".version", "unsupported version");
    }
    ModelFile file;
    std::string kind = get_string(j, "kind", top);
    if (kind == "ma") {
        file.kind = ModelKind::MA;
    } else if (kind == "mdp") {
        file.kind = ModelKind::MDP;
    } else {
        fail(top + ".kind", "expected \"ma\" or \"mdp\"");
    }

    ModelBuilder builder;
    if (j.contains("actions")) {
        const Json& actions = j.at("actions");
        if (!actions.is_array()) {
            fail(top + ".actions", "expected an array of action names");
        }
        for (std::size_t i = 0; i < actions.size(); ++i) {
            if (!actions[i].is_string()) {
                fail(top + ".actions[" + std::to_string(i) + "]", "expected a string");
            }
            builder.intern_action(actions[i].get<std::string>());
        }
    }

    const Json& states = member(j, "states", top);
    if (!states.is_array() || states.empty()) {
        fail(top + ".states", "expected a nonempty array");
    }
    std::map<std::string, StateId> names;
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::string where = "states[" + std::to_string(i) + "]";
        std::string name = get_string(states[i], "name", where);
        if (!names.emplace(name, static_cast<StateId>(i)).second) {
            fail(where, "duplicate state name '" + name + "'");
        }
    }

    auto addDistribution = [&](const Json& successors, const std::string& where) {
        if (!successors.is_object() || successors.empty()) {
            fail(where, "expected a nonempty object mapping state names to probabilities");
        }
        std::vector<std::pair<StateId, double>> entries;
        double sum = 0.0;
        for (const auto& [target, probability] : successors.items()) {
            StateId t = resolve_state(names, Json(target), where);
            double p = get_number(probability, where + "." + target);
            entries.emplace_back(t, p);
            sum += p;
        }
        // Tiny deviations from 1 are rounding noise; anything larger is left for validation.
        bool renormalize = std::abs(sum - 1.0) > 4 * DBL_EPSILON && std::abs(sum - 1.0) <= 1e-9;
        for (const auto& [t, p] : entries) {
            builder.add_transition(t, renormalize ? p / sum : p);
        }
    };
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::string where = "states[" + std::to_string(i) + "]";
        const Json& s = states[i];
        std::string name = s.at("name").get<std::string>();
        bool markovian = s.contains("rate");
        if (markovian == s.contains("actions")) {
            fail(where, "a state needs either a rate with successors or a list of actions");
        }
        if (markovian) {
            if (file.kind == ModelKind::MDP) {
                fail(where, "MDP states cannot have rates");
            }
            builder.add_markovian_state(get_number(s.at("rate"), where + ".rate"), name);
            addDistribution(member(s, "successors", where), where + ".successors");
            continue;
        }
        const Json& actions = s.at("actions");
        if (!actions.is_array() || actions.empty()) {
            fail(where + ".actions", "expected a nonempty array");
        }
        std::vector<std::pair<ActionId, std::size_t>> order;
        for (std::size_t a = 0; a < actions.size(); ++a) {
            std::string actionWhere = where + ".actions[" + std::to_string(a) + "]";
            ActionId id = builder.intern_action(get_string(actions[a], "name", actionWhere));
            for (const auto& [other, index] : order) {
                if (other == id) {
                    fail(actionWhere, "duplicate action '" + actions[a].at("name").get<std::string>() + "'");
                }
            }
            order.emplace_back(id, a);
        }
        std::sort(order.begin(), order.end());
        builder.add_probabilistic_state(name);
        for (const auto& [id, a] : order) {
            builder.add_choice(id);
            addDistribution(member(actions[a], "successors", where + ".actions[" + std::to_string(a) + "]"),
                            where + ".actions[" + std::to_string(a) + "].successors");
        }
    }
    StateId initial = resolve_state(names, member(j, "initial", top), top + ".initial");
    MarkovAutomaton m = builder.build(initial);

    if (j.contains("rewards")) {
        const Json& rewards = j.at("rewards");
        if (!rewards.is_array()) {
            fail(top + ".rewards", "expected an array");
        }
        for (std::size_t i = 0; i < rewards.size(); ++i) {
            std::string where = "rewards[" + std::to_string(i) + "]";
            const Json& block = rewards[i];
            std::string name = get_string(block, "name", where);
            if (m.find_reward(name) != nullptr) {
                fail(where, "duplicate reward name '" + name + "'");
            }
            RewardAssignment r = m.zero_reward(name);
            if (block.contains("state")) {
                const Json& stateRewards = block.at("state");
                if (!stateRewards.is_object()) {
                    fail(where + ".state", "expected an object mapping state names to rates");
                }
                for (const auto& [stateName, value] : stateRewards.items()) {
                    std::string w = where + ".state." + stateName;
                    if (file.kind == ModelKind::MDP) {
                        fail(w, "MDP rewards are transition rewards only");
                    }
                    StateId s = resolve_state(names, Json(stateName), w);
                    if (!m.is_markovian(s)) {
                        fail(w, "state rewards are only allowed on Markovian states");
                    }
                    r.state_rewards[s] = get_number(value, w);
                }
            }
            if (block.contains("transition")) {
                const Json& entries = block.at("transition");
                if (!entries.is_array()) {
                    fail(where + ".transition", "expected an array");
                }
                std::vector<bool> seen(m.num_transitions(), false);
                for (std::size_t k = 0; k < entries.size(); ++k) {
                    std::string w = where + ".transition[" + std::to_string(k) + "]";
                    const Json& e = entries[k];
                    StateId from = resolve_state(names, member(e, "from", w), w + ".from");
                    StateId to = resolve_state(names, member(e, "to", w), w + ".to");
                    std::size_t choice = m.choice_begin(from);
                    if (m.is_markovian(from)) {
                        if (e.contains("action")) {
                            fail(w + ".action", "Markovian states have no actions");
                        }
                    } else {
                        std::string action = get_string(e, "action", w);
                        auto id = m.find_action(action);
                        auto local = id ? m.find_choice(from, *id) : std::nullopt;
                        if (!local) {
                            fail(w + ".action", "state '" + m.state_name(from) + "' has no action '" + action + "'");
                        }
                        choice += *local;
                    }
                    std::size_t index = kNoIndex;
                    for (std::size_t t = m.transition_begin(choice); t < m.transition_end(choice); ++t) {
                        if (m.all_transitions()[t].target == to) {
                            index = t;
                        }
                    }
                    if (index == kNoIndex) {
                        fail(w, "no such transition");
                    }
                    if (seen[index]) {
                        fail(w, "duplicate transition reward");
                    }
                    seen[index] = true;
                    r.transition_rewards[index] = get_number(member(e, "value", w), w + ".value");
                }
            }
            m.add_reward(std::move(r));
        }
    }

    ValidationReport report = validate_model(m);
    if (!report.ok()) {
        throw ModelError("invalid model:\n" + report.to_string());
    }
    if (j.contains("objectives")) {
        const Json& objectives = j.at("objectives");
        if (!objectives.is_array()) {
            fail(top + ".objectives", "expected an array");
        }
        for (std::size_t i = 0; i < objectives.size(); ++i) {
            file.objectives.push_back(objective_from_json(objectives[i], m, "objectives[" + std::to_string(i) + "]"));
        }
    }
    file.model = std::move(m);
    return file;
}

ModelFile parse_model(const std::filesystem::path& path) { return parse_model_text(read_file(path)); }

std::string serialize_model(const MarkovAutomaton& m, ModelKind kind, const std::vector<Objective>& objectives) {
    Json j;
    j["moma"] = "model";
    j["version"] = 1;
    j["kind"] = kind == ModelKind::MA ? "ma" : "mdp";
    j["initial"] = m.state_name(m.initial_state());
    j["actions"] = m.action_names();
    auto distribution = [&](std::size_t c) {
        Json successors = Json::object();
        for (const auto& t : m.transitions(c)) {
            successors[m.state_name(t.target)] = t.probability;
        }
        return successors;
    };
    Json states = Json::array();
    for (StateId s = 0; s < m.num_states(); ++s) {
        Json state;
        state["name"] = m.state_name(s);
        if (m.is_markovian(s)) {
            state["rate"] = m.exit_rate(s);
            state["successors"] = distribution(m.choice_begin(s));
        } else {
            Json actions = Json::array();
            for (std::size_t c : m.choices(s)) {
                Json action;
                action["name"] = m.action_name(m.choice_action(c));
                action["successors"] = distribution(c);
                actions.push_back(std::move(action));
            }
            state["actions"] = std::move(actions);
        }
        states.push_back(std::move(state));
    }
    j["states"] = std::move(states);
    Json rewards = Json::array();
    for (const auto& r : m.rewards()) {
        Json block;
        block["name"] = r.name;
        Json stateRewards = Json::object();
        for (StateId s = 0; s < m.num_states(); ++s) {
            if (r.state_rewards[s] != 0.0) {
                stateRewards[m.state_name(s)] = r.state_rewards[s];
            }
        }
        if (!stateRewards.empty()) {
            block["state"] = std::move(stateRewards);
        }
        Json transitionRewards = Json::array();
        for (std::size_t c = 0; c < m.num_choices(); ++c) {
            StateId s = m.choice_state(c);
            for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
                if (r.transition_rewards[t] == 0.0) {
                    continue;
                }
                Json e;
                e["from"] = m.state_name(s);
                if (!m.is_markovian(s)) {
                    e["action"] = m.action_name(m.choice_action(c));
                }
                e["to"] = m.state_name(m.all_transitions()[t].target);
                e["value"] = r.transition_rewards[t];
                transitionRewards.push_back(std::move(e));
            }
        }
        if (!transitionRewards.empty()) {
            block["transition"] = std::move(transitionRewards);
        }
        rewards.push_back(std::move(block));
    }
    j["rewards"] = std::move(rewards);
    if (!objectives.empty()) {
        Json list = Json::array();
        for (const auto& o : objectives) {
            list.push_back(objective_to_json(o, m));
        }
        j["objectives"] = std::move(list);
    }
    return j.dump(2) + "\n";
}

}  // namespace moma
