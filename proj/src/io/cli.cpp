#include "moma/io/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "moma/core/validation.hpp"
#include "moma/graph/end_components.hpp"
#include "moma/io/model_format.hpp"
#include "moma/io/query_format.hpp"
#include "moma/io/result_writer.hpp"
#include "moma/pareto/query.hpp"
#include "moma/weighted/weighted_sum.hpp"

namespace moma {

namespace {

struct Options {
    std::string model;
    std::string query;
    std::vector<std::string> objectives;
    std::string point;
    std::string thresholds;
    std::optional<double> precision;
    std::optional<std::size_t> max_iterations;
    std::optional<double> time_limit;
    bool strategies = false;
    std::string plot;
    std::string output;
    bool timing = false;
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ModelError("cannot write '" + path + "'");
    }
    file << text;
    if (!file) {
        throw ModelError("cannot write '" + path + "'");
    }
}

Json violations_json(const ValidationReport& report) {
    Json list = Json::array();
    for (const auto& v : report.violations) {
        Json j;
        j["assumption"] = to_string(v.assumption);
        j["location"] = v.location;
        j["message"] = v.message;
        list.push_back(std::move(j));
    }
    return list;
}

std::vector<Objective> resolve_objectives(const Options& options, const ModelFile& model, const QueryFile& query) {
    if (!options.objectives.empty()) {
        std::vector<Objective> result;
        for (const auto& spec : options.objectives) {
            result.push_back(parse_objective_spec(spec, model.model));
        }
        return result;
    }
    if (!query.objectives.empty()) {
        return query.objectives;
    }
    return model.objectives;
}

int run_validate(const Options& options, std::ostream& out) {
    ModelFile model = parse_model(options.model);
    QueryFile query;
    if (!options.query.empty()) {
        query = parse_query(options.query, model.model);
    }
    std::vector<Objective> objectives = resolve_objectives(options, model, query);
    ValidationReport report;
    std::vector<EndComponent> mecs = mec_decomposition(model.model);
    if (model.kind == ModelKind::MA) {
        report.append(check_non_zeno(model.model, mecs));
    }
    if (report.ok() && !objectives.empty()) {
        try {
            (void)prepare_problem(model.model, objectives);
        } catch (const AssumptionError& e) {
            report.append(e.report());
        }
    }
    Json j;
    j["moma"] = "validation";
    j["version"] = 1;
    j["valid"] = report.ok();
    j["violations"] = violations_json(report);
    Json stats;
    stats["states"] = model.model.num_states();
    stats["markovian_states"] = model.model.num_markovian_states();
    stats["choices"] = model.model.num_choices();
    stats["mecs"] = mecs.size();
    j["statistics"] = std::move(stats);
    write_text(options.output, j.dump(2) + "\n", out);
    return report.ok() ? kExitSuccess : kExitInputError;
}

int run_single(const Options& options, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    ModelFile model = parse_model(options.model);
    QueryFile query;
    if (!options.query.empty()) {
        query = parse_query(options.query, model.model);
    }
    query.objectives = resolve_objectives(options, model, query);
    if (query.objectives.size() != 1) {
        throw std::invalid_argument("single expects exactly one objective");
    }
    if (options.precision) {
        query.query.solver_precision = *options.precision;
    }
    PreparedProblem problem = prepare_problem(model.model, query.objectives);
    WeightedSumSolver solver(problem, query.query.solver_precision);
    WeightedResult best = solver.optimize(WeightVector::unit(1, 0));
    ChainEvaluation evaluation = evaluate_strategy(problem.model, best.strategy, problem.reward_objectives());
    bool negated = problem.normalized[0].negated;

    Json j;
    j["moma"] = "result";
    j["version"] = 1;
    Json q;
    q["type"] = "single";
    q["objectives"] = Json::array({objective_to_json(query.objectives[0], model.model)});
    q["solver_precision"] = query.query.solver_precision;
    j["query"] = std::move(q);
    j["status"] = "converged";
    j["value"] = to_json(negated ? evaluation.values[0].negated() : evaluation.values[0]);
    j["bound"] = negated ? -best.value : best.value;
    if (options.strategies || query.emit_strategies) {
        j["strategy"] = strategy_to_json(problem.model, best.strategy);
    }
    Json stats = statistics_json(problem, solver.zero_ecs().size(), solver.states_in_zero_ecs(), 1);
    if (options.timing) {
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        stats["wall_time_seconds"] = elapsed.count();
    }
    j["statistics"] = std::move(stats);
    write_text(options.output, j.dump(2) + "\n", out);
    return kExitSuccess;
}

int run_query(const Options& options, bool pareto, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    ModelFile model = parse_model(options.model);
    QueryFile query;
    if (!options.query.empty()) {
        query = parse_query(options.query, model.model);
    }
    query.objectives = resolve_objectives(options, model, query);
    if (query.objectives.empty()) {
        throw std::invalid_argument("no objectives given");
    }
    if (pareto) {
        query.query.kind = QueryKind::Pareto;
    } else {
        if (!options.point.empty()) {
            query.query.kind = QueryKind::Achievability;
            query.query.point = parse_real_list(options.point);
        } else if (!options.thresholds.empty()) {
            query.query.kind = QueryKind::Quantitative;
            query.query.thresholds = parse_real_list(options.thresholds);
        } else if (options.query.empty() || query.query.kind == QueryKind::Pareto) {
            throw std::invalid_argument("check needs --point, --thresholds or an achievability/quantitative query");
        }
    }
    if (options.precision) {
        query.query.precision = *options.precision;
    }
    if (options.max_iterations) {
        query.query.max_iterations = *options.max_iterations;
    }
    if (options.time_limit) {
        query.query.time_limit = *options.time_limit;
    }
    PreparedProblem problem = prepare_problem(model.model, query.objectives);
    QueryResult result = answer_query(problem, query.query);

    ResultOptions resultOptions;
    resultOptions.strategies = options.strategies || query.emit_strategies;
    if (options.timing) {
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        resultOptions.wall_time = elapsed.count();
    }
    Json j = result_to_json(result, query, problem, model.model, resultOptions);
    write_text(options.output, j.dump(2) + "\n", out);
    if (!options.plot.empty() || query.emit_plot) {
        std::string path = options.plot;
        if (path.empty()) {
            path = options.output.empty() ? "pareto.csv" : options.output + ".csv";
        }
        write_text(path, plot_csv(result, problem.dimension()), out);
    }
    bool decided = result.termination == Termination::Converged && result.verdict != Verdict::Unknown;
    return decided ? kExitSuccess : kExitUndecided;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multi-objective analysis of Markov automata and MDPs", "moma"};
    app.require_subcommand(1);
    Options options;
    auto common = [&](CLI::App* sub) {
        sub->add_option("model", options.model, "Model file")->required();
        sub->add_option("--query", options.query, "Query file");
        sub->add_option("--objective", options.objectives, "Objective as direction:kind:target (repeatable)");
        sub->add_option("--output", options.output, "Result file (default: standard output)");
        sub->add_flag("--timing", options.timing, "Include wall time in the result");
    };
    auto analysis = [&](CLI::App* sub) {
        sub->add_option("--precision", options.precision, "Approximation precision");
        sub->add_option("--max-iterations", options.max_iterations, "Iteration budget");
        sub->add_option("--time-limit", options.time_limit, "Time budget in seconds");
        sub->add_flag("--strategies", options.strategies, "Emit strategies");
        sub->add_option("--plot", options.plot, "Plot data CSV file");
    };
    CLI::App* validate = app.add_subcommand("validate", "Check a model against the analysis assumptions");
    common(validate);
    CLI::App* single = app.add_subcommand("single", "Optimize a single objective");
    common(single);
    single->add_option("--precision", options.precision, "Solver precision");
    single->add_flag("--strategies", options.strategies, "Emit the strategy");
    CLI::App* check = app.add_subcommand("check", "Decide achievability or bound a quantitative query");
    common(check);
    analysis(check);
    check->add_option("--point", options.point, "Point to decide, comma separated");
    check->add_option("--thresholds", options.thresholds, "Bounds for objectives 2..l, comma separated");
    CLI::App* pareto = app.add_subcommand("pareto", "Approximate the Pareto front");
    common(pareto);
    analysis(pareto);

    std::vector<std::string> argvStorage{"moma"};
    argvStorage.insert(argvStorage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argvStorage) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitInputError;
    }

    try {
        if (validate->parsed()) {
            return run_validate(options, out);
        }
        if (single->parsed()) {
            return run_single(options, out);
        }
        return run_query(options, pareto->parsed(), out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace moma
