#include "exlasso/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exlasso/baselines.hpp"
#include "exlasso/csv.hpp"
#include "exlasso/diagnostics.hpp"
#include "exlasso/errors.hpp"
#include "exlasso/prox.hpp"
#include "exlasso/selection.hpp"
#include "exlasso/simulate.hpp"
#include "exlasso/solver.hpp"

namespace exlasso::cli {

namespace {

using nlohmann::json;

struct DataArgs {
    std::string design;
    std::string response;
    std::string groups;
    bool center = false;
    bool standardize = false;
};

struct SolverArgs {
    double tol = 1e-8;
    double inner_tol = 1e-8;
    int max_iter = 100000;

    SolverConfig config() const {
        SolverConfig c;
        c.outer_tolerance = tol;
        c.inner_delta0 = inner_tol;
        c.max_outer_iterations = max_iter;
        return c;
    }
};

void add_data_options(CLI::App* cmd, DataArgs& data) {
    cmd->add_option("--design", data.design, "design matrix CSV")->required();
    cmd->add_option("--response", data.response, "response vector CSV")->required();
    cmd->add_option("--groups", data.groups, "group file (column_index,group_id per line)")
        ->required();
    cmd->add_flag("--center", data.center, "center the response before fitting");
    cmd->add_flag("--standardize", data.standardize, "scale columns to unit variance");
}

void add_solver_options(CLI::App* cmd, SolverArgs& solver) {
    cmd->add_option("--tol", solver.tol, "outer tolerance on the iterate change");
    cmd->add_option("--inner-tol", solver.inner_tol, "base inner prox tolerance");
    cmd->add_option("--max-iter", solver.max_iter, "outer iteration cap");
}

void require_file(const std::string& path) {
    if (!std::filesystem::exists(path)) throw CsvError("file not found: " + path, path);
}

Problem load_problem(const DataArgs& data) {
    require_file(data.design);
    require_file(data.response);
    require_file(data.groups);
    Matrix x = read_csv_matrix(data.design);
    Vector y = read_csv_vector(data.response);
    const int p = static_cast<int>(x.cols());
    GroupPartition partition(read_group_file(data.groups, p), p);
    Problem problem = make_problem(std::move(x), std::move(y), std::move(partition));
    if (data.center) problem = center_response(problem);
    if (data.standardize) problem = standardize_columns(problem);
    return problem;
}

std::vector<double> parse_grid(const std::string& spec, const Problem& problem) {
    if (spec.empty() || spec == "auto") return default_lambda_grid(problem);
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 4 || (parts[3] != "log" && parts[3] != "lin")) {
        throw CLI::ValidationError("--grid", "expected 'auto' or 'max:min:count:{log,lin}'");
    }
    const double top = std::stod(parts[0]);
    const double bottom = std::stod(parts[1]);
    const int count = std::stoi(parts[2]);
    if (count < 1 || !(top > bottom) || bottom < 0.0) {
        throw CLI::ValidationError("--grid", "need max > min >= 0 and count >= 1");
    }
    if (parts[3] == "log") return log_lambda_grid(top, bottom, count);
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        grid[static_cast<std::size_t>(i)] =
            count == 1 ? top : top + (bottom - top) * i / (count - 1.0);
    }
    return grid;
}

void write_output(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream file(out);
    if (!file) throw CsvError("cannot write file: " + out, out);
    file << text;
}

json one_based(const std::vector<int>& indices) {
    json arr = json::array();
    for (int i : indices) arr.push_back(i + 1);
    return arr;
}

json vector_json(const Vector& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

json fit_json(const Problem& problem, const ExclusiveLassoFit& fit) {
    json j;
    j["lambda"] = fit.lambda;
    j["coefficients"] = vector_json(fit.coefficients.values);
    j["support"] = one_based(fit.support);
    j["objective"] = fit.objective_trace.back();
    j["objective_trace"] = fit.objective_trace;
    j["outer_iterations"] = fit.outer_iterations;
    j["converged"] = fit.converged;
    j["kkt_residual"] = fit.kkt_residual;
    j["lipschitz"] = fit.lipschitz;
    if (problem.centered) j["response_mean"] = problem.response_mean;
    return j;
}

std::string coefficients_csv(const Vector& values) {
    std::string text = "index,coefficient\n";
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        text += std::to_string(i + 1) + "," + format_double(values[i]) + "\n";
    }
    return text;
}

std::string path_summary_csv(const PathResult& path) {
    std::string text = "lambda,df,bic,ebic,support_size,outer_iterations,converged,kkt_residual\n";
    for (std::size_t i = 0; i < path.lambdas.size(); ++i) {
        const ExclusiveLassoFit& fit = path.fits[i];
        text += format_double(path.lambdas[i]) + "," + format_double(path.df[i]) + "," +
                format_double(path.bic[i]) + "," + format_double(path.ebic[i]) + "," +
                std::to_string(fit.support.size()) + "," +
                std::to_string(fit.outer_iterations) + "," +
                (fit.converged ? "1" : "0") + "," + format_double(fit.kkt_residual) + "\n";
    }
    return text;
}

std::string path_coefficients_csv(const Problem& problem, const PathResult& path) {
    std::string text = "lambda,index,group,coefficient\n";
    for (std::size_t i = 0; i < path.lambdas.size(); ++i) {
        const Vector& beta = path.fits[i].coefficients.values;
        for (Eigen::Index j = 0; j < beta.size(); ++j) {
            text += format_double(path.lambdas[i]) + "," + std::to_string(j + 1) + "," +
                    std::to_string(problem.partition->group_of(static_cast<int>(j)) + 1) + "," +
                    format_double(beta[j]) + "\n";
        }
    }
    return text;
}

std::string scenario_csv(const ScenarioReport& report) {
    std::string text =
        "method,true_mean,true_sd,false_mean,false_sd,pred_mean,pred_sd,mse_mean,mse_sd\n";
    for (const MethodStats& s : report.summary) {
        text += s.method + "," + format_double(s.true_mean) + "," + format_double(s.true_sd) +
                "," + format_double(s.false_mean) + "," + format_double(s.false_sd) + "," +
                format_double(s.pred_mean) + "," + format_double(s.pred_sd) + "," +
                format_double(s.mse_mean) + "," + format_double(s.mse_sd) + "\n";
    }
    return text;
}

json scenario_json(const ScenarioReport& report) {
    json j;
    j["scenario"] = report.scenario;
    j["replicates"] = report.replicates;
    j["base_seed"] = report.base_seed;
    j["summary"] = json::array();
    for (const MethodStats& s : report.summary) {
        j["summary"].push_back({{"method", s.method},
                                {"true_mean", s.true_mean},
                                {"true_sd", s.true_sd},
                                {"false_mean", s.false_mean},
                                {"false_sd", s.false_sd},
                                {"pred_mean", s.pred_mean},
                                {"pred_sd", s.pred_sd},
                                {"mse_mean", s.mse_mean},
                                {"mse_sd", s.mse_sd}});
    }
    j["detail"] = json::array();
    for (const ReplicateRecord& r : report.detail) {
        j["detail"].push_back({{"replicate", r.replicate},
                               {"seed", r.seed},
                               {"method", r.method},
                               {"true_count", r.true_count},
                               {"false_count", r.false_count},
                               {"pred_error", r.pred_error},
                               {"mse_beta", r.mse_beta}});
    }
    return j;
}

int run_fit(const DataArgs& data, const SolverArgs& solver, double lambda,
            const std::string& out, const std::string& format) {
    const Problem problem = load_problem(data);
    const ExclusiveLassoFit result = fit(problem, lambda, solver.config());
    if (format == "csv") {
        write_output(coefficients_csv(result.coefficients.values), out);
    } else {
        write_output(fit_json(problem, result).dump(2), out);
    }
    return 0;
}

int run_path(const DataArgs& data, const SolverArgs& solver, const std::string& grid_spec,
             const std::string& out, const std::string& coef_out, const std::string& format) {
    const Problem problem = load_problem(data);
    const PathResult path = fit_path(problem, parse_grid(grid_spec, problem), solver.config());
    if (format == "json") {
        json j;
        j["lambdas"] = path.lambdas;
        j["df"] = path.df;
        j["bic"] = path.bic;
        j["ebic"] = path.ebic;
        j["fits"] = json::array();
        for (const ExclusiveLassoFit& f : path.fits) {
            j["fits"].push_back({{"lambda", f.lambda},
                                 {"coefficients", vector_json(f.coefficients.values)},
                                 {"support", one_based(f.support)},
                                 {"converged", f.converged},
                                 {"kkt_residual", f.kkt_residual}});
        }
        write_output(j.dump(2), out);
    } else {
        write_output(path_summary_csv(path), out);
    }
    if (!coef_out.empty()) write_output(path_coefficients_csv(problem, path), coef_out);
    return 0;
}

int run_select(const DataArgs& data, const SolverArgs& solver, const std::string& grid_spec,
               const std::string& criterion_flag, const std::string& threshold_flag,
               const std::string& out, const std::string& format) {
    const Problem problem = load_problem(data);
    const Criterion criterion =
        criterion_flag == "ebic" ? Criterion::EBIC : Criterion::BIC;
    const PathResult path = fit_path(problem, parse_grid(grid_spec, problem), solver.config());
    const SelectionResult result =
        select_lambda(path, criterion, threshold_flag == "on");

    if (format == "csv") {
        std::string text = "lambda,value,chosen\n";
        for (std::size_t i = 0; i < path.lambdas.size(); ++i) {
            text += format_double(path.lambdas[i]) + "," + format_double(result.values[i]) +
                    "," + (static_cast<int>(i) == result.chosen_index ? "1" : "0") + "\n";
        }
        write_output(text, out);
        return 0;
    }

    json j;
    j["criterion"] = criterion_name(criterion);
    j["chosen_lambda"] = result.lambda;
    j["chosen_index"] = result.chosen_index + 1;
    j["values"] = json::array();
    for (std::size_t i = 0; i < path.lambdas.size(); ++i) {
        j["values"].push_back({{"lambda", path.lambdas[i]}, {"value", result.values[i]}});
    }
    j["fit"] = fit_json(problem, result.fit);
    if (result.thresholded) {
        j["thresholded"] = {
            {"coefficients", vector_json(result.thresholded->values)},
            {"support", one_based(support_set(result.thresholded->values))}};
    }
    write_output(j.dump(2), out);
    return 0;
}

int run_diagnose(const DataArgs& data, const SolverArgs& solver, double lambda,
                 const std::string& out, const std::string& format) {
    const Problem problem = load_problem(data);
    const ExclusiveLassoFit result = fit(problem, lambda, solver.config());
    const KktReport report = kkt_residual(problem, result);

    if (format == "csv") {
        std::string text = "index,residual,active\n";
        std::vector<char> active(static_cast<std::size_t>(problem.p()), 0);
        for (int i : report.active_set) active[static_cast<std::size_t>(i)] = 1;
        for (Eigen::Index i = 0; i < report.per_index_residuals.size(); ++i) {
            text += std::to_string(i + 1) + "," + format_double(report.per_index_residuals[i]) +
                    "," + (active[static_cast<std::size_t>(i)] ? "1" : "0") + "\n";
        }
        write_output(text, out);
        return 0;
    }

    json j;
    j["lambda"] = lambda;
    j["max_residual"] = report.max_residual;
    j["per_index_residuals"] = vector_json(report.per_index_residuals);
    j["active_set"] = one_based(report.active_set);
    j["group_weighted_correlations"] = report.group_weighted_correlations;
    j["converged"] = result.converged;
    write_output(j.dump(2), out);
    return 0;
}

int run_prox(const std::string& point_path, const std::string& groups_path, double lambda,
             double inner_tol, int max_sweeps, const std::string& out,
             const std::string& format) {
    require_file(point_path);
    require_file(groups_path);
    Vector point = read_csv_vector(point_path);
    const int p = static_cast<int>(point.size());
    auto partition =
        std::make_shared<const GroupPartition>(GroupPartition(read_group_file(groups_path, p), p));

    ProxRequest request;
    request.point = std::move(point);
    request.lambda = lambda;
    request.partition = partition;
    request.inner_tolerance = inner_tol;
    request.max_sweeps = max_sweeps;
    const ProxResult result = prox_exclusive(request);

    if (format == "csv") {
        write_output(coefficients_csv(result.minimizer), out);
        return 0;
    }
    json j;
    j["lambda"] = lambda;
    j["minimizer"] = vector_json(result.minimizer);
    j["sweeps_used"] = result.sweeps_used;
    j["final_change"] = result.final_change;
    j["max_sweeps_hit"] = result.max_sweeps_hit;
    write_output(j.dump(2), out);
    return 0;
}

int run_baseline(const DataArgs& data, const SolverArgs& solver, const std::string& method,
                 int k, const std::string& out, const std::string& format) {
    const Problem problem = load_problem(data);
    const SolverConfig config = solver.config();
    if (k <= 0) k = problem.partition->num_groups();

    SelectedModel model;
    if (method == "lasso_k") {
        model = lasso_first_k(problem, k, config);
    } else if (method == "thresh_lasso") {
        model = thresholded_lasso(problem, config);
    } else if (method == "thresh_path") {
        model = thresholded_reg_path(problem, config);
    } else if (method == "marginal") {
        model = marginal_regression(problem, k);
    } else if (method == "group_marginal") {
        model = groupwise_marginal(problem);
    } else {
        model = groupwise_lasso(problem, config);
    }

    if (format == "csv") {
        write_output(coefficients_csv(model.refit.values), out);
        return 0;
    }
    json j;
    j["method"] = model.method;
    j["support"] = one_based(model.support);
    j["coefficients"] = vector_json(model.refit.values);
    if (std::isfinite(model.lambda)) j["lambda"] = model.lambda;
    if (model.k >= 0) j["k"] = model.k;
    j["fallback_flagged"] = model.fallback_flagged;
    write_output(j.dump(2), out);
    return 0;
}

ScenarioSpec scenario_spec_from_json(const json& j) {
    ScenarioSpec spec;
    spec.n = j.value("n", spec.n);
    spec.p = j.value("p", spec.p);
    spec.num_groups = j.value("num_groups", spec.num_groups);
    spec.within = j.value("within", spec.within);
    spec.between = j.value("between", spec.between);
    spec.coef_magnitude = j.value("coef_magnitude", spec.coef_magnitude);
    spec.noise_sigma = j.value("noise_sigma", spec.noise_sigma);
    spec.replicates = j.value("replicates", spec.replicates);
    spec.n_test = j.value("n_test", spec.n_test);
    spec.seed = j.value("seed", spec.seed);
    return spec;
}

int run_simulate(const std::string& spec_path, const std::string& out) {
    require_file(spec_path);
    std::ifstream in(spec_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CsvError("cannot parse scenario spec " + spec_path + ": " + e.what(), spec_path);
    }
    const std::string scenario = j.value("scenario", std::string("one_per_group"));

    ScenarioReport report;
    if (scenario == "one_per_group") {
        report = run_scenario_one_per_group(scenario_spec_from_json(j));
    } else if (scenario == "multi_per_group") {
        report = run_scenario_multi_per_group(scenario_spec_from_json(j));
    } else if (scenario == "shifted_dictionary") {
        ShiftedDictionarySpec spec;
        spec.molecules = j.value("molecules", spec.molecules);
        spec.shifts = j.value("shifts", spec.shifts);
        spec.grid_length = j.value("grid_length", spec.grid_length);
        spec.shift_step = j.value("shift_step", spec.shift_step);
        spec.noise_sigma = j.value("noise_sigma", spec.noise_sigma);
        spec.replicates = j.value("replicates", spec.replicates);
        spec.seed = j.value("seed", spec.seed);
        report = run_shifted_dictionary(spec);
    } else {
        throw CsvError("unknown scenario '" + scenario + "' in " + spec_path, spec_path);
    }

    if (out.empty()) {
        write_output(scenario_csv(report), "");
    } else {
        write_output(scenario_csv(report), out + ".csv");
        write_output(scenario_json(report).dump(2), out + ".json");
    }
    return 0;
}

int run_dfcheck(int n, int p, int num_groups, int points, double decades, int draws,
                std::uint64_t seed, const std::string& out) {
    const DfTemplate tmpl = make_df_template(n, p, num_groups, seed);
    const Vector mu = tmpl.design * tmpl.beta_star;
    const double top = (tmpl.design.transpose() * mu).cwiseAbs().maxCoeff();
    const std::vector<double> grid =
        log_lambda_grid(top, top * std::pow(10.0, -decades), points);
    const std::vector<DfSweepPoint> sweep =
        df_monte_carlo(tmpl, grid, draws, seed + 1);

    std::string text = "lambda,df_estimate,df_mc,stderr\n";
    for (const DfSweepPoint& pt : sweep) {
        text += format_double(pt.lambda) + "," + format_double(pt.df_estimate) + "," +
                format_double(pt.df_mc) + "," + format_double(pt.mc_stderr) + "\n";
    }
    write_output(text, out);
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"Exclusive Lasso: within-group variable selection"};
    app.require_subcommand(1);

    DataArgs data;
    SolverArgs solver;
    std::string out, format = "json", grid_spec = "auto", coef_out;
    double lambda = 1.0;
    std::uint64_t seed = 1;

    int exit_code = 0;
    auto set_exit = [&exit_code](int code) { exit_code = code; };

    auto* fit_cmd = app.add_subcommand("fit", "fit at a single lambda");
    add_data_options(fit_cmd, data);
    add_solver_options(fit_cmd, solver);
    fit_cmd->add_option("--lambda", lambda, "penalty weight")->required();
    fit_cmd->add_option("--out", out, "output path (default stdout)");
    fit_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    fit_cmd->callback([&] { set_exit(run_fit(data, solver, lambda, out, format)); });

    auto* path_cmd = app.add_subcommand("path", "fit a descending lambda grid");
    add_data_options(path_cmd, data);
    add_solver_options(path_cmd, solver);
    path_cmd->add_option("--grid", grid_spec, "'auto' or max:min:count:{log,lin}");
    path_cmd->add_option("--out", out, "summary output path");
    path_cmd->add_option("--coef-out", coef_out, "long-format coefficient CSV path");
    path_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}));
    path_cmd->preparse_callback([&](std::size_t) { format = "csv"; });
    path_cmd->callback(
        [&] { set_exit(run_path(data, solver, grid_spec, out, coef_out, format)); });

    std::string criterion_flag = "bic", threshold_flag = "off";
    auto* select_cmd = app.add_subcommand("select", "pick lambda by BIC or EBIC");
    add_data_options(select_cmd, data);
    add_solver_options(select_cmd, solver);
    select_cmd->add_option("--grid", grid_spec, "'auto' or max:min:count:{log,lin}");
    select_cmd->add_option("--criterion", criterion_flag, "bic or ebic")
        ->check(CLI::IsMember({"bic", "ebic"}));
    select_cmd->add_option("--threshold-groupwise", threshold_flag,
                           "on: keep one coefficient per group")
        ->check(CLI::IsMember({"on", "off"}));
    select_cmd->add_option("--out", out, "output path (default stdout)");
    select_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    select_cmd->callback([&] {
        set_exit(run_select(data, solver, grid_spec, criterion_flag, threshold_flag, out,
                            format));
    });

    auto* diagnose_cmd = app.add_subcommand("diagnose", "fit and report stationarity residuals");
    add_data_options(diagnose_cmd, data);
    add_solver_options(diagnose_cmd, solver);
    diagnose_cmd->add_option("--lambda", lambda, "penalty weight")->required();
    diagnose_cmd->add_option("--out", out, "output path (default stdout)");
    diagnose_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    diagnose_cmd->callback(
        [&] { set_exit(run_diagnose(data, solver, lambda, out, format)); });

    std::string point_path;
    double inner_tol = 1e-10;
    int max_sweeps = 10000;
    auto* prox_cmd = app.add_subcommand("prox", "evaluate the penalty's proximal operator");
    prox_cmd->add_option("--point", point_path, "input vector CSV")->required();
    prox_cmd->add_option("--groups", data.groups, "group file")->required();
    prox_cmd->add_option("--lambda", lambda, "penalty weight")->required();
    prox_cmd->add_option("--inner-tol", inner_tol, "coordinate-change tolerance");
    prox_cmd->add_option("--max-sweeps", max_sweeps, "sweep cap per group");
    prox_cmd->add_option("--out", out, "output path (default stdout)");
    prox_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    prox_cmd->callback([&] {
        set_exit(run_prox(point_path, data.groups, lambda, inner_tol, max_sweeps, out, format));
    });

    std::string method = "lasso_k";
    int k = 0;
    auto* baseline_cmd = app.add_subcommand("baseline", "run a comparison selector");
    add_data_options(baseline_cmd, data);
    add_solver_options(baseline_cmd, solver);
    baseline_cmd
        ->add_option("--method", method,
                     "lasso_k, thresh_lasso, thresh_path, marginal, group_marginal, group_lasso")
        ->required()
        ->check(CLI::IsMember({"lasso_k", "thresh_lasso", "thresh_path", "marginal",
                               "group_marginal", "group_lasso"}));
    baseline_cmd->add_option("--k", k, "target support size (default: number of groups)");
    baseline_cmd->add_option("--out", out, "output path (default stdout)");
    baseline_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    baseline_cmd->callback(
        [&] { set_exit(run_baseline(data, solver, method, k, out, format)); });

    std::string spec_path;
    auto* simulate_cmd = app.add_subcommand("simulate", "run a scenario from a JSON spec");
    simulate_cmd->add_option("--spec", spec_path, "scenario spec JSON")->required();
    simulate_cmd->add_option("--out", out, "output base name (writes .csv and .json)");
    simulate_cmd->callback([&] { set_exit(run_simulate(spec_path, out)); });

    int df_n = 50, df_p = 20, df_groups = 4, df_points = 15, df_draws = 2000;
    double df_decades = 2.0;
    auto* dfcheck_cmd =
        app.add_subcommand("dfcheck", "compare the df estimate to its simulated value");
    dfcheck_cmd->add_option("--n", df_n, "rows of the fixed design");
    dfcheck_cmd->add_option("--p", df_p, "columns of the fixed design");
    dfcheck_cmd->add_option("--num-groups", df_groups, "number of groups");
    dfcheck_cmd->add_option("--points", df_points, "lambda grid size");
    dfcheck_cmd->add_option("--decades", df_decades, "grid span in decades");
    dfcheck_cmd->add_option("--draws", df_draws, "Monte Carlo draws");
    dfcheck_cmd->add_option("--seed", seed, "base seed");
    dfcheck_cmd->add_option("--out", out, "output CSV path (default stdout)");
    dfcheck_cmd->callback([&] {
        set_exit(run_dfcheck(df_n, df_p, df_groups, df_points, df_decades, df_draws, seed, out));
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OverlappingGroups& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MissingIndices& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyGroup& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyPath& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptySupport& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AllGroupsZero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}

}  // namespace exlasso::cli
