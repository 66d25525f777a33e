// Copyright 2026 The Walshpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "walshc/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>

#include "walshc/config.h"
#include "walshpulse/bounds.h"
#include "walshpulse/compiler.h"
#include "walshpulse/executor.h"
#include "walshpulse/experiments.h"
#include "walshpulse/metrics.h"
#include "walshpulse/records.h"
#include "walshpulse/serialization.h"
#include "walshpulse/version.h"

namespace walshc {

namespace {

namespace wp = walshpulse;
using ordered_json = nlohmann::ordered_json;

/// Unreadable or unwritable file.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw InputError("failed writing '" + path + "'");
    }
}

void diagnostic(std::ostream &err, const char *kind, const std::string &message, ordered_json extra = ordered_json::object()) {
    ordered_json d;
    d["error"] = kind;
    d["message"] = message;
    for (auto &[k, v] : extra.items()) {
        d[k] = v;
    }
    err << d.dump() << '\n';
}

struct CompileArgs {
    std::string target;
    std::string resource;
    std::string output;
    int order = 1;
    int cutoff = 0;
    bool dd_guard = false;
    bool robust = false;
    std::vector<std::uint32_t> e_indices;
    double fp_tp = 0;
    double fp_tau = 0;
    std::string strategy = "greedy";
    bool stats = false;
};

struct SimulateArgs {
    std::string schedule;
    std::string resource;
    std::string target;
    double time = 0;
    double tau_over_n = 0;
    std::uint64_t cycles = 0;
    std::string initial = "zero";
    std::uint64_t seed = 0;
    double eps_ra = 0;
    double t_p = 0;
    double field = 0;
    double tol = wp::kDefaultEvolveTolerance;
};

struct ExperimentArgs {
    std::string name;
    std::string config;
    std::string output;
    std::string manifest;
    wp::ExperimentConfig flags;
};

struct BoundsArgs {
    double alpha = 0;
    int n = 0;
    double j = 1;
    double tau = 0;
    double time = std::numbers::pi / 4;
    double kappa = 0;
};

int cmd_compile(const CompileArgs &a, std::ostream &out, std::ostream &err) {
    auto target = wp::target_from_json(read_file(a.target));
    auto resource = wp::resource_from_json(read_file(a.resource));
    wp::CompileOptions options;
    options.trotter_order = a.order;
    if (a.cutoff > 0) {
        options.cutoff = wp::CutoffConfig{a.cutoff};
    }
    options.dd_guard = a.dd_guard;
    if (a.strategy == "hamilton") {
        options.strategy = wp::DecompositionStrategy::HamiltonPath;
    } else if (a.strategy != "greedy") {
        throw std::invalid_argument("strategy must be greedy or hamilton");
    }
    if (a.robust || !a.e_indices.empty() || a.fp_tp > 0) {
        wp::RobustnessPolicy policy;
        policy.e_indices = a.e_indices;
        if (a.fp_tp > 0) {
            policy.finite_pulse = wp::FinitePulsePolicy{a.fp_tp, a.fp_tau};
        }
        options.robust = policy;
    }
    auto schedule = wp::compile(target, resource, options);
    std::string text = wp::schedule_to_json(schedule);
    if (a.output.empty()) {
        out << text;
    } else {
        write_file(a.output, text);
    }
    if (a.stats) {
        ordered_json s;
        s["blocks"] = schedule.blocks.size();
        std::vector<std::uint32_t> lengths;
        std::vector<double> cs;
        for (const auto &b : schedule.blocks) {
            lengths.push_back(wp::sequence_length(b.assignment));
            cs.push_back(b.c);
        }
        s["sequence_lengths"] = lengths;
        s["c"] = cs;
        s["pulse_count"] = schedule.pulse_count();
        s["merged_pulse_count"] = schedule.merged_pulse_count();
        s["hash"] = wp::content_hash(text);
        err << s.dump() << '\n';
    }
    return kOk;
}

int cmd_simulate(const SimulateArgs &a, std::ostream &out) {
    auto schedule = wp::schedule_from_json(read_file(a.schedule));
    auto resource = wp::resource_from_json(read_file(a.resource));
    if (!(a.time > 0)) {
        throw std::invalid_argument("--time must be positive");
    }
    if ((a.tau_over_n > 0) == (a.cycles > 0)) {
        throw std::invalid_argument("give exactly one of --tau-over-n and --cycles");
    }
    int n = schedule.n_qubits;
    wp::CyclePlan plan;
    if (a.cycles > 0) {
        plan.cycles = schedule.round_cycles(a.cycles);
        plan.tau = a.time / static_cast<double>(plan.cycles);
    } else {
        plan = wp::plan_cycles(schedule, a.time, wp::tau_from_interval(schedule, a.tau_over_n));
    }
    double tau = plan.tau;
    if (schedule.fp_deformation) {
        tau *= schedule.fp_deformation->rescale;
    }
    wp::StateVector psi0(n);
    if (a.initial == "haar") {
        psi0 = wp::StateVector::haar_random(n, a.seed);
    } else if (a.initial != "zero") {
        throw std::invalid_argument("--initial must be zero or haar");
    }
    wp::ErrorModel errors;
    errors.rng_seed = a.seed;
    errors.t_p = a.t_p;
    if (a.eps_ra > 0) {
        errors.delta = wp::sample_rotation_errors(n, a.eps_ra, 1.0, a.seed);
    }
    if (a.field > 0) {
        std::mt19937_64 rng(a.seed);
        std::uniform_real_distribution<double> u(-a.field / std::sqrt(3.0), a.field / std::sqrt(3.0));
        errors.fields.resize(n);
        for (auto &f : errors.fields) {
            f = {u(rng), u(rng), u(rng)};
        }
    }
    auto psi = wp::run_schedule(schedule, resource, tau, plan.cycles, errors, psi0, a.tol);
    ordered_json r;
    r["n_qubits"] = n;
    r["cycles"] = plan.cycles;
    r["tau"] = tau;
    r["physical_time"] = tau * static_cast<double>(plan.cycles) * schedule.total_c();
    r["norm"] = psi.norm();
    if (!a.target.empty()) {
        auto target = wp::target_from_json(read_file(a.target));
        auto exact = wp::evolve(wp::target_operator(target), a.time, psi0, a.tol);
        double f = wp::fidelity(psi, exact);
        r["fidelity"] = f;
        r["infidelity"] = 1 - f;
    }
    out << r.dump(1) << '\n';
    return kOk;
}

void overlay_flags(const CLI::App &sub, const wp::ExperimentConfig &f, wp::ExperimentConfig &c) {
    auto given = [&](const char *name) { return sub.count(name) > 0; };
    if (given("--N")) c.n_values = f.n_values;
    if (given("--alpha")) c.alphas = f.alphas;
    if (given("--p")) c.orders = f.orders;
    if (given("--tau-over-n")) c.tau_over_n = f.tau_over_n;
    if (given("--seed")) c.seeds = f.seeds;
    if (given("--mode")) c.mode = f.mode;
    if (given("--eps-ra")) c.eps_ra = f.eps_ra;
    if (given("--eps-fp")) c.eps_fp = f.eps_fp;
    if (given("--field")) c.field_strength = f.field_strength;
    if (given("--lambda")) c.lambdas = f.lambdas;
    if (given("--geometry")) c.geometry = f.geometry;
    if (given("--n-states")) c.n_states = f.n_states;
    if (given("--graph")) c.graph = f.graph;
    if (given("--k-steps")) c.k_steps = f.k_steps;
    if (given("--k-tau")) c.k_tau = f.k_tau;
    if (given("--kappa")) c.kappa = f.kappa;
    if (given("--time")) c.total_time = f.total_time;
    if (given("--tol")) c.tol = f.tol;
    if (given("--workers")) c.workers = f.workers;
}

int cmd_experiment(const CLI::App &sub, ExperimentArgs a, std::ostream &out, std::ostream &err) {
    std::string name = a.name;
    wp::ExperimentConfig config;
    ConfigFile file;
    std::string config_text;
    if (!a.config.empty()) {
        config_text = read_file(a.config);
        // Peek at the experiment name first so its defaults sit underneath.
        wp::ExperimentConfig scratch;
        file = apply_config_json(config_text, scratch);
        if (name.empty() && file.experiment) {
            name = *file.experiment;
        }
    }
    if (name.empty()) {
        throw std::invalid_argument("no experiment named; expected one of ising, cutoff, robust, surface7, maxcut, bounds");
    }
    config = wp::default_config(name);
    config.workers = wp::default_workers();
    if (!config_text.empty()) {
        apply_config_json(config_text, config);
    }
    overlay_flags(sub, a.flags, config);
    std::string csv_path = !a.output.empty() ? a.output : file.csv_path.value_or("");
    std::string manifest_path = !a.manifest.empty() ? a.manifest : file.manifest_path.value_or("");
    if (manifest_path.empty() && !csv_path.empty()) {
        manifest_path = csv_path + ".manifest.json";
    }

    wp::validate_config(name, config);
    auto result = wp::run_experiment(name, config);
    std::ostringstream csv;
    wp::write_csv(csv, result.records);
    if (csv_path.empty()) {
        out << csv.str();
    } else {
        write_file(csv_path, csv.str());
    }
    if (!manifest_path.empty()) {
        ordered_json m;
        m["tool"] = "walshc";
        m["version"] = wp::kVersion;
        m["experiment"] = name;
        m["parameters"] = ordered_json::parse(config_to_json(config));
        m["schedule_hashes"] = result.schedule_hashes;
        ordered_json failures = ordered_json::array();
        for (const auto &f : result.failures) {
            failures.push_back({{"row", f.row}, {"message", f.message}});
        }
        m["failures"] = failures;
        m["rows"] = result.records.size();
        m["csv_hash"] = wp::content_hash(csv.str());
        write_file(manifest_path, m.dump(1) + "\n");
    }
    for (const auto &f : result.failures) {
        diagnostic(err, "row_failed", f.message, {{"row", f.row}});
    }
    return kOk;
}

int cmd_bounds(const BoundsArgs &a, std::ostream &out) {
    std::vector<double> taus = {a.tau};
    auto report = wp::trotter_bound(a.alpha, a.n, a.j, taus, a.time);
    std::vector<wp::ExperimentRecord> rows;
    auto row = [&](const char *metric, double value) {
        wp::ExperimentRecord r;
        r.experiment = "bounds";
        r.n_qubits = a.n;
        r.alpha = a.alpha;
        r.tau_over_n = a.tau;
        r.metric = metric;
        r.value = value;
        rows.push_back(r);
    };
    row(a.alpha > 1 ? "a_alpha" : "b_alpha", report.constant);
    row("bound", report.bound);
    if (a.kappa > 0) {
        row("kappa_period", wp::period_for_kappa(a.alpha, a.n, a.j, a.time, a.kappa));
    }
    wp::write_csv(out, rows);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Compile and simulate Walsh pulse sequences", "walshc"};
    app.set_version_flag("--version", std::string(wp::kVersion));
    app.require_subcommand(1);

    CompileArgs ca;
    auto *compile = app.add_subcommand("compile", "Compile a target Hamiltonian into a pulse schedule");
    compile->add_option("--target", ca.target, "Target JSON")->required();
    compile->add_option("--resource", ca.resource, "Resource JSON")->required();
    compile->add_option("-o,--output", ca.output, "Write the schedule here instead of stdout");
    compile->add_option("-p,--order", ca.order, "Trotter order (1 or 2)")->check(CLI::IsMember({1, 2}));
    compile->add_option("--cutoff", ca.cutoff, "Interaction cutoff lambda_r on a chain");
    compile->add_flag("--dd-guard", ca.dd_guard, "Keep every Walsh index nonzero and x != y");
    compile->add_flag("--robust", ca.robust, "Install the rotation-error sign schedule");
    compile->add_option("--e-indices", ca.e_indices, "Sign-schedule indices, one per qubit")->delimiter(',');
    compile->add_option("--fp-tp", ca.fp_tp, "Pulse duration for the finite-pulse deformation");
    compile->add_option("--fp-tau", ca.fp_tau, "Base period the deformation is computed for");
    compile->add_option("--strategy", ca.strategy, "greedy or hamilton");
    compile->add_flag("--stats", ca.stats, "Print block count, sequence lengths and pulse counts to stderr");

    SimulateArgs sa;
    auto *simulate = app.add_subcommand("simulate", "Run a schedule on the state-vector simulator");
    simulate->add_option("--schedule", sa.schedule, "Schedule JSON")->required();
    simulate->add_option("--resource", sa.resource, "Resource JSON")->required();
    simulate->add_option("--target", sa.target, "Target JSON; reports fidelity to its exact evolution");
    simulate->add_option("--time", sa.time, "Target evolution time")->required();
    simulate->add_option("--tau-over-n", sa.tau_over_n, "Interval length tau / n");
    simulate->add_option("--cycles", sa.cycles, "Cycle count");
    simulate->add_option("--initial", sa.initial, "zero or haar");
    simulate->add_option("--seed", sa.seed, "Seed for the initial state and sampled errors");
    simulate->add_option("--eps-ra", sa.eps_ra, "Rotation-angle error scale");
    simulate->add_option("--t-p", sa.t_p, "Pulse duration");
    simulate->add_option("--field", sa.field, "Largest random background-field norm");
    simulate->add_option("--tol", sa.tol, "Propagator tolerance");

    ExperimentArgs ea;
    auto &f = ea.flags;
    auto *experiment = app.add_subcommand("experiment", "Run a named parameter sweep");
    experiment->add_option("name", ea.name, "ising, cutoff, robust, surface7, maxcut or bounds");
    experiment->add_option("--config", ea.config, "JSON config file");
    experiment->add_option("-o,--output", ea.output, "CSV path (default stdout)");
    experiment->add_option("--manifest", ea.manifest, "Manifest path (default <csv>.manifest.json)");
    experiment->add_option("--N", f.n_values)->delimiter(',');
    experiment->add_option("--alpha", f.alphas)->delimiter(',');
    experiment->add_option("--p", f.orders)->delimiter(',');
    experiment->add_option("--tau-over-n", f.tau_over_n)->delimiter(',');
    experiment->add_option("--seed", f.seeds)->delimiter(',');
    experiment->add_option("--mode", f.mode, "robust: ra, fp or fields");
    experiment->add_option("--eps-ra", f.eps_ra)->delimiter(',');
    experiment->add_option("--eps-fp", f.eps_fp)->delimiter(',');
    experiment->add_option("--field", f.field_strength)->delimiter(',');
    experiment->add_option("--lambda", f.lambdas)->delimiter(',');
    experiment->add_option("--geometry", f.geometry);
    experiment->add_option("--n-states", f.n_states);
    experiment->add_option("--graph", f.graph);
    experiment->add_option("--k-steps", f.k_steps)->delimiter(',');
    experiment->add_option("--k-tau", f.k_tau);
    experiment->add_option("--kappa", f.kappa);
    experiment->add_option("--time", f.total_time);
    experiment->add_option("--tol", f.tol);
    experiment->add_option("--workers", f.workers, "Worker threads (default $WALSHC_WORKERS or all cores)");

    BoundsArgs ba;
    auto *bounds = app.add_subcommand("bounds", "Evaluate the Trotter-error bound");
    bounds->add_option("--alpha", ba.alpha)->required();
    bounds->add_option("--N", ba.n)->required();
    bounds->add_option("--j", ba.j);
    bounds->add_option("--tau", ba.tau, "Cycle period sum_q tau_q");
    bounds->add_option("--time", ba.time, "Total time T");
    bounds->add_option("--kappa", ba.kappa, "Report the period that targets this kappa");

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*compile) {
            return cmd_compile(ca, out, err);
        }
        if (*simulate) {
            return cmd_simulate(sa, out);
        }
        if (*experiment) {
            return cmd_experiment(*experiment, ea, out, err);
        }
        return cmd_bounds(ba, out);
    } catch (const wp::DivisionByZeroCoupling &e) {
        diagnostic(err, "division_by_zero_coupling", e.what(),
                   {{"i", e.i()}, {"j", e.j()}, {"channel", std::string(1, wp::pauli_char(e.channel()))}});
        return kInputError;
    } catch (const wp::ParseError &e) {
        diagnostic(err, "parse_error", e.what());
        return kInputError;
    } catch (const InputError &e) {
        diagnostic(err, "io_error", e.what());
        return kInputError;
    } catch (const std::invalid_argument &e) {
        diagnostic(err, "invalid_input", e.what());
        return kInputError;
    } catch (const wp::NumericalFailure &e) {
        diagnostic(err, "numerical_failure", e.what());
        return kNumericalFailure;
    }
}

}  // namespace walshc
