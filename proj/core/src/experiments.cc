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

#include "walshpulse/experiments.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

#include "walshpulse/bounds.h"
#include "walshpulse/compiler.h"
#include "walshpulse/executor.h"
#include "walshpulse/maxcut.h"
#include "walshpulse/metrics.h"
#include "walshpulse/serialization.h"
#include "walshpulse/surface7.h"

namespace walshpulse {

namespace {

const std::vector<double> kTauGrid = {1e-3, 1.778279410038923e-3, 3.1622776601683794e-3, 5.623413251903491e-3, 1e-2};

class HashSink {
   public:
    void add(const std::string &label, const PulseSchedule &schedule) {
        std::string hash = content_hash(schedule_to_json(schedule));
        std::lock_guard lock(mu_);
        hashes_[label] = hash;
    }
    std::map<std::string, std::string> take() {
        return std::move(hashes_);
    }

   private:
    std::mutex mu_;
    std::map<std::string, std::string> hashes_;
};

struct Row {
    ExperimentRecord base;
    std::string label;
    std::function<std::vector<std::pair<std::string, double>>(HashSink &)> run;
};

std::string row_label(const ExperimentRecord &r) {
    return r.experiment + "/N=" + std::to_string(r.n_qubits) + "/alpha=" + format_double(r.alpha) +
           "/p=" + std::to_string(r.trotter_order) + "/tau_over_n=" + format_double(r.tau_over_n) +
           "/seed=" + std::to_string(r.seed);
}

double target_time(const ExperimentConfig &c) {
    return c.total_time > 0 ? c.total_time : std::numbers::pi / 4;
}

struct Simulation {
    StateVector state;
    CyclePlan plan;
};

Simulation simulate(const PulseSchedule &schedule, const ResourceHamiltonian &resource, double total_time,
                    double tau_over_n, const ErrorModel &errors, double tol) {
    CyclePlan plan = plan_cycles(schedule, total_time, tau_from_interval(schedule, tau_over_n));
    StateVector psi = run_schedule(schedule, resource, plan.tau, plan.cycles, errors,
                                   StateVector(schedule.n_qubits), tol);
    return {std::move(psi), plan};
}

std::vector<LocalField> sample_fields(int n, double strength, std::uint64_t seed) {
    // Components uniform in [-h, h] / sqrt(3), so |h_i| <= strength.
    std::mt19937_64 rng(seed);
    double bound = strength / std::sqrt(3.0);
    std::uniform_real_distribution<double> u(-bound, bound);
    std::vector<LocalField> fields(n);
    for (auto &f : fields) {
        f.hx = u(rng);
        f.hy = u(rng);
        f.hz = u(rng);
    }
    return fields;
}

std::string suffix(const std::string &name, double magnitude) {
    return name + "_eps" + format_double(magnitude);
}

template <typename F>
void for_grid(const ExperimentConfig &c, F &&f) {
    for (int n : c.n_values) {
        for (double alpha : c.alphas) {
            for (int p : c.orders) {
                for (double t : c.tau_over_n) {
                    for (auto seed : c.seeds) {
                        f(n, alpha, p, t, seed);
                    }
                }
            }
        }
    }
}

ExperimentRecord base_record(const char *experiment, int n, double alpha, int p, double t, std::uint64_t seed) {
    ExperimentRecord r;
    r.experiment = experiment;
    r.n_qubits = n;
    r.alpha = alpha;
    r.trotter_order = p;
    r.tau_over_n = t;
    r.seed = seed;
    return r;
}

std::string schedule_label(const char *experiment, int n, double alpha, int p, const std::string &variant) {
    return std::string(experiment) + "/N=" + std::to_string(n) + "/alpha=" + format_double(alpha) +
           "/p=" + std::to_string(p) + (variant.empty() ? "" : "/" + variant);
}

std::vector<Row> ising_rows(const ExperimentConfig &c) {
    std::vector<Row> rows;
    for_grid(c, [&](int n, double alpha, int p, double t, std::uint64_t seed) {
        Row row{base_record("ising", n, alpha, p, t, seed), "", {}};
        row.run = [=](HashSink &hashes) {
            auto resource = ResourceHamiltonian::power_law_chain(n, alpha);
            CompileOptions options;
            options.trotter_order = p;
            auto schedule = compile(ising_chain_target(n), resource, options);
            hashes.add(schedule_label("ising", n, alpha, p, ""), schedule);
            double total = target_time(c);
            auto sim = simulate(schedule, resource, total, t, {}, c.tol);
            double f = fidelity(sim.state, cluster_reference(n));
            std::vector<std::pair<std::string, double>> out = {
                {"infidelity", 1 - f}, {"walsh_sequences", static_cast<double>(schedule.blocks.size())}};
            if (alpha != 1) {
                double sum_c = schedule.total_c();
                std::vector<double> taus = {sim.plan.tau * sum_c};
                out.emplace_back("trotter_bound", trotter_bound(alpha, n, 1.0, taus, total * sum_c).bound);
            }
            return out;
        };
        rows.push_back(std::move(row));
    });
    return rows;
}

std::vector<Row> cutoff_rows(const ExperimentConfig &c) {
    std::vector<Row> rows;
    for_grid(c, [&](int n, double alpha, int p, double t, std::uint64_t seed) {
        for (int lambda : c.lambdas) {
            Row row{base_record("cutoff", n, alpha, p, t, seed), "", {}};
            row.label = "lambda=" + std::to_string(lambda);
            row.run = [=](HashSink &hashes) {
                auto resource = ResourceHamiltonian::power_law_chain(n, alpha);
                CompileOptions options;
                options.trotter_order = p;
                std::string name = "infidelity_full";
                if (lambda > 0) {
                    options.cutoff = CutoffConfig{lambda};
                    name = "infidelity_lambda" + std::to_string(lambda);
                }
                auto schedule = compile(ising_chain_target(n), resource, options);
                hashes.add(schedule_label("cutoff", n, alpha, p, "lambda=" + std::to_string(lambda)), schedule);
                auto sim = simulate(schedule, resource, target_time(c), t, {}, c.tol);
                return std::vector<std::pair<std::string, double>>{
                    {name, 1 - fidelity(sim.state, cluster_reference(n))},
                    {name == "infidelity_full" ? "sequence_length_full" : "sequence_length_lambda" + std::to_string(lambda),
                     tau_from_interval(schedule, 1.0)}};
            };
            rows.push_back(std::move(row));
        }
    });
    return rows;
}

std::vector<Row> robust_rows(const ExperimentConfig &c) {
    std::vector<Row> rows;
    const std::string mode = c.mode;
    const auto &magnitudes = mode == "ra" ? c.eps_ra : mode == "fp" ? c.eps_fp : c.field_strength;
    for_grid(c, [&](int n, double alpha, int p, double t, std::uint64_t seed) {
        for (double eps : magnitudes) {
            Row row{base_record("robust", n, alpha, p, t, seed), mode + "/eps=" + format_double(eps), {}};
            row.run = [=](HashSink &hashes) {
                auto resource = ResourceHamiltonian::power_law_chain(n, alpha);
                auto target = ising_chain_target(n);
                auto reference = cluster_reference(n);
                double total = target_time(c);
                CompileOptions options;
                options.trotter_order = p;
                std::vector<std::pair<std::string, double>> out;
                auto infidelity = [&](const StateVector &psi) { return 1 - fidelity(psi, reference); };

                if (mode == "ra") {
                    ErrorModel errors;
                    errors.delta = sample_rotation_errors(n, eps, 1.0, seed);
                    errors.rng_seed = seed;
                    CompileOptions single = options;
                    single.dd_guard = true;
                    auto s_single = compile(target, resource, single);
                    CompileOptions dbl = options;
                    dbl.robust = RobustnessPolicy{};
                    auto s_double = compile(target, resource, dbl);
                    hashes.add(schedule_label("robust", n, alpha, p, "single"), s_single);
                    hashes.add(schedule_label("robust", n, alpha, p, "double"), s_double);
                    out.emplace_back(suffix("infidelity_ideal", eps),
                                     infidelity(simulate(s_double, resource, total, t, {}, c.tol).state));
                    out.emplace_back(suffix("infidelity_single", eps),
                                     infidelity(simulate(s_single, resource, total, t, errors, c.tol).state));
                    out.emplace_back(suffix("infidelity_double", eps),
                                     infidelity(simulate(s_double, resource, total, t, errors, c.tol).state));
                } else if (mode == "fp") {
                    CompileOptions dbl = options;
                    dbl.robust = RobustnessPolicy{};
                    auto nominal = compile(target, resource, dbl);
                    hashes.add(schedule_label("robust", n, alpha, p, "nominal"), nominal);
                    CyclePlan plan = plan_cycles(nominal, total, tau_from_interval(nominal, t));
                    auto run = [&](const PulseSchedule &s, double tau, double t_p) {
                        ErrorModel errors;
                        errors.t_p = t_p;
                        return infidelity(
                            run_schedule(s, resource, tau, plan.cycles, errors, StateVector(n), c.tol));
                    };
                    const auto &b0 = nominal.blocks.front();
                    double layers = static_cast<double>(b0.interval_durations.size());
                    double rescale = 1 / (1 - 5 * eps / 8);
                    double tau_fp = plan.tau * rescale;
                    double t_p = eps * b0.c * tau_fp / (2 * layers);
                    RobustnessPolicy policy;
                    policy.finite_pulse = FinitePulsePolicy{t_p, tau_fp};
                    auto deformed = robustify(nominal, policy);
                    hashes.add(schedule_label("robust", n, alpha, p, "deformed"), deformed);
                    out.emplace_back(suffix("infidelity_ideal", eps), run(nominal, plan.tau, 0));
                    out.emplace_back(suffix("infidelity_fp_raw", eps), run(nominal, plan.tau, eps * b0.c * plan.tau / (2 * layers)));
                    out.emplace_back(suffix("infidelity_fp_deformed", eps), run(deformed, tau_fp, t_p));
                } else {
                    ErrorModel errors;
                    errors.fields = sample_fields(n, eps, seed);
                    errors.rng_seed = seed;
                    CompileOptions guarded = options;
                    guarded.dd_guard = true;
                    auto s_guarded = compile(target, resource, guarded);
                    auto s_plain = compile(target, resource, options);
                    hashes.add(schedule_label("robust", n, alpha, p, "guarded"), s_guarded);
                    out.emplace_back(suffix("infidelity_nofield", eps),
                                     infidelity(simulate(s_guarded, resource, total, t, {}, c.tol).state));
                    out.emplace_back(suffix("infidelity_field", eps),
                                     infidelity(simulate(s_guarded, resource, total, t, errors, c.tol).state));
                    out.emplace_back(suffix("infidelity_field_unguarded", eps),
                                     infidelity(simulate(s_plain, resource, total, t, errors, c.tol).state));
                }
                return out;
            };
            rows.push_back(std::move(row));
        }
    });
    return rows;
}

std::vector<Row> surface7_rows(const ExperimentConfig &c) {
    std::vector<Row> rows;
    Surface7Geometry geometry = parse_surface7_geometry(c.geometry);
    for (double alpha : c.alphas) {
        for (int p : c.orders) {
            for (double t : c.tau_over_n) {
                for (auto seed : c.seeds) {
                    Row row{base_record("surface7", 7, alpha, p, t, seed), c.geometry, {}};
                    row.run = [=](HashSink &hashes) {
                        auto program = surface7_compile(surface7_setup(geometry, alpha), p);
                        for (std::size_t l = 0; l < program.schedules.size(); l++) {
                            hashes.add(schedule_label("surface7", 7, alpha, p, c.geometry + "/layer" + std::to_string(l + 1)),
                                       program.schedules[l]);
                        }
                        auto result = surface7_run(geometry, alpha, t, seed, c.n_states, p);
                        return std::vector<std::pair<std::string, double>>{
                            {"stabilizer_error", result.mean_error},
                            {"walsh_sequences", static_cast<double>(result.walsh_sequences)}};
                    };
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

std::vector<Row> maxcut_rows(const ExperimentConfig &c) {
    std::vector<Row> rows;
    WeightedGraph graph = registry_graph(c.graph);
    int n = graph.n_vertices();
    for (int p : c.orders) {
        for (int k : c.k_steps) {
            double tau = c.k_tau / k;
            Row row{base_record("maxcut", n, 0.0, p, tau, 0), c.graph + "/K=" + std::to_string(k), {}};
            row.run = [=](HashSink &hashes) {
                auto resource = ResourceHamiltonian::power_law_chain(n, 0.0);
                CompileOptions options;
                options.trotter_order = p;
                hashes.add(schedule_label("maxcut", n, 0.0, p, c.graph),
                           compile(maxcut_target(graph), resource, options));
                StateVector psi = dqa_run(graph, resource, k, tau, 1.0, options);
                auto gap = maxcut_energy_gap(psi, graph);
                auto ground = maxcut_ground(graph);
                auto probs = x_basis_probabilities(psi);
                double ground_p = 0;
                double wrong_p = 0;
                for (std::size_t s = 0; s < probs.size(); s++) {
                    bool is_ground = std::find(ground.configurations.begin(), ground.configurations.end(), s) !=
                                     ground.configurations.end();
                    if (is_ground) {
                        ground_p += probs[s];
                    } else {
                        wrong_p = std::max(wrong_p, probs[s]);
                    }
                }
                return std::vector<std::pair<std::string, double>>{{"energy", gap.energy},
                                                                   {"energy_gap", gap.gap},
                                                                   {"ground_probability", ground_p},
                                                                   {"k_steps", static_cast<double>(k)},
                                                                   {"max_wrong_probability", wrong_p}};
            };
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<Row> bounds_rows(const ExperimentConfig &c) {
    std::vector<Row> rows;
    for_grid(c, [&](int n, double alpha, int p, double t, std::uint64_t seed) {
        Row row{base_record("bounds", n, alpha, p, t, seed), "", {}};
        row.run = [=](HashSink &hashes) {
            auto resource = ResourceHamiltonian::power_law_chain(n, alpha);
            CompileOptions options;
            options.trotter_order = p;
            auto schedule = compile(ising_chain_target(n), resource, options);
            hashes.add(schedule_label("bounds", n, alpha, p, ""), schedule);
            double sum_c = schedule.total_c();
            double total = target_time(c) * sum_c;
            std::vector<double> taus = {tau_from_interval(schedule, t) * sum_c};
            auto report = trotter_bound(alpha, n, 1.0, taus, total);
            return std::vector<std::pair<std::string, double>>{
                {alpha > 1 ? "a_alpha" : "b_alpha", report.constant},
                {"bound", report.bound},
                {"kappa_period", period_for_kappa(alpha, n, 1.0, total, c.kappa)}};
        };
        rows.push_back(std::move(row));
    });
    return rows;
}

std::vector<Row> build_rows(std::string_view name, const ExperimentConfig &c) {
    if (name == "ising") {
        return ising_rows(c);
    }
    if (name == "cutoff") {
        return cutoff_rows(c);
    }
    if (name == "robust") {
        return robust_rows(c);
    }
    if (name == "surface7") {
        return surface7_rows(c);
    }
    if (name == "maxcut") {
        return maxcut_rows(c);
    }
    if (name == "bounds") {
        return bounds_rows(c);
    }
    throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
}

void require_nonempty(bool ok, const char *what) {
    if (!ok) {
        throw std::invalid_argument(std::string("empty parameter grid: ") + what);
    }
}

}  // namespace

std::vector<std::string> experiment_names() {
    return {"ising", "cutoff", "robust", "surface7", "maxcut", "bounds"};
}

ExperimentConfig default_config(std::string_view name) {
    ExperimentConfig c;
    c.orders = {1};
    c.seeds = {0};
    c.tau_over_n = kTauGrid;
    if (name == "ising") {
        c.n_values = {8};
        c.alphas = {3};
        c.orders = {1, 2};
    } else if (name == "cutoff") {
        c.n_values = {12};
        c.alphas = {3, 0.2};
        c.lambdas = {0, 8};
    } else if (name == "robust") {
        c.n_values = {6};
        c.alphas = {1.2};
        c.seeds = {1, 2, 3};
        c.eps_ra = {1e-2};
        c.eps_fp = {1e-2};
        c.field_strength = {1};
    } else if (name == "surface7") {
        c.n_values = {7};
        c.alphas = {3};
        c.orders = {2};
        c.tau_over_n = {1e-2, 1.778279410038923e-2, 3.1622776601683794e-2, 5.623413251903491e-2, 1e-1};
    } else if (name == "maxcut") {
        c.n_values = {6};
        c.alphas = {0};
        c.k_steps = {4, 8, 16, 32, 64};
    } else if (name == "bounds") {
        c.n_values = {8};
        c.alphas = {3, 0.2};
        c.tau_over_n = {1e-2};
    } else {
        throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
    }
    return c;
}

void validate_config(std::string_view name, const ExperimentConfig &c) {
    auto names = experiment_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
    }
    require_nonempty(!c.orders.empty(), "p");
    for (int p : c.orders) {
        if (p != 1 && p != 2) {
            throw std::invalid_argument("Trotter order must be 1 or 2");
        }
    }
    if (!(c.tol > 0) || c.workers < 1) {
        throw std::invalid_argument("tolerance and worker count must be positive");
    }
    if (name == "maxcut") {
        require_nonempty(!c.k_steps.empty(), "k_steps");
        registry_graph(c.graph);
        if (!(c.k_tau > 0)) {
            throw std::invalid_argument("k_tau must be positive");
        }
        return;
    }
    require_nonempty(!c.alphas.empty(), "alpha");
    require_nonempty(!c.tau_over_n.empty(), "tau_over_n");
    require_nonempty(!c.seeds.empty(), "seed");
    for (double t : c.tau_over_n) {
        if (!(t > 0)) {
            throw std::invalid_argument("tau_over_n values must be positive");
        }
    }
    if (name == "surface7") {
        parse_surface7_geometry(c.geometry);
        if (c.n_states < 1) {
            throw std::invalid_argument("n_states must be positive");
        }
        return;
    }
    require_nonempty(!c.n_values.empty(), "N");
    if (name == "cutoff") {
        require_nonempty(!c.lambdas.empty(), "lambda");
    }
    if (name == "robust") {
        if (c.mode == "ra") {
            require_nonempty(!c.eps_ra.empty(), "eps_ra");
        } else if (c.mode == "fp") {
            require_nonempty(!c.eps_fp.empty(), "eps_fp");
        } else if (c.mode == "fields") {
            require_nonempty(!c.field_strength.empty(), "field_strength");
        } else {
            throw std::invalid_argument("robust mode must be ra, fp or fields");
        }
    }
}

ExperimentResult run_experiment(std::string_view name, const ExperimentConfig &config) {
    validate_config(name, config);
    std::vector<Row> rows = build_rows(name, config);
    std::vector<std::vector<ExperimentRecord>> produced(rows.size());
    std::vector<std::optional<ExperimentFailure>> failed(rows.size());
    HashSink hashes;
    parallel_for(rows.size(), config.workers, [&](std::size_t i) {
        const Row &row = rows[i];
        try {
            for (auto &[metric, value] : row.run(hashes)) {
                ExperimentRecord r = row.base;
                r.metric = metric;
                r.value = value;
                produced[i].push_back(std::move(r));
            }
        } catch (const std::exception &e) {
            ExperimentRecord r = row.base;
            r.metric = "error";
            r.value = std::numeric_limits<double>::quiet_NaN();
            produced[i] = {r};
            std::string label = row_label(row.base) + (row.label.empty() ? "" : "/" + row.label);
            failed[i] = ExperimentFailure{label, e.what()};
        }
    });
    ExperimentResult result;
    for (std::size_t i = 0; i < rows.size(); i++) {
        for (auto &r : produced[i]) {
            result.records.push_back(std::move(r));
        }
        if (failed[i]) {
            result.failures.push_back(*failed[i]);
        }
    }
    std::stable_sort(result.records.begin(), result.records.end(), record_less);
    result.schedule_hashes = hashes.take();
    return result;
}

}  // namespace walshpulse
