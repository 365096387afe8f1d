// Copyright 2026 The Unsharp Authors
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


#include "unsharp/sweep.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "unsharp/pulse.h"

namespace unsharp {

namespace {

void check_grid(const std::vector<double> &grid) {
    if (grid.empty()) {
        throw std::invalid_argument("sweep grid is empty");
    }
    for (double g : grid) {
        if (!(g >= 0.0 && g <= 1.0)) {
            throw std::invalid_argument("sweep grid values are probabilities in [0, 1], got " + format_real(g));
        }
    }
}

void set_variable(NoiseChannels &noise, SweepVariable v, double value) {
    if (v == SweepVariable::kPWrong) {
        noise.mapping.p_wrong = value;
    } else {
        noise.emission.p_sp = value;
    }
}

struct MeanErr {
    double mean;
    double err;
};

template <typename F>
MeanErr mean_err(const std::vector<TrajectoryRecord> &records, F get) {
    double n = static_cast<double>(records.size());
    double sum = 0;
    for (const auto &r : records) {
        sum += get(r);
    }
    double mean = sum / n;
    if (records.size() < 2) {
        return {mean, 0.0};
    }
    double ss = 0;
    for (const auto &r : records) {
        double d = get(r) - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / (n - 1) / n)};
}

nlohmann::json state_json(const QubitState &s) {
    return {s.amp_g().real(), s.amp_g().imag(), s.amp_e().real(), s.amp_e().imag()};
}

}  // namespace

std::string_view sweep_variable_name(SweepVariable v) {
    return v == SweepVariable::kPWrong ? "p_wrong" : "p_sp";
}

SweepVariable parse_sweep_variable(std::string_view name) {
    if (name == "p_wrong") {
        return SweepVariable::kPWrong;
    }
    if (name == "p_sp") {
        return SweepVariable::kPSp;
    }
    throw std::invalid_argument("unknown sweep variable '" + std::string(name) + "' (expected p_wrong or p_sp)");
}

std::vector<TrajectoryRecord> run_parallel(int n, int jobs, const std::function<TrajectoryRecord(int)> &fn) {
    if (jobs < 1) {
        throw std::invalid_argument("jobs must be >= 1");
    }
    std::vector<TrajectoryRecord> out(static_cast<size_t>(n));
    if (jobs == 1 || n < 2) {
        for (int t = 0; t < n; t++) {
            out[t] = fn(t);
        }
        return out;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            int t = next.fetch_add(1);
            if (t >= n) {
                return;
            }
            try {
                out[t] = fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    for (int j = 0; j < std::min(jobs, n); j++) {
        threads.emplace_back(worker);
    }
    for (auto &th : threads) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

SweepPoint summarize(double grid_value, const std::vector<TrajectoryRecord> &records, uint64_t seed) {
    if (records.empty()) {
        throw std::invalid_argument("summarize: no trajectories");
    }
    MeanErr f = mean_err(records, [](const TrajectoryRecord &r) { return r.mean_fidelity; });
    MeanErr c = mean_err(records, [](const TrajectoryRecord &r) { return static_cast<double>(r.count); });
    MeanErr u = mean_err(records, [](const TrajectoryRecord &r) { return static_cast<double>(r.count_unsharp); });
    MeanErr resets = mean_err(records, [](const TrajectoryRecord &r) { return static_cast<double>(r.resets); });
    MeanErr conv = mean_err(records, [](const TrajectoryRecord &r) { return r.converged ? 1.0 : 0.0; });
    return SweepPoint{grid_value, f.mean,      f.err,     c.mean, c.err, u.mean, u.err, resets.mean,
                      conv.mean,  static_cast<int>(records.size()), seed};
}

SweepResult sweep_estimation(const EstimationConfig &base, SweepVariable variable, const std::vector<double> &grid,
                             const SweepOptions &options) {
    check_grid(grid);
    base.validate();
    SweepResult result;
    for (double g : grid) {
        EstimationConfig cfg = base;
        set_variable(cfg.noise, variable, g);
        cfg.validate();
        auto records = run_parallel(cfg.n_trajectories, options.jobs, [&](int t) {
            Rng rng(derive_seed(cfg.seed, kEstimationStream, static_cast<uint64_t>(t)));
            return run_estimation_trajectory(cfg, rng, t < options.record_trajectories);
        });
        result.points.push_back(summarize(g, records, cfg.seed));
        std::vector<TrajectoryRecord> kept;
        for (int t = 0; t < std::min(options.record_trajectories, cfg.n_trajectories); t++) {
            kept.push_back(std::move(records[t]));
        }
        result.records.push_back(std::move(kept));
    }
    return result;
}

SweepResult sweep_preparation(const PreparationConfig &base, SweepVariable variable,
                              const std::vector<double> &grid, const SweepOptions &options) {
    check_grid(grid);
    base.validate();
    SweepResult result;
    for (double g : grid) {
        PreparationConfig cfg = base;
        set_variable(cfg.noise, variable, g);
        cfg.validate();
        auto records = run_parallel(cfg.n_trajectories, options.jobs, [&](int t) {
            Rng rng(derive_seed(cfg.seed, kPreparationStream, static_cast<uint64_t>(t)));
            return run_preparation(cfg, rng, t < options.record_trajectories);
        });
        result.points.push_back(summarize(g, records, cfg.seed));
        std::vector<TrajectoryRecord> kept;
        for (int t = 0; t < std::min(options.record_trajectories, cfg.n_trajectories); t++) {
            kept.push_back(std::move(records[t]));
        }
        result.records.push_back(std::move(kept));
    }
    return result;
}

std::string estimation_csv(const SweepResult &result) {
    std::ostringstream out;
    out << "grid_value,mean_fidelity,stderr_fidelity,mean_count,stderr_count,n_traj,seed\n";
    for (const auto &p : result.points) {
        out << format_real(p.grid_value) << ',' << format_real(p.mean_fidelity) << ','
            << format_real(p.stderr_fidelity) << ',' << format_real(p.mean_count) << ','
            << format_real(p.stderr_count) << ',' << p.n_traj << ',' << p.seed << '\n';
    }
    return out.str();
}

std::string preparation_fidelity_csv(const SweepResult &result) {
    return estimation_csv(result);
}

std::string preparation_count_csv(const SweepResult &result) {
    std::ostringstream out;
    out << "grid_value,mean_count_total,stderr_count_total,mean_count_unsharp,stderr_count_unsharp,mean_resets,"
           "convergence_rate,n_traj,seed\n";
    for (const auto &p : result.points) {
        out << format_real(p.grid_value) << ',' << format_real(p.mean_count) << ',' << format_real(p.stderr_count)
            << ',' << format_real(p.mean_count_unsharp) << ',' << format_real(p.stderr_count_unsharp) << ','
            << format_real(p.mean_resets) << ',' << format_real(p.convergence_rate) << ',' << p.n_traj << ','
            << p.seed << '\n';
    }
    return out.str();
}

std::string trajectories_jsonl(const SweepResult &result) {
    std::ostringstream out;
    for (size_t i = 0; i < result.records.size(); i++) {
        for (size_t t = 0; t < result.records[i].size(); t++) {
            const TrajectoryRecord &rec = result.records[i][t];
            nlohmann::json steps = nlohmann::json::array();
            for (const auto &s : rec.steps) {
                steps.push_back({
                    {"time", s.time},
                    {"kind", s.kind == StepKind::kUnsharp ? "unsharp" : "reset"},
                    {"true_state", state_json(s.true_state)},
                    {"estimate", state_json(s.estimate)},
                    {"outcome", index_of(s.outcome)},
                    {"reported_outcome", index_of(s.reported_outcome)},
                    {"collapsed", s.collapsed},
                    {"fidelity", s.fidelity},
                });
            }
            nlohmann::json line = {
                {"grid_value", result.points[i].grid_value},
                {"trajectory", t},
                {"mean_fidelity", rec.mean_fidelity},
                {"count", rec.count},
                {"count_unsharp", rec.count_unsharp},
                {"resets", rec.resets},
                {"converged", rec.converged},
                {"steps", steps},
            };
            out << line.dump() << '\n';
        }
    }
    return out.str();
}

}  // namespace unsharp
