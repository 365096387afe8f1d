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


// Sweeps of an error probability over a grid. Trajectory t of every grid
// point uses the seed derive_seed(master, stream, t), so the grid points see
// common random numbers and the result does not depend on the job count.

#ifndef UNSHARP_SWEEP_H
#define UNSHARP_SWEEP_H

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "unsharp/estimation.h"
#include "unsharp/preparation.h"

namespace unsharp {

enum class SweepVariable {
    kPWrong,
    kPSp,
};

std::string_view sweep_variable_name(SweepVariable v);
/// Accepts "p_wrong" and "p_sp".
SweepVariable parse_sweep_variable(std::string_view name);

inline constexpr uint64_t kEstimationStream = 1;
inline constexpr uint64_t kPreparationStream = 2;

struct SweepPoint {
    double grid_value;
    double mean_fidelity;
    double stderr_fidelity;
    double mean_count;
    double stderr_count;
    double mean_count_unsharp;
    double stderr_count_unsharp;
    double mean_resets;
    double convergence_rate;
    int n_traj;
    uint64_t seed;
};

struct SweepOptions {
    int jobs = 1;
    /// Trajectories of each grid point to keep with full step records.
    int record_trajectories = 0;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    /// records[i] holds the recorded trajectories of grid point i.
    std::vector<std::vector<TrajectoryRecord>> records;
};

/// Runs fn(t) for t in [0, n) on `jobs` threads and returns the results in
/// index order.
std::vector<TrajectoryRecord> run_parallel(int n, int jobs, const std::function<TrajectoryRecord(int)> &fn);

/// Mean and standard error of the per-trajectory records, summed in index order.
SweepPoint summarize(double grid_value, const std::vector<TrajectoryRecord> &records, uint64_t seed);

SweepResult sweep_estimation(const EstimationConfig &base, SweepVariable variable, const std::vector<double> &grid,
                             const SweepOptions &options = {});

SweepResult sweep_preparation(const PreparationConfig &base, SweepVariable variable,
                              const std::vector<double> &grid, const SweepOptions &options = {});

/// `grid_value,mean_fidelity,stderr_fidelity,mean_count,stderr_count,n_traj,seed`
std::string estimation_csv(const SweepResult &result);
/// Same columns as estimation_csv.
std::string preparation_fidelity_csv(const SweepResult &result);
/// `grid_value,mean_count_total,stderr_count_total,mean_count_unsharp,
///  stderr_count_unsharp,mean_resets,convergence_rate,n_traj,seed`
std::string preparation_count_csv(const SweepResult &result);

/// One JSON object per recorded trajectory, one line each.
std::string trajectories_jsonl(const SweepResult &result);

}  // namespace unsharp

#endif
