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


// JSON experiment configurations (schema version 1). Unknown keys are
// rejected; every error names the offending key path.

#ifndef UNSHARP_CONFIG_H
#define UNSHARP_CONFIG_H

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "unsharp/budget.h"
#include "unsharp/estimation.h"
#include "unsharp/preparation.h"
#include "unsharp/sweep.h"

namespace unsharp {

inline constexpr int kConfigSchemaVersion = 1;

class ConfigError : public std::invalid_argument {
   public:
    ConfigError(const std::string &path, const std::string &message)
        : std::invalid_argument(path + ": " + message), path_(path) {
    }
    const std::string &path() const {
        return path_;
    }

   private:
    std::string path_;
};

struct EstimationExperiment {
    EstimationConfig config;
    SweepVariable variable = SweepVariable::kPWrong;
    std::vector<double> grid;
    int record_trajectories = 0;
};

struct PreparationExperiment {
    PreparationConfig config;
    SweepVariable variable = SweepVariable::kPSp;
    std::vector<double> grid;
    int record_trajectories = 0;
};

enum class BudgetChain {
    kMetastable,
    kDipole,
};

struct BudgetExperiment {
    BudgetChain chain = BudgetChain::kMetastable;
    PhysicalConstants constants;
    MetastableChainParams metastable;
    DipoleChainParams dipole;
};

/// Throws ConfigError.
EstimationExperiment parse_estimation_experiment(const nlohmann::json &j);
PreparationExperiment parse_preparation_experiment(const nlohmann::json &j);
BudgetExperiment parse_budget_experiment(const nlohmann::json &j);

/// Fully resolved configs, defaults included; parsing them gives back the same experiment.
nlohmann::json to_json(const EstimationExperiment &e);
nlohmann::json to_json(const PreparationExperiment &e);
nlohmann::json to_json(const BudgetExperiment &e);

/// Parses text, reporting JSON syntax errors as ConfigError at path "$".
nlohmann::json parse_json_text(const std::string &text);

/// Key documentation for --help: (key path, description) pairs.
std::vector<std::pair<std::string, std::string>> estimation_config_keys();
std::vector<std::pair<std::string, std::string>> preparation_config_keys();
std::vector<std::pair<std::string, std::string>> budget_config_keys();

}  // namespace unsharp

#endif
