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


// Command-line front end. Talks to the library only through the C interface.

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unsharp/unsharp.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kManifestVersion = 1;
constexpr double kCompileTolerance = 1e-10;

enum ExitCode {
    kExitOk = 0,
    kExitError = 1,
    kExitVerificationFailed = 2,
};

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(unsharp_status status) {
    if (status != UNSHARP_OK) {
        throw CliError(std::string(unsharp_status_name(status)) + ": " + unsharp_last_error());
    }
}

struct BufferDeleter {
    void operator()(unsharp_buffer *b) const {
        unsharp_buffer_destroy(b);
    }
};
using Buffer = std::unique_ptr<unsharp_buffer, BufferDeleter>;

std::string take(unsharp_buffer *raw) {
    Buffer b(raw);
    return std::string(unsharp_buffer_data(b.get()), unsharp_buffer_size(b.get()));
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sha256_hex(const std::string &data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw CliError("SHA-256 computation failed");
    }
    static const char *hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; i++) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

// Writes the outputs of one run and, last, a manifest referencing them.
class OutputSet {
   public:
    explicit OutputSet(std::string dir) : dir_(std::move(dir)) {
        fs::create_directories(dir_);
    }

    void write(const std::string &name, const std::string &data) {
        fs::path p = fs::path(dir_) / name;
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        out.close();
        if (!out) {
            throw CliError("cannot write " + p.string());
        }
        files_.push_back({{"file", name}, {"sha256", sha256_hex(data)}, {"bytes", data.size()}});
    }

    void write_manifest(const std::string &command, const json &config, const json &decisions,
                        std::chrono::steady_clock::time_point start) {
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json m = {
            {"manifest_version", kManifestVersion},
            {"artifact", "unsharp"},
            {"version", unsharp_version()},
            {"command", command},
            {"master_seed", config.contains("seed") ? config["seed"] : json(nullptr)},
            {"config", config},
            {"outputs", files_},
            {"decisions", decisions},
            {"duration_seconds", seconds},
        };
        std::string text = m.dump(2) + "\n";
        std::ofstream out(fs::path(dir_) / "manifest.json", std::ios::binary | std::ios::trunc);
        out << text;
        if (!out) {
            throw CliError("cannot write manifest");
        }
    }

    const std::string &dir() const {
        return dir_;
    }

   private:
    std::string dir_;
    json files_ = json::array();
};

// A manifest given as --config is replayed from its config snapshot.
json load_config(const std::string &path, const std::string &command) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error &e) {
        throw CliError(path + ": invalid JSON: " + e.what());
    }
    if (j.is_object() && j.contains("manifest_version")) {
        if (j.value("command", "") != command) {
            throw CliError(path + ": manifest was written by '" + j.value("command", "?") + "', not '" + command +
                           "'");
        }
        return j.at("config");
    }
    return j;
}

json estimation_decisions() {
    return {
        "true state starts in |g>; the estimate starts in (|g>+|e>)/sqrt2 and follows the noiseless drive",
        "fidelity is averaged over epochs after transient_skip_periods, then over trajectories",
        "drive H = (Omega_R/2) X with Omega_R from rabi_convention; dephasing acts as beta(t) Z",
        "every grid point reuses the same per-trajectory seeds",
        "spontaneous collapse is applied once per measurement epoch, before the measurement",
    };
}

json preparation_decisions() {
    return {
        "phase stage uses y measurements, polar stage z measurements; decisions use the reported record",
        "a stage resets when its angular distance exceeds the entry distance by guard_band * tolerance",
        "resets alternate projective x and y measurements until +x and are free of error channels",
        "mean_count includes reset measurements; mean_count_unsharp excludes them",
        "every grid point reuses the same per-trajectory seeds",
    };
}

void print_warnings(unsharp_sweep *sweep) {
    unsharp_buffer *w = nullptr;
    check(unsharp_sweep_warnings(sweep, &w));
    std::string text = take(w);
    if (!text.empty()) {
        std::cerr << text;
    }
}

struct Common {
    std::string config;
    std::string out = ".";
    uint64_t seed = 0;
    bool seed_given = false;
    int jobs = 1;
};

void add_common(CLI::App *app, Common &c, bool needs_config) {
    auto *opt = app->add_option("--config", c.config, "JSON configuration file or a manifest to replay");
    if (needs_config) {
        opt->required()->check(CLI::ExistingFile);
    }
    app->add_option("--out", c.out, "output directory (created if absent)");
    app->add_option_function<uint64_t>(
        "--seed",
        [&c](const uint64_t &s) {
            c.seed = s;
            c.seed_given = true;
        },
        "master seed; overrides the configuration");
    app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
}

std::string help_footer(const char *kind) {
    unsharp_buffer *b = nullptr;
    check(unsharp_config_help(kind, &b));
    return std::string("\nConfiguration keys (JSON):\n") + take(b);
}

int run_sweep_command(const std::string &command, const Common &c) {
    auto start = std::chrono::steady_clock::now();
    json cfg = load_config(c.config, command);
    if (c.seed_given) {
        if (!cfg.is_object()) {
            throw CliError("$: expected an object");
        }
        cfg["seed"] = c.seed;
    }
    bool prep = command == "prepare";
    unsharp_sweep *raw = nullptr;
    std::string text = cfg.dump();
    check(prep ? unsharp_preparation_run(text.c_str(), c.jobs, &raw) : unsharp_estimation_run(text.c_str(), c.jobs, &raw));
    std::unique_ptr<unsharp_sweep, void (*)(unsharp_sweep *)> sweep(raw, unsharp_sweep_destroy);
    print_warnings(sweep.get());

    unsharp_buffer *b = nullptr;
    check(unsharp_sweep_config(sweep.get(), &b));
    json resolved = json::parse(take(b));

    OutputSet out(c.out);
    check(unsharp_sweep_csv(sweep.get(), 0, &b));
    std::string fid = take(b);
    out.write(prep ? "preparation_fidelity.csv" : "estimation.csv", fid);
    if (prep) {
        check(unsharp_sweep_csv(sweep.get(), 1, &b));
        out.write("preparation_counts.csv", take(b));
    }
    check(unsharp_sweep_trajectories(sweep.get(), &b));
    std::string traj = take(b);
    if (!traj.empty()) {
        out.write("trajectories.jsonl", traj);
    }
    out.write("config.json", resolved.dump(2) + "\n");
    out.write_manifest(command, resolved, prep ? preparation_decisions() : estimation_decisions(), start);
    std::cout << fid;
    return kExitOk;
}

struct CompileArgs {
    double p0 = 0.45;
    double theta = 0.0;
    double phi = 0.0;
    int scheme = 1;
    std::string out = ".";
    std::string config;
};

int run_compile(CompileArgs a) {
    auto start = std::chrono::steady_clock::now();
    if (!a.config.empty()) {
        json cfg = load_config(a.config, "compile");
        try {
            a.p0 = cfg.at("p0").get<double>();
            a.theta = cfg.at("theta").get<double>();
            a.phi = cfg.at("phi").get<double>();
            a.scheme = cfg.at("scheme").get<int>();
        } catch (const json::exception &e) {
            throw CliError(a.config + ": expected keys p0, theta, phi, scheme: " + e.what());
        }
    }
    unsharp_program *raw = nullptr;
    check(unsharp_compile(a.scheme, a.p0, a.theta, a.phi, &raw));
    std::unique_ptr<unsharp_program, void (*)(unsharp_program *)> program(raw, unsharp_program_destroy);
    unsharp_buffer *b = nullptr;
    check(unsharp_program_serialize(program.get(), &b));
    std::string text = take(b);
    double deviation = 0;
    int zero_info = 0;
    check(unsharp_program_verify(program.get(), &deviation, &zero_info, &b));
    std::string report = take(b);

    json cfg = {{"p0", a.p0}, {"theta", a.theta}, {"phi", a.phi}, {"scheme", a.scheme}};
    OutputSet out(a.out);
    out.write("program.txt", text);
    out.write("verification.json", report);
    out.write_manifest("compile", cfg, json::array({"pulses are instantaneous ideal rotations"}), start);
    std::cout << text;
    std::cout << "max_deviation=" << deviation << "\n";
    if (zero_info) {
        std::cout << "zero-information: p0 = 0.5 gives identical outcome branches\n";
    }
    if (!(deviation <= kCompileTolerance)) {
        std::cerr << "verification failed: deviation " << deviation << " exceeds " << kCompileTolerance << "\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int run_params(const Common &c) {
    auto start = std::chrono::steady_clock::now();
    json cfg = load_config(c.config, "estimate-params");
    std::string text = cfg.dump();
    unsharp_buffer *kv = nullptr;
    unsharp_buffer *js = nullptr;
    check(unsharp_budget_run(text.c_str(), &kv, &js));
    std::string kv_text = take(kv);
    std::string js_text = take(js);
    json resolved = json::parse(js_text).at("config");
    OutputSet out(c.out);
    out.write("budget.txt", kv_text);
    out.write("budget.json", js_text);
    out.write_manifest("estimate-params", resolved,
                       json::array({"beam area is pi * spot_radius^2",
                                    "printed and standard transition-moment formulas are both reported"}),
                       start);
    std::cout << kv_text;
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Unsharp qubit measurements: compilation to ion-trap pulse programs, error budgets and "
                 "Monte-Carlo experiments"};
    app.set_version_flag("--version", std::string(unsharp_version()));
    app.require_subcommand(1);

    CompileArgs compile_args;
    auto *compile = app.add_subcommand("compile", "compile a measurement to a pulse program and verify it");
    compile->add_option("--p0", compile_args.p0, "outcome-0 weight in [0, 0.5]");
    compile->add_option("--theta", compile_args.theta, "polar angle of the measurement axis, [0, pi]");
    compile->add_option("--phi", compile_args.phi, "azimuth of the measurement axis, [0, 2 pi)");
    compile->add_option("--scheme", compile_args.scheme, "1: two-species sideband sequence; 2: same-species squeeze");
    compile->add_option("--out", compile_args.out, "output directory (created if absent)");
    compile->add_option("--config", compile_args.config, "manifest of an earlier compile run to replay");

    Common est;
    auto *estimate = app.add_subcommand("estimate", "sweep the state-estimation experiment");
    add_common(estimate, est, true);
    estimate->footer(help_footer("estimation"));

    Common prep;
    auto *prepare = app.add_subcommand("prepare", "sweep the measurement-only preparation experiment");
    add_common(prepare, prep, true);
    prepare->footer(help_footer("preparation"));

    Common params;
    auto *estimate_params = app.add_subcommand("estimate-params", "evaluate an error-budget chain");
    add_common(estimate_params, params, true);
    estimate_params->footer(help_footer("budget"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*compile) {
            return run_compile(compile_args);
        }
        if (*estimate) {
            return run_sweep_command("estimate", est);
        }
        if (*prepare) {
            return run_sweep_command("prepare", prep);
        }
        return run_params(params);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
