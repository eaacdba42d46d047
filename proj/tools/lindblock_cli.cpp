// lindblock_cli.cpp — Command-line front end over the lindblock C API

#include "lindblock.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // validation, parse, I/O, evaluation failures
constexpr int kExitUsage = 2;

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { lb_string_free(value); }
};

struct ModelGuard {
    lb_model* handle = nullptr;
    ~ModelGuard() { lb_model_free(handle); }
};

int report_error(const std::string& context) {
    std::cerr << "lindblock: " << context << ": " << lb_last_error() << "\n";
    return kExitFailure;
}

bool write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return true;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "lindblock: cannot write " << path << "\n";
        return false;
    }
    out << content;
    return true;
}

bool read_file(const std::string& path, std::string& content) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "lindblock: cannot read " << path << "\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    content = buf.str();
    return true;
}

int load_model(const std::string& path, ModelGuard& model) {
    if (lb_model_from_file(path.c_str(), &model.handle) != LB_OK)
        return report_error("loading " + path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant-subspace decomposition, constants of motion, and stationary states "
                 "of reservoir-coupled quantum systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lb_version()));

    std::string model_path;
    std::string initial_path;
    std::string out_path;
    std::string analytics_path;
    double t_max = 20.0;
    int samples = 200;
    double epsilon_s = -1.0;
    bool brute_force = false;
    bool coherences = false;

    auto add_model_option = [&](CLI::App* cmd) {
        cmd->add_option("--model", model_path, "model file (JSON)")->required();
        cmd->add_option("--epsilon-s", epsilon_s,
                        "coupling threshold (default: 1e-12 x max |S_ij|)");
    };

    auto* verify = app.add_subcommand("verify", "validate a model and print the check report");
    add_model_option(verify);
    verify->add_option("--out", out_path, "write the report here instead of stdout");

    auto* decompose =
        app.add_subcommand("decompose", "partition the eigenbasis into invariant blocks");
    add_model_option(decompose);
    decompose->add_option("--out", out_path, "write the report here instead of stdout");

    auto* coms = app.add_subcommand("coms", "enumerate the basis constants of motion");
    add_model_option(coms);
    coms->add_flag("--brute-force", brute_force,
                   "cross-check the partition against exhaustive enumeration (N <= 16)");
    coms->add_option("--out", out_path, "write the report here instead of stdout");

    auto* stationary =
        app.add_subcommand("stationary", "predict the stationary state for an initial state");
    add_model_option(stationary);
    stationary->add_option("--initial", initial_path, "initial state file (JSON)")->required();
    stationary->add_option("--out", out_path, "write the report here instead of stdout");

    auto* evolve = app.add_subcommand("evolve", "integrate the master equation");
    add_model_option(evolve);
    evolve->add_option("--initial", initial_path, "initial state file (JSON)")->required();
    evolve->add_option("--t-max", t_max, "final time")->check(CLI::PositiveNumber);
    evolve->add_option("--samples", samples, "number of grid steps")->check(CLI::PositiveNumber);
    evolve->add_flag("--coherences", coherences, "track and emit coherence magnitudes");
    evolve->add_option("--out", out_path, "trajectory CSV path")->required();
    evolve->add_option("--summary", analytics_path,
                       "write the JSON summary here instead of stdout");

    auto* example = app.add_subcommand("example", "emit a builtin example model");
    std::string kind;
    double omega1 = 1.0, omega2 = 1.0, rabi = 0.5, asymmetry = 0.5, lambda = 2.0,
           temperature = 1.0, g0 = 1.0;
    example->add_option("kind", kind, "example family (two-tls)")->required();
    example->add_option("--omega1", omega1, "first transition frequency");
    example->add_option("--omega2", omega2, "second transition frequency");
    example->add_option("--rabi", rabi, "interaction constant (0 for non-interacting)");
    example->add_option("--asymmetry", asymmetry, "reservoir coupling ratio a");
    example->add_option("--lambda", lambda, "system-reservoir coupling strength");
    example->add_option("--temperature", temperature, "reservoir temperature");
    example->add_option("--g0", g0, "flat reservoir level");
    example->add_option("--out", out_path, "model file path (default: stdout)");
    example->add_option("--analytics", analytics_path,
                        "companion analytics path (default: derived from --out)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    if (verify->parsed()) {
        ModelGuard model;
        if (int rc = load_model(model_path, model)) return rc;
        StringGuard report;
        const lb_status status = lb_verify_report(model.handle, &report.value);
        if (report.value && !write_output(out_path, report.value)) return kExitFailure;
        if (status == LB_OK) return kExitOk;
        if (!report.value) return report_error("verify");
        std::cerr << "lindblock: verify: " << lb_last_error() << "\n";
        return kExitFailure;
    }

    if (decompose->parsed()) {
        ModelGuard model;
        if (int rc = load_model(model_path, model)) return rc;
        StringGuard report;
        if (lb_partition_report(model.handle, epsilon_s, &report.value) != LB_OK)
            return report_error("decompose");
        return write_output(out_path, report.value) ? kExitOk : kExitFailure;
    }

    if (coms->parsed()) {
        ModelGuard model;
        if (int rc = load_model(model_path, model)) return rc;
        StringGuard report;
        if (lb_com_report(model.handle, epsilon_s, brute_force ? 1 : 0, &report.value) != LB_OK)
            return report_error("coms");
        return write_output(out_path, report.value) ? kExitOk : kExitFailure;
    }

    if (stationary->parsed()) {
        ModelGuard model;
        if (int rc = load_model(model_path, model)) return rc;
        std::string initial;
        if (!read_file(initial_path, initial)) return kExitFailure;
        StringGuard report;
        if (lb_stationary_report(model.handle, initial.c_str(), epsilon_s, &report.value) != LB_OK)
            return report_error("stationary");
        return write_output(out_path, report.value) ? kExitOk : kExitFailure;
    }

    if (evolve->parsed()) {
        ModelGuard model;
        if (int rc = load_model(model_path, model)) return rc;
        std::string initial;
        if (!read_file(initial_path, initial)) return kExitFailure;
        StringGuard csv, summary;
        if (lb_evolve(model.handle, initial.c_str(), t_max, samples, coherences ? 1 : 0,
                      epsilon_s, &csv.value, &summary.value) != LB_OK)
            return report_error("evolve");
        if (!write_output(out_path, csv.value)) return kExitFailure;
        return write_output(analytics_path, summary.value) ? kExitOk : kExitFailure;
    }

    if (example->parsed()) {
        if (kind != "two-tls") {
            std::cerr << "lindblock: unknown example kind \"" << kind << "\"\n";
            return kExitUsage;
        }
        StringGuard model_json, analytics_json;
        if (lb_two_tls_example(omega1, omega2, rabi, asymmetry, lambda, temperature, g0,
                               &model_json.value, &analytics_json.value) != LB_OK)
            return report_error("example two-tls");
        if (!write_output(out_path, model_json.value)) return kExitFailure;
        std::string analytics_out = analytics_path;
        if (analytics_out.empty() && !out_path.empty()) {
            analytics_out = out_path;
            const auto dot = analytics_out.rfind(".json");
            if (dot != std::string::npos && dot == analytics_out.size() - 5)
                analytics_out.resize(dot);
            analytics_out += "-analytics.json";
        }
        if (!analytics_out.empty() && !write_output(analytics_out, analytics_json.value))
            return kExitFailure;
        return kExitOk;
    }

    return kExitUsage;
}
