// capi.cpp — extern "C" surface: opaque handles, status codes, thread-local errors

#include "lindblock.h"

#include "lindblock/builtin.hpp"
#include "lindblock/coms.hpp"
#include "lindblock/decomposition.hpp"
#include "lindblock/dynamics.hpp"
#include "lindblock/model.hpp"
#include "lindblock/reports.hpp"
#include "lindblock/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <ios>
#include <new>
#include <string>

struct lb_model {
    lindblock::SystemModel model;
};

namespace {

thread_local std::string g_last_error = "no error";

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

lb_status fail(lb_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Run `body` translating exceptions to status codes.
template <typename Fn>
lb_status guarded(Fn&& body) {
    try {
        return body();
    } catch (const lindblock::ParseError& e) {
        return fail(LB_ERR_PARSE, e.what());
    } catch (const lindblock::ValidationError& e) {
        return fail(LB_ERR_VALIDATION, e.what());
    } catch (const std::ios_base::failure& e) {
        return fail(LB_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(LB_ERR_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(LB_ERR_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LB_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LB_ERR_INTERNAL, e.what());
    }
}

lb_status require(bool condition, const char* message) {
    return condition ? LB_OK : fail(LB_ERR_ARGUMENT, message);
}

}  // namespace

extern "C" {

const char* lb_version(void) { return "0.1.0"; }

const char* lb_last_error(void) { return g_last_error.c_str(); }

void lb_string_free(char* s) { delete[] s; }

lb_status lb_model_from_json(const char* json_text, lb_model** out) {
    if (require(json_text && out, "lb_model_from_json: null argument") != LB_OK)
        return LB_ERR_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        auto handle = new lb_model{lindblock::load_model(json_text)};
        *out = handle;
        return LB_OK;
    });
}

lb_status lb_model_from_file(const char* path, lb_model** out) {
    if (require(path && out, "lb_model_from_file: null argument") != LB_OK)
        return LB_ERR_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        auto handle = new lb_model{lindblock::load_model_file(path)};
        *out = handle;
        return LB_OK;
    });
}

void lb_model_free(lb_model* model) { delete model; }

int lb_model_dim(const lb_model* model) {
    return model ? static_cast<int>(model->model.dim()) : 0;
}

lb_status lb_verify_report(const lb_model* model, char** json_out) {
    if (require(model && json_out, "lb_verify_report: null argument") != LB_OK)
        return LB_ERR_ARGUMENT;
    *json_out = nullptr;
    return guarded([&] {
        const auto report = lindblock::validate(model->model);
        *json_out = copy_string(lindblock::validation_report_json(model->model, report));
        if (!report.all_passed())
            return fail(LB_ERR_VALIDATION, "model validation reported failing checks");
        return LB_OK;
    });
}

lb_status lb_partition_report(const lb_model* model, double epsilon_s, char** json_out) {
    if (require(model && json_out, "lb_partition_report: null argument") != LB_OK)
        return LB_ERR_ARGUMENT;
    *json_out = nullptr;
    return guarded([&] {
        const auto eig = lindblock::eigenbasis(model->model);
        const auto part = lindblock::invariant_partition(eig, epsilon_s);
        *json_out = copy_string(lindblock::partition_report_json(eig, part));
        return LB_OK;
    });
}

lb_status lb_com_report(const lb_model* model, double epsilon_s, int with_brute_force,
                        char** json_out) {
    if (require(model && json_out, "lb_com_report: null argument") != LB_OK)
        return LB_ERR_ARGUMENT;
    *json_out = nullptr;
    return guarded([&] {
        const auto eig = lindblock::eigenbasis(model->model);
        const auto part = lindblock::invariant_partition(eig, epsilon_s);
        lindblock::ComReportOptions options;
        options.with_brute_force = with_brute_force != 0;
        // Attach the named two-TLS observables when the four-level layout fits.
        options.two_tls_named = eig.dim() == 4;
        options.interacting =
            std::any_of(part.blocks.begin(), part.blocks.end(),
                        [](const auto& block) { return block.size() > 1; });
        *json_out = copy_string(lindblock::com_report_json(model->model, eig, part, options));
        return LB_OK;
    });
}

lb_status lb_stationary_report(const lb_model* model, const char* initial_json,
                               double epsilon_s, char** json_out) {
    if (require(model && initial_json && json_out, "lb_stationary_report: null argument") != LB_OK)
        return LB_ERR_ARGUMENT;
    *json_out = nullptr;
    return guarded([&] {
        const auto eig = lindblock::eigenbasis(model->model);
        const auto part = lindblock::invariant_partition(eig, epsilon_s);
        const auto rho0 = lindblock::load_initial_state(initial_json, eig.dim());
        const auto prediction =
            lindblock::stationary_state(eig, part, model->model.temperature, rho0);
        const auto rates =
            lindblock::rate_matrix(eig, model->model.reservoir, model->model.temperature,
                                   model->model.coupling_strength, epsilon_s);
        const auto oracle = lindblock::null_space_stationary(rates, part);
        *json_out = copy_string(
            lindblock::stationary_report_json(part, rates, prediction, oracle));
        return LB_OK;
    });
}

lb_status lb_evolve(const lb_model* model, const char* initial_json, double t_max, int samples,
                    int with_coherences, double epsilon_s, char** csv_out,
                    char** summary_json_out) {
    if (require(model && initial_json && csv_out && summary_json_out,
                "lb_evolve: null argument") != LB_OK)
        return LB_ERR_ARGUMENT;
    *csv_out = nullptr;
    *summary_json_out = nullptr;
    return guarded([&] {
        const auto eig = lindblock::eigenbasis(model->model);
        const auto part = lindblock::invariant_partition(eig, epsilon_s);
        const auto rho0 = lindblock::load_initial_state(initial_json, eig.dim());
        const auto times = lindblock::time_grid(t_max, samples);
        const auto trajectory = lindblock::evolve_density(model->model, rho0, times);
        const auto prediction =
            lindblock::stationary_state(eig, part, model->model.temperature, rho0);

        lindblock::EvolveSummary summary;
        summary.t_max = t_max;
        summary.samples = samples;
        const Eigen::VectorXd initial_weights = lindblock::block_weights(part, rho0);
        for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
            summary.max_trace_drift = std::max(
                summary.max_trace_drift, std::abs(trajectory.populations[k].sum() - 1.0));
            Eigen::VectorXd weights =
                Eigen::VectorXd::Zero(static_cast<Eigen::Index>(part.blocks.size()));
            for (std::size_t l = 0; l < part.blocks.size(); ++l)
                for (int i : part.blocks[l])
                    weights(static_cast<Eigen::Index>(l)) += trajectory.populations[k](i);
            summary.max_block_weight_drift =
                std::max(summary.max_block_weight_drift,
                         (weights - initial_weights).cwiseAbs().maxCoeff());
        }
        summary.stationary_l1_distance =
            (trajectory.states.back() - prediction.assembled.matrix).cwiseAbs().sum();

        *csv_out = copy_string(lindblock::trajectory_csv(trajectory, with_coherences != 0));
        *summary_json_out =
            copy_string(lindblock::evolve_summary_json(trajectory, part, prediction, summary));
        return LB_OK;
    });
}

lb_status lb_two_tls_example(double omega1, double omega2, double rabi, double asymmetry,
                             double lambda, double temperature, double g0,
                             char** model_json_out, char** analytics_json_out) {
    if (require(model_json_out && analytics_json_out,
                "lb_two_tls_example: null argument") != LB_OK)
        return LB_ERR_ARGUMENT;
    *model_json_out = nullptr;
    *analytics_json_out = nullptr;
    return guarded([&] {
        lindblock::TwoTlsSpec spec;
        spec.omega1 = omega1;
        spec.omega2 = omega2;
        spec.rabi = rabi;
        spec.asymmetry = asymmetry;
        spec.coupling_strength = lambda;
        spec.temperature = temperature;
        spec.g0 = g0;
        const auto model = lindblock::two_tls_model(spec);
        const auto analytics = lindblock::two_tls_analytics(spec);
        *model_json_out = copy_string(lindblock::model_to_json(model));
        *analytics_json_out = copy_string(lindblock::two_tls_analytics_json(spec, analytics));
        return LB_OK;
    });
}

}  // extern "C"
