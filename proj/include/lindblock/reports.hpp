// reports.hpp — Canonical JSON/CSV serialization of models, partitions, and runs

#pragma once

#include "lindblock/builtin.hpp"
#include "lindblock/coms.hpp"
#include "lindblock/decomposition.hpp"
#include "lindblock/dynamics.hpp"
#include "lindblock/model.hpp"
#include "lindblock/stationary.hpp"

#include <string>
#include <vector>

namespace lindblock {

// All report indices are 1-based to match the block numbering used in the
// documentation; all floating-point numbers are printed with 12 significant
// digits so identical inputs give byte-identical reports.

std::string model_to_json(const SystemModel& model);

// Initial-state document: either {"matrix": [[[re, im], ...], ...]} in the
// model matrix encoding or the diagonal shorthand {"populations": [...]}.
// Components refer to the eigenbasis. Validates the density-state invariants.
DensityState load_initial_state(const std::string& json_text, Eigen::Index expected_dim);
DensityState load_initial_state_file(const std::string& path, Eigen::Index expected_dim);

std::string validation_report_json(const SystemModel& model, const ValidationReport& report);

std::string partition_report_json(const EigenSystem& eig, const SubspacePartition& part);

struct ComReportOptions {
    bool with_brute_force = false;
    bool two_tls_named = false;   // attach the named two-TLS observables
    bool interacting = false;     // picks the named set when two_tls_named
};

std::string com_report_json(const SystemModel& model, const EigenSystem& eig,
                            const SubspacePartition& part, const ComReportOptions& options);

std::string stationary_report_json(const SubspacePartition& part, const RateMatrix& rates,
                                   const StationaryPrediction& prediction,
                                   const std::vector<Eigen::VectorXd>& oracle_distributions);

// Header t,p_1,...,p_N and, when coherences are tracked, abs_rho_i_j columns
// for every pair i < j. Populations below zero by roundoff (> -1e-12) are
// clipped to 0 in the output only.
std::string trajectory_csv(const Trajectory& trajectory, bool with_coherences);

struct EvolveSummary {
    double t_max = 0.0;
    int samples = 0;
    double max_trace_drift = 0.0;
    double max_block_weight_drift = 0.0;
    double stationary_l1_distance = 0.0;  // entrywise L1 to the predicted stationary state
};

std::string evolve_summary_json(const Trajectory& trajectory, const SubspacePartition& part,
                                const StationaryPrediction& prediction, const EvolveSummary& summary);

std::string two_tls_analytics_json(const TwoTlsSpec& spec, const TwoTlsAnalytics& analytics);

}  // namespace lindblock
