// reports.cpp — Deterministic report rendering (fixed key order, 12-significant-digit floats)

#include "lindblock/reports.hpp"

#include "json_matrix.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lindblock {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    if (std::isnan(value)) return "null";
    if (std::isinf(value)) return value > 0 ? "1e308" : "-1e308";
    if (value == 0.0) return "0";  // fold away negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void dump_canonical(const ordered_json& node, std::ostringstream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (node.type()) {
        case ordered_json::value_t::object: {
            if (node.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (auto it = node.begin(); it != node.end(); ++it) {
                if (!first) out << ",\n";
                first = false;
                out << pad_in << ordered_json(it.key()).dump() << ": ";
                dump_canonical(it.value(), out, indent + 1);
            }
            out << "\n" << pad << "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (node.empty()) {
                out << "[]";
                return;
            }
            // Scalar-only arrays stay on one line; nested ones get one row each.
            bool scalar_only = true;
            for (const auto& item : node)
                if (item.is_structured()) scalar_only = false;
            if (scalar_only) {
                out << "[";
                bool first = true;
                for (const auto& item : node) {
                    if (!first) out << ", ";
                    first = false;
                    dump_canonical(item, out, indent);
                }
                out << "]";
                return;
            }
            out << "[\n";
            bool first = true;
            for (const auto& item : node) {
                if (!first) out << ",\n";
                first = false;
                out << pad_in;
                dump_canonical(item, out, indent + 1);
            }
            out << "\n" << pad << "]";
            return;
        }
        case ordered_json::value_t::number_float:
            out << format_double(node.get<double>());
            return;
        default:
            out << node.dump();
            return;
    }
}

std::string dump(const ordered_json& doc) {
    std::ostringstream out;
    dump_canonical(doc, out, 0);
    out << "\n";
    return out.str();
}

ordered_json real_vector(const Eigen::VectorXd& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

ordered_json complex_matrix(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(ordered_json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Indices shown to users are 1-based.
ordered_json one_based(const std::vector<int>& indices) {
    ordered_json arr = ordered_json::array();
    for (int i : indices) arr.push_back(i + 1);
    return arr;
}

ordered_json blocks_one_based(const SubspacePartition& part) {
    ordered_json arr = ordered_json::array();
    for (const auto& block : part.blocks) arr.push_back(one_based(block));
    return arr;
}

ordered_json reservoir_json(const SpectralFunction& reservoir) {
    ordered_json node;
    switch (reservoir.family()) {
        case SpectralFamily::FlatKms:
            node["family"] = "flat-kms";
            node["g0"] = reservoir.g0();
            break;
        case SpectralFamily::OhmicThermal:
            node["family"] = "ohmic-thermal";
            node["eta"] = reservoir.eta();
            node["omega_c"] = reservoir.omega_c();
            break;
        case SpectralFamily::Tabulated: {
            node["family"] = "tabulated";
            ordered_json samples = ordered_json::array();
            for (const auto& [w, g] : reservoir.samples())
                samples.push_back(ordered_json::array({w, g}));
            node["samples"] = std::move(samples);
            node["interpolation"] = "linear";
            break;
        }
    }
    return node;
}

double clip_roundoff(double p) { return (p < 0.0 && p > -1e-12) ? 0.0 : p; }

}  // namespace

DensityState load_initial_state(const std::string& json_text, Eigen::Index expected_dim) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("initial state document: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("initial state document: top level must be an object");

    DensityState state;
    if (doc.contains("populations")) {
        const auto& pops = doc["populations"];
        if (!pops.is_array() || pops.empty())
            throw ParseError("initial state: populations must be a non-empty array");
        const auto n = static_cast<Eigen::Index>(pops.size());
        state.matrix = Matrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!pops[static_cast<std::size_t>(i)].is_number())
                throw ParseError("initial state: populations must be numbers");
            state.matrix(i, i) = pops[static_cast<std::size_t>(i)].get<double>();
        }
    } else if (doc.contains("matrix")) {
        state.matrix = detail::parse_complex_matrix(doc["matrix"], "initial state matrix");
    } else {
        throw ParseError("initial state document: expected \"matrix\" or \"populations\"");
    }
    if (expected_dim > 0 && state.matrix.rows() != expected_dim)
        throw ValidationError("initial state: dimension differs from the model");
    check_density_state(state);
    return state;
}

DensityState load_initial_state_file(const std::string& path, Eigen::Index expected_dim) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open initial state file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_initial_state(buf.str(), expected_dim);
}

std::string model_to_json(const SystemModel& model) {
    ordered_json doc;
    doc["hamiltonian"] = complex_matrix(model.hamiltonian);
    doc["coupling_operator"] = complex_matrix(model.coupling_operator);
    doc["coupling_strength"] = model.coupling_strength;
    doc["temperature"] = model.temperature;
    doc["reservoir"] = reservoir_json(model.reservoir);
    doc["tolerances"] = {{"hermiticity", model.tolerances.hermiticity},
                         {"degeneracy", model.tolerances.degeneracy}};
    return dump(doc);
}

std::string validation_report_json(const SystemModel& model, const ValidationReport& report) {
    ordered_json doc;
    doc["report"] = "verify";
    doc["dimension"] = static_cast<int>(model.dim());
    ordered_json checks = ordered_json::array();
    for (const auto& check : report.checks) {
        ordered_json node;
        node["name"] = check.name;
        node["passed"] = check.passed;
        node["residual"] = check.residual;
        if (!check.detail.empty()) node["detail"] = check.detail;
        checks.push_back(std::move(node));
    }
    doc["checks"] = std::move(checks);
    doc["all_passed"] = report.all_passed();
    doc["tolerances"] = {{"hermiticity", model.tolerances.hermiticity},
                         {"degeneracy", model.tolerances.degeneracy}};
    return dump(doc);
}

std::string partition_report_json(const EigenSystem& eig, const SubspacePartition& part) {
    ordered_json doc;
    doc["report"] = "decompose";
    doc["blocks"] = blocks_one_based(part);
    ordered_json sizes = ordered_json::array();
    for (int s : part.block_sizes()) sizes.push_back(s);
    doc["block_sizes"] = std::move(sizes);
    doc["permutation"] = one_based(part.permutation);
    doc["epsilon_s"] = part.epsilon_s;
    doc["max_off_block_magnitude"] = max_off_block_magnitude(eig, part);
    doc["frequencies"] = real_vector(eig.frequencies);
    return dump(doc);
}

std::string com_report_json(const SystemModel& model, const EigenSystem& eig,
                            const SubspacePartition& part, const ComReportOptions& options) {
    const ComBasis basis = basis_projectors(part);
    ordered_json doc;
    doc["report"] = "coms";

    ordered_json projectors = ordered_json::array();
    ordered_json condition = ordered_json::array();
    ordered_json lindblad = ordered_json::array();
    for (std::size_t l = 0; l < basis.projectors.size(); ++l) {
        projectors.push_back(
            {{"block", static_cast<int>(l) + 1}, {"values", real_vector(basis.projectors[l].values)}});
        condition.push_back(com_condition_residual(eig, basis.projectors[l]));
        lindblad.push_back(lindblad_residual(eig, model.reservoir, model.temperature,
                                             model.coupling_strength, basis.projectors[l]));
    }
    doc["projectors"] = std::move(projectors);
    doc["independent_count"] = basis.independent_count;
    doc["residuals"] = {{"condition", std::move(condition)}, {"lindblad", std::move(lindblad)}};

    ordered_json named = ordered_json::array();
    if (options.two_tls_named) {
        try {
            for (const auto& com : named_coms_two_tls(eig, part, options.interacting))
                named.push_back(
                    {{"name", com.name}, {"values", real_vector(com.observable.values)}});
        } catch (const ValidationError&) {
            // Not a two-TLS layout after all; the named section stays empty.
        }
    }
    doc["named"] = std::move(named);

    if (options.with_brute_force) {
        const SubspacePartition atoms = brute_force_com_atoms(eig);
        doc["brute_force"] = {{"atoms", blocks_one_based(atoms)},
                              {"matches_partition", atoms.blocks == part.blocks},
                              {"tolerance", default_com_tolerance(eig)}};
    }
    doc["tolerances"] = {{"epsilon_s", part.epsilon_s},
                         {"com_acceptance", default_com_tolerance(eig)}};
    return dump(doc);
}

std::string stationary_report_json(const SubspacePartition& part, const RateMatrix& rates,
                                   const StationaryPrediction& prediction,
                                   const std::vector<Eigen::VectorXd>& oracle_distributions) {
    ordered_json doc;
    doc["report"] = "stationary";
    doc["weights"] = real_vector(prediction.weights);
    ordered_json blocks = ordered_json::array();
    for (const auto& dist : prediction.block_gibbs) blocks.push_back(real_vector(dist));
    doc["block_distributions"] = std::move(blocks);
    doc["assembled_populations"] = real_vector(prediction.assembled_populations());

    const Eigen::VectorXd derivative =
        population_derivative(rates, prediction.assembled_populations());
    doc["fixed_point_residual"] = derivative.cwiseAbs().maxCoeff();

    double oracle_distance = 0.0;
    for (std::size_t l = 0; l < oracle_distributions.size() && l < prediction.block_gibbs.size();
         ++l)
        oracle_distance = std::max(
            oracle_distance,
            (oracle_distributions[l] - prediction.block_gibbs[l]).cwiseAbs().maxCoeff());
    doc["oracle_distance"] = oracle_distance;
    doc["blocks"] = blocks_one_based(part);
    doc["tolerances"] = {{"epsilon_s", part.epsilon_s}, {"kernel_threshold_relative", 1e-10}};
    return dump(doc);
}

std::string trajectory_csv(const Trajectory& trajectory, bool with_coherences) {
    if (trajectory.populations.empty()) throw std::invalid_argument("trajectory_csv: empty run");
    const auto n = trajectory.populations.front().size();
    std::ostringstream out;
    out << "t";
    for (Eigen::Index i = 0; i < n; ++i) out << ",p_" << (i + 1);
    if (with_coherences) {
        if (!trajectory.has_states())
            throw std::invalid_argument("trajectory_csv: run carries no coherence data");
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = i + 1; j < n; ++j)
                out << ",abs_rho_" << (i + 1) << "_" << (j + 1);
    }
    out << "\n";
    for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
        out << format_double(trajectory.times[k]);
        for (Eigen::Index i = 0; i < n; ++i)
            out << "," << format_double(clip_roundoff(trajectory.populations[k](i)));
        if (with_coherences)
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = i + 1; j < n; ++j)
                    out << "," << format_double(std::abs(trajectory.states[k](i, j)));
        out << "\n";
    }
    return out.str();
}

std::string evolve_summary_json(const Trajectory& trajectory, const SubspacePartition& part,
                                const StationaryPrediction& prediction,
                                const EvolveSummary& summary) {
    ordered_json doc;
    doc["report"] = "evolve";
    doc["t_max"] = summary.t_max;
    doc["samples"] = summary.samples;

    ordered_json final_state;
    Eigen::VectorXd final_populations = trajectory.populations.back();
    for (Eigen::Index i = 0; i < final_populations.size(); ++i)
        final_populations(i) = clip_roundoff(final_populations(i));
    final_state["populations"] = real_vector(final_populations);
    if (trajectory.has_states()) final_state["matrix"] = complex_matrix(trajectory.states.back());
    doc["final_state"] = std::move(final_state);

    doc["max_trace_drift"] = summary.max_trace_drift;
    doc["max_block_weight_drift"] = summary.max_block_weight_drift;
    doc["stationary_l1_distance"] = summary.stationary_l1_distance;
    doc["predicted_stationary_populations"] = real_vector(prediction.assembled_populations());
    doc["blocks"] = blocks_one_based(part);
    doc["tolerances"] = {{"epsilon_s", part.epsilon_s}, {"integrator_relative", 1e-9}};
    return dump(doc);
}

std::string two_tls_analytics_json(const TwoTlsSpec& spec, const TwoTlsAnalytics& analytics) {
    ordered_json doc;
    doc["report"] = "two-tls-analytics";
    doc["spec"] = {{"omega1", spec.omega1},
                   {"omega2", spec.omega2},
                   {"rabi", spec.rabi},
                   {"asymmetry", spec.asymmetry},
                   {"coupling_strength", spec.coupling_strength},
                   {"temperature", spec.temperature},
                   {"g0", spec.g0}};
    doc["energies"] = ordered_json::array({analytics.energies[0], analytics.energies[1],
                                           analytics.energies[2], analytics.energies[3]});
    doc["mixing_angle"] = analytics.mixing_angle;
    doc["psi3_coefficients"] = ordered_json::array({analytics.psi3_coeff[0], analytics.psi3_coeff[1]});
    doc["psi4_coefficients"] = ordered_json::array({analytics.psi4_coeff[0], analytics.psi4_coeff[1]});
    return dump(doc);
}

}  // namespace lindblock
