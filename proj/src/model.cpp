// model.cpp — Model loading, spectral functions, eigenbasis construction, validation

#include "lindblock/model.hpp"

#include "json_matrix.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace lindblock {

namespace {

using json = nlohmann::json;
using detail::parse_complex_matrix;

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const Matrix& m) {
    const double scale = max_abs(m);
    if (scale == 0.0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

Matrix parse_hamiltonian(const json& node) {
    if (node.is_object()) {
        if (!node.contains("diagonal") || !node["diagonal"].is_array())
            throw ParseError("hamiltonian: object form must carry a \"diagonal\" array");
        const auto& diag = node["diagonal"];
        if (diag.empty()) throw ParseError("hamiltonian: diagonal must not be empty");
        Matrix out = Matrix::Zero(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            if (!diag[i].is_number())
                throw ParseError("hamiltonian: diagonal entries must be real numbers");
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
                diag[i].get<double>();
        }
        return out;
    }
    return parse_complex_matrix(node, "hamiltonian");
}

SpectralFunction parse_reservoir(const json& node) {
    if (!node.is_object() || !node.contains("family") || !node["family"].is_string())
        throw ParseError("reservoir: expected an object with a \"family\" string");
    const std::string family = node["family"].get<std::string>();
    auto number = [&](const char* key) {
        if (!node.contains(key) || !node[key].is_number())
            throw ParseError(std::string("reservoir: family \"") + family +
                             "\" requires a numeric \"" + key + "\"");
        return node[key].get<double>();
    };
    if (family == "flat-kms") return SpectralFunction::flat_kms(number("g0"));
    if (family == "ohmic-thermal")
        return SpectralFunction::ohmic_thermal(number("eta"), number("omega_c"));
    if (family == "tabulated") {
        if (!node.contains("samples") || !node["samples"].is_array())
            throw ParseError("reservoir: tabulated family requires a \"samples\" array");
        std::vector<std::pair<double, double>> samples;
        for (const auto& s : node["samples"]) {
            if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number())
                throw ParseError("reservoir: each sample must be an [omega, G] pair");
            samples.emplace_back(s[0].get<double>(), s[1].get<double>());
        }
        if (node.contains("interpolation") && node["interpolation"] != "linear")
            throw ParseError("reservoir: only linear interpolation is supported");
        return SpectralFunction::tabulated(std::move(samples));
    }
    throw ParseError("reservoir: unknown family \"" + family + "\"");
}

}  // namespace

SpectralFunction SpectralFunction::flat_kms(double g0) {
    if (!(g0 > 0.0)) throw ValidationError("flat-kms reservoir: g0 must be positive");
    SpectralFunction f;
    f.family_ = SpectralFamily::FlatKms;
    f.g0_ = g0;
    return f;
}

SpectralFunction SpectralFunction::ohmic_thermal(double eta, double omega_c) {
    if (!(eta > 0.0) || !(omega_c > 0.0))
        throw ValidationError("ohmic-thermal reservoir: eta and omega_c must be positive");
    SpectralFunction f;
    f.family_ = SpectralFamily::OhmicThermal;
    f.eta_ = eta;
    f.omega_c_ = omega_c;
    return f;
}

SpectralFunction SpectralFunction::tabulated(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2)
        throw ValidationError("tabulated reservoir: need at least two samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].first >= 0.0))
            throw ValidationError("tabulated reservoir: sample frequencies must be >= 0");
        if (!(samples[i].second >= 0.0))
            throw ValidationError("tabulated reservoir: sample values must be >= 0");
        if (i > 0 && !(samples[i].first > samples[i - 1].first))
            throw ValidationError("tabulated reservoir: frequencies must increase strictly");
    }
    SpectralFunction f;
    f.family_ = SpectralFamily::Tabulated;
    f.samples_ = std::move(samples);
    return f;
}

SpectralFunction SpectralFunction::tabulated_raw(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2)
        throw ValidationError("tabulated reservoir: need at least two samples");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].first > samples[i - 1].first))
            throw ValidationError("tabulated reservoir: frequencies must increase strictly");
    SpectralFunction f;
    f.family_ = SpectralFamily::Tabulated;
    f.samples_ = std::move(samples);
    f.raw_ = true;
    return f;
}

double SpectralFunction::value(double omega, double temperature) const {
    if (!(temperature > 0.0))
        throw std::invalid_argument("spectral function: temperature must be positive");
    if (!raw_ && omega < 0.0) return std::exp(omega / temperature) * value(-omega, temperature);
    switch (family_) {
        case SpectralFamily::FlatKms:
            return g0_;
        case SpectralFamily::OhmicThermal: {
            // η·ω·e^{-ω/ω_c} / (1 - e^{-ω/T}); the ω → 0 limit is η·T.
            if (omega == 0.0) return eta_ * temperature;
            const double denom = -std::expm1(-omega / temperature);
            return eta_ * omega * std::exp(-omega / omega_c_) / denom;
        }
        case SpectralFamily::Tabulated: {
            const double lo = samples_.front().first;
            const double hi = samples_.back().first;
            if (omega < lo || omega > hi) {
                std::ostringstream msg;
                msg << "tabulated spectral function queried at omega = " << omega
                    << ", outside the table range [" << lo << ", " << hi
                    << "] and no extrapolation rule is configured";
                throw std::domain_error(msg.str());
            }
            auto it = std::lower_bound(samples_.begin(), samples_.end(), omega,
                                       [](const auto& s, double w) { return s.first < w; });
            if (it == samples_.begin()) return it->second;
            const auto& [w1, g1] = *it;
            const auto& [w0, g0] = *(it - 1);
            const double f = (omega - w0) / (w1 - w0);
            return g0 + f * (g1 - g0);
        }
    }
    throw std::logic_error("spectral function: unreachable family");
}

double spectral_value(const SpectralFunction& reservoir, double temperature, double omega) {
    return reservoir.value(omega, temperature);
}

void check_model(const SystemModel& model) {
    const auto n = model.hamiltonian.rows();
    if (n < 1 || model.hamiltonian.cols() != n)
        throw ValidationError("model: hamiltonian must be square with N >= 1");
    if (model.coupling_operator.rows() != n || model.coupling_operator.cols() != n)
        throw ValidationError("model: coupling operator dimension differs from the hamiltonian");
    if (!(model.temperature > 0.0)) throw ValidationError("model: temperature must be positive");
    if (!(model.coupling_strength >= 0.0))
        throw ValidationError("model: coupling strength must be non-negative");
    const double eps = model.tolerances.hermiticity;
    const double rh = hermiticity_residual(model.hamiltonian);
    if (rh > eps) {
        std::ostringstream msg;
        msg << "model: hamiltonian is not Hermitian (relative residual " << rh
            << " > tolerance " << eps << ")";
        throw ValidationError(msg.str());
    }
    const double rs = hermiticity_residual(model.coupling_operator);
    if (rs > eps) {
        std::ostringstream msg;
        msg << "model: coupling operator is not Hermitian (relative residual " << rs
            << " > tolerance " << eps << ")";
        throw ValidationError(msg.str());
    }
}

SystemModel load_model(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("model document: top level must be an object");
    for (const char* key : {"hamiltonian", "coupling_operator", "temperature", "reservoir"})
        if (!doc.contains(key))
            throw ParseError(std::string("model document: missing key \"") + key + "\"");

    SystemModel model;
    model.hamiltonian = parse_hamiltonian(doc["hamiltonian"]);
    model.coupling_operator = parse_complex_matrix(doc["coupling_operator"], "coupling_operator");
    if (!doc["temperature"].is_number()) throw ParseError("temperature: expected a number");
    model.temperature = doc["temperature"].get<double>();
    if (doc.contains("coupling_strength")) {
        if (!doc["coupling_strength"].is_number())
            throw ParseError("coupling_strength: expected a number");
        model.coupling_strength = doc["coupling_strength"].get<double>();
    }
    model.reservoir = parse_reservoir(doc["reservoir"]);
    if (doc.contains("tolerances")) {
        const auto& tol = doc["tolerances"];
        if (!tol.is_object()) throw ParseError("tolerances: expected an object");
        if (tol.contains("hermiticity")) model.tolerances.hermiticity = tol["hermiticity"].get<double>();
        if (tol.contains("degeneracy")) model.tolerances.degeneracy = tol["degeneracy"].get<double>();
        if (!(model.tolerances.hermiticity > 0.0) || !(model.tolerances.degeneracy > 0.0))
            throw ValidationError("tolerances: values must be positive");
    }
    check_model(model);
    return model;
}

SystemModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_model(buf.str());
}

namespace {

// Gap check shared by both diagonalization paths. Levels are reported 1-based.
void check_nondegenerate(const Eigen::VectorXd& freqs, double degeneracy_tol) {
    const auto n = freqs.size();
    if (n < 2) return;
    const double range = freqs(n - 1) - freqs(0);
    const double eps = degeneracy_tol * range;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const double gap = freqs(i + 1) - freqs(i);
        if (gap <= eps) {
            std::ostringstream msg;
            msg << "degenerate spectrum: levels " << (i + 1) << " and " << (i + 2)
                << " collide (omega = " << freqs(i) << " vs " << freqs(i + 1) << ", gap "
                << gap << " <= " << eps << ")";
            throw ValidationError(msg.str());
        }
    }
}

}  // namespace

EigenSystem eigenbasis(const SystemModel& model) {
    check_model(model);
    const auto n = model.dim();
    EigenSystem eig;
    eig.tolerances = model.tolerances;

    Matrix offdiag = model.hamiltonian;
    offdiag.diagonal().setZero();
    const bool already_diagonal = max_abs(offdiag) == 0.0;

    if (already_diagonal) {
        // Reorder only: a diagonal Hamiltonian keeps its basis vectors, so the
        // transform is a permutation (the identity when already sorted).
        Eigen::VectorXd diag = model.hamiltonian.diagonal().real();
        std::vector<Eigen::Index> order(n);
        for (Eigen::Index i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](Eigen::Index a, Eigen::Index b) { return diag(a) < diag(b); });
        eig.frequencies.resize(n);
        eig.basis_transform = Matrix::Zero(n, n);
        for (Eigen::Index p = 0; p < n; ++p) {
            eig.frequencies(p) = diag(order[p]);
            eig.basis_transform(p, order[p]) = 1.0;
        }
    } else {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(model.hamiltonian);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("eigenbasis: eigendecomposition failed");
        eig.frequencies = solver.eigenvalues();
        eig.basis_transform = solver.eigenvectors().adjoint();
    }

    check_nondegenerate(eig.frequencies, model.tolerances.degeneracy);

    eig.coupling_in_eigenbasis =
        eig.basis_transform * model.coupling_operator * eig.basis_transform.adjoint();
    // Restore the Hermitian symmetry lost to rounding so |S_ij| = |S_ji| exactly.
    eig.coupling_in_eigenbasis =
        ((eig.coupling_in_eigenbasis + eig.coupling_in_eigenbasis.adjoint()) / 2.0).eval();
    return eig;
}

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.passed; });
}

ValidationReport validate(const SystemModel& model) {
    ValidationReport report;
    const double eps_h = model.tolerances.hermiticity;

    const double rh = hermiticity_residual(model.hamiltonian);
    report.checks.push_back({"hamiltonian_hermiticity", rh <= eps_h, rh, ""});
    const double rs = hermiticity_residual(model.coupling_operator);
    report.checks.push_back({"coupling_hermiticity", rs <= eps_h, rs, ""});

    // Non-degeneracy: residual is the smallest gap relative to the spectral
    // range (0 for N = 1, which passes vacuously).
    std::vector<double> bohr;  // positive Bohr frequencies for the G checks
    {
        ValidationCheck check{"spectral_nondegeneracy", true, 0.0, ""};
        try {
            Eigen::SelfAdjointEigenSolver<Matrix> solver(model.hamiltonian);
            const Eigen::VectorXd freqs = solver.eigenvalues();
            const auto n = freqs.size();
            if (n >= 2) {
                const double range = freqs(n - 1) - freqs(0);
                double min_gap = std::numeric_limits<double>::infinity();
                for (Eigen::Index i = 0; i + 1 < n; ++i)
                    min_gap = std::min(min_gap, freqs(i + 1) - freqs(i));
                check.residual = range > 0.0 ? min_gap / range : 0.0;
                check.passed = range > 0.0 && min_gap > model.tolerances.degeneracy * range;
                for (Eigen::Index i = 0; i < n; ++i)
                    for (Eigen::Index j = i + 1; j < n; ++j)
                        if (freqs(j) - freqs(i) > 0.0) bohr.push_back(freqs(j) - freqs(i));
            }
        } catch (const std::exception& e) {
            check.passed = false;
            check.detail = e.what();
        }
        report.checks.push_back(std::move(check));
    }

    // Sample G at the model's own Bohr frequencies when it has any, otherwise
    // at fixed multiples of T.
    if (bohr.empty())
        bohr = {0.5 * model.temperature, model.temperature, 2.0 * model.temperature};
    {
        ValidationCheck kms{"kms_identity", true, 0.0, ""};
        ValidationCheck pos{"spectral_positivity", true, 0.0, ""};
        try {
            for (double w : bohr) {
                const double gp = model.reservoir.value(w, model.temperature);
                const double gm = model.reservoir.value(-w, model.temperature);
                const double expected = std::exp(w / model.temperature) * gm;
                const double scale = std::max({gp, expected, 1e-300});
                kms.residual = std::max(kms.residual, std::abs(gp - expected) / scale);
                pos.residual = std::max({pos.residual, -gp, -gm});
            }
            const double g_zero = model.reservoir.value(0.0, model.temperature);
            pos.residual = std::max(pos.residual, -g_zero);
            kms.passed = kms.residual <= 1e-12;
            pos.passed = pos.residual <= 0.0;
        } catch (const std::exception& e) {
            kms.passed = false;
            kms.detail = e.what();
            pos.passed = false;
            pos.detail = e.what();
        }
        report.checks.push_back(std::move(kms));
        report.checks.push_back(std::move(pos));
    }
    return report;
}

}  // namespace lindblock
