// dynamics.cpp — Rate matrix assembly and master-equation integration

#include "lindblock/dynamics.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lindblock {

RateMatrix rate_matrix(const EigenSystem& eig, const SpectralFunction& reservoir,
                       double temperature, double coupling_strength, double epsilon_s) {
    const auto n = eig.dim();
    if (!(coupling_strength >= 0.0))
        throw std::invalid_argument("rate_matrix: coupling strength must be non-negative");
    if (epsilon_s < 0.0) epsilon_s = default_coupling_threshold(eig.coupling_in_eigenbasis);
    const double lambda2 = coupling_strength * coupling_strength;
    const Matrix& s = eig.coupling_in_eigenbasis;

    RateMatrix out;
    out.rates = Eigen::MatrixXd::Zero(n, n);
    if (lambda2 == 0.0) return out;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const double magnitude = std::abs(s(j, i));
            if (magnitude <= epsilon_s) continue;  // keeps cross-block rates exactly zero
            const double g =
                reservoir.value(eig.frequencies(j) - eig.frequencies(i), temperature);
            out.rates(i, j) = lambda2 * g * magnitude * magnitude;
        }
    return out;
}

Eigen::VectorXd population_derivative(const RateMatrix& rates, const Eigen::VectorXd& p) {
    if (p.size() != rates.dim())
        throw std::invalid_argument("population_derivative: dimension mismatch");
    const Eigen::VectorXd outflow = rates.rates.colwise().sum();
    return rates.rates * p - outflow.cwiseProduct(p);
}

std::vector<double> time_grid(double t_max, int samples) {
    if (!(t_max > 0.0) || samples < 1)
        throw std::invalid_argument("time_grid: need t_max > 0 and at least one sample");
    std::vector<double> times(static_cast<std::size_t>(samples) + 1);
    for (int k = 0; k <= samples; ++k) times[static_cast<std::size_t>(k)] = t_max * k / samples;
    return times;
}

namespace {

void check_time_grid(const std::vector<double>& times) {
    if (times.empty() || times.front() != 0.0)
        throw std::invalid_argument("evolve: time grid must start at 0");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (!(times[k] > times[k - 1]))
            throw std::invalid_argument("evolve: time grid must increase strictly");
}

void check_initial_distribution(const Eigen::VectorXd& p0) {
    if (p0.minCoeff() < -1e-12)
        throw std::invalid_argument("evolve: initial populations must be non-negative");
    if (std::abs(p0.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("evolve: initial populations must sum to 1");
}

}  // namespace

Trajectory evolve_populations(const RateMatrix& rates, const Eigen::VectorXd& p0,
                              const std::vector<double>& times) {
    const auto n = rates.dim();
    if (p0.size() != n) throw std::invalid_argument("evolve_populations: dimension mismatch");
    check_time_grid(times);
    check_initial_distribution(p0);

    using state_type = std::vector<double>;
    namespace ode = boost::numeric::odeint;

    const Eigen::VectorXd outflow = rates.rates.colwise().sum();
    auto rhs = [&](const state_type& p, state_type& dp, double) {
        for (Eigen::Index i = 0; i < n; ++i) {
            double acc = -outflow(i) * p[static_cast<std::size_t>(i)];
            for (Eigen::Index j = 0; j < n; ++j)
                acc += rates.rates(i, j) * p[static_cast<std::size_t>(j)];
            dp[static_cast<std::size_t>(i)] = acc;
        }
    };

    Trajectory trajectory;
    trajectory.times = times;
    trajectory.populations.reserve(times.size());
    auto record = [&](const state_type& p, double) {
        trajectory.populations.emplace_back(
            Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size())));
    };

    state_type state(p0.data(), p0.data() + p0.size());
    const double span = times.back() - times.front();
    auto stepper = ode::make_controlled(1e-12, 1e-9, ode::runge_kutta_dopri5<state_type>());
    try {
        ode::integrate_times(stepper, rhs, state, times.begin(), times.end(),
                             std::min(span / 100.0, 0.1), record);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("evolve_populations: integration failed: ") +
                                 e.what());
    }
    return trajectory;
}

Eigen::VectorXd propagate_populations_exact(const RateMatrix& rates,
                                            const Eigen::VectorXd& frequencies,
                                            double temperature, const Eigen::VectorXd& p0,
                                            double t) {
    const auto n = rates.dim();
    if (frequencies.size() != n || p0.size() != n)
        throw std::invalid_argument("propagate_populations_exact: dimension mismatch");
    if (!(temperature > 0.0))
        throw std::invalid_argument("propagate_populations_exact: temperature must be positive");

    // Detailed balance makes D^{-1} M D symmetric for D = diag(e^{-ω/2T}), so
    // the generator diagonalizes with a self-adjoint solve.
    const double shift = frequencies.minCoeff();
    Eigen::VectorXd d(n);
    for (Eigen::Index i = 0; i < n; ++i)
        d(i) = std::exp(-(frequencies(i) - shift) / (2.0 * temperature));

    Eigen::MatrixXd generator = rates.rates;
    generator.diagonal() = -rates.rates.colwise().sum();
    Eigen::MatrixXd symmetrized =
        d.cwiseInverse().asDiagonal() * generator * d.asDiagonal();
    const double asym = (symmetrized - symmetrized.transpose()).cwiseAbs().maxCoeff();
    const double scale = std::max(symmetrized.cwiseAbs().maxCoeff(), 1e-300);
    if (asym > 1e-8 * scale)
        throw std::invalid_argument(
            "propagate_populations_exact: rates violate detailed balance");
    symmetrized = ((symmetrized + symmetrized.transpose()) / 2.0).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetrized);
    const Eigen::VectorXd decay = (solver.eigenvalues().array() * t).exp();
    const Eigen::VectorXd y = solver.eigenvectors().transpose() * (d.cwiseInverse().cwiseProduct(p0));
    return d.cwiseProduct(solver.eigenvectors() * decay.cwiseProduct(y));
}

Eigen::MatrixXd coherence_decay_rates(const EigenSystem& eig, const SpectralFunction& reservoir,
                                      double temperature, double coupling_strength) {
    const auto n = eig.dim();
    const Matrix& s = eig.coupling_in_eigenbasis;
    const double lambda2 = coupling_strength * coupling_strength;

    // Half-sum of the damping terms attached to each level, all k included.
    Eigen::VectorXd level_sum = Eigen::VectorXd::Zero(n);
    for (Eigen::Index l = 0; l < n; ++l)
        for (Eigen::Index k = 0; k < n; ++k) {
            const double magnitude2 = std::norm(s(k, l));
            if (magnitude2 == 0.0) continue;
            level_sum(l) += lambda2 *
                            reservoir.value(eig.frequencies(k) - eig.frequencies(l), temperature) *
                            magnitude2;
        }

    Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k1 = 0; k1 < n; ++k1)
        for (Eigen::Index k2 = 0; k2 < n; ++k2)
            if (k1 != k2) gamma(k1, k2) = 0.5 * (level_sum(k1) + level_sum(k2));
    return gamma;
}

void check_density_state(const DensityState& state, double hermiticity_tol, double trace_tol,
                         double eigenvalue_floor) {
    const auto n = state.matrix.rows();
    if (n < 1 || state.matrix.cols() != n)
        throw ValidationError("density state: matrix must be square with N >= 1");
    const double scale = std::max(state.matrix.cwiseAbs().maxCoeff(), 1.0);
    if ((state.matrix - state.matrix.adjoint()).cwiseAbs().maxCoeff() > hermiticity_tol * scale)
        throw ValidationError("density state: matrix is not Hermitian");
    const std::complex<double> trace = state.matrix.trace();
    if (std::abs(trace - std::complex<double>(1.0, 0.0)) > trace_tol)
        throw ValidationError("density state: trace must be 1");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(state.matrix);
    if (solver.eigenvalues().minCoeff() < eigenvalue_floor) {
        std::ostringstream msg;
        msg << "density state: negative eigenvalue " << solver.eigenvalues().minCoeff();
        throw ValidationError(msg.str());
    }
}

Trajectory evolve_density(const SystemModel& model, const DensityState& rho0,
                          const std::vector<double>& times) {
    check_density_state(rho0);
    const EigenSystem eig = eigenbasis(model);
    const auto n = eig.dim();
    if (rho0.matrix.rows() != n)
        throw std::invalid_argument("evolve_density: state dimension mismatch");

    const RateMatrix rates =
        rate_matrix(eig, model.reservoir, model.temperature, model.coupling_strength);
    const Eigen::MatrixXd gamma =
        coherence_decay_rates(eig, model.reservoir, model.temperature, model.coupling_strength);

    Trajectory trajectory = evolve_populations(rates, rho0.matrix.diagonal().real(), times);

    trajectory.states.reserve(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double t = times[k];
        Matrix state = Matrix::Zero(n, n);
        state.diagonal() = trajectory.populations[k].cast<std::complex<double>>();
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                if (i == j) continue;
                const double phase = -(eig.frequencies(i) - eig.frequencies(j)) * t;
                state(i, j) = rho0.matrix(i, j) * std::exp(-gamma(i, j) * t) *
                              std::complex<double>(std::cos(phase), std::sin(phase));
            }
        trajectory.states.push_back(std::move(state));
    }
    return trajectory;
}

}  // namespace lindblock
