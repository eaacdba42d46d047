// test_builtin.cpp — Two-TLS generator, closed-form eigenstructure, reference block setup

#include "lindblock/builtin.hpp"
#include "lindblock/coms.hpp"
#include "lindblock/decomposition.hpp"

#include <doctest.h>

#include <cmath>

using namespace lindblock;

TEST_CASE("non-interacting Hamiltonian is diagonal with the product-basis energies") {
    TwoTlsSpec spec;
    spec.rabi = 0.0;
    spec.omega1 = 1.0;
    spec.omega2 = 0.7;
    const SystemModel model = two_tls_model(spec);
    Matrix offdiag = model.hamiltonian;
    offdiag.diagonal().setZero();
    CHECK(offdiag.cwiseAbs().maxCoeff() == 0.0);
    CHECK(model.hamiltonian(0, 0).real() == doctest::Approx(1.7));
    CHECK(model.hamiltonian(1, 1).real() == 0.0);
    CHECK(model.hamiltonian(2, 2).real() == doctest::Approx(1.0));
    CHECK(model.hamiltonian(3, 3).real() == doctest::Approx(0.7));
}

TEST_CASE("coupling operator eigenvalues in the product basis") {
    TwoTlsSpec spec;
    spec.asymmetry = 0.3;
    const SystemModel model = two_tls_model(spec);
    CHECK(model.coupling_operator(0, 0).real() == doctest::Approx(1.3));
    CHECK(model.coupling_operator(1, 1).real() == doctest::Approx(-1.3));
    CHECK(model.coupling_operator(2, 2).real() == doctest::Approx(0.7));
    CHECK(model.coupling_operator(3, 3).real() == doctest::Approx(-0.7));
    Matrix offdiag = model.coupling_operator;
    offdiag.diagonal().setZero();
    CHECK(offdiag.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("coupling operator commutes with the Hamiltonian when non-interacting") {
    TwoTlsSpec spec;
    spec.rabi = 0.0;
    spec.omega2 = 0.7;
    const SystemModel model = two_tls_model(spec);
    const Matrix commutator = model.coupling_operator * model.hamiltonian -
                              model.hamiltonian * model.coupling_operator;
    CHECK(commutator.cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("partition structure across the parameter plane") {
    SUBCASE("interacting with a != 1: three blocks") {
        const EigenSystem eig = eigenbasis(two_tls_model(TwoTlsSpec::reference()));
        CHECK(invariant_partition(eig).blocks.size() == 3);
    }
    SUBCASE("a = 1 decouples the mixed pair even with interaction") {
        TwoTlsSpec spec;
        spec.asymmetry = 1.0;
        const EigenSystem eig = eigenbasis(two_tls_model(spec));
        const SubspacePartition part = invariant_partition(eig);
        CHECK(part.blocks.size() == 4);
    }
    SUBCASE("no interaction: four singletons") {
        TwoTlsSpec spec;
        spec.rabi = 0.0;
        spec.omega2 = 0.7;
        const EigenSystem eig = eigenbasis(two_tls_model(spec));
        CHECK(invariant_partition(eig).blocks.size() == 4);
    }
}

TEST_CASE("closed-form eigenstructure") {
    SUBCASE("symmetric detuning gives a 45-degree mixing angle") {
        const TwoTlsAnalytics analytics = two_tls_analytics(TwoTlsSpec::reference());
        CHECK(analytics.mixing_angle == doctest::Approx(M_PI / 4.0).epsilon(1e-14));
        CHECK(analytics.energies[2] == doctest::Approx(1.5));
        CHECK(analytics.energies[3] == doctest::Approx(0.5));
    }
    SUBCASE("small interaction splits the pair symmetrically") {
        TwoTlsSpec spec;
        spec.rabi = 0.1;
        const TwoTlsAnalytics analytics = two_tls_analytics(spec);
        CHECK(analytics.energies[2] == doctest::Approx(1.1).epsilon(1e-14));
        CHECK(analytics.energies[3] == doctest::Approx(0.9).epsilon(1e-14));
    }
    SUBCASE("degenerate non-interacting pair is refused") {
        TwoTlsSpec spec;
        spec.rabi = 0.0;
        CHECK_THROWS_AS(two_tls_analytics(spec), ValidationError);
    }
    SUBCASE("numeric eigendecomposition matches the closed form") {
        for (double ratio : {0.0, 0.5, 2.0, 10.0, -0.7}) {
            TwoTlsSpec spec;
            spec.rabi = ratio < 0.0 ? -0.4 : 0.4;
            spec.omega2 = 1.0;
            spec.omega1 = 1.0 + ratio * spec.rabi;
            const TwoTlsAnalytics analytics = two_tls_analytics(spec);
            const EigenSystem eig = eigenbasis(two_tls_model(spec));
            std::array<double, 4> sorted = analytics.energies;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < 4; ++i)
                CHECK(eig.frequencies(i) == doctest::Approx(sorted[i]).epsilon(1e-12));

            // eigenvector coefficients: rebuild psi3/psi4 on the product-basis
            // pair (|e1g2>, |g1e2>) and compare with the numeric eigenvectors
            const Matrix h = two_tls_model(spec).hamiltonian;
            const Eigen::Vector2d psi3(analytics.psi3_coeff[0], analytics.psi3_coeff[1]);
            const Eigen::Vector2d psi4(analytics.psi4_coeff[0], analytics.psi4_coeff[1]);
            Eigen::Matrix2d pair;
            pair << h(2, 2).real(), h(2, 3).real(), h(3, 2).real(), h(3, 3).real();
            CHECK((pair * psi3 - analytics.energies[2] * psi3).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK((pair * psi4 - analytics.energies[3] * psi4).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("projector of the mixed pair equals the product-basis pair projector") {
    // |psi3><psi3| + |psi4><psi4| collapses to the plain sum of the two
    // product-basis projectors for any mixing angle.
    for (double ratio : {0.0, 0.5, 2.0, 10.0}) {
        TwoTlsSpec spec;
        spec.rabi = 0.4;
        spec.omega2 = 1.0;
        spec.omega1 = 1.0 + ratio * spec.rabi;
        const TwoTlsAnalytics analytics = two_tls_analytics(spec);
        Eigen::Matrix2d projector =
            Eigen::Vector2d(analytics.psi3_coeff[0], analytics.psi3_coeff[1]) *
                Eigen::RowVector2d(analytics.psi3_coeff[0], analytics.psi3_coeff[1]) +
            Eigen::Vector2d(analytics.psi4_coeff[0], analytics.psi4_coeff[1]) *
                Eigen::RowVector2d(analytics.psi4_coeff[0], analytics.psi4_coeff[1]);
        CHECK((projector - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("named observables take the expected eigenvalues on the builtin states") {
    const EigenSystem eig = eigenbasis(two_tls_model(TwoTlsSpec::reference()));
    const auto named = named_coms_two_tls(eig, invariant_partition(eig), true);
    // ascending order (0, 0.5, 1.5, 2): excitation (0,1,1,2), inversion (-2,0,0,2)
    CHECK(named[0].observable.values(0) == 0.0);
    CHECK(named[0].observable.values(1) == 1.0);
    CHECK(named[0].observable.values(2) == 1.0);
    CHECK(named[0].observable.values(3) == 2.0);
    CHECK(named[1].observable.values(0) == -2.0);
    CHECK(named[1].observable.values(1) == 0.0);
    CHECK(named[1].observable.values(2) == 0.0);
    CHECK(named[1].observable.values(3) == 2.0);
}

TEST_CASE("reference model normalization puts the downhill rate at one") {
    const TwoTlsSpec spec = TwoTlsSpec::reference();
    const SystemModel model = two_tls_model(spec);
    const EigenSystem eig = eigenbasis(model);
    const RateMatrix rates =
        rate_matrix(eig, model.reservoir, model.temperature, model.coupling_strength);
    CHECK(rates.rates(1, 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-state block setup") {
    const TwoStateBlockSetup setup = two_state_block_setup();
    CHECK(setup.rates.rates(1, 0) == 1.0);
    CHECK(setup.rates.rates(0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(setup.stationary(0) == doctest::Approx(0.2689414213699951).epsilon(1e-14));
    CHECK(setup.stationary(1) == doctest::Approx(0.7310585786300049).epsilon(1e-14));
    REQUIRE(setup.initial_conditions.size() == 3);
    for (const auto& initial : setup.initial_conditions)
        CHECK(initial.sum() == doctest::Approx(1.0).epsilon(1e-15));
    // the stationary point is a fixed point of the block generator
    const Eigen::VectorXd derivative =
        population_derivative(setup.rates, setup.stationary);
    CHECK(derivative.cwiseAbs().maxCoeff() <= 1e-16);
}

TEST_CASE("invalid two-TLS specs are rejected") {
    TwoTlsSpec spec;
    spec.omega1 = -1.0;
    CHECK_THROWS_AS(two_tls_model(spec), ValidationError);
}
