// test_coms.cpp — Projector basis, invariance residuals, enumeration oracle, named observables

#include "lindblock/coms.hpp"
#include "lindblock/builtin.hpp"
#include "support/helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace lindblock;

namespace {

TwoTlsSpec non_interacting_spec() {
    TwoTlsSpec spec;
    spec.rabi = 0.0;
    spec.omega1 = 1.0;
    spec.omega2 = 0.6;
    return spec;
}

}  // namespace

TEST_CASE("basis projectors of the builtin models") {
    SUBCASE("non-interacting: four projectors, three independent") {
        const EigenSystem eig = eigenbasis(two_tls_model(non_interacting_spec()));
        const ComBasis basis = basis_projectors(invariant_partition(eig));
        CHECK(basis.projectors.size() == 4);
        CHECK(basis.independent_count == 3);
    }
    SUBCASE("interacting: three projectors, two independent") {
        const EigenSystem eig = eigenbasis(two_tls_model(TwoTlsSpec::reference()));
        const ComBasis basis = basis_projectors(invariant_partition(eig));
        CHECK(basis.projectors.size() == 3);
        CHECK(basis.independent_count == 2);
        // the merged projector covers the mixed pair
        CHECK(basis.projectors[1].values(1) == 1.0);
        CHECK(basis.projectors[1].values(2) == 1.0);
    }
    SUBCASE("single block: one projector equals the identity") {
        std::mt19937 rng(3);
        const EigenSystem eig = eigenbasis(testing::model_from_parts(
            testing::random_frequencies(rng, 4), Matrix::Constant(4, 4, 1.0)));
        const ComBasis basis = basis_projectors(invariant_partition(eig));
        REQUIRE(basis.projectors.size() == 1);
        CHECK(basis.independent_count == 0);
        CHECK(basis.projectors[0].values.sum() == 4.0);
    }
    SUBCASE("projectors sum to the all-ones vector") {
        std::mt19937 rng(5);
        const EigenSystem eig = eigenbasis(testing::model_from_parts(
            testing::random_frequencies(rng, 6), testing::random_coupling(rng, 6)));
        const ComBasis basis = basis_projectors(invariant_partition(eig));
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(6);
        for (const auto& proj : basis.projectors) sum += proj.values;
        CHECK((sum - Eigen::VectorXd::Ones(6)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("soundness: every block projector has vanishing residuals") {
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const SystemModel model = testing::model_from_parts(
            testing::random_frequencies(rng, n), testing::random_coupling(rng, n));
        const EigenSystem eig = eigenbasis(model);
        for (const auto& proj : basis_projectors(invariant_partition(eig)).projectors) {
            CHECK(com_condition_residual(eig, proj) <= 1e-12);
            CHECK(lindblad_residual(model, proj) <= 1e-10);
        }
    }
}

TEST_CASE("the identity observable is annihilated by the generator") {
    std::mt19937 rng(11);
    const SystemModel model = testing::model_from_parts(testing::random_frequencies(rng, 5),
                                                        testing::random_coupling(rng, 5, 1.0));
    DiagonalObservable identity{Eigen::VectorXd::Ones(5)};
    CHECK(lindblad_residual(model, identity) <= 1e-12);
}

TEST_CASE("frequencies form a COM exactly when the coupling is diagonal") {
    const EigenSystem eig = eigenbasis(two_tls_model(non_interacting_spec()));
    CHECK(com_condition_residual(eig, DiagonalObservable{eig.frequencies}) <= 1e-12);
}

TEST_CASE("splitting the mixed pair is detected") {
    TwoTlsSpec spec;  // reference: a = 0.5, rabi = 0.5, equal frequencies
    const SystemModel model = two_tls_model(spec);
    const EigenSystem eig = eigenbasis(model);
    // indicator of the upper mixed state alone (ascending position 2)
    DiagonalObservable half{Eigen::VectorXd::Zero(4)};
    half.values(2) = 1.0;
    // residual is |S_34|^2 = ((1-a) sin 2phi)^2 = 0.25 at phi = pi/4
    CHECK(com_condition_residual(eig, half) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(lindblad_residual(model, half) > 0.0);
}

TEST_CASE("brute-force atoms match the partition") {
    SUBCASE("builtin models") {
        const EigenSystem non = eigenbasis(two_tls_model(non_interacting_spec()));
        CHECK(brute_force_com_atoms(non).blocks == invariant_partition(non).blocks);
        const EigenSystem mixed = eigenbasis(two_tls_model(TwoTlsSpec::reference()));
        CHECK(brute_force_com_atoms(mixed).blocks == invariant_partition(mixed).blocks);
        CHECK(brute_force_com_atoms(mixed).blocks ==
              std::vector<std::vector<int>>{{0}, {1, 2}, {3}});
    }
    SUBCASE("one-dimensional model") {
        const SystemModel model =
            testing::model_from_parts(Eigen::VectorXd::Zero(1), Matrix::Identity(1, 1));
        const EigenSystem eig = eigenbasis(model);
        CHECK(brute_force_com_atoms(eig).blocks == std::vector<std::vector<int>>{{0}});
    }
    SUBCASE("random models") {
        std::mt19937 rng(13);
        for (int round = 0; round < 25; ++round) {
            const int n = 2 + static_cast<int>(rng() % 7);
            const EigenSystem eig = eigenbasis(testing::model_from_parts(
                testing::random_frequencies(rng, n), testing::random_coupling(rng, n)));
            CHECK(brute_force_com_atoms(eig).blocks == invariant_partition(eig).blocks);
        }
    }
}

TEST_CASE("enumeration guard rejects large dimensions") {
    SystemModel model = testing::model_from_parts(Eigen::VectorXd::LinSpaced(17, 0.0, 16.0),
                                                  Matrix::Identity(17, 17));
    CHECK_THROWS_AS(brute_force_com_atoms(eigenbasis(model)), std::invalid_argument);
}

TEST_CASE("completeness: 0/1 observables are COMs exactly when block-constant") {
    std::mt19937 rng(17);
    for (int round = 0; round < 10; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const EigenSystem eig = eigenbasis(testing::model_from_parts(
            testing::random_frequencies(rng, n), testing::random_coupling(rng, n)));
        const SubspacePartition part = invariant_partition(eig);
        const double tol = default_com_tolerance(eig);
        DiagonalObservable obs{Eigen::VectorXd::Zero(n)};
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool block_constant = true;
            for (const auto& block : part.blocks)
                for (std::size_t k = 1; k < block.size(); ++k)
                    if (((mask >> block[k]) & 1u) != ((mask >> block[0]) & 1u))
                        block_constant = false;
            for (int i = 0; i < n; ++i) obs.values(i) = (mask >> i) & 1u ? 1.0 : 0.0;
            CHECK((com_condition_residual(eig, obs) <= tol) == block_constant);
        }
    }
}

TEST_CASE("named two-TLS observables") {
    SUBCASE("non-interacting carries all three") {
        const TwoTlsSpec spec = non_interacting_spec();
        const EigenSystem eig = eigenbasis(two_tls_model(spec));
        const auto named = named_coms_two_tls(eig, invariant_partition(eig), false);
        REQUIRE(named.size() == 3);
        CHECK(named[0].name == "excitation_number");
        CHECK(named[1].name == "population_inversion");
        CHECK(named[2].name == "total_energy");
        for (const auto& com : named)
            CHECK(com_condition_residual(eig, com.observable) <= 1e-12);
        // ascending order (0, omega2, omega1, omega1+omega2): excitations (0,1,1,2)
        CHECK(named[0].observable.values(0) == 0.0);
        CHECK(named[0].observable.values(1) == 1.0);
        CHECK(named[0].observable.values(2) == 1.0);
        CHECK(named[0].observable.values(3) == 2.0);
        // inversion (-2,0,0,2)
        CHECK(named[1].observable.values(0) == -2.0);
        CHECK(named[1].observable.values(3) == 2.0);
        // energy equals the frequency vector
        CHECK((named[2].observable.values - eig.frequencies).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("interacting drops the energy observable") {
        const EigenSystem eig = eigenbasis(two_tls_model(TwoTlsSpec::reference()));
        const auto named = named_coms_two_tls(eig, invariant_partition(eig), true);
        REQUIRE(named.size() == 2);
        for (const auto& com : named)
            CHECK(com_condition_residual(eig, com.observable) <= 1e-12);
    }
    SUBCASE("requesting the energy observable for an interacting model is an error") {
        const EigenSystem eig = eigenbasis(two_tls_model(TwoTlsSpec::reference()));
        CHECK_THROWS_AS(two_tls_energy_com(eig, true), ValidationError);
    }
}

TEST_CASE("independent COM count equals block count minus one") {
    std::mt19937 rng(19);
    for (int round = 0; round < 10; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto blocks = testing::random_blocks(rng, n);
        const Matrix s = testing::block_structured_coupling(rng, n, blocks);
        const EigenSystem eig =
            eigenbasis(testing::model_from_parts(testing::random_frequencies(rng, n), s));
        const SubspacePartition part = invariant_partition(eig);
        CHECK(part.blocks.size() == blocks.size());
        CHECK(basis_projectors(part).independent_count ==
              static_cast<int>(blocks.size()) - 1);
    }
}
