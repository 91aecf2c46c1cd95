#include <doctest.h>

#include <cmath>

#include "hdx/cochain.hpp"
#include "hdx/decomposition.hpp"
#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/operators.hpp"
#include "hdx/rng.hpp"
#include "hdx/spectra.hpp"

using namespace hdx;

namespace {

Cochain random_c0(const WeightedComplexPtr& space, int k,
                  rng::Engine& engine) {
    Eigen::VectorXd v(space->complex.count(k));
    for (int i = 0; i < v.size(); ++i) v[i] = rng::gaussian(engine);
    return project_c0(make_cochain(space, k, std::move(v)));
}

}  // namespace

TEST_CASE("square-root carrier reproduces the differential energy") {
    rng::Engine engine(61);
    auto wc = complete_complex(6, 2).space;
    for (int k = 0; k <= 1; ++k) {
        for (int trial = 0; trial < 5; ++trial) {
            Cochain psi = random_c0(wc, k, engine);
            Cochain carried = apply_sqrt_updown(psi);
            const double direct =
                norm_sq(differential(wc, k).apply(psi));
            CHECK(norm_sq(carried) == doctest::Approx(direct).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(apply_sqrt_updown(ones_cochain(wc, 2)), DimensionError);
}

TEST_CASE("ladder identities on random inputs") {
    rng::Engine engine(67);
    auto fixtures = {complete_complex(4, 2).space,
                     complete_complex(6, 2).space,
                     complete_complex(6, 3).space};
    for (const auto& wc : fixtures) {
        SpectralProfile prof = profile(wc);
        const int n = wc->complex.dimension();
        for (int k = 1; k <= n - 1; ++k) {
            for (int trial = 0; trial < 8; ++trial) {
                Cochain phi = random_c0(wc, k, engine);
                DecompositionResult res = decompose(phi);
                REQUIRE(res.levels.size() == static_cast<std::size_t>(k + 1));
                CHECK(res.identity1_residual <= 1e-10);
                CHECK(res.identity2_residual <= 1e-10);

                DecompositionVerification ver =
                    verify_decomposition(res, prof);
                CHECK(ver.identity1_residual <= 1e-10);
                CHECK(ver.identity2_residual <= 1e-10);
                CHECK(ver.energy_residual <= 1e-10);
                CHECK(ver.max_correction_residual <= 1e-8);
                CHECK(ver.max_c0_residual <= 1e-10);
                CHECK(ver.upper_ok);
                CHECK(ver.lower_ok);

                // The top rung carries the whole input energy.
                CHECK(norm_sq(res.levels[k].intermediate) ==
                      doctest::Approx(norm_sq(phi)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("solver regularizations agree on the same input") {
    rng::Engine engine(71);
    auto wc = complete_complex(6, 3).space;
    for (int k = 1; k <= 2; ++k) {
        Cochain phi = random_c0(wc, k, engine);
        DecomposeOptions svd_opts;
        DecompositionResult a = decompose(phi, svd_opts);
        DecomposeOptions ridge_opts;
        ridge_opts.solver = DecomposeOptions::Solver::Ridge;
        DecompositionResult b = decompose(phi, ridge_opts);
        for (int i = 0; i <= k; ++i) {
            CHECK(a.levels[i].energy ==
                  doctest::Approx(b.levels[i].energy).epsilon(1e-9));
            CHECK((a.levels[i].component.values -
                   b.levels[i].component.values)
                      .cwiseAbs()
                      .maxCoeff() <= 1e-9);
        }
    }
}

TEST_CASE("a codifferential-kernel cochain is its own top rung") {
    auto wc = complete_complex(4, 2).space;
    const auto& X = wc->complex;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(6);
    v[X.index_of(Simplex{0, 1})] = 1.0;
    v[X.index_of(Simplex{2, 3})] = 1.0;
    v[X.index_of(Simplex{0, 2})] = -1.0;
    v[X.index_of(Simplex{1, 3})] = -1.0;
    Cochain phi = make_cochain(wc, 1, v);

    // Opposite-edge pairing lies in the kernels of both d* and d.
    CHECK(norm_sq(codifferential(wc, 0).apply(phi)) <= 1e-24);
    CHECK(norm_sq(differential(wc, 1).apply(phi)) <= 1e-24);
    CHECK(c0_residual(phi) <= 1e-15);

    DecompositionResult res = decompose(phi);
    CHECK((res.levels[1].component.values - phi.values)
              .cwiseAbs()
              .maxCoeff() <= 1e-10);
    CHECK(res.levels[1].energy == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(res.levels[0].energy <= 1e-20);
    CHECK(res.dphi_sq <= 1e-20);
}

TEST_CASE("projection policy for inputs touching the constants") {
    auto wc = complete_complex(4, 2).space;
    Cochain ones = ones_cochain(wc, 1);

    DecomposeOptions strict;
    strict.project_input = false;
    CHECK_THROWS_AS(decompose(ones, strict), DomainError);

    // The default projects first, and a constant projects to zero.
    DecompositionResult res = decompose(ones);
    CHECK(norm_sq(res.levels[1].component) <= 1e-20);
    CHECK(norm_sq(res.levels[0].component) <= 1e-20);

    CHECK_THROWS_AS(decompose(ones_cochain(wc, 2)), DimensionError);
}

TEST_CASE("degree-zero ladders are the identity") {
    rng::Engine engine(73);
    auto wc = complete_complex(5, 2).space;
    Cochain phi = random_c0(wc, 0, engine);
    DecompositionResult res = decompose(phi);
    REQUIRE(res.levels.size() == 1);
    CHECK((res.levels[0].component.values - phi.values)
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
    CHECK(res.identity1_residual <= 1e-12);
    CHECK(res.identity2_residual <= 1e-12);
}
