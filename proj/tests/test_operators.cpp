#include <doctest.h>

#include <cmath>

#include "hdx/cochain.hpp"
#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/operators.hpp"
#include "hdx/rng.hpp"

using namespace hdx;

namespace {

Cochain random_cochain(const WeightedComplexPtr& space, int k,
                       rng::Engine& engine) {
    Eigen::VectorXd v(space->complex.count(k));
    for (int i = 0; i < v.size(); ++i) v[i] = rng::gaussian(engine);
    return make_cochain(space, k, std::move(v));
}

}  // namespace

TEST_CASE("walks are stochastic and weighted-self-adjoint") {
    rng::Engine engine(3);
    auto fixtures = {complete_complex(5, 2).space,
                     complete_complex(6, 3).space,
                     build_weighted({TopFace{{0, 1, 2}, 1.0},
                                     TopFace{{0, 1, 3}, 2.0},
                                     TopFace{{0, 2, 3}, 3.0},
                                     TopFace{{1, 2, 3}, 4.0}})};
    for (const auto& wc : fixtures) {
        const int n = wc->complex.dimension();
        for (int k = 0; k <= n; ++k) {
            if (k <= n - 1) {
                OperatorMatrix up = upper_walk(wc, k);
                CHECK((up.mat.rowwise().sum().array() - 1.0)
                          .abs()
                          .maxCoeff() <= 1e-13);
                CHECK((up.mat.array() >= 0.0).all());
                // Self-adjointness: W M is symmetric.
                Eigen::MatrixXd wm =
                    wc->weights.level(k).asDiagonal() * up.mat;
                CHECK((wm - wm.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
            }
            OperatorMatrix down = lower_walk(wc, k);
            CHECK((down.mat.rowwise().sum().array() - 1.0)
                      .abs()
                      .maxCoeff() <= 1e-13);
            Eigen::MatrixXd wm =
                wc->weights.level(k).asDiagonal() * down.mat;
            CHECK((wm - wm.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("frozen spectra of the smallest fixtures") {
    SUBCASE("triangle vertex walk") {
        auto wc = build_homogeneous({Simplex{0, 1, 2}});
        Eigen::VectorXd ev = weighted_spectrum(upper_walk(wc, 0));
        REQUIRE(ev.size() == 3);
        CHECK(ev[0] == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(ev[1] == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(ev[2] == doctest::Approx(1.0).epsilon(1e-12));
        C0Extremes c0 = spectrum_on_c0(upper_walk(wc, 0));
        CHECK(c0.largest == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(c0.smallest == doctest::Approx(0.25).epsilon(1e-12));
    }

    SUBCASE("tetrahedron-boundary edge walk") {
        auto wc = complete_complex(4, 2).space;
        Eigen::VectorXd ev = weighted_spectrum(upper_walk(wc, 1));
        REQUIRE(ev.size() == 6);
        CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(ev[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(ev[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(ev[4] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(ev[5] == doctest::Approx(1.0).epsilon(1e-12));
        C0Extremes c0 = spectrum_on_c0(upper_walk(wc, 1));
        CHECK(c0.largest == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(std::abs(c0.smallest) <= 1e-12);
    }
}

TEST_CASE("the vertex lower walk averages against the weights") {
    auto wc = complete_complex(5, 2).space;
    rng::Engine engine(11);
    Cochain phi = random_cochain(wc, 0, engine);
    Cochain averaged = lower_walk(wc, 0).apply(phi);
    const double mean = inner_product(phi, ones_cochain(wc, 0)) /
                        norm_sq(ones_cochain(wc, 0));
    for (int i = 0; i < averaged.values.size(); ++i) {
        CHECK(averaged.values[i] == doctest::Approx(mean).epsilon(1e-12));
    }
}

TEST_CASE("non-lazy walk is the lazy walk with laziness removed") {
    auto wc = complete_complex(6, 3).space;
    for (int k = 0; k <= 2; ++k) {
        Eigen::MatrixXd lazy = upper_walk(wc, k).mat;
        Eigen::MatrixXd nonlazy = nonlazy_upper(wc, k).mat;
        Eigen::MatrixXd expected =
            ((k + 2) * lazy -
             Eigen::MatrixXd::Identity(lazy.rows(), lazy.cols())) /
            (k + 1);
        CHECK((nonlazy - expected).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK(std::abs(nonlazy.trace()) <= 1e-13);
    }
}

TEST_CASE("differential pairs adjointly with the codifferential") {
    auto wc = build_weighted({TopFace{{0, 1, 2}, 1.0}, TopFace{{0, 1, 3}, 2.0},
                              TopFace{{0, 2, 3}, 3.0},
                              TopFace{{1, 2, 3}, 4.0}});
    rng::Engine engine(23);
    for (int k = -1; k <= 1; ++k) {
        Cochain phi = random_cochain(wc, k, engine);
        Cochain psi = random_cochain(wc, k + 1, engine);
        const double lhs = inner_product(differential(wc, k).apply(phi), psi);
        const double rhs =
            inner_product(phi, codifferential(wc, k).apply(psi));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("factorizations tie the walks to the differentials") {
    auto fixtures = {build_homogeneous({Simplex{0, 1, 2}}),
                     complete_complex(4, 2).space,
                     complete_complex(6, 3).space,
                     complete_complex(4, 1).space,
                     build_homogeneous({Simplex{0, 1, 2}, Simplex{3, 4, 5}}),
                     build_weighted({TopFace{{0, 1, 2}, 1.0},
                                     TopFace{{0, 1, 3}, 2.0},
                                     TopFace{{0, 2, 3}, 3.0},
                                     TopFace{{1, 2, 3}, 4.0}})};
    for (const auto& wc : fixtures) {
        for (int k = 0; k <= wc->complex.dimension(); ++k) {
            FactorizationReport rep = verify_factorizations(wc, k);
            CHECK(rep.ok(1e-12));
        }
    }
}

TEST_CASE("constant cochains saturate the contraction estimate") {
    auto wc = complete_complex(4, 2).space;
    for (int k = 0; k <= 1; ++k) {
        DifferentialBound b =
            bound_from_differential_norm(ones_cochain(wc, k));
        CHECK(b.eps == doctest::Approx(k + 2.0).epsilon(1e-12));
        CHECK(b.lhs == doctest::Approx(b.rhs).epsilon(1e-12));
        CHECK(b.pass);
    }

    rng::Engine engine(31);
    for (int trial = 0; trial < 20; ++trial) {
        Cochain phi = random_cochain(wc, trial % 2, engine);
        CHECK(bound_from_differential_norm(phi).pass);
    }
    CHECK_THROWS_AS(bound_from_differential_norm(zero_cochain(wc, 0)),
                    DomainError);
    CHECK_THROWS_AS(bound_from_differential_norm(ones_cochain(wc, 2)),
                    DimensionError);
}

TEST_CASE("operator level and kind guards") {
    auto wc = complete_complex(4, 2).space;
    CHECK_THROWS_AS(upper_walk(wc, 2), DimensionError);
    CHECK_THROWS_AS(upper_walk(wc, -1), DimensionError);
    CHECK_THROWS_AS(lower_walk(wc, 3), DimensionError);
    CHECK_THROWS_AS(differential(wc, 2), DimensionError);
    CHECK_THROWS_AS(symmetrized(differential(wc, 0)), DomainError);
    CHECK_THROWS_AS(upper_walk(wc, 0).apply(ones_cochain(wc, 1)),
                    DimensionError);
}
