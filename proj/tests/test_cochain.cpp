#include <doctest.h>

#include <cmath>

#include "hdx/cochain.hpp"
#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
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

TEST_CASE("weighted inner product on the single triangle") {
    auto wc = build_homogeneous({Simplex{0, 1, 2}});
    Cochain ones0 = ones_cochain(wc, 0);
    CHECK(inner_product(ones0, ones0) == doctest::Approx(6.0));
    CHECK(norm_sq(ones_cochain(wc, 1)) == doctest::Approx(3.0));
    CHECK(norm_sq(zero_cochain(wc, 2)) == 0.0);

    Cochain phi = make_cochain(wc, 0, Eigen::Vector3d(1.0, 2.0, 3.0));
    // 2*1*1 + 2*2*1 + 2*3*1 against ones.
    CHECK(inner_product(phi, ones0) == doctest::Approx(12.0));

    CHECK_THROWS_AS(make_cochain(wc, 0, Eigen::Vector2d(1, 2)),
                    DimensionError);
    CHECK_THROWS_AS(make_cochain(wc, 3, Eigen::Vector2d(1, 2)),
                    DimensionError);
    CHECK_THROWS_AS(inner_product(phi, ones_cochain(wc, 1)), DimensionError);

    auto other = build_homogeneous({Simplex{0, 1, 2}});
    CHECK_THROWS_AS(inner_product(phi, ones_cochain(other, 0)), DomainError);
}

TEST_CASE("projection removes the constant part") {
    auto wc = complete_complex(5, 2).space;
    rng::Engine engine(7);
    for (int k = 0; k <= 2; ++k) {
        Cochain phi = random_cochain(wc, k, engine);
        Cochain proj = project_c0(phi);
        CHECK(c0_residual(proj) <= 1e-14);
        CHECK(std::abs(inner_product(proj, ones_cochain(wc, k))) <= 1e-10);
        // Projecting twice changes nothing.
        Cochain again = project_c0(proj);
        CHECK((again.values - proj.values).norm() <= 1e-14);
    }
    CHECK(c0_residual(zero_cochain(wc, 0)) == 0.0);
    CHECK(c0_residual(ones_cochain(wc, 0)) == doctest::Approx(1.0));
}

TEST_CASE("localization gathers values through parent faces") {
    auto wc = build_homogeneous({Simplex{0, 1, 2}, Simplex{0, 1, 3},
                                 Simplex{0, 2, 3}, Simplex{1, 2, 3}});
    Eigen::VectorXd vals(6);
    for (int i = 0; i < 6; ++i) vals[i] = i + 1.0;
    Cochain phi = make_cochain(wc, 1, vals);

    Link link = link_of(wc, Simplex{0});
    Cochain loc = localize(link, phi);
    CHECK(loc.k == 0);
    const auto& LX = link.space->complex;
    for (int i = 0; i < LX.count(0); ++i) {
        Simplex lifted = Simplex{0}.unite(LX.face(0, i));
        CHECK(loc.values[i] ==
              phi.values[wc->complex.index_of(lifted)]);
    }

    // A vertex base takes a 0-cochain down to degree -1, one value.
    Cochain down = localize(link, ones_cochain(wc, 0));
    CHECK(down.k == -1);
    CHECK(down.values.size() == 1);
    CHECK(down.values[0] == 1.0);

    Link edge_link = link_of(wc, Simplex{0, 1});
    CHECK_THROWS_AS(localize(edge_link, ones_cochain(wc, 0)),
                    DimensionError);
}

TEST_CASE("localization energy identities hold to rounding") {
    rng::Engine engine(19);
    auto shared = build_homogeneous({Simplex{0, 1, 2}, Simplex{1, 2, 3}});
    auto k73 = complete_complex(7, 3).space;
    for (const auto& wc : {shared, k73}) {
        const int n = wc->complex.dimension();
        for (int trial = 0; trial < 10; ++trial) {
            const int l = trial % (n + 1);
            Cochain phi = random_cochain(wc, l, engine);
            for (int k = -1; k < l; ++k) {
                LocalizationResiduals res =
                    check_localization_identities(phi, k);
                CHECK(res.energy <= 1e-12);
                CHECK(res.codifferential <= 1e-12);
                if (l < n) {
                    REQUIRE(res.differential.has_value());
                    CHECK(*res.differential <= 1e-12);
                } else {
                    CHECK_FALSE(res.differential.has_value());
                }
            }
        }
    }
    CHECK_THROWS_AS(
        check_localization_identities(ones_cochain(shared, 0), 0),
        DimensionError);
}
