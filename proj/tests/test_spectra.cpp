#include <doctest.h>

#include <cmath>

#include "hdx/cochain.hpp"
#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/rng.hpp"
#include "hdx/spectra.hpp"

using namespace hdx;

TEST_CASE("one-skeleton connectivity") {
    CHECK(one_skeleton_connected(
        complete_complex(5, 2).space->complex));
    auto split = build_homogeneous({Simplex{0, 1, 2}, Simplex{3, 4, 5}});
    CHECK_FALSE(one_skeleton_connected(split->complex));
    // Sharing a single vertex still connects the skeleton.
    auto bowtie = build_homogeneous({Simplex{0, 1, 2}, Simplex{0, 3, 4}});
    CHECK(one_skeleton_connected(bowtie->complex));
}

TEST_CASE("profile of the tetrahedron boundary") {
    auto wc = complete_complex(4, 2).space;
    SpectralProfile prof = profile(wc);
    REQUIRE(prof.n == 2);
    REQUIRE(prof.levels.size() == 2);

    // Level 0: the single empty-face link, mu = nu = -1/3.
    CHECK(prof.levels[0].mu == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(prof.levels[0].nu == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    REQUIRE(prof.levels[0].links.size() == 1);

    // Level 1: four vertex links, each a 3-cycle with mu = nu = -1/2.
    CHECK(prof.levels[1].mu == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(prof.levels[1].nu == doctest::Approx(-0.5).epsilon(1e-12));
    REQUIRE(prof.levels[1].links.size() == 4);

    CHECK(prof.all_links_connected);
    CHECK(prof.lambda_one_sided == 0.0);
    CHECK(prof.lambda_two_sided == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("every link of a dense complete complex is negatively curved") {
    SpectralProfile prof = profile(complete_complex(7, 3).space);
    CHECK(prof.lambda_one_sided == 0.0);
    for (const auto& level : prof.levels) {
        CHECK(level.mu < 0.0);
        for (const auto& link : level.links) CHECK(link.connected);
    }
}

TEST_CASE("disconnected links are flagged, not rejected") {
    // The link of vertex 0 is two disjoint edges.
    auto wc = build_homogeneous({Simplex{0, 1, 2}, Simplex{0, 3, 4}});
    SpectralProfile prof = profile(wc);
    CHECK_FALSE(prof.all_links_connected);
    bool saw_disconnected = false;
    for (const auto& link : prof.levels[1].links) {
        if (!link.connected) {
            saw_disconnected = true;
            CHECK(link.mu == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    CHECK(saw_disconnected);
    CHECK(prof.lambda_one_sided == doctest::Approx(1.0).epsilon(1e-12));

    DescentReport descent = check_descent(prof);
    CHECK_FALSE(descent.applicable);
}

TEST_CASE("garland correction matches the energy identity") {
    rng::Engine engine(47);
    auto fixtures = {complete_complex(5, 2).space,
                     complete_complex(6, 3).space,
                     build_homogeneous({Simplex{0, 1, 2}, Simplex{1, 2, 3}})};
    for (const auto& wc : fixtures) {
        const int n = wc->complex.dimension();
        for (int trial = 0; trial < 12; ++trial) {
            const int k = trial % n;
            Eigen::VectorXd v(wc->complex.count(k));
            for (int i = 0; i < v.size(); ++i) v[i] = rng::gaussian(engine);
            Cochain phi = make_cochain(wc, k, std::move(v));
            GarlandReport rep = garland_terms(phi);
            CHECK(rep.identity_residual <= 1e-12);
            CHECK(rep.upper_bound_ok);
            CHECK(rep.lower_bound_ok);
            CHECK(rep.per_base.size() ==
                  static_cast<std::size_t>(wc->complex.count(k - 1)));
        }
    }
}

TEST_CASE("descent chain on complete complexes") {
    for (int m : {4, 5, 6}) {
        SpectralProfile prof = profile(complete_complex(m, 2).space);
        DescentReport rep = check_descent(prof);
        REQUIRE(rep.applicable);
        for (const auto& s : rep.step_mu) CHECK((s.vacuous || s.ok));
        for (const auto& s : rep.step_nu) CHECK((s.vacuous || s.ok));
        for (const auto& s : rep.top_mu) CHECK((s.vacuous || s.ok));
        for (const auto& s : rep.top_nu) CHECK((s.vacuous || s.ok));
        CHECK(rep.lambda_consistent);
        REQUIRE(rep.lambda_from_top.has_value());
        CHECK(*rep.lambda_from_top == 0.0);
    }
}

TEST_CASE("descent equality on the tetrahedron boundary") {
    SpectralProfile prof = profile(complete_complex(4, 2).space);
    const double mu0 = prof.levels[0].mu;
    const double mu1 = prof.levels[1].mu;
    // One step of descent is exactly tight here: -1/3 = (-1/2)/(1 - 1/2).
    CHECK(std::abs(mu0 - mu1 / (1.0 - mu1)) <= 1e-12);
    CHECK(mu0 == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("link spectrum rejects zero-dimensional links") {
    auto wc = complete_complex(4, 2).space;
    Link link = link_of(wc, Simplex{0, 1});
    CHECK(link.space->complex.dimension() == 0);
    CHECK_THROWS_AS(link_spectrum(link), DimensionError);
}

TEST_CASE("profiles are invariant under vertex relabeling") {
    std::vector<TopFace> tops = {{{0, 1, 2}, 1.0},
                                 {{1, 2, 3}, 2.0},
                                 {{1, 3, 4}, 5.0},
                                 {{2, 3, 4}, 1.5}};
    SpectralProfile before = profile(build_weighted(tops));

    VertexList image = {0, 1, 2, 3, 4};
    rng::Engine eng(555);
    rng::shuffle(image.begin(), image.end(), eng);
    std::vector<TopFace> renamed;
    for (const auto& t : tops) {
        VertexList vs;
        for (VertexId v : t.vertices) vs.push_back(image[v]);
        renamed.push_back({vs, t.weight});
    }
    SpectralProfile after = profile(build_weighted(renamed));

    REQUIRE(before.levels.size() == after.levels.size());
    for (std::size_t i = 0; i < before.levels.size(); ++i) {
        CHECK(std::abs(before.levels[i].mu - after.levels[i].mu) < 1e-12);
        CHECK(std::abs(before.levels[i].nu - after.levels[i].nu) < 1e-12);
    }
    CHECK(before.all_links_connected == after.all_links_connected);
    CHECK(std::abs(before.lambda_one_sided - after.lambda_one_sided) < 1e-12);
    CHECK(std::abs(before.lambda_two_sided - after.lambda_two_sided) < 1e-12);
}
