#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/errors.hpp"
#include "hdx/parallel.hpp"
#include "hdx/rng.hpp"

using namespace hdx;

TEST_CASE("simplex ordering and algebra") {
    Simplex s{2, 0, 1};
    CHECK(s.to_string() == "{0,1,2}");
    CHECK(s.dim() == 2);
    CHECK(s.contains(Simplex{0, 2}));
    CHECK_FALSE(s.contains(Simplex{0, 3}));
    CHECK(s.facet(0) == Simplex{1, 2});
    CHECK(s.facet(2) == Simplex{0, 1});
    CHECK(s.minus(Simplex{1}) == Simplex{0, 2});
    CHECK(Simplex{0, 1}.unite(Simplex{2}) == Simplex{0, 1, 2});
    CHECK(Simplex{0, 1}.disjoint_from(Simplex{2, 3}));
    CHECK_FALSE(Simplex{0, 1}.disjoint_from(Simplex{1, 2}));
    CHECK(Simplex{} < Simplex{0});
    CHECK(Simplex{0, 1} < Simplex{0, 2});

    CHECK_THROWS_AS((Simplex{0, 0}), DomainError);
    CHECK_THROWS_AS((Simplex{-1, 2}), DomainError);
}

TEST_CASE("closure of the tetrahedron boundary") {
    auto X = SimplicialComplex::from_top_faces(
        {Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{0, 2, 3},
         Simplex{1, 2, 3}});
    CHECK(X.dimension() == 2);
    CHECK(X.count(2) == 4);
    CHECK(X.count(1) == 6);
    CHECK(X.count(0) == 4);
    CHECK(X.count(-1) == 1);
    CHECK(X.contains(Simplex{1, 3}));
    CHECK(X.index_of(Simplex{0, 1}) == 0);
    CHECK(X.index_of(Simplex{2, 3}) == 5);
    CHECK(X.index_of(Simplex{0, 4}) == -1);

    // Facet and coface tables agree with hand counts.
    const int e01 = X.index_of(Simplex{0, 1});
    CHECK(X.facet_indices(1, e01).size() == 2);
    CHECK(X.coface_indices(1, e01).size() == 2);
    CHECK(X.coface_indices(-1, 0).size() == 4);

    CHECK_THROWS_AS(X.face(3, 0), DimensionError);

    CHECK_THROWS_AS(SimplicialComplex::from_top_faces(
                        {Simplex{0, 1, 2}, Simplex{3, 4}}),
                    DimensionError);
    CHECK_THROWS_AS(SimplicialComplex::from_top_faces(
                        {Simplex{0, 1, 2}, Simplex{2, 1, 0}}),
                    DuplicateFaceError);
    CHECK_THROWS_AS(SimplicialComplex::from_top_faces({}), DimensionError);
}

TEST_CASE("homogeneous weights count top cofaces exactly") {
    auto wc = build_homogeneous({Simplex{0, 1, 2}, Simplex{0, 1, 3},
                                 Simplex{0, 2, 3}, Simplex{1, 2, 3}});
    const auto& X = wc->complex;
    for (int t = 0; t < 4; ++t) CHECK(wc->weights(2, t) == 1.0);
    for (int e = 0; e < 6; ++e) CHECK(wc->weights(1, e) == 2.0);
    for (int v = 0; v < 4; ++v) CHECK(wc->weights(0, v) == 6.0);
    CHECK(wc->weights(-1, 0) == 24.0);

    CHECK(wc->weights.total(2) == 4.0);
    CHECK(wc->weights.total(1) == 12.0);
    CHECK(wc->weights.total(0) == 24.0);
    CHECK(wc->weights.total(-1) == 24.0);

    ValidationReport rep = validate(*wc);
    CHECK(rep.ok(0.0));
    CHECK(rep.max_recursion_residual == 0.0);
    CHECK(rep.max_total_residual == 0.0);
    CHECK(X.count(-1) == 1);
}

TEST_CASE("explicit top weights propagate by coface sums") {
    auto wc = build_weighted({TopFace{{0, 1, 2}, 1.0}, TopFace{{0, 1, 3}, 2.0},
                              TopFace{{0, 2, 3}, 3.0},
                              TopFace{{1, 2, 3}, 4.0}});
    const auto& X = wc->complex;
    CHECK(wc->weights(1, X.index_of(Simplex{0, 1})) == 3.0);
    CHECK(wc->weights(1, X.index_of(Simplex{2, 3})) == 7.0);
    CHECK(wc->weights(0, X.index_of(Simplex{0})) == 12.0);
    CHECK(wc->weights(0, X.index_of(Simplex{3})) == 18.0);
    CHECK(wc->weights(-1, 0) == 60.0);
    CHECK(validate(*wc).ok(1e-14));

    CHECK_THROWS_AS(build_weighted({TopFace{{0, 1, 2}, -1.0}}), DomainError);
    CHECK_THROWS_AS(build_weighted({TopFace{{0, 1, 2}, 0.0}}), DomainError);
    CHECK_THROWS_AS(
        build_weighted({TopFace{{0, 1, 2}, 1.0}, TopFace{{0, 1, 2}, 2.0}}),
        DuplicateFaceError);
}

TEST_CASE("links inherit weights from the parent complex") {
    auto wc = build_homogeneous({Simplex{0, 1, 2}, Simplex{0, 1, 3},
                                 Simplex{0, 2, 3}, Simplex{1, 2, 3}});

    SUBCASE("vertex link is a weighted cycle") {
        Link link = link_of(wc, Simplex{0});
        CHECK(link.base_dim == 0);
        CHECK(link.space->complex.dimension() == 1);
        CHECK(link.space->complex.count(0) == 3);
        CHECK(link.space->complex.count(1) == 3);
        // m_t(edge) = m(t union edge) = 1, m_t(vertex) = 2.
        CHECK(link.space->weights(1, 0) == 1.0);
        CHECK(link.space->weights(0, 0) == 2.0);
        CHECK(validate(*link.space).ok(0.0));

        const auto& parent_of_edges = link.parent[2];
        for (std::size_t i = 0; i < parent_of_edges.size(); ++i) {
            Simplex lifted = Simplex{0}.unite(
                link.space->complex.face(1, static_cast<int>(i)));
            CHECK(wc->complex.index_of(lifted) == parent_of_edges[i]);
        }
    }

    SUBCASE("empty-face link reproduces the complex") {
        Link link = link_of(wc, Simplex{});
        CHECK(link.space->complex.count(2) == 4);
        CHECK(link.parent[3] == std::vector<int>{0, 1, 2, 3});
    }

    SUBCASE("bad bases are rejected") {
        CHECK_THROWS_AS(link_of(wc, Simplex{0, 4}), MissingFaceError);
        CHECK_THROWS_AS(link_of(wc, Simplex{0, 1, 2}), DimensionError);
    }
}

TEST_CASE("exact combinatorics helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == 2432902008176640000LL);
    CHECK_THROWS_AS(factorial(21), DomainError);
    CHECK_THROWS_AS(factorial(-1), DomainError);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("parallel_for covers every index and propagates errors") {
    std::vector<int> out(1000, 0);
    parallel_for(1000, [&](int i) { out[i] = i; });
    for (int i = 0; i < 1000; ++i) CHECK(out[i] == i);

    CHECK_THROWS_AS(parallel_for(100,
                                 [](int i) {
                                     if (i == 37) {
                                         throw DomainError("boom");
                                     }
                                 }),
                    DomainError);
}

TEST_CASE("pinned random primitives replay exactly") {
    rng::Engine a(5);
    rng::Engine b(5);
    for (int i = 0; i < 100; ++i) {
        double ua = rng::unit(a);
        double ub = rng::unit(b);
        CHECK(ua == ub);
        CHECK(ua >= 0.0);
        CHECK(ua < 1.0);
    }
    for (int i = 0; i < 100; ++i) {
        CHECK(rng::below(a, 17) < 17);
        rng::below(b, 17);
    }
    std::vector<int> xs{0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<int> ys = xs;
    rng::shuffle(xs.begin(), xs.end(), a);
    rng::shuffle(ys.begin(), ys.end(), b);
    CHECK(xs == ys);
}
