#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hdx/complex.hpp"
#include "hdx/mixing.hpp"

namespace hdx {

/** Parameters of a generated fixture, echoed into output metadata. */
struct GeneratorSpec {
    std::string kind;  // "complete" | "random-pure" | "regular-graph-matching"
    int m = 0;         // vertex count (complete, random-pure)
    int n = 0;         // dimension (complete, random-pure)
    int v = 0;         // vertex count (regular-graph-matching)
    int s = 0;         // requested degree (regular-graph-matching)
    double p = 1.0;    // keep probability (random-pure)
    std::uint64_t seed = 0;
    std::string rng_id;  // empty for deterministic constructions
};

/** Degree and survival statistics of the graph-based generator. */
struct GeneratorStats {
    int attempts = 0;
    double edge_survival = 1.0;  // surviving edges / built edges
    int min_degree = 0;
    double mean_degree = 0.0;
};

struct GeneratedComplex {
    WeightedComplexPtr space;
    GeneratorSpec spec;
    GeneratorStats stats;
    /** Greedy maximal matching (regular-graph-matching only). */
    std::optional<FaceSet> matching;
    /** Local thinness of the matching, when present. */
    double thinness = 0.0;
};

/**
 * The complete n-dimensional complex on m vertices (every (n+1)-subset a
 * top face) with homogeneous weights. Requires m >= n+1.
 */
GeneratedComplex complete_complex(int m, int n);

/**
 * Keeps each (n+1)-subset of m vertices independently with probability p,
 * closes downward, and weighs homogeneously. Draws are retried until every
 * (n-1)-face has at least two top cofaces and every link of dimension >= 1
 * is connected; a bounded retry budget guards the loop.
 *
 * Replays are exact: the same (m, n, p, seed) always yields the same
 * complex on any platform.
 */
GeneratedComplex random_pure_complex(int m, int n, double p,
                                     std::uint64_t seed);

/**
 * Draws an s-regular-within-tolerance graph on v vertices by pairing
 * vertex stubs (collapsing loops and parallel edges), keeps the edges that
 * lie in triangles, and returns the pure 2-complex of its triangles with
 * homogeneous weights together with a greedy maximal matching among the
 * surviving edges and that matching's local thinness.
 *
 * Requires v*s even, s >= 3, v > s. Draws are retried until every vertex
 * survives into a triangle and at least half the edges survive.
 */
GeneratedComplex regular_graph_matching(int v, int s, std::uint64_t seed);

}  // namespace hdx
