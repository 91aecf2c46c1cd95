#include "hdx/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hdx/rng.hpp"
#include "hdx/spectra.hpp"

namespace hdx {

namespace {

/** All (r+1)-subsets of {0..m-1} in lexicographic order. */
std::vector<Simplex> all_subsets(int m, int r) {
    std::vector<Simplex> out;
    VertexList cur(r + 1);
    // Iterative odometer over sorted index tuples.
    for (int i = 0; i <= r; ++i) cur[i] = i;
    while (true) {
        out.push_back(Simplex::presorted(cur));
        int pos = r;
        while (pos >= 0 && cur[pos] == m - (r + 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i <= r; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

bool all_links_connected(const WeightedComplexPtr& space) {
    const SimplicialComplex& X = space->complex;
    if (!one_skeleton_connected(X)) return false;
    for (int k = 0; k <= X.dimension() - 2; ++k) {
        for (int i = 0; i < X.count(k); ++i) {
            Link link = link_of(space, X.face(k, i));
            if (!one_skeleton_connected(link.space->complex)) return false;
        }
    }
    return true;
}

}  // namespace

GeneratedComplex complete_complex(int m, int n) {
    if (n < 0) throw DomainError("dimension must be non-negative");
    if (m < n + 1) {
        throw DomainError("a complete complex of dimension " +
                          std::to_string(n) + " needs at least " +
                          std::to_string(n + 1) + " vertices");
    }
    GeneratedComplex out;
    out.space = build_homogeneous(all_subsets(m, n));
    out.spec.kind = "complete";
    out.spec.m = m;
    out.spec.n = n;
    return out;
}

GeneratedComplex random_pure_complex(int m, int n, double p,
                                     std::uint64_t seed) {
    if (n < 1) throw DomainError("dimension must be at least 1");
    if (m < n + 2) {
        throw DomainError("need at least n+2 vertices for coface coverage");
    }
    if (!(p > 0.0) || p > 1.0) {
        throw DomainError("keep probability must lie in (0, 1]");
    }
    const std::vector<Simplex> candidates = all_subsets(m, n);
    rng::Engine engine(seed);
    constexpr int kMaxAttempts = 500;

    for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
        std::vector<Simplex> keep;
        keep.reserve(candidates.size());
        for (const auto& c : candidates) {
            if (rng::unit(engine) < p) keep.push_back(c);
        }
        if (keep.empty()) continue;
        if (keep[0].dim() != n) continue;  // unreachable; candidates are n-dim

        WeightedComplexPtr space = build_homogeneous(keep);
        const SimplicialComplex& X = space->complex;
        if (X.count(0) != m) continue;  // an isolated vertex dropped out

        bool covered = true;
        for (int i = 0; i < X.count(n - 1) && covered; ++i) {
            covered = X.coface_indices(n - 1, i).size() >= 2;
        }
        if (!covered) continue;
        if (!all_links_connected(space)) continue;

        GeneratedComplex out;
        out.space = std::move(space);
        out.spec.kind = "random-pure";
        out.spec.m = m;
        out.spec.n = n;
        out.spec.p = p;
        out.spec.seed = seed;
        out.spec.rng_id = rng::kAlgorithmId;
        out.stats.attempts = attempt;
        return out;
    }
    throw GenerationError(
        "no draw met the coverage and connectivity requirements within " +
        std::to_string(kMaxAttempts) + " attempts (m=" + std::to_string(m) +
        ", n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

GeneratedComplex regular_graph_matching(int v, int s, std::uint64_t seed) {
    if (s < 3) throw DomainError("degree must be at least 3");
    if (v <= s) throw DomainError("need more vertices than the degree");
    if ((static_cast<std::int64_t>(v) * s) % 2 != 0) {
        throw DomainError("v*s must be even to pair all stubs");
    }
    rng::Engine engine(seed);
    constexpr int kMaxAttempts = 200;

    for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
        // Configuration pairing with loops and parallel edges collapsed.
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(v) * s);
        for (int u = 0; u < v; ++u) {
            for (int j = 0; j < s; ++j) stubs.push_back(u);
        }
        rng::shuffle(stubs.begin(), stubs.end(), engine);
        std::set<std::pair<int, int>> edges;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) continue;
            edges.insert({std::min(a, b), std::max(a, b)});
        }

        std::vector<std::vector<int>> adj(v);
        for (const auto& [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& row : adj) std::sort(row.begin(), row.end());

        // Triangles, lexicographically smallest vertex first.
        std::vector<Simplex> triangles;
        for (const auto& [a, b] : edges) {
            std::vector<int> common;
            std::set_intersection(adj[a].begin(), adj[a].end(),
                                  adj[b].begin(), adj[b].end(),
                                  std::back_inserter(common));
            for (int c : common) {
                if (c > b) triangles.push_back(Simplex{a, b, c});
            }
        }
        if (triangles.empty()) continue;

        std::set<std::pair<int, int>> surviving;
        for (const auto& t : triangles) {
            surviving.insert({t[0], t[1]});
            surviving.insert({t[0], t[2]});
            surviving.insert({t[1], t[2]});
        }
        std::vector<int> degree(v, 0);
        for (const auto& [a, b] : surviving) {
            ++degree[a];
            ++degree[b];
        }
        int min_degree = *std::min_element(degree.begin(), degree.end());
        double survival =
            static_cast<double>(surviving.size()) / edges.size();
        // Tolerance gate: pruning must keep every vertex and most edges,
        // or the draw is not meaningfully s-regular any more.
        if (min_degree < 2 || survival < 0.5) continue;

        WeightedComplexPtr space = build_homogeneous(triangles);

        // Greedy maximal matching over surviving edges in canonical order.
        std::vector<bool> used(v, false);
        std::vector<Simplex> matched;
        for (const auto& e : space->complex.faces(1)) {
            if (!used[e[0]] && !used[e[1]]) {
                used[e[0]] = used[e[1]] = true;
                matched.push_back(e);
            }
        }

        GeneratedComplex out;
        out.space = space;
        out.spec.kind = "regular-graph-matching";
        out.spec.v = v;
        out.spec.s = s;
        out.spec.seed = seed;
        out.spec.rng_id = rng::kAlgorithmId;
        out.stats.attempts = attempt;
        out.stats.edge_survival = survival;
        out.stats.min_degree = min_degree;
        out.stats.mean_degree =
            std::accumulate(degree.begin(), degree.end(), 0.0) / v;
        out.matching = make_face_set(space, 1, matched);
        out.thinness = local_thinness(*space, *out.matching);
        return out;
    }
    throw GenerationError(
        "no draw survived triangle pruning within " +
        std::to_string(kMaxAttempts) + " attempts (v=" + std::to_string(v) +
        ", s=" + std::to_string(s) + ")");
}

}  // namespace hdx
