#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hdx/simplex.hpp"

namespace hdx {

/**
 * A pure n-dimensional simplicial complex, stored as complete face lists
 * for every dimension from -1 (the empty face) up to n.
 *
 * Faces within a dimension are kept in lexicographic order of their vertex
 * lists; the position in that order is the face's canonical index, used by
 * every vector and matrix in the toolkit. Facet and coface incidence lists
 * are precomputed at construction. Instances are immutable.
 */
class SimplicialComplex {
public:
    /**
     * Builds the downward closure of the given top faces.
     *
     * Every top face must have the same dimension n >= 0 and no two may be
     * equal; the result is pure and closed by construction.
     *
     * @throws DimensionError  on ragged input or empty input
     * @throws DuplicateFaceError  on a repeated top face
     */
    static SimplicialComplex from_top_faces(const std::vector<Simplex>& tops);

    /** Dimension n of the complex. */
    int dimension() const { return n_; }

    /** Number of faces of dimension k, for -1 <= k <= n. */
    int count(int k) const { return static_cast<int>(level(k).size()); }

    /** All faces of dimension k in canonical (lexicographic) order. */
    const std::vector<Simplex>& faces(int k) const { return level(k); }

    const Simplex& face(int k, int index) const { return level(k)[index]; }

    /** Canonical index of `s` within dimension s.dim(), or -1 if absent. */
    int index_of(const Simplex& s) const;

    bool contains(const Simplex& s) const { return index_of(s) >= 0; }

    /**
     * Indices in X(k-1) of the k+1 facets of face `index` of X(k).
     * Facets appear in order of the deleted vertex position.
     */
    const std::vector<int>& facet_indices(int k, int index) const {
        return facets_[k + 1][index];
    }

    /** Indices in X(k+1) of the cofaces of face `index` of X(k). */
    const std::vector<int>& coface_indices(int k, int index) const {
        return cofaces_[k + 1][index];
    }

    /** Total number of faces over all dimensions, the empty face included. */
    std::int64_t total_faces() const;

private:
    const std::vector<Simplex>& level(int k) const;

    int n_ = 0;
    // faces_[k+1] holds X(k); faces_[0] is always the singleton {empty}.
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::vector<std::vector<int>>> facets_;
    std::vector<std::vector<std::vector<int>>> cofaces_;
};

/**
 * A positive weight for every face of a complex, indexed canonically.
 *
 * Balanced weights satisfy, for every face t of dimension k < n,
 *     m(t) = sum of m(s) over cofaces s of t,
 * which both constructors guarantee.
 */
class WeightFunction {
public:
    /**
     * Propagates the given top-dimensional weights down the complex via the
     * coface-sum recursion. All top weights must be positive.
     */
    static WeightFunction from_top_weights(const SimplicialComplex& X,
                                           const Eigen::VectorXd& top_weights);

    /**
     * The balanced weight induced by giving every top face weight one:
     *     m(t) = (n-k)! * #{top faces containing t}   for t of dimension k.
     * Values are accumulated in 64-bit integers, so they are exact.
     */
    static WeightFunction homogeneous(const SimplicialComplex& X);

    /** Adopts explicit per-dimension value vectors (used by links). */
    static WeightFunction from_values(std::vector<Eigen::VectorXd> values);

    double operator()(int k, int index) const { return w_[k + 1][index]; }

    /** All weights of dimension k as a vector in canonical face order. */
    const Eigen::VectorXd& level(int k) const { return w_[k + 1]; }

    /** m(X(k)): the sum of the weights of all k-faces. */
    double total(int k) const { return totals_[k + 1]; }

    int max_dim() const { return static_cast<int>(w_.size()) - 2; }

private:
    std::vector<Eigen::VectorXd> w_;
    std::vector<double> totals_;
};

/** A complex together with a weight function on it; the common currency of
 *  every operator and cochain in the toolkit. */
struct WeightedComplex {
    SimplicialComplex complex;
    WeightFunction weights;
};

using WeightedComplexPtr = std::shared_ptr<const WeightedComplex>;

/** One top face of a build request: vertex list plus weight. */
struct TopFace {
    VertexList vertices;
    double weight = 1.0;
};

/**
 * Builds a weighted complex from (face, weight) pairs. Omitted weights
 * default to one; weights must be positive.
 */
WeightedComplexPtr build_weighted(const std::vector<TopFace>& tops);

/** Convenience: closure of the given faces with homogeneous weights. */
WeightedComplexPtr build_homogeneous(const std::vector<Simplex>& tops);

/** Outcome of structural and weight-recursion validation. */
struct ValidationReport {
    bool closed = true;
    bool pure = true;
    bool weights_positive = true;
    /** Entry j is the max relative recursion residual at dimension j-1. */
    std::vector<double> recursion_residual;
    double max_recursion_residual = 0.0;
    /** Max relative deviation of m(X(k)) from its scaling across levels. */
    double max_total_residual = 0.0;
    std::vector<std::string> violations;

    bool ok(double tol = 1e-12) const {
        return closed && pure && weights_positive &&
               max_recursion_residual <= tol && max_total_residual <= tol;
    }
};

/**
 * Checks closure (every facet of every face is present), purity (every face
 * lies under some top face), weight positivity, the per-face coface-sum
 * recursion, and the cross-level totals
 *     m(X(k)) = (l+1)!/(k+1)! * m(X(l))   for all -1 <= k < l <= n.
 */
ValidationReport validate(const WeightedComplex& wc);

/**
 * The link of a base face t: the complex X_t whose faces are the sets e
 * with t and e disjoint and their union a face of X, weighted by
 * m_t(e) = m(t union e).
 */
struct Link {
    Simplex base;
    int base_dim = -1;
    WeightedComplexPtr space;
    /** parent[l+1][i]: canonical index in X(base_dim+l+1) of base union e,
     *  where e is face i of the link's dimension l. */
    std::vector<std::vector<int>> parent;
};

/**
 * Builds the link of `base`, which must be a face of dimension < n.
 * The link of the empty face reproduces the complex itself with identical
 * canonical indexing.
 *
 * @throws MissingFaceError  if `base` is not a face of X
 * @throws DimensionError    if `base` is top-dimensional
 */
Link link_of(const WeightedComplexPtr& wc, const Simplex& base);

/** Exact factorial as a 64-bit integer; valid through 20!. */
std::int64_t factorial(int n);

/** Exact binomial coefficient as a 64-bit integer. */
std::int64_t binomial(int n, int k);

}  // namespace hdx
