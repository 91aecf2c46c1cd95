#pragma once

#include <Eigen/Dense>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"

namespace hdx {

enum class OperatorKind {
    UpperWalk,       // one step up to a coface, then back down
    LowerWalk,       // one step down to a facet, then back up
    NonLazyUpper,    // upper walk with the lazy diagonal removed
    Differential,    // signless sum over facets
    Codifferential,  // weighted adjoint of the differential
};

/**
 * A dense matrix acting on cochains of a fixed weighted complex, tagged
 * with its kind and level. Rows and columns follow canonical face order.
 *
 * The three walk kinds are row-stochastic and self-adjoint in the weighted
 * inner product; Differential and Codifferential form an adjoint pair.
 */
struct OperatorMatrix {
    OperatorKind kind;
    /** Walks act on X(k); Differential maps X(k) to X(k+1) and
     *  Codifferential maps X(k+1) back to X(k). */
    int k = 0;
    WeightedComplexPtr space;
    Eigen::MatrixXd mat;

    int source_dim() const {
        return kind == OperatorKind::Codifferential ? k + 1 : k;
    }
    int target_dim() const {
        return kind == OperatorKind::Differential ? k + 1 : k;
    }
    bool weighted_self_adjoint() const {
        return kind == OperatorKind::UpperWalk ||
               kind == OperatorKind::LowerWalk ||
               kind == OperatorKind::NonLazyUpper;
    }

    Cochain apply(const Cochain& phi) const;
};

/**
 * The upper random walk on X(k), 0 <= k <= dim-1. Entry (t, t') holds
 * m(t union t') / ((k+2) m(t)) when the union is a (k+1)-face, the
 * diagonal holds 1/(k+2), and all other entries vanish.
 */
OperatorMatrix upper_walk(const WeightedComplexPtr& space, int k);

/**
 * The lower random walk on X(k), 0 <= k <= dim. Off-diagonal entries hold
 * m(t') / ((k+1) m(t intersect t')) when the intersection is a (k-1)-face;
 * the diagonal aggregates m(t) / ((k+1) m(e)) over the facets e of t.
 * At k = 0 this is the projection onto constants.
 */
OperatorMatrix lower_walk(const WeightedComplexPtr& space, int k);

/**
 * The non-lazy upper walk ((k+2) upper - identity) / (k+1); at k = 0 it is
 * the weighted normalized adjacency operator of the one-skeleton.
 */
OperatorMatrix nonlazy_upper(const WeightedComplexPtr& space, int k);

/** The signless differential: (d phi)(s) = sum of phi over facets of s,
 *  for -1 <= k <= dim-1. */
OperatorMatrix differential(const WeightedComplexPtr& space, int k);

/** Its weighted adjoint: (d* psi)(t) = sum over cofaces s of t of
 *  psi(s) m(s) / m(t). */
OperatorMatrix codifferential(const WeightedComplexPtr& space, int k);

/** The non-lazy upper Laplacian, derived as identity minus the walk. */
Eigen::MatrixXd upper_laplacian(const OperatorMatrix& nonlazy);

/**
 * Conjugates a weighted-self-adjoint walk by the square root of the weight
 * diagonal, yielding a symmetric matrix with the same spectrum.
 */
Eigen::MatrixXd symmetrized(const OperatorMatrix& op);

/** Full spectrum of a weighted-self-adjoint operator, ascending. */
Eigen::VectorXd weighted_spectrum(const OperatorMatrix& op);

struct C0Extremes {
    double largest = 0.0;
    double smallest = 0.0;
};

/**
 * Extremal eigenvalues of a walk restricted to the weighted-orthogonal
 * complement of the constants, computed exactly by deflating the
 * symmetrized matrix with a Householder basis of that complement.
 */
C0Extremes spectrum_on_c0(const OperatorMatrix& op);

/** Residuals tying the walks to the differentials at one level. */
struct FactorizationReport {
    int k = 0;
    /** |d* d - (k+2) upper|_F / |upper|_F; meaningful for k <= dim-1. */
    double updown_residual = 0.0;
    /** |d d* - (k+1) lower|_F / |lower|_F. */
    double downup_residual = 0.0;
    /** Adjointness of the pair: |W d - (d*)^T W'|_F relative, where W, W'
     *  are the weight diagonals of the two levels. */
    double adjointness_residual = 0.0;
    double upper_row_sum_residual = 0.0;
    double lower_row_sum_residual = 0.0;
    bool ok(double tol = 1e-10) const {
        return updown_residual <= tol && downup_residual <= tol &&
               adjointness_residual <= tol &&
               upper_row_sum_residual <= tol &&
               lower_row_sum_residual <= tol;
    }
};

/**
 * Verifies d* d = (k+2) upper (for k <= dim-1) and d d* = (k+1) lower
 * (for k <= dim) against independently assembled walks, plus adjointness
 * and stochasticity. Valid for 0 <= k <= dim.
 */
FactorizationReport verify_factorizations(const WeightedComplexPtr& space,
                                          int k);

struct DifferentialBound {
    double eps = 0.0;        // |d phi|^2 / |phi|^2
    double lhs = 0.0;        // |upper phi|^2
    double rhs = 0.0;        // eps / (k+2) |phi|^2
    bool pass = false;
};

/**
 * Checks the contraction estimate |upper phi|^2 <= eps/(k+2) |phi|^2 with
 * eps read off from the differential energy of phi itself.
 */
DifferentialBound bound_from_differential_norm(const Cochain& phi,
                                               double tol = 1e-10);

}  // namespace hdx
