#pragma once

#include <Eigen/Dense>
#include <optional>

#include "hdx/complex.hpp"

namespace hdx {

/**
 * A real-valued function on the k-faces of a weighted complex, stored as a
 * vector in canonical face order. The inner product used throughout is
 *     <phi, psi> = sum over faces t of  m(t) phi(t) psi(t).
 */
struct Cochain {
    WeightedComplexPtr space;
    int k = 0;
    Eigen::VectorXd values;
};

/** Wraps a value vector after checking its length against X(k). */
Cochain make_cochain(const WeightedComplexPtr& space, int k,
                     Eigen::VectorXd values);

/** The all-ones cochain at dimension k. */
Cochain ones_cochain(const WeightedComplexPtr& space, int k);

/** The zero cochain at dimension k. */
Cochain zero_cochain(const WeightedComplexPtr& space, int k);

/** Weighted inner product; both arguments must share complex and degree. */
double inner_product(const Cochain& a, const Cochain& b);

double norm_sq(const Cochain& a);

/**
 * Weighted-orthogonal projection onto the complement of the constants:
 * subtracts the weighted mean, so the result pairs to zero with ones.
 */
Cochain project_c0(const Cochain& a);

/** |<phi, ones>| / (|phi| |ones|); zero for the zero cochain. */
double c0_residual(const Cochain& a);

/**
 * Restriction of a cochain to a link: phi_t(e) = phi(t union e).
 * The degree of phi must exceed the base dimension of the link; the result
 * lives on the link at degree  phi.k - base_dim - 1.
 */
Cochain localize(const Link& link, const Cochain& phi);

/** Residuals of the three localization energy identities at a chosen
 *  lower dimension k (see check_localization_identities). */
struct LocalizationResiduals {
    /** C(l+1, k+1) |phi|^2  vs  sum over t in X(k) of |phi_t|^2. */
    double energy = 0.0;
    /** C(l, k+1) |d* phi|^2  vs  sum over t of |d*_t phi_t|^2. */
    double codifferential = 0.0;
    /** |d phi|^2  vs  sum over t in X(l-1) of
     *  |d_t phi_t|^2 - l/(l+1) |phi_t|^2; absent when l = n. */
    std::optional<double> differential;
};

/**
 * Evaluates both sides of the localization identities for an l-cochain and
 * every base face of dimension k, returning relative residuals.
 * Requires -1 <= k < l.
 */
LocalizationResiduals check_localization_identities(const Cochain& phi, int k);

}  // namespace hdx
