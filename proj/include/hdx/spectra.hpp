#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"

namespace hdx {

/** Spectral summary of one link's degree-zero non-lazy walk. */
struct LinkSpectrum {
    int base_index = -1;   // canonical index of the base face
    double mu = 0.0;       // second-largest eigenvalue
    double nu = 0.0;       // smallest eigenvalue
    bool connected = true; // one-skeleton connectivity of the link
};

/** Aggregate over all base faces of one dimension. */
struct ProfileLevel {
    int k = 0;             // walk level certified by these links
    double mu = 0.0;       // max of link mu over bases in X(k-1)
    double nu = 0.0;       // min of link nu
    int argmax_base = -1;
    int argmin_base = -1;
    std::vector<LinkSpectrum> links;
};

/**
 * The local spectral profile of a weighted complex: one level per walk
 * dimension k in [0, n-1], each aggregating the link spectra of every base
 * face in X(k-1). The classification values summarize expansion quality:
 * every walk bound in the toolkit is driven by these two numbers.
 */
struct SpectralProfile {
    int n = 0;
    std::vector<ProfileLevel> levels;
    bool all_links_connected = true;
    /** max(0, max over levels of mu). */
    double lambda_one_sided = 0.0;
    /** max(lambda_one_sided, max over levels of -nu). */
    double lambda_two_sided = 0.0;
};

/** True when the one-skeleton of the complex is connected. */
bool one_skeleton_connected(const SimplicialComplex& X);

/**
 * mu and nu of a single link of dimension >= 1. A disconnected link
 * reports mu = 1 (up to solver precision) and is flagged, not rejected.
 */
LinkSpectrum link_spectrum(const Link& link);

/** Builds the full profile; link eigenproblems run in parallel. */
SpectralProfile profile(const WeightedComplexPtr& space);

/** Localized energy correction of one k-cochain. */
struct GarlandReport {
    int k = 0;
    /** Term <nonlazy (id - lower) phi_t, phi_t> per base t in X(k-1). */
    std::vector<double> per_base;
    double total = 0.0;
    /** Relative residual of
     *  |d phi|^2 = |d* phi|^2 + |phi|^2 + total. */
    double identity_residual = 0.0;
    double mu = 0.0;  // max link mu over the bases
    double nu = 0.0;  // min link nu
    /** total <= (k+1) mu |phi|^2 and total >= (k+1) nu |phi|^2. */
    bool upper_bound_ok = false;
    bool lower_bound_ok = false;
};

/**
 * Evaluates the localized correction sum for phi (degree 0 <= k <= n-1),
 * its energy identity, and the eigenvalue bounds on the sum.
 */
GarlandReport garland_terms(const Cochain& phi);

/** One inequality instance in a descent chain. */
struct DescentStep {
    int k = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    /** The bound degenerates (non-positive denominator) and claims
     *  nothing at this k. */
    bool vacuous = false;
    bool ok = true;
};

/**
 * Consequences of the one-step descent bounds
 *     mu_k <= mu_{k+1} / (1 - mu_{k+1}),
 *     nu_k >= nu_{k+1} / (1 - nu_{k+1}),
 * their iterated top-level form, and the sufficient-condition cross-check
 * that converts the top-level gap into a certified lambda.
 */
struct DescentReport {
    bool applicable = false;   // requires every link connected and n >= 2
    std::vector<DescentStep> step_mu;
    std::vector<DescentStep> step_nu;
    std::vector<DescentStep> top_mu;   // bound via mu_{n-1} alone
    std::vector<DescentStep> top_nu;
    /** Smallest lambda certified one-sided by mu_{n-1} through the chain;
     *  absent when the denominator degenerates. */
    std::optional<double> lambda_from_top;
    bool lambda_consistent = true;  // profile lambda <= certified lambda
};

DescentReport check_descent(const SpectralProfile& prof,
                            double tol = 1e-10);

}  // namespace hdx
