#pragma once

#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/spectra.hpp"

namespace hdx {

struct DecomposeOptions {
    enum class Solver {
        SvdThreshold,  // pseudoinverse, singular values under the cut dropped
        Ridge,         // Tikhonov-regularized least squares
    };
    Solver solver = Solver::SvdThreshold;
    /** Cut for the pseudoinverse, relative to the largest singular value. */
    double svd_rel_threshold = 1e-11;
    /** Ridge parameter, relative to the largest squared singular value. */
    double ridge_rel = 1e-12;
    /** Project the input into the complement of constants before starting;
     *  when false, an input off that subspace beyond c0_tolerance throws. */
    bool project_input = true;
    double c0_tolerance = 1e-12;
};

/** One rung of the decomposition ladder. */
struct DecompositionLevel {
    int i = 0;
    /** The piece living in the kernel of the codifferential at degree i. */
    Cochain component;
    /** The carried cochain whose kernel part the component is. */
    Cochain intermediate;
    double energy = 0.0;       // |component|^2
    double correction = 0.0;   // localized correction sum of intermediate
    double c0_component = 0.0;
    double c0_intermediate = 0.0;
};

/**
 * The orthogonal ladder of a k-cochain: component i is a degree-i cochain
 * in the kernel of the degree-(i-1) codifferential, the pieces have
 * pairwise-independent energies, and two exact identities tie them to the
 * input:
 *   (1) |intermediate_i|^2 = sum of energies of components 0..i;
 *   (2) |d phi|^2 = sum of (k+1-i) energy_i  plus the correction sums.
 */
struct DecompositionResult {
    int k = 0;
    WeightedComplexPtr space;
    std::vector<DecompositionLevel> levels;  // index i = 0..k
    double dphi_sq = 0.0;                    // |d phi|^2, applied directly
    double identity1_residual = 0.0;         // worst over i
    double identity2_residual = 0.0;
};

/**
 * Decomposes phi (degree 0 <= k <= n-1, in the complement of constants)
 * by repeatedly splitting off the codifferential kernel and transporting
 * the image part one degree down through the minimum-norm preimage and
 * the operator square root of the up-down factorization.
 */
DecompositionResult decompose(const Cochain& phi,
                              const DecomposeOptions& opts = {});

/**
 * Applies the operator square root of (codifferential of differential) at
 * the degree of psi; used by the ladder to carry image parts down without
 * changing their norm: |result| = |d psi| exactly.
 */
Cochain apply_sqrt_updown(const Cochain& psi);

/** Independent re-verification of a ladder. */
struct DecompositionVerification {
    double identity1_residual = 0.0;
    double identity2_residual = 0.0;
    /** |phi|^2 versus the summed component energies. */
    double energy_residual = 0.0;
    double max_c0_residual = 0.0;
    /** Worst gap between each stored correction and its independent
     *  evaluation through differential energies. */
    double max_correction_residual = 0.0;
    /** Eigenvalue form of the energy bounds on |d phi|^2. */
    double upper_bound = 0.0;
    double lower_bound = 0.0;
    bool upper_ok = true;
    bool lower_ok = true;
};

DecompositionVerification verify_decomposition(
    const DecompositionResult& result, const SpectralProfile& prof,
    double tol = 1e-8);

}  // namespace hdx
