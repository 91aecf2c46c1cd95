#pragma once

#include <string>
#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/operators.hpp"
#include "hdx/spectra.hpp"

namespace hdx {

/** A nonempty set of k-faces, held as canonical indices. */
struct FaceSet {
    int k = 0;
    std::vector<int> faces;
};

/** Resolves vertex lists to canonical indices, rejecting strangers,
 *  duplicates, and the empty set. */
FaceSet make_face_set(const WeightedComplexPtr& space, int k,
                      const std::vector<Simplex>& members);

/** The indicator cochain of a set. */
Cochain indicator(const WeightedComplexPtr& space, const FaceSet& A);

/**
 * Local thinness of a set A of k-faces:
 *   F(A) = max over t in A of
 *          1/(k+1) sum over facets e of t of
 *          (1/m(e)) sum over t' in A containing e of m(t').
 * Always in (0, 1]; equals 1 when A = X(k).
 */
double local_thinness(const WeightedComplex& wc, const FaceSet& A);

/** One verified bound instance. */
struct MixingCheck {
    std::string theorem_id;
    int k = 0;
    double achieved = 0.0;
    double bound = 0.0;
    double margin = 0.0;  // bound - achieved (sign flipped for lower bounds)
    bool pass = false;
    /** Advisory rows are reported but never escalate to a failure. */
    bool advisory = false;
};

/** Identifiers accepted by check_mixing_bounds. */
inline constexpr const char* kBoundLazyUpper = "6.5.1";
inline constexpr const char* kBoundNonLazyNorm = "6.5.2";
inline constexpr const char* kBoundNonLazyBottom = "6.5.2-ip";
inline constexpr const char* kBoundNonLazyFinal = "6.6";
inline constexpr const char* kBoundBinary = "7.3";

/**
 * Spectral mixing bounds for every walk level of the complex.
 *
 *   6.5.1    second eigenvalue of the upper walk on the complement of the
 *            constants is at most (k+1)/(k+2) + (k+1) lambda_one_sided;
 *   6.5.2    the non-lazy walk norm there is at most
 *            k/(k+1) + (k+1) lambda_two_sided;
 *   6.5.2-ip its bottom eigenvalue is at least -(k+1) lambda_two_sided;
 *   6.6      advisory: the non-lazy norm is at most
 *            max(k/(k+1) + (k+1) lambda_one_sided,
 *                2(k+1) / (2(n-k-1) - 1)),
 *            emitted only where the second operand is positive.
 *
 * A 6.5.1 failure with its bound below one indicates a defect in the
 * operators or the profile and raises InternalError.
 */
std::vector<MixingCheck> check_mixing_bounds(
    const WeightedComplexPtr& space, const SpectralProfile& prof,
    const std::vector<std::string>& theorem_ids, double tol = 1e-10);

/** Indicator mixing through the upper walk. */
struct BinaryMixingCheck {
    int k = 0;
    double achieved = 0.0;   // |upper indicator| / |indicator|
    double thinness = 0.0;   // F(A)
    double bound = 0.0;      // 1/sqrt(k+2) + sqrt(F(A) + lambda_one_sided)
    bool pass = false;
};

/** Verifies |upper chi_A| <= (1/sqrt(k+2) + sqrt(F(A)+lambda)) |chi_A|. */
BinaryMixingCheck check_binary_mixing(const WeightedComplexPtr& space,
                                      const FaceSet& A,
                                      const SpectralProfile& prof,
                                      double tol = 1e-10);

}  // namespace hdx
