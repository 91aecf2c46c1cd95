#include "hdx/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hdx {

FaceSet make_face_set(const WeightedComplexPtr& space, int k,
                      const std::vector<Simplex>& members) {
    if (members.empty()) {
        throw DomainError("a face set must be nonempty");
    }
    FaceSet A;
    A.k = k;
    A.faces.reserve(members.size());
    for (const auto& s : members) {
        if (s.dim() != k) {
            throw DimensionError("face " + s.to_string() +
                                 " is not of dimension " + std::to_string(k));
        }
        int idx = space->complex.index_of(s);
        if (idx < 0) {
            throw MissingFaceError("face " + s.to_string() +
                                   " is not in the complex");
        }
        A.faces.push_back(idx);
    }
    std::sort(A.faces.begin(), A.faces.end());
    if (std::adjacent_find(A.faces.begin(), A.faces.end()) != A.faces.end()) {
        throw DuplicateFaceError("face set lists a face twice");
    }
    return A;
}

Cochain indicator(const WeightedComplexPtr& space, const FaceSet& A) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(space->complex.count(A.k));
    for (int i : A.faces) v[i] = 1.0;
    return make_cochain(space, A.k, std::move(v));
}

double local_thinness(const WeightedComplex& wc, const FaceSet& A) {
    if (A.faces.empty()) throw DomainError("a face set must be nonempty");
    const SimplicialComplex& X = wc.complex;
    const WeightFunction& m = wc.weights;
    const int k = A.k;
    if (k < 0 || k > X.dimension()) {
        throw DimensionError("face set dimension out of range");
    }
    std::vector<bool> in_A(X.count(k), false);
    for (int i : A.faces) in_A[i] = true;

    double worst = 0.0;
    for (int t : A.faces) {
        double sum = 0.0;
        for (int e : X.facet_indices(k, t)) {
            double members = 0.0;
            for (int c : X.coface_indices(k - 1, e)) {
                if (in_A[c]) members += m(k, c);
            }
            sum += members / m(k - 1, e);
        }
        worst = std::max(worst, sum / (k + 1));
    }
    return worst;
}

namespace {

bool wants(const std::vector<std::string>& ids, const char* id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace

std::vector<MixingCheck> check_mixing_bounds(
    const WeightedComplexPtr& space, const SpectralProfile& prof,
    const std::vector<std::string>& theorem_ids, double tol) {
    for (const auto& id : theorem_ids) {
        if (id != kBoundLazyUpper && id != kBoundNonLazyNorm &&
            id != kBoundNonLazyBottom && id != kBoundNonLazyFinal) {
            throw DomainError("unknown bound identifier: " + id);
        }
    }
    const int n = space->complex.dimension();
    const double l1 = prof.lambda_one_sided;
    const double l2 = prof.lambda_two_sided;
    std::vector<MixingCheck> checks;

    for (int k = 0; k <= n - 1; ++k) {
        const bool need_upper = wants(theorem_ids, kBoundLazyUpper);
        const bool need_nonlazy = wants(theorem_ids, kBoundNonLazyNorm) ||
                                  wants(theorem_ids, kBoundNonLazyBottom) ||
                                  wants(theorem_ids, kBoundNonLazyFinal);
        C0Extremes up{}, nl{};
        if (need_upper) up = spectrum_on_c0(upper_walk(space, k));
        if (need_nonlazy) nl = spectrum_on_c0(nonlazy_upper(space, k));

        if (need_upper) {
            MixingCheck c;
            c.theorem_id = kBoundLazyUpper;
            c.k = k;
            c.achieved = up.largest;
            c.bound = static_cast<double>(k + 1) / (k + 2) + (k + 1) * l1;
            c.margin = c.bound - c.achieved;
            c.pass = c.achieved <= c.bound + tol;
            if (!c.pass && c.bound < 1.0) {
                std::ostringstream msg;
                msg << "upper-walk bound violated at k=" << k << ": achieved "
                    << c.achieved << " > bound " << c.bound
                    << "; the operators or the profile are inconsistent";
                throw InternalError(msg.str());
            }
            checks.push_back(std::move(c));
        }
        if (wants(theorem_ids, kBoundNonLazyNorm)) {
            MixingCheck c;
            c.theorem_id = kBoundNonLazyNorm;
            c.k = k;
            c.achieved = std::max(std::abs(nl.largest), std::abs(nl.smallest));
            c.bound = static_cast<double>(k) / (k + 1) + (k + 1) * l2;
            c.margin = c.bound - c.achieved;
            c.pass = c.achieved <= c.bound + tol;
            checks.push_back(std::move(c));
        }
        if (wants(theorem_ids, kBoundNonLazyBottom)) {
            MixingCheck c;
            c.theorem_id = kBoundNonLazyBottom;
            c.k = k;
            c.achieved = nl.smallest;
            c.bound = -(k + 1) * l2;
            c.margin = c.achieved - c.bound;
            c.pass = c.achieved >= c.bound - tol;
            checks.push_back(std::move(c));
        }
        if (wants(theorem_ids, kBoundNonLazyFinal) && 2 * (n - k - 1) > 1) {
            MixingCheck c;
            c.theorem_id = kBoundNonLazyFinal;
            c.k = k;
            c.advisory = true;
            c.achieved = std::max(std::abs(nl.largest), std::abs(nl.smallest));
            c.bound = std::max(
                static_cast<double>(k) / (k + 1) + (k + 1) * l1,
                2.0 * (k + 1) / (2 * (n - k - 1) - 1));
            c.margin = c.bound - c.achieved;
            c.pass = c.achieved <= c.bound + tol;
            checks.push_back(std::move(c));
        }
    }
    return checks;
}

BinaryMixingCheck check_binary_mixing(const WeightedComplexPtr& space,
                                      const FaceSet& A,
                                      const SpectralProfile& prof,
                                      double tol) {
    const int n = space->complex.dimension();
    if (A.k < 0 || A.k > n - 1) {
        throw DimensionError("indicator mixing needs a set at 0 <= k <= n-1");
    }
    BinaryMixingCheck out;
    out.k = A.k;
    Cochain chi = indicator(space, A);
    double chi_norm = std::sqrt(norm_sq(chi));
    out.achieved =
        std::sqrt(norm_sq(upper_walk(space, A.k).apply(chi))) / chi_norm;
    out.thinness = local_thinness(*space, A);
    out.bound = 1.0 / std::sqrt(static_cast<double>(A.k + 2)) +
                std::sqrt(out.thinness + prof.lambda_one_sided);
    out.pass = out.achieved <= out.bound + tol;
    return out;
}

}  // namespace hdx
