#include "hdx/cochain.hpp"

#include <cmath>
#include <limits>

#include "hdx/operators.hpp"

namespace hdx {

namespace {

void require_same_space(const Cochain& a, const Cochain& b) {
    if (a.space != b.space) {
        throw DomainError("cochains live on different complexes");
    }
    if (a.k != b.k) {
        throw DimensionError("cochain degrees differ: " + std::to_string(a.k) +
                             " vs " + std::to_string(b.k));
    }
}

double relative_gap(double lhs, double rhs) {
    double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) / denom;
}

}  // namespace

Cochain make_cochain(const WeightedComplexPtr& space, int k,
                     Eigen::VectorXd values) {
    if (!space) throw DomainError("cochain needs a complex");
    if (k < -1 || k > space->complex.dimension()) {
        throw DimensionError("no cochains at dimension " + std::to_string(k));
    }
    if (values.size() != space->complex.count(k)) {
        throw DimensionError("cochain has " + std::to_string(values.size()) +
                             " values but X(" + std::to_string(k) + ") has " +
                             std::to_string(space->complex.count(k)) +
                             " faces");
    }
    return Cochain{space, k, std::move(values)};
}

Cochain ones_cochain(const WeightedComplexPtr& space, int k) {
    return make_cochain(space, k,
                        Eigen::VectorXd::Ones(space->complex.count(k)));
}

Cochain zero_cochain(const WeightedComplexPtr& space, int k) {
    return make_cochain(space, k,
                        Eigen::VectorXd::Zero(space->complex.count(k)));
}

double inner_product(const Cochain& a, const Cochain& b) {
    require_same_space(a, b);
    const Eigen::VectorXd& w = a.space->weights.level(a.k);
    return (w.array() * a.values.array() * b.values.array()).sum();
}

double norm_sq(const Cochain& a) { return inner_product(a, a); }

Cochain project_c0(const Cochain& a) {
    const Eigen::VectorXd& w = a.space->weights.level(a.k);
    double mean = w.dot(a.values) / a.space->weights.total(a.k);
    return Cochain{a.space, a.k, a.values.array() - mean};
}

double c0_residual(const Cochain& a) {
    double nrm = std::sqrt(norm_sq(a));
    if (nrm == 0.0) return 0.0;
    const Eigen::VectorXd& w = a.space->weights.level(a.k);
    double pairing = w.dot(a.values);
    return std::abs(pairing) /
           (nrm * std::sqrt(a.space->weights.total(a.k)));
}

Cochain localize(const Link& link, const Cochain& phi) {
    if (phi.space->complex.index_of(link.base) < 0) {
        throw MissingFaceError("link base is not a face of the cochain's "
                               "complex");
    }
    int l = phi.k - link.base_dim - 1;
    if (l < -1 || l > link.space->complex.dimension()) {
        throw DimensionError(
            "cannot localize a degree-" + std::to_string(phi.k) +
            " cochain at a base of dimension " +
            std::to_string(link.base_dim));
    }
    const auto& parent = link.parent[l + 1];
    Eigen::VectorXd out(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) {
        out[i] = phi.values[parent[i]];
    }
    return Cochain{link.space, l, std::move(out)};
}

LocalizationResiduals check_localization_identities(const Cochain& phi,
                                                    int k) {
    const int l = phi.k;
    const int n = phi.space->complex.dimension();
    if (k < -1 || k >= l) {
        throw DimensionError("localization needs -1 <= k < l, got k=" +
                             std::to_string(k) + " l=" + std::to_string(l));
    }

    const SimplicialComplex& X = phi.space->complex;
    LocalizationResiduals res;

    Cochain dstar_phi = codifferential(phi.space, l - 1).apply(phi);

    double energy_sum = 0.0;
    double codiff_sum = 0.0;
    for (int i = 0; i < X.count(k); ++i) {
        Link link = link_of(phi.space, X.face(k, i));
        Cochain loc = localize(link, phi);
        energy_sum += norm_sq(loc);
        codiff_sum += norm_sq(
            codifferential(link.space, loc.k - 1).apply(loc));
    }
    res.energy = relative_gap(
        static_cast<double>(binomial(l + 1, k + 1)) * norm_sq(phi),
        energy_sum);
    res.codifferential = relative_gap(
        static_cast<double>(binomial(l, k + 1)) * norm_sq(dstar_phi),
        codiff_sum);

    if (l < n) {
        double lhs = norm_sq(differential(phi.space, l).apply(phi));
        double rhs = 0.0;
        const double lazy = static_cast<double>(l) / (l + 1);
        for (int i = 0; i < X.count(l - 1); ++i) {
            Link link = link_of(phi.space, X.face(l - 1, i));
            Cochain loc = localize(link, phi);
            rhs += norm_sq(differential(link.space, 0).apply(loc)) -
                   lazy * norm_sq(loc);
        }
        res.differential = relative_gap(lhs, rhs);
    }
    return res;
}

}  // namespace hdx
