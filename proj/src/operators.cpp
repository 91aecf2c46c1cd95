#include "hdx/operators.hpp"

#include <cmath>

namespace hdx {

namespace {

void require_level(const WeightedComplexPtr& space, int k, int lo, int hi,
                   const char* what) {
    if (!space) throw DomainError("operator needs a complex");
    if (k < lo || k > hi) {
        throw DimensionError(std::string(what) + " is defined for " +
                             std::to_string(lo) + " <= k <= " +
                             std::to_string(hi) + " on this complex, got " +
                             std::to_string(k));
    }
}

double frob_rel(const Eigen::MatrixXd& delta, const Eigen::MatrixXd& ref) {
    double d = ref.norm();
    return delta.norm() / (d > 0.0 ? d : 1.0);
}

}  // namespace

Cochain OperatorMatrix::apply(const Cochain& phi) const {
    if (phi.space != space) {
        throw DomainError("cochain lives on a different complex than the "
                          "operator");
    }
    if (phi.k != source_dim()) {
        throw DimensionError("operator expects degree " +
                             std::to_string(source_dim()) + ", got " +
                             std::to_string(phi.k));
    }
    return Cochain{space, target_dim(), mat * phi.values};
}

OperatorMatrix upper_walk(const WeightedComplexPtr& space, int k) {
    const int n = space->complex.dimension();
    require_level(space, k, 0, n - 1, "the upper walk");
    const SimplicialComplex& X = space->complex;
    const WeightFunction& m = space->weights;
    const int nk = X.count(k);
    const double step = 1.0 / (k + 2);

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(nk, nk);
    M.diagonal().setConstant(step);
    // Every off-diagonal pair with a common coface is a pair of distinct
    // facets of exactly one (k+1)-face, so filling by coface covers each
    // entry once.
    for (int s = 0; s < X.count(k + 1); ++s) {
        const auto& fac = X.facet_indices(k + 1, s);
        const double ms = m(k + 1, s);
        for (std::size_t a = 0; a < fac.size(); ++a) {
            for (std::size_t b = 0; b < fac.size(); ++b) {
                if (a == b) continue;
                M(fac[a], fac[b]) = ms * step / m(k, fac[a]);
            }
        }
    }
    return OperatorMatrix{OperatorKind::UpperWalk, k, space, std::move(M)};
}

OperatorMatrix lower_walk(const WeightedComplexPtr& space, int k) {
    const int n = space->complex.dimension();
    require_level(space, k, 0, n, "the lower walk");
    const SimplicialComplex& X = space->complex;
    const WeightFunction& m = space->weights;
    const int nk = X.count(k);
    const double step = 1.0 / (k + 1);

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(nk, nk);
    for (int t = 0; t < nk; ++t) {
        double diag = 0.0;
        for (int e : X.facet_indices(k, t)) {
            diag += m(k, t) / m(k - 1, e);
        }
        M(t, t) = diag * step;
    }
    // Distinct cofaces of a common facet intersect in exactly that facet.
    for (int e = 0; e < X.count(k - 1); ++e) {
        const auto& cof = X.coface_indices(k - 1, e);
        const double me = m(k - 1, e);
        for (std::size_t a = 0; a < cof.size(); ++a) {
            for (std::size_t b = 0; b < cof.size(); ++b) {
                if (a == b) continue;
                M(cof[a], cof[b]) = m(k, cof[b]) * step / me;
            }
        }
    }
    return OperatorMatrix{OperatorKind::LowerWalk, k, space, std::move(M)};
}

OperatorMatrix nonlazy_upper(const WeightedComplexPtr& space, int k) {
    OperatorMatrix up = upper_walk(space, k);
    Eigen::MatrixXd M =
        ((k + 2) * up.mat -
         Eigen::MatrixXd::Identity(up.mat.rows(), up.mat.cols())) /
        (k + 1);
    return OperatorMatrix{OperatorKind::NonLazyUpper, k, space, std::move(M)};
}

OperatorMatrix differential(const WeightedComplexPtr& space, int k) {
    const int n = space->complex.dimension();
    require_level(space, k, -1, n - 1, "the differential");
    const SimplicialComplex& X = space->complex;
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(X.count(k + 1), X.count(k));
    for (int s = 0; s < X.count(k + 1); ++s) {
        for (int t : X.facet_indices(k + 1, s)) {
            D(s, t) += 1.0;
        }
    }
    return OperatorMatrix{OperatorKind::Differential, k, space, std::move(D)};
}

OperatorMatrix codifferential(const WeightedComplexPtr& space, int k) {
    const int n = space->complex.dimension();
    require_level(space, k, -1, n - 1, "the codifferential");
    const SimplicialComplex& X = space->complex;
    const WeightFunction& m = space->weights;
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(X.count(k), X.count(k + 1));
    for (int s = 0; s < X.count(k + 1); ++s) {
        const double ms = m(k + 1, s);
        for (int t : X.facet_indices(k + 1, s)) {
            D(t, s) += ms / m(k, t);
        }
    }
    return OperatorMatrix{OperatorKind::Codifferential, k, space,
                          std::move(D)};
}

Eigen::MatrixXd upper_laplacian(const OperatorMatrix& nonlazy) {
    if (nonlazy.kind != OperatorKind::NonLazyUpper) {
        throw DomainError("upper_laplacian derives from the non-lazy walk");
    }
    return Eigen::MatrixXd::Identity(nonlazy.mat.rows(), nonlazy.mat.cols()) -
           nonlazy.mat;
}

Eigen::MatrixXd symmetrized(const OperatorMatrix& op) {
    if (!op.weighted_self_adjoint()) {
        throw DomainError("only walk operators symmetrize by conjugation");
    }
    const Eigen::VectorXd& w = op.space->weights.level(op.k);
    Eigen::VectorXd root = w.array().sqrt();
    Eigen::MatrixXd S =
        root.asDiagonal() * op.mat * root.cwiseInverse().asDiagonal();
    // The conjugate is symmetric in exact arithmetic; averaging removes
    // the last-bit asymmetry so downstream solvers see a symmetric input.
    return 0.5 * (S + S.transpose());
}

Eigen::VectorXd weighted_spectrum(const OperatorMatrix& op) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        symmetrized(op), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

C0Extremes spectrum_on_c0(const OperatorMatrix& op) {
    const Eigen::MatrixXd S = symmetrized(op);
    const int n = static_cast<int>(S.rows());
    if (n < 2) {
        throw DimensionError("the complement of constants is trivial on a "
                             "single face");
    }
    // Householder reflection sending e_0 to the unit vector along
    // D^(1/2) ones; its remaining columns span the complement exactly.
    const Eigen::VectorXd& w = op.space->weights.level(op.k);
    Eigen::VectorXd u = w.array().sqrt();
    u /= u.norm();
    Eigen::VectorXd v = u;
    v[0] += (u[0] >= 0.0 ? 1.0 : -1.0);
    v /= v.norm();
    Eigen::MatrixXd H =
        Eigen::MatrixXd::Identity(n, n) - 2.0 * v * v.transpose();
    Eigen::MatrixXd B = H.rightCols(n - 1);
    Eigen::MatrixXd T = B.transpose() * S * B;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        0.5 * (T + T.transpose()), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return C0Extremes{ev[n - 2], ev[0]};
}

FactorizationReport verify_factorizations(const WeightedComplexPtr& space,
                                          int k) {
    const int n = space->complex.dimension();
    require_level(space, k, 0, n, "factorization verification");
    FactorizationReport rep;
    rep.k = k;

    if (k <= n - 1) {
        OperatorMatrix up = upper_walk(space, k);
        OperatorMatrix d = differential(space, k);
        OperatorMatrix ds = codifferential(space, k);
        rep.updown_residual =
            frob_rel(ds.mat * d.mat - (k + 2) * up.mat, up.mat);
        rep.upper_row_sum_residual =
            (up.mat.rowwise().sum().array() - 1.0).abs().maxCoeff();
    }

    OperatorMatrix low = lower_walk(space, k);
    OperatorMatrix d_below = differential(space, k - 1);
    OperatorMatrix ds_below = codifferential(space, k - 1);
    rep.downup_residual =
        frob_rel(d_below.mat * ds_below.mat - (k + 1) * low.mat, low.mat);
    rep.lower_row_sum_residual =
        (low.mat.rowwise().sum().array() - 1.0).abs().maxCoeff();

    const Eigen::VectorXd& w_lo = space->weights.level(k - 1);
    const Eigen::VectorXd& w_hi = space->weights.level(k);
    Eigen::MatrixXd lhs = w_hi.asDiagonal() * d_below.mat;
    Eigen::MatrixXd rhs = (w_lo.asDiagonal() * ds_below.mat).transpose();
    rep.adjointness_residual = frob_rel(lhs - rhs, rhs);
    return rep;
}

DifferentialBound bound_from_differential_norm(const Cochain& phi,
                                               double tol) {
    const int k = phi.k;
    const int n = phi.space->complex.dimension();
    if (k < 0 || k > n - 1) {
        throw DimensionError("the contraction estimate needs 0 <= k <= n-1");
    }
    double phi_sq = norm_sq(phi);
    if (phi_sq == 0.0) {
        throw DomainError("the contraction estimate needs a nonzero cochain");
    }
    DifferentialBound out;
    out.eps = norm_sq(differential(phi.space, k).apply(phi)) / phi_sq;
    out.lhs = norm_sq(upper_walk(phi.space, k).apply(phi));
    out.rhs = out.eps / (k + 2) * phi_sq;
    out.pass = out.lhs <= out.rhs + tol * std::max(1.0, phi_sq);
    return out;
}

}  // namespace hdx
