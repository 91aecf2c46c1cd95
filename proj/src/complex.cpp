#include "hdx/complex.hpp"

#include <algorithm>
#include <limits>

namespace hdx {

std::int64_t factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    if (n > 20) throw DomainError("factorial overflows 64 bits");
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

const std::vector<Simplex>& SimplicialComplex::level(int k) const {
    if (k < -1 || k > n_) {
        throw DimensionError("no faces of dimension " + std::to_string(k) +
                             " in a complex of dimension " +
                             std::to_string(n_));
    }
    return faces_[k + 1];
}

int SimplicialComplex::index_of(const Simplex& s) const {
    if (s.dim() < -1 || s.dim() > n_) return -1;
    const auto& lv = faces_[s.dim() + 1];
    auto it = std::lower_bound(lv.begin(), lv.end(), s);
    if (it != lv.end() && *it == s) {
        return static_cast<int>(it - lv.begin());
    }
    return -1;
}

std::int64_t SimplicialComplex::total_faces() const {
    std::int64_t t = 0;
    for (const auto& lv : faces_) t += static_cast<std::int64_t>(lv.size());
    return t;
}

SimplicialComplex SimplicialComplex::from_top_faces(
    const std::vector<Simplex>& tops) {
    if (tops.empty()) {
        throw DimensionError("a complex needs at least one top face");
    }
    const int n = tops[0].dim();
    if (n < 0) {
        throw DimensionError("top faces must have at least one vertex");
    }
    for (const auto& t : tops) {
        if (t.dim() != n) {
            throw DimensionError(
                "top faces have mixed dimensions: " + std::to_string(t.dim()) +
                " vs " + std::to_string(n));
        }
    }

    SimplicialComplex X;
    X.n_ = n;
    X.faces_.resize(n + 2);

    auto& top_level = X.faces_[n + 1];
    top_level = tops;
    std::sort(top_level.begin(), top_level.end());
    for (std::size_t i = 1; i < top_level.size(); ++i) {
        if (top_level[i] == top_level[i - 1]) {
            throw DuplicateFaceError("top face listed twice: " +
                                     top_level[i].to_string());
        }
    }

    // Downward closure, one dimension at a time.
    for (int k = n; k >= 0; --k) {
        std::vector<Simplex> below;
        below.reserve(X.faces_[k + 1].size() * (k + 1));
        for (const auto& f : X.faces_[k + 1]) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                below.push_back(f.facet(i));
            }
        }
        std::sort(below.begin(), below.end());
        below.erase(std::unique(below.begin(), below.end()), below.end());
        X.faces_[k] = std::move(below);
    }

    // Incidence tables. facets_[k+1][i][j] is the index of face i of X(k)
    // with its j-th vertex removed; cofaces_ is the transpose relation.
    X.facets_.resize(n + 2);
    X.cofaces_.resize(n + 2);
    for (int k = -1; k <= n; ++k) {
        X.facets_[k + 1].resize(X.faces_[k + 1].size());
        X.cofaces_[k + 1].resize(X.faces_[k + 1].size());
    }
    for (int k = 0; k <= n; ++k) {
        const auto& lv = X.faces_[k + 1];
        for (std::size_t i = 0; i < lv.size(); ++i) {
            auto& row = X.facets_[k + 1][i];
            row.reserve(lv[i].size());
            for (std::size_t j = 0; j < lv[i].size(); ++j) {
                int fi = X.index_of(lv[i].facet(j));
                row.push_back(fi);
                X.cofaces_[k][fi].push_back(static_cast<int>(i));
            }
        }
    }
    return X;
}

WeightFunction WeightFunction::from_values(std::vector<Eigen::VectorXd> values) {
    WeightFunction w;
    w.w_ = std::move(values);
    w.totals_.reserve(w.w_.size());
    for (const auto& v : w.w_) w.totals_.push_back(v.sum());
    return w;
}

WeightFunction WeightFunction::from_top_weights(
    const SimplicialComplex& X, const Eigen::VectorXd& top_weights) {
    const int n = X.dimension();
    if (top_weights.size() != X.count(n)) {
        throw DimensionError("expected one weight per top face");
    }
    for (int i = 0; i < top_weights.size(); ++i) {
        if (!(top_weights[i] > 0.0)) {
            throw DomainError("top face weights must be positive");
        }
    }
    std::vector<Eigen::VectorXd> w(n + 2);
    w[n + 1] = top_weights;
    for (int k = n - 1; k >= -1; --k) {
        Eigen::VectorXd lv = Eigen::VectorXd::Zero(X.count(k));
        for (int i = 0; i < X.count(k); ++i) {
            for (int c : X.coface_indices(k, i)) {
                lv[i] += w[k + 2][c];
            }
        }
        w[k + 1] = std::move(lv);
    }
    return from_values(std::move(w));
}

WeightFunction WeightFunction::homogeneous(const SimplicialComplex& X) {
    const int n = X.dimension();
    // The coface-sum recursion started from all-ones top weights stays
    // integral all the way down, so it is run in 64-bit integers.
    std::vector<std::vector<std::int64_t>> cnt(n + 2);
    cnt[n + 1].assign(X.count(n), 1);
    for (int k = n - 1; k >= -1; --k) {
        cnt[k + 1].assign(X.count(k), 0);
        for (int i = 0; i < X.count(k); ++i) {
            for (int c : X.coface_indices(k, i)) {
                cnt[k + 1][i] += cnt[k + 2][c];
            }
        }
    }
    std::vector<Eigen::VectorXd> w(n + 2);
    for (int k = -1; k <= n; ++k) {
        Eigen::VectorXd lv(X.count(k));
        for (int i = 0; i < X.count(k); ++i) {
            lv[i] = static_cast<double>(cnt[k + 1][i]);
        }
        w[k + 1] = std::move(lv);
    }
    return from_values(std::move(w));
}

WeightedComplexPtr build_weighted(const std::vector<TopFace>& tops) {
    std::vector<Simplex> faces;
    faces.reserve(tops.size());
    for (const auto& t : tops) {
        if (!(t.weight > 0.0)) {
            throw DomainError("top face weight must be positive, got " +
                              std::to_string(t.weight));
        }
        faces.emplace_back(t.vertices);
    }
    SimplicialComplex X = SimplicialComplex::from_top_faces(faces);
    // Weights arrive in input order; the complex stores faces sorted.
    Eigen::VectorXd top_w(X.count(X.dimension()));
    std::vector<bool> seen(top_w.size(), false);
    for (std::size_t i = 0; i < tops.size(); ++i) {
        int idx = X.index_of(faces[i]);
        if (seen[idx]) {
            throw DuplicateFaceError("top face listed twice: " +
                                     faces[i].to_string());
        }
        seen[idx] = true;
        top_w[idx] = tops[i].weight;
    }
    WeightFunction w = WeightFunction::from_top_weights(X, top_w);
    return std::make_shared<WeightedComplex>(
        WeightedComplex{std::move(X), std::move(w)});
}

WeightedComplexPtr build_homogeneous(const std::vector<Simplex>& tops) {
    SimplicialComplex X = SimplicialComplex::from_top_faces(tops);
    WeightFunction w = WeightFunction::homogeneous(X);
    return std::make_shared<WeightedComplex>(
        WeightedComplex{std::move(X), std::move(w)});
}

ValidationReport validate(const WeightedComplex& wc) {
    const SimplicialComplex& X = wc.complex;
    const WeightFunction& m = wc.weights;
    const int n = X.dimension();
    ValidationReport rep;
    rep.recursion_residual.assign(n + 1, 0.0);

    // Closure: every facet index must have resolved at construction; a
    // complex assembled by other means is re-checked face by face.
    for (int k = 0; k <= n; ++k) {
        for (int i = 0; i < X.count(k); ++i) {
            for (int fi : X.facet_indices(k, i)) {
                if (fi < 0) {
                    rep.closed = false;
                    rep.violations.push_back("missing facet of " +
                                             X.face(k, i).to_string());
                }
            }
        }
    }

    // Purity: a face is covered when some coface chain reaches dimension n.
    for (int k = n - 1; k >= -1; --k) {
        for (int i = 0; i < X.count(k); ++i) {
            if (X.coface_indices(k, i).empty()) {
                rep.pure = false;
                rep.violations.push_back("face " + X.face(k, i).to_string() +
                                         " has no coface");
            }
        }
    }

    for (int k = -1; k <= n; ++k) {
        for (int i = 0; i < X.count(k); ++i) {
            if (!(m(k, i) > 0.0)) {
                rep.weights_positive = false;
                rep.violations.push_back("non-positive weight on " +
                                         X.face(k, i).to_string());
            }
        }
    }

    // Coface-sum recursion, relative per dimension.
    for (int k = -1; k < n; ++k) {
        double worst = 0.0;
        for (int i = 0; i < X.count(k); ++i) {
            double sum = 0.0;
            for (int c : X.coface_indices(k, i)) sum += m(k + 1, c);
            double denom = std::max(std::abs(m(k, i)),
                                    std::numeric_limits<double>::min());
            worst = std::max(worst, std::abs(m(k, i) - sum) / denom);
        }
        rep.recursion_residual[k + 1] = worst;
        rep.max_recursion_residual =
            std::max(rep.max_recursion_residual, worst);
    }

    // Totals across any pair of levels: m(X(k)) = (l+1)!/(k+1)! m(X(l)).
    for (int k = -1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
            double expected =
                static_cast<double>(factorial(l + 1) / factorial(k + 1)) *
                m.total(l);
            double denom = std::max(std::abs(m.total(k)),
                                    std::numeric_limits<double>::min());
            rep.max_total_residual =
                std::max(rep.max_total_residual,
                         std::abs(m.total(k) - expected) / denom);
        }
    }
    return rep;
}

Link link_of(const WeightedComplexPtr& wc, const Simplex& base) {
    const SimplicialComplex& X = wc->complex;
    const int n = X.dimension();
    const int bd = base.dim();
    if (X.index_of(base) < 0) {
        throw MissingFaceError("link base " + base.to_string() +
                               " is not a face of the complex");
    }
    if (bd >= n) {
        throw DimensionError("link of a top-dimensional face is empty");
    }

    // Top faces of the link come from top faces of X containing the base;
    // purity of X makes their closure exactly the link.
    std::vector<Simplex> link_tops;
    for (const auto& t : X.faces(n)) {
        if (t.contains(base)) link_tops.push_back(t.minus(base));
    }
    SimplicialComplex L = SimplicialComplex::from_top_faces(link_tops);

    const int ld = L.dimension();
    std::vector<Eigen::VectorXd> w(ld + 2);
    std::vector<std::vector<int>> parent(ld + 2);
    for (int l = -1; l <= ld; ++l) {
        w[l + 1].resize(L.count(l));
        parent[l + 1].resize(L.count(l));
        for (int i = 0; i < L.count(l); ++i) {
            int pi = X.index_of(base.unite(L.face(l, i)));
            if (pi < 0) {
                throw InternalError("link face has no parent in the complex");
            }
            parent[l + 1][i] = pi;
            w[l + 1][i] = wc->weights(bd + l + 1, pi);
        }
    }

    Link link;
    link.base = base;
    link.base_dim = bd;
    link.space = std::make_shared<WeightedComplex>(
        WeightedComplex{std::move(L), WeightFunction::from_values(std::move(w))});
    link.parent = std::move(parent);
    return link;
}

}  // namespace hdx
