#include "hdx/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "hdx/operators.hpp"
#include "hdx/parallel.hpp"

namespace hdx {

bool one_skeleton_connected(const SimplicialComplex& X) {
    const int nv = X.count(0);
    if (nv == 0) return false;
    if (X.dimension() < 1) return nv == 1;
    std::vector<int> stack{0};
    std::vector<bool> seen(nv, false);
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : X.coface_indices(0, v)) {
            for (int u : X.facet_indices(1, e)) {
                if (!seen[u]) {
                    seen[u] = true;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
    }
    return reached == nv;
}

LinkSpectrum link_spectrum(const Link& link) {
    if (link.space->complex.dimension() < 1) {
        throw DimensionError("link spectrum needs a link of dimension >= 1");
    }
    Eigen::VectorXd ev = weighted_spectrum(nonlazy_upper(link.space, 0));
    LinkSpectrum out;
    out.mu = ev[ev.size() - 2];
    out.nu = ev[0];
    out.connected = one_skeleton_connected(link.space->complex);
    return out;
}

SpectralProfile profile(const WeightedComplexPtr& space) {
    const SimplicialComplex& X = space->complex;
    const int n = X.dimension();
    if (n < 1) {
        throw DimensionError("the profile needs a complex of dimension >= 1");
    }
    SpectralProfile prof;
    prof.n = n;
    prof.levels.resize(n);
    for (int k = 0; k <= n - 1; ++k) {
        ProfileLevel& lv = prof.levels[k];
        lv.k = k;
        lv.links.resize(X.count(k - 1));
        parallel_for(X.count(k - 1), [&](int i) {
            LinkSpectrum s = link_spectrum(link_of(space, X.face(k - 1, i)));
            s.base_index = i;
            lv.links[i] = s;
        });
        lv.mu = lv.links[0].mu;
        lv.nu = lv.links[0].nu;
        lv.argmax_base = lv.argmin_base = 0;
        for (int i = 1; i < static_cast<int>(lv.links.size()); ++i) {
            if (lv.links[i].mu > lv.mu) {
                lv.mu = lv.links[i].mu;
                lv.argmax_base = i;
            }
            if (lv.links[i].nu < lv.nu) {
                lv.nu = lv.links[i].nu;
                lv.argmin_base = i;
            }
        }
        for (const auto& s : lv.links) {
            prof.all_links_connected = prof.all_links_connected && s.connected;
        }
        prof.lambda_one_sided = std::max(prof.lambda_one_sided, lv.mu);
        prof.lambda_two_sided = std::max(prof.lambda_two_sided, -lv.nu);
    }
    prof.lambda_one_sided = std::max(prof.lambda_one_sided, 0.0);
    prof.lambda_two_sided =
        std::max(prof.lambda_two_sided, prof.lambda_one_sided);
    return prof;
}

GarlandReport garland_terms(const Cochain& phi) {
    const int k = phi.k;
    const int n = phi.space->complex.dimension();
    if (k < 0 || k > n - 1) {
        throw DimensionError("localized corrections need 0 <= k <= n-1");
    }
    const SimplicialComplex& X = phi.space->complex;

    GarlandReport rep;
    rep.k = k;
    const int bases = X.count(k - 1);
    rep.per_base.resize(bases);
    std::vector<double> mus(bases), nus(bases), centered_sq(bases);
    parallel_for(bases, [&](int i) {
        Link link = link_of(phi.space, X.face(k - 1, i));
        Cochain loc = localize(link, phi);
        // The degree-zero lower walk averages against the link's weights.
        const Eigen::VectorXd& w = link.space->weights.level(0);
        double mean = w.dot(loc.values) / link.space->weights.total(0);
        Cochain centered{link.space, 0,
                         Eigen::VectorXd(loc.values.array() - mean)};
        centered_sq[i] = inner_product(centered, centered);
        Cochain walked = nonlazy_upper(link.space, 0).apply(centered);
        rep.per_base[i] = inner_product(walked, loc);
        LinkSpectrum s = link_spectrum(link);
        mus[i] = s.mu;
        nus[i] = s.nu;
    });
    rep.total = 0.0;
    for (double t : rep.per_base) rep.total += t;
    double projected_sq = 0.0;
    for (double p : centered_sq) projected_sq += p;
    rep.mu = *std::max_element(mus.begin(), mus.end());
    rep.nu = *std::min_element(nus.begin(), nus.end());

    double d_sq = norm_sq(differential(phi.space, k).apply(phi));
    double ds_sq = norm_sq(codifferential(phi.space, k - 1).apply(phi));
    double phi_sq = norm_sq(phi);
    double rhs = ds_sq + phi_sq + rep.total;
    double denom = std::max({std::abs(d_sq), std::abs(rhs), 1e-300});
    rep.identity_residual = std::abs(d_sq - rhs) / denom;

    // Sharp bounds act on the centered localized energy. Relaxing that
    // energy to (k + 1) * ||phi||^2 keeps the direction of the upper bound
    // only for mu >= 0, so mu is clamped there; nu is never positive.
    const double slack = 1e-10 * std::max(1.0, phi_sq) * (k + 1);
    rep.upper_bound_ok =
        rep.total <= rep.mu * projected_sq + slack &&
        rep.total <= (k + 1) * std::max(rep.mu, 0.0) * phi_sq + slack;
    rep.lower_bound_ok = rep.total >= rep.nu * projected_sq - slack &&
                         rep.total >= (k + 1) * rep.nu * phi_sq - slack;
    return rep;
}

DescentReport check_descent(const SpectralProfile& prof, double tol) {
    DescentReport rep;
    rep.applicable = prof.all_links_connected && prof.n >= 2;
    if (!rep.applicable) return rep;
    const int n = prof.n;

    for (int k = 0; k <= n - 2; ++k) {
        const double mu_next = prof.levels[k + 1].mu;
        DescentStep smu{k, prof.levels[k].mu, 0.0, false, true};
        if (1.0 - mu_next <= 0.0) {
            smu.vacuous = true;
        } else {
            smu.rhs = mu_next / (1.0 - mu_next);
            smu.ok = smu.lhs <= smu.rhs + tol;
        }
        rep.step_mu.push_back(smu);

        const double nu_next = prof.levels[k + 1].nu;
        DescentStep snu{k, prof.levels[k].nu, nu_next / (1.0 - nu_next),
                        false, true};
        snu.ok = snu.lhs >= snu.rhs - tol;
        rep.step_nu.push_back(snu);

        const double mu_top = prof.levels[n - 1].mu;
        const double denom_mu = 1.0 - (n - 1 - k) * mu_top;
        DescentStep tmu{k, prof.levels[k].mu, 0.0, false, true};
        if (denom_mu <= 0.0) {
            tmu.vacuous = true;
        } else {
            tmu.rhs = mu_top / denom_mu;
            tmu.ok = tmu.lhs <= tmu.rhs + tol;
        }
        rep.top_mu.push_back(tmu);

        const double nu_top = prof.levels[n - 1].nu;
        const double denom_nu = 1.0 - (n - 1 - k) * nu_top;
        DescentStep tnu{k, prof.levels[k].nu, 0.0, false, true};
        if (denom_nu <= 0.0) {
            tnu.vacuous = true;
        } else {
            tnu.rhs = nu_top / denom_nu;
            tnu.ok = tnu.lhs >= tnu.rhs - tol;
        }
        rep.top_nu.push_back(tnu);
    }

    // Invert lambda' = lambda / (1 + (n-1) lambda): when the top-level gap
    // clears lambda', the whole profile is one-sided lambda.
    const double mu_top = prof.levels[n - 1].mu;
    if (mu_top <= 0.0) {
        rep.lambda_from_top = 0.0;
    } else if (1.0 - (n - 1) * mu_top > 0.0) {
        rep.lambda_from_top = mu_top / (1.0 - (n - 1) * mu_top);
    }
    if (rep.lambda_from_top) {
        rep.lambda_consistent =
            prof.lambda_one_sided <= *rep.lambda_from_top + tol;
    }
    return rep;
}

}  // namespace hdx
