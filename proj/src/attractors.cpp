#include "pcdyn/attractors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace pcdyn {

std::vector<std::vector<int>> tau_cycles(const QuasiPartition& qp) {
    int m = qp.m();
    std::vector<int> color(m, 0);  // 0 unvisited, 1 in progress, 2 done
    std::vector<std::vector<int>> cycles;
    for (int start = 0; start < m; ++start) {
        if (color[start]) continue;
        std::vector<int> path;
        std::vector<int> pos(m, -1);
        int v = start;
        while (color[v] == 0) {
            color[v] = 1;
            pos[v] = static_cast<int>(path.size());
            path.push_back(v);
            v = qp.tau[v];
        }
        if (color[v] == 1) {
            // new cycle: path[pos[v]..]
            std::vector<int> cyc(path.begin() + pos[v], path.end());
            auto smallest = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), smallest, cyc.end());
            cycles.push_back(std::move(cyc));
        }
        for (int u : path) color[u] = 2;
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return cycles;
}

namespace {

bool all_affine(const PiecewiseContraction& f) {
    for (const BranchDescriptor& b : f.branches())
        if (b.kind() != BranchDescriptor::Kind::Affine) return false;
    return true;
}

// compose t -> alpha t + beta over an affine word
void compose_affine(const PiecewiseContraction& f, const std::vector<int>& word, Scalar& alpha, Scalar& beta) {
    Backend bk = f.backend();
    alpha = Scalar::one(bk);
    beta = Scalar::zero(bk);
    for (int d : word) {
        const BranchDescriptor& b = f.branches()[d - 1];
        alpha = b.coeff(1) * alpha;
        beta = b.coeff(1) * beta + b.coeff(0);
    }
}

bool orbit_is_stable(const PiecewiseContraction& f, const std::vector<Scalar>& pts) {
    for (const Scalar& p : pts)
        for (const Scalar& c : f.cuts())
            if (p == c) return false;
    return true;
}

// cycle points generated by the word's own branches from the fixed point
std::vector<Scalar> word_cycle_points(const PiecewiseContraction& f, const std::vector<int>& word,
                                      const Scalar& fixed) {
    std::vector<Scalar> pts{fixed};
    for (size_t j = 0; j + 1 < word.size(); ++j) pts.push_back(f.branches()[word[j] - 1].eval(pts.back()));
    return pts;
}

// true if every cycle point is in [0,1) and carries its word digit
bool cycle_word_consistent(const PiecewiseContraction& f, const std::vector<Scalar>& pts,
                           const std::vector<int>& word) {
    Backend bk = f.backend();
    Scalar zero = Scalar::zero(bk), one = Scalar::one(bk);
    for (size_t j = 0; j < pts.size(); ++j) {
        if (pts[j] < zero || pts[j] >= one) return false;
        if (f.branch_at(pts[j]) != word[j]) return false;
    }
    return true;
}

// reduce a verified cycle to its primitive period
void reduce_primitive(std::vector<Scalar>& pts, std::vector<int>& word) {
    int p = static_cast<int>(pts.size());
    for (int d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool repeats = true;
        for (int j = 0; j + d < p && repeats; ++j)
            if (pts[j] != pts[j + d]) repeats = false;
        if (repeats) {
            pts.resize(d);
            word.resize(d);
            return;
        }
    }
}

}  // namespace

LocateOrbitResult locate_periodic_orbit(const PiecewiseContraction& f, const QuasiPartition& qp,
                                        const std::vector<int>& cycle) {
    if (cycle.empty()) throw_domain("locate_periodic_orbit: empty cycle");
    Backend bk = f.backend();
    int p = static_cast<int>(cycle.size());
    std::vector<int> word;
    for (int l : cycle) word.push_back(qp.eta[l]);
    const Interval& J = qp.components[cycle.front()];

    Scalar fixed = Scalar::zero(bk);
    int solve_power = p;
    if (bk == Backend::Rational && all_affine(f)) {
        Scalar alpha, beta;
        compose_affine(f, word, alpha, beta);
        if (alpha.sign() < 0) {
            // orientation-reversing return map: square it (same fixed point)
            solve_power = 2 * p;
            Scalar a2 = alpha * alpha;
            Scalar b2 = alpha * beta + beta;
            fixed = b2 / (Scalar::one(bk) - a2);
        } else {
            fixed = beta / (Scalar::one(bk) - alpha);
        }
    } else {
        // iterate the word return map from the midpoint
        double kappa = f.kappa().to_double();
        double kp = std::pow(kappa, p);
        double stop = 1e-14 / (1.0 - kp);
        double t = J.midpoint().to_double();
        bool converged = false;
        for (long it = 0; it < 1000000 && !converged; ++it) {
            double t1 = t;
            for (int d : word) t1 = f.branches()[d - 1].eval_d(t1);
            converged = std::fabs(t1 - t) <= stop;
            t = t1;
        }
        if (!converged) throw_numeric("locate_periodic_orbit: return-map iteration did not converge");
        fixed = Scalar::floating(t);
    }

    bool inside = fixed > J.lo && fixed < J.hi;
    std::vector<Scalar> pts = word_cycle_points(f, word, fixed);
    if (!inside || !cycle_word_consistent(f, pts, word))
        return PhantomAttractor{fixed, word, cycle};

    PeriodicOrbit orbit;
    orbit.points = std::move(pts);
    orbit.period = p;
    orbit.word = word;
    orbit.component_cycle = cycle;
    orbit.solve_power = solve_power;
    orbit.stable = orbit_is_stable(f, orbit.points);
    return orbit;
}

AttractorReport attractor_set(const PiecewiseContraction& f, const QuasiPartition& qp,
                              const AttractorOptions& opts) {
    AttractorReport rep;
    for (const std::vector<int>& cyc : tau_cycles(qp)) {
        LocateOrbitResult r = locate_periodic_orbit(f, qp, cyc);
        if (std::holds_alternative<PeriodicOrbit>(r))
            rep.orbits.push_back(std::get<PeriodicOrbit>(std::move(r)));
        else
            rep.phantoms.push_back(std::get<PhantomAttractor>(std::move(r)));
    }
    // distinct tau cycles live in disjoint components, so orbits must differ
    for (size_t a = 0; a < rep.orbits.size(); ++a)
        for (size_t b = a + 1; b < rep.orbits.size(); ++b)
            for (const Scalar& pa : rep.orbits[a].points)
                for (const Scalar& pb : rep.orbits[b].points)
                    if (pa == pb)
                        throw_invariant("attractor_set: orbits from distinct tau cycles share the point " +
                                        pa.str());
    int r = rep.count();
    if (r < 1 || r > f.n())
        throw_invariant("attractor_set: orbit count r = " + std::to_string(r) + " violates 1 <= r <= n = " +
                        std::to_string(f.n()));

    // basin attribution by direct iteration
    Backend bk = f.backend();
    std::vector<Scalar> starts;
    if (opts.include_hull_points) starts = qp.hull;
    std::mt19937_64 rng(opts.rng_seed);
    for (int s = 0; s < opts.basin_samples; ++s) {
        if (bk == Backend::Rational) {
            std::uniform_int_distribution<long> dist(0, 999999);
            starts.push_back(Scalar::rational(dist(rng), 1000000));
        } else {
            std::uniform_real_distribution<double> dist(0.0, 1.0);
            starts.push_back(Scalar::floating(dist(rng)));
        }
    }
    double iter_sum = 0.0;
    long attributed = 0;
    for (const Scalar& x0 : starts) {
        BasinSample sample = attribute_point(f, rep.orbits, x0, opts.basin_tol, opts.basin_iter_cap);
        if (sample.orbit >= 0) {
            ++attributed;
            iter_sum += static_cast<double>(sample.iterations);
            rep.max_iterations = std::max(rep.max_iterations, sample.iterations);
        } else {
            ++rep.unattributed;
        }
        rep.basins.push_back(std::move(sample));
    }
    rep.mean_iterations = attributed > 0 ? iter_sum / static_cast<double>(attributed) : 0.0;
    return rep;
}

BasinSample attribute_point(const PiecewiseContraction& f, const std::vector<PeriodicOrbit>& orbits,
                            const Scalar& x0, double tol, long iter_cap) {
    char tol_buf[32];
    std::snprintf(tol_buf, sizeof tol_buf, "%.9g", tol);
    Scalar stol = Scalar::parse(tol_buf, f.backend());
    BasinSample sample;
    sample.x0 = x0;
    Scalar x = x0;
    for (long k = 0; k <= iter_cap; ++k) {
        for (size_t o = 0; o < orbits.size() && sample.orbit < 0; ++o) {
            const PeriodicOrbit& orb = orbits[o];
            for (size_t j = 0; j < orb.points.size(); ++j) {
                if ((x - orb.points[j]).abs() <= stol && f.branch_at(x) == orb.word[j]) {
                    sample.orbit = static_cast<int>(o);
                    sample.iterations = k;
                    break;
                }
            }
        }
        if (sample.orbit >= 0 || k == iter_cap) break;
        x = f.eval(x);
    }
    return sample;
}

namespace {

// attempt to pin the limit cycle suggested by (word, approach point):
// returns Orbit or Phantom outcome, or Undetermined when the candidate is
// spurious
OracleOutcome pin_cycle(const PiecewiseContraction& f, const std::vector<int>& word, const Scalar& y_near,
                        const OracleOptions& opts) {
    OracleOutcome out;
    Backend bk = f.backend();
    Scalar zero = Scalar::zero(bk), one = Scalar::one(bk);

    if (bk == Backend::Rational && all_affine(f)) {
        Scalar alpha, beta;
        compose_affine(f, word, alpha, beta);
        Scalar fixed = beta / (Scalar::one(bk) - alpha);
        if (fixed < zero || fixed >= one) return out;
        std::vector<Scalar> pts = word_cycle_points(f, word, fixed);
        if (cycle_word_consistent(f, pts, word)) {
            std::vector<int> w = word;
            reduce_primitive(pts, w);
            out.kind = OracleOutcome::Kind::Orbit;
            out.period = static_cast<int>(pts.size());
            out.points = std::move(pts);
            out.word = std::move(w);
            return out;
        }
        // the word breaks at the limit cycle; a phantom needs proof that the
        // orbit follows the word all the way there
        if (affine_word_confines(f, y_near, word)) {
            out.kind = OracleOutcome::Kind::Phantom;
            out.phantom_point = fixed;
            out.word = word;
            return out;
        }
        return out;
    }

    // float backend: refine by iterating the word return map
    double t = y_near.to_double();
    double stop = 1e-15 * static_cast<double>(word.size() + 1);
    bool converged = false;
    for (long it = 0; it < opts.refine_cap && !converged; ++it) {
        double t1 = t;
        for (int d : word) t1 = f.branches()[d - 1].eval_d(t1);
        converged = std::fabs(t1 - t) <= stop;
        t = t1;
    }
    if (!converged || t < 0.0 || t >= 1.0) return out;
    Scalar fixed = Scalar::floating(t);
    std::vector<Scalar> pts = word_cycle_points(f, word, fixed);
    if (cycle_word_consistent(f, pts, word)) {
        std::vector<int> w = word;
        reduce_primitive(pts, w);
        out.kind = OracleOutcome::Kind::Orbit;
        out.period = static_cast<int>(pts.size());
        out.points = std::move(pts);
        out.word = std::move(w);
        return out;
    }
    // word breaks at the limit: phantom if the free orbit keeps the word
    // while it approaches the limit
    double x = y_near.to_double();
    for (long it = 0; it < opts.refine_cap; ++it) {
        if (std::fabs(x - t) <= 4e-15) {
            out.kind = OracleOutcome::Kind::Phantom;
            out.phantom_point = fixed;
            out.word = word;
            return out;
        }
        int digit = f.branch_at_d(x);
        if (digit != word[static_cast<size_t>(it) % word.size()]) return out;
        x = f.eval_d(x);
    }
    return out;
}

}  // namespace

OracleOutcome direct_attractor_oracle(const PiecewiseContraction& f, const Scalar& x, const OracleOptions& opts) {
    Backend bk = f.backend();
    char tol_buf[32];
    std::snprintf(tol_buf, sizeof tol_buf, "%.9g", opts.tol);
    Scalar tol = Scalar::parse(tol_buf, bk);
    std::vector<Scalar> pts{x};
    std::vector<int> digits;
    auto grow_to = [&](long k) {
        while (static_cast<long>(pts.size()) <= k) {
            digits.push_back(f.branch_at(pts.back()));
            pts.push_back(f.eval(pts.back()));
        }
    };
    long horizon = opts.burn_in + opts.probe_len;
    for (long k = 1; k <= horizon; ++k) {
        grow_to(k);
        long pmax = std::min<long>(opts.probe_len, k);
        for (long p = 1; p <= pmax; ++p) {
            if ((pts[k] - pts[k - p]).abs() > tol) continue;
            // digits over the available window must already be p-periodic
            long w0 = std::max<long>(0, k - 2 * p);
            bool digits_ok = true;
            for (long j = w0; j + p < k && digits_ok; ++j)
                if (digits[j] != digits[j + p]) digits_ok = false;
            if (!digits_ok) continue;
            std::vector<int> word(digits.begin() + (k - p), digits.begin() + k);
            OracleOutcome out = pin_cycle(f, word, pts[k], opts);
            if (out.kind != OracleOutcome::Kind::Undetermined) return out;
        }
    }
    return OracleOutcome{};
}

}  // namespace pcdyn
