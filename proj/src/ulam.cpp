#include "pcdyn/ulam.hpp"

#include <algorithm>
#include <cmath>

namespace pcdyn {

std::vector<double> UlamModel::apply(const std::vector<double>& rho) const {
    std::vector<double> out(bins, 0.0);
    for (int b = 0; b < bins; ++b) {
        const Row& row = rows[b];
        double mass = rho[b];
        if (mass == 0.0) continue;
        for (size_t j = 0; j < row.w.size(); ++j) out[row.start + j] += mass * row.w[j];
    }
    return out;
}

double UlamModel::row_sum(int b) const {
    double s = 0.0;
    for (double v : rows[b].w) s += v;
    return s;
}

UlamModel ulam_model(const ExpandingMap& g, int bins, double residual_tol, long max_sweeps) {
    if (bins < 2) throw_domain("ulam_model: need at least 2 bins");
    UlamModel model;
    model.bins = bins;
    double width = 1.0 / bins;

    std::vector<std::vector<double>> dense(bins, std::vector<double>(bins, 0.0));
    for (int k = 0; k < g.piece_count(); ++k) {
        const ExpandingMap::Piece& piece = g.pieces()[k];
        double kl = piece.domain.lo.to_double();
        double kh = piece.domain.hi.to_double();
        if (kh <= kl) continue;
        int b0 = std::max(0, static_cast<int>(std::floor(kl / width)));
        int b1 = std::min(bins - 1, static_cast<int>(std::floor(kh / width)));
        for (int b = b0; b <= b1; ++b) {
            double sl = std::max(kl, b * width);
            double sh = std::min(kh, (b + 1) * width);
            if (sh <= sl) continue;
            // monotone on the piece: image endpoints give the image interval
            double ga = g.piece_forward_d(k, sl);
            double gb = g.piece_forward_d(k, sh);
            double lo = std::min(ga, gb), hi = std::max(ga, gb);
            lo = std::max(0.0, lo);
            hi = std::min(1.0, hi);
            if (hi <= lo) continue;
            int t0 = std::max(0, static_cast<int>(std::floor(lo / width)));
            int t1 = std::min(bins - 1, static_cast<int>(std::floor(hi / width)));
            for (int t = t0; t <= t1; ++t) {
                double s = std::max(lo, t * width);
                double e = std::min(hi, (t + 1) * width);
                if (e <= s) continue;
                // preimage length inside this sub-bin via the closed-form pullback
                double ps = g.piece_pullback_d(k, s);
                double pe = g.piece_pullback_d(k, e);
                dense[b][t] += std::fabs(pe - ps);
            }
        }
    }
    // normalize rows to stochastic
    for (int b = 0; b < bins; ++b) {
        double sum = 0.0;
        for (double v : dense[b]) sum += v;
        if (sum <= 0.0) throw_numeric("ulam_model: empty row " + std::to_string(b));
        int first = -1, last = -1;
        for (int t = 0; t < bins; ++t)
            if (dense[b][t] != 0.0) {
                if (first < 0) first = t;
                last = t;
            }
        UlamModel::Row row;
        row.start = first;
        for (int t = first; t <= last; ++t) row.w.push_back(dense[b][t] / sum);
        model.rows.push_back(std::move(row));
    }

    // stationary density by power iteration
    std::vector<double> rho(bins, 1.0 / bins);
    double residual = 1.0;
    long sweeps = 0;
    while (sweeps < max_sweeps) {
        std::vector<double> next = model.apply(rho);
        double norm = 0.0;
        for (double v : next) norm += v;
        for (double& v : next) v /= norm;
        residual = 0.0;
        for (int b = 0; b < bins; ++b) residual += std::fabs(next[b] - rho[b]);
        rho.swap(next);
        ++sweeps;
        if (residual <= residual_tol) break;
    }
    if (residual > residual_tol)
        throw_numeric("ulam_model: power iteration residual " + std::to_string(residual) + " after " +
                      std::to_string(sweeps) + " sweeps");
    // report the residual of the fixed-point equation itself
    std::vector<double> image = model.apply(rho);
    double res = 0.0;
    for (int b = 0; b < bins; ++b) res += std::fabs(image[b] - rho[b]);
    model.invariance_residual = res;
    model.sweeps = sweeps;
    model.density = std::move(rho);
    return model;
}

double orbit_density_gap(const ExpandingMap& g, double x, long m) {
    if (m < 1) throw_domain("orbit_density_gap: m must be >= 1");
    if (x < 0.0 || x > 1.0) throw_domain("orbit_density_gap: x outside [0,1]");
    std::vector<double> pts;
    pts.reserve(m + 1);
    double y = x;
    for (long k = 0; k <= m; ++k) {
        pts.push_back(y);
        y = g.eval_d(y);
        if (y < 0.0) y = 0.0;
        if (y > 1.0) y = 1.0;
    }
    std::sort(pts.begin(), pts.end());
    double gap = pts.front();  // [0, first point]
    for (size_t i = 0; i + 1 < pts.size(); ++i) gap = std::max(gap, pts[i + 1] - pts[i]);
    gap = std::max(gap, 1.0 - pts.back());
    return gap;
}

}  // namespace pcdyn
