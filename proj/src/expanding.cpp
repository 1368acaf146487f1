#include "pcdyn/expanding.hpp"

#include <algorithm>

namespace pcdyn {

ExpandingMap ExpandingMap::build(const BranchSystem& system) {
    ExpandingMap g;
    g.n_ = system.n();
    g.branches_ = system.branches();
    Backend bk = system.backend();
    Scalar one = Scalar::one(bk);

    // interleave gaps and images left to right
    struct Tagged {
        Interval iv;
        bool is_image;
        int branch;  // 1-based branch or gap index
    };
    std::vector<Tagged> all;
    for (int i = 0; i < system.n(); ++i)
        all.push_back({system.images()[i], true, i + 1});
    for (size_t j = 0; j < system.gaps().size(); ++j)
        all.push_back({system.gaps()[j], false, static_cast<int>(j) + 1});
    std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) { return a.iv.lo < b.iv.lo; });
    for (Tagged& t : all) g.pieces_.push_back({t.iv, t.is_image, t.branch});

    // c = min{ c_1, ..., c_n, 1/max|B_j| }
    Scalar c = one / system.kappa();
    for (int i = 0; i < system.n(); ++i) c = min(c, one / system.branch(i).contraction_factor());
    Scalar max_gap = system.gaps().front().length();
    for (const Interval& b : system.gaps()) max_gap = max(max_gap, b.length());
    c = min(c, one / max_gap);
    g.c_ = c;
    return g;
}

int ExpandingMap::piece_at(const Scalar& x) const {
    Backend bk = backend();
    Scalar zero = Scalar::zero(bk), one = Scalar::one(bk);
    if (x < zero || x > one) throw_domain("g: x = " + x.str() + " outside [0,1]");
    if (x == one) return piece_count() - 1;  // closure of the last gap
    for (int k = 0; k < piece_count(); ++k)
        if (pieces_[k].domain.contains(x)) return k;
    throw Error(Errc::Internal, "g pieces do not cover x = " + x.str());
}

Scalar ExpandingMap::eval(const Scalar& x) const {
    const Piece& p = pieces_[piece_at(x)];
    if (p.is_image_piece) return branches_[p.branch - 1].invert(x);
    return (x - p.domain.lo) / p.domain.length();
}

int ExpandingMap::piece_at_d(double x) const {
    if (x < 0.0 || x > 1.0) throw_domain("g: x outside [0,1]");
    if (x >= 1.0) return piece_count() - 1;
    for (int k = 0; k < piece_count(); ++k) {
        const Piece& p = pieces_[k];
        double lo = p.domain.lo.to_double(), hi = p.domain.hi.to_double();
        bool in = (p.domain.lo_closed ? x >= lo : x > lo) && (p.domain.hi_closed ? x <= hi : x < hi);
        if (in) return k;
    }
    // float fallthrough at a shared endpoint: pick the piece whose closure has it
    for (int k = 0; k < piece_count(); ++k) {
        double lo = pieces_[k].domain.lo.to_double(), hi = pieces_[k].domain.hi.to_double();
        if (x >= lo && x <= hi) return k;
    }
    throw Error(Errc::Internal, "g pieces do not cover x (float)");
}

double ExpandingMap::eval_d(double x) const {
    const Piece& p = pieces_[piece_at_d(x)];
    if (p.is_image_piece) return branches_[p.branch - 1].invert_d(x);
    double lo = p.domain.lo.to_double();
    double len = p.domain.hi.to_double() - lo;
    return (x - lo) / len;
}

double ExpandingMap::piece_forward_d(int piece, double x) const {
    const Piece& p = pieces_[piece];
    if (p.is_image_piece) return branches_[p.branch - 1].invert_d(x);
    double lo = p.domain.lo.to_double();
    double len = p.domain.hi.to_double() - lo;
    return (x - lo) / len;
}

double ExpandingMap::piece_pullback_d(int piece, double y) const {
    const Piece& p = pieces_[piece];
    if (p.is_image_piece) return branches_[p.branch - 1].eval_d(y);
    double lo = p.domain.lo.to_double();
    double len = p.domain.hi.to_double() - lo;
    return lo + y * len;
}

Scalar ExpandingMap::piece_expansion(int piece) const {
    const Piece& p = pieces_[piece];
    Scalar one = Scalar::one(backend());
    if (p.is_image_piece) return one / branches_[p.branch - 1].contraction_factor();
    return one / p.domain.length();
}

}  // namespace pcdyn
