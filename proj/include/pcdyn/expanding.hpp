#pragma once

#include <vector>

#include "pcdyn/contraction.hpp"

namespace pcdyn {

// The expanding piecewise smooth left inverse g of every f over a branch
// system: phi_i^{-1} on each image A_i, the increasing affine surjection
// onto [0,1] on each gap B_j. The A_i are closed and win ties; g(0)=0,
// g(1)=1. |Dg| >= c on piece interiors with
// c = min{1/kappa_1, ..., 1/kappa_n, 1/max_j |B_j|}.
class ExpandingMap {
public:
    struct Piece {
        Interval domain;      // within [0,1); the last gap's closure owns x=1
        bool is_image_piece;  // true: some A_i, false: some B_j
        int branch;           // 1-based branch index (A pieces) or gap index j (B pieces)
    };

    static ExpandingMap build(const BranchSystem& system);

    int piece_count() const { return static_cast<int>(pieces_.size()); }
    const std::vector<Piece>& pieces() const { return pieces_; }
    const Scalar& expansion_constant() const { return c_; }
    Backend backend() const { return c_.backend(); }
    int n() const { return n_; }

    // domain [0,1]; piece index is 0-based, left to right
    int piece_at(const Scalar& x) const;
    Scalar eval(const Scalar& x) const;
    int piece_at_d(double x) const;
    double eval_d(double x) const;
    // inverse of g restricted to a piece (phi_i on A pieces, L_j^{-1} on
    // B pieces); maps [0,1] onto the piece closure. Used by the Ulam build.
    double piece_pullback_d(int piece, double y) const;
    // g's branch formula for one piece, evaluated without a domain lookup
    // (valid on the piece closure)
    double piece_forward_d(int piece, double x) const;
    // |Dg| lower bound on one piece interior
    Scalar piece_expansion(int piece) const;

private:
    ExpandingMap() = default;
    std::vector<Piece> pieces_;
    std::vector<BranchDescriptor> branches_;  // copy, by branch index
    Scalar c_;
    int n_ = 0;
};

}  // namespace pcdyn
