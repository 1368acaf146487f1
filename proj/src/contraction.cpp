#include "pcdyn/contraction.hpp"

#include <algorithm>
#include <cmath>

namespace pcdyn {

BranchDescriptor BranchDescriptor::affine(Scalar slope, Scalar intercept) {
    if (slope.backend() != intercept.backend()) throw_validation("affine branch: backend mismatch");
    BranchDescriptor b;
    b.kind_ = Kind::Affine;
    b.c_[0] = std::move(intercept);
    b.c_[1] = std::move(slope);
    b.c_[2] = Scalar::zero(b.c_[0].backend());
    return b;
}

BranchDescriptor BranchDescriptor::quadratic(Scalar c0, Scalar c1, Scalar c2) {
    if (c0.backend() != c1.backend() || c1.backend() != c2.backend())
        throw_validation("quadratic branch: backend mismatch");
    if (c0.backend() == Backend::Rational)
        throw_validation("quadratic branches require the float backend (inverse needs sqrt)");
    BranchDescriptor b;
    b.kind_ = Kind::Quadratic;
    b.c_[0] = std::move(c0);
    b.c_[1] = std::move(c1);
    b.c_[2] = std::move(c2);
    return b;
}

Scalar BranchDescriptor::eval(const Scalar& x) const {
    // c0 + x*(c1 + x*c2)
    return c_[0] + x * (c_[1] + x * c_[2]);
}

double BranchDescriptor::eval_d(double x) const {
    return c_[0].to_double() + x * (c_[1].to_double() + x * c_[2].to_double());
}

Scalar BranchDescriptor::derivative(const Scalar& x) const {
    Scalar two = Scalar::of(2, backend());
    return c_[1] + two * c_[2] * x;
}

bool BranchDescriptor::increasing() const {
    // derivative has constant sign on [0,1] once check_contraction passed
    return derivative(Scalar::zero(backend())).sign() > 0;
}

Scalar BranchDescriptor::contraction_factor() const {
    Scalar d0 = derivative(Scalar::zero(backend())).abs();
    Scalar d1 = derivative(Scalar::one(backend())).abs();
    return max(d0, d1);
}

Scalar BranchDescriptor::min_slope() const {
    Scalar d0 = derivative(Scalar::zero(backend())).abs();
    Scalar d1 = derivative(Scalar::one(backend())).abs();
    return min(d0, d1);
}

Scalar BranchDescriptor::invert(const Scalar& y) const {
    if (kind_ == Kind::Affine) return (y - c_[0]) / c_[1];
    return Scalar::floating(invert_d(y.to_double()));
}

double BranchDescriptor::invert_d(double y) const {
    double c0 = c_[0].to_double(), c1 = c_[1].to_double(), c2 = c_[2].to_double();
    if (kind_ == Kind::Affine || c2 == 0.0) return (y - c0) / c1;
    // c2 x^2 + c1 x + (c0 - y) = 0, stable quadratic formula; the root on
    // [0,1] is unique because the critical point lies outside [0,1]
    double c = c0 - y;
    double disc = c1 * c1 - 4.0 * c2 * c;
    if (disc < 0) {
        if (disc > -1e-14) disc = 0;  // grazing roundoff
        else throw_numeric("quadratic inverse: negative discriminant");
    }
    double sq = std::sqrt(disc);
    double qq = -0.5 * (c1 + (c1 >= 0 ? sq : -sq));
    double r1 = qq / c2;
    double r2 = (qq != 0.0) ? c / qq : r1;
    double lo = -1e-9, hi = 1.0 + 1e-9;
    bool ok1 = r1 >= lo && r1 <= hi, ok2 = r2 >= lo && r2 <= hi;
    if (ok1 && ok2) return std::fabs(r1 - r2) < 1e-12 ? r1 : (std::fabs(r1 - 0.5) < std::fabs(r2 - 0.5) ? r1 : r2);
    if (ok1) return r1;
    if (ok2) return r2;
    throw_numeric("quadratic inverse: no root in [0,1]");
}

Interval BranchDescriptor::image() const {
    Scalar a = eval(Scalar::zero(backend()));
    Scalar b = eval(Scalar::one(backend()));
    return Interval::closed(min(a, b), max(a, b));
}

Interval BranchDescriptor::image_of(const Interval& dom) const {
    Scalar a = eval(dom.lo);
    Scalar b = eval(dom.hi);
    if (increasing()) return Interval::make(a, b, dom.lo_closed, dom.hi_closed);
    return Interval::make(b, a, dom.hi_closed, dom.lo_closed);
}

void BranchDescriptor::check_contraction(const std::string& label) const {
    Backend bk = backend();
    Scalar zero = Scalar::zero(bk), one = Scalar::one(bk);
    if (kind_ == Kind::Quadratic && !c_[2].is_zero()) {
        // critical point of the derivative must lie outside [0,1]
        Scalar two = Scalar::of(2, bk);
        Scalar crit = -c_[1] / (two * c_[2]);
        if (crit >= zero && crit <= one)
            throw_validation(label + ": derivative changes sign inside [0,1] (critical point " + crit.str() + ")");
    }
    Scalar d0 = derivative(zero), d1 = derivative(one);
    if (d0.sign() == 0 || d1.sign() == 0 || d0.sign() != d1.sign())
        throw_validation(label + ": derivative vanishes or changes sign on [0,1]");
    Scalar k = contraction_factor();
    if (!(k < one)) throw_validation(label + ": not a contraction, sup|D phi| = " + k.str());
}

BranchSystem BranchSystem::validate(std::vector<BranchDescriptor> branches) {
    if (branches.empty()) throw_validation("branch system needs at least one branch");
    Backend bk = branches.front().backend();
    for (size_t i = 1; i < branches.size(); ++i)
        if (branches[i].backend() != bk) throw_validation("branch system: mixed backends");

    BranchSystem sys;
    Scalar zero = Scalar::zero(bk), one = Scalar::one(bk);
    sys.kappa_ = zero;
    for (size_t i = 0; i < branches.size(); ++i) {
        std::string label = "branch " + std::to_string(i + 1);
        branches[i].check_contraction(label);
        Interval a = branches[i].image();
        if (!(a.lo > zero) || !(a.hi < one))
            throw_validation(label + ": image " + a.str() + " not inside (0,1)");
        sys.images_.push_back(a);
        sys.kappa_ = max(sys.kappa_, branches[i].contraction_factor());
    }
    // pairwise disjoint closed images (strict: touching closures are rejected)
    std::vector<int> order(branches.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sys.images_[a].lo < sys.images_[b].lo; });
    for (size_t k = 0; k + 1 < order.size(); ++k) {
        const Interval& a = sys.images_[order[k]];
        const Interval& b = sys.images_[order[k + 1]];
        if (!(a.hi < b.lo))
            throw_validation("images of branch " + std::to_string(order[k] + 1) + " and branch " +
                             std::to_string(order[k + 1] + 1) + " overlap or touch: " + a.str() + " vs " + b.str());
    }
    // gaps B_1..B_{n+1}, left to right; B_1 contains 0, the last ends open at 1
    Scalar cursor = zero;
    for (size_t k = 0; k < order.size(); ++k) {
        const Interval& a = sys.images_[order[k]];
        sys.gaps_.push_back(Interval::make(cursor, a.lo, k == 0, false));
        cursor = a.hi;
    }
    sys.gaps_.push_back(Interval::make(cursor, one, false, false));
    sys.branches_ = std::move(branches);
    return sys;
}

std::string BoundaryAssignment::str() const {
    std::string s;
    for (CutSide c : sides) s += (c == CutSide::AttachLeft ? 'L' : 'R');
    return s;
}

ParameterPoint ParameterPoint::validate(std::vector<Scalar> cuts) {
    if (!cuts.empty()) {
        Backend bk = cuts.front().backend();
        Scalar zero = Scalar::zero(bk), one = Scalar::one(bk);
        for (size_t i = 0; i < cuts.size(); ++i) {
            if (cuts[i].backend() != bk) throw_validation("cuts: mixed backends");
            if (!(cuts[i] > zero) || !(cuts[i] < one))
                throw_validation("cut x_" + std::to_string(i + 1) + " = " + cuts[i].str() + " outside (0,1)");
            if (i > 0 && !(cuts[i - 1] < cuts[i]))
                throw_validation("cuts not strictly increasing at x_" + std::to_string(i + 1));
        }
    }
    return ParameterPoint{std::move(cuts)};
}

void PiecewiseContraction::build_continuity_intervals() {
    int n = static_cast<int>(branches_.size());
    if (static_cast<int>(cuts_.size()) != n - 1)
        throw_validation("expected " + std::to_string(n - 1) + " cuts for " + std::to_string(n) + " branches, got " +
                         std::to_string(cuts_.size()));
    if (assignment_.sides.size() != cuts_.size())
        throw_validation("boundary assignment size mismatch");
    Backend bk = backend();
    Scalar zero = Scalar::zero(bk), one = Scalar::one(bk);
    for (int i = 0; i < n; ++i) {
        Scalar lo = (i == 0) ? zero : cuts_[i - 1];
        Scalar hi = (i == n - 1) ? one : cuts_[i];
        // x_0 = 0 belongs to I_1; x_n = 1 is excluded
        bool lo_closed = (i == 0) ? true : assignment_.sides[i - 1] == CutSide::AttachRight;
        bool hi_closed = (i == n - 1) ? false : assignment_.sides[i] == CutSide::AttachLeft;
        intervals_.push_back(Interval::make(lo, hi, lo_closed, hi_closed));
    }
}

PiecewiseContraction PiecewiseContraction::create(BranchSystem system, ParameterPoint params,
                                                  BoundaryAssignment assignment) {
    PiecewiseContraction f;
    f.branches_ = system.branches();
    f.cuts_ = std::move(params.cuts);
    f.assignment_ = std::move(assignment);
    f.kappa_ = system.kappa();
    f.system_ = std::move(system);
    f.build_continuity_intervals();
    return f;
}

PiecewiseContraction PiecewiseContraction::create_general(std::vector<BranchDescriptor> branches,
                                                          ParameterPoint params, BoundaryAssignment assignment) {
    if (branches.empty()) throw_validation("general map needs at least one branch");
    PiecewiseContraction f;
    f.branches_ = std::move(branches);
    f.cuts_ = std::move(params.cuts);
    f.assignment_ = std::move(assignment);
    f.build_continuity_intervals();
    Backend bk = f.backend();
    Scalar zero = Scalar::zero(bk), one = Scalar::one(bk);
    f.kappa_ = zero;
    // still a piecewise contraction of [0,1): contraction bounds per branch,
    // branch images of the I_i inside [0,1), and pairwise disjoint (injective)
    std::vector<Interval> images;
    for (int i = 0; i < f.n(); ++i) {
        std::string label = "branch " + std::to_string(i + 1);
        f.branches_[i].check_contraction(label);
        f.kappa_ = max(f.kappa_, f.branches_[i].contraction_factor());
        Interval img = f.branches_[i].image_of(f.intervals_[i]);
        if (img.lo < zero || img.hi > one || (img.hi == one && img.hi_closed))
            throw_validation(label + ": image of I_" + std::to_string(i + 1) + " = " + img.str() +
                             " leaves [0,1)");
        images.push_back(img);
    }
    for (int i = 0; i < f.n(); ++i)
        for (int j = i + 1; j < f.n(); ++j) {
            IntervalSet a = IntervalSet::normalize({images[i]}, bk);
            IntervalSet b = IntervalSet::normalize({images[j]}, bk);
            if (!a.is_disjoint(b))
                throw_validation("general map not injective: images of branch " + std::to_string(i + 1) +
                                 " and branch " + std::to_string(j + 1) + " overlap");
        }
    return f;
}

const BranchSystem& PiecewiseContraction::system() const {
    if (!system_) throw_validation("general-mode map has no validated branch system");
    return *system_;
}

const Interval& PiecewiseContraction::continuity_interval(int i) const {
    if (i < 1 || i > n()) throw_domain("continuity interval index out of range");
    return intervals_[i - 1];
}

int PiecewiseContraction::branch_at(const Scalar& x) const {
    Backend bk = backend();
    if (x < Scalar::zero(bk) || x >= Scalar::one(bk))
        throw_domain("pc_branch: x = " + x.str() + " outside [0,1)");
    for (size_t i = 0; i < cuts_.size(); ++i) {
        int c = x.cmp(cuts_[i]);
        if (c < 0) return static_cast<int>(i) + 1;
        if (c == 0) return assignment_.sides[i] == CutSide::AttachLeft ? static_cast<int>(i) + 1
                                                                       : static_cast<int>(i) + 2;
    }
    return n();
}

Scalar PiecewiseContraction::eval(const Scalar& x) const {
    return branches_[branch_at(x) - 1].eval(x);
}

int PiecewiseContraction::branch_at_d(double x) const {
    if (x < 0.0 || x >= 1.0) throw_domain("pc_branch: x outside [0,1)");
    for (size_t i = 0; i < cuts_.size(); ++i) {
        double c = cuts_[i].to_double();
        if (x < c) return static_cast<int>(i) + 1;
        if (x == c) return assignment_.sides[i] == CutSide::AttachLeft ? static_cast<int>(i) + 1
                                                                       : static_cast<int>(i) + 2;
    }
    return n();
}

double PiecewiseContraction::eval_d(double x) const {
    return branches_[branch_at_d(x) - 1].eval_d(x);
}

IntervalSet PiecewiseContraction::image_set() const {
    std::vector<Interval> imgs;
    for (int i = 0; i < n(); ++i) imgs.push_back(branches_[i].image_of(intervals_[i]));
    return IntervalSet::normalize(std::move(imgs), backend());
}

IntervalSet PiecewiseContraction::gap_set() const {
    return image_set().complement_in_unit();
}

IntervalSet PiecewiseContraction::image_of(const IntervalSet& s) const {
    std::vector<Interval> imgs;
    for (int i = 0; i < n(); ++i) {
        IntervalSet part = s.intersect(IntervalSet::normalize({intervals_[i]}, backend()));
        for (const Interval& piece : part.components()) imgs.push_back(branches_[i].image_of(piece));
    }
    return IntervalSet::normalize(std::move(imgs), backend());
}

}  // namespace pcdyn
