#pragma once

#include <optional>
#include <vector>

#include "pcdyn/interval_set.hpp"

namespace pcdyn {

// One contraction branch phi: [0,1] -> (0,1), affine or quadratic.
// Quadratic branches require the float backend (their inverses need sqrt).
class BranchDescriptor {
public:
    enum class Kind { Affine, Quadratic };

    static BranchDescriptor affine(Scalar slope, Scalar intercept);
    static BranchDescriptor quadratic(Scalar c0, Scalar c1, Scalar c2);

    Kind kind() const { return kind_; }
    Backend backend() const { return c_[0].backend(); }
    const Scalar& coeff(int i) const { return c_[i]; }  // affine: c0=intercept, c1=slope

    Scalar eval(const Scalar& x) const;
    double eval_d(double x) const;
    Scalar derivative(const Scalar& x) const;
    // monotone on [0,1]; checked during validation
    bool increasing() const;
    // sup_{[0,1]} |D phi|  (affine: |slope|; quadratic: max at the endpoints)
    Scalar contraction_factor() const;
    // inf_{[0,1]} |D phi|
    Scalar min_slope() const;
    // inverse on the branch image; exact for affine, closed-form root for quadratic
    Scalar invert(const Scalar& y) const;
    double invert_d(double y) const;
    // closed image of [0,1]
    Interval image() const;
    // image of a subinterval of [0,1], flags follow monotonicity
    Interval image_of(const Interval& domain) const;

    // derivative bound 0 < |D phi| < 1 on [0,1]; throws naming `label` on failure
    void check_contraction(const std::string& label) const;

private:
    BranchDescriptor() = default;
    Kind kind_ = Kind::Affine;
    Scalar c_[3];  // c0 + c1 x + c2 x^2  (affine: c2 = 0)
};

// Validated branch system of the class-C family: pairwise disjoint closed
// images A_i inside (0,1) and the complementary gaps B_1..B_{n+1}.
class BranchSystem {
public:
    static BranchSystem validate(std::vector<BranchDescriptor> branches);

    int n() const { return static_cast<int>(branches_.size()); }
    Backend backend() const { return branches_.front().backend(); }
    const std::vector<BranchDescriptor>& branches() const { return branches_; }
    const BranchDescriptor& branch(int i) const { return branches_[i]; }  // 0-based
    const std::vector<Interval>& images() const { return images_; }       // per branch, closed
    const std::vector<Interval>& gaps() const { return gaps_; }           // sorted, n+1
    const Scalar& kappa() const { return kappa_; }  // max contraction factor

private:
    BranchSystem() = default;
    std::vector<BranchDescriptor> branches_;
    std::vector<Interval> images_;
    std::vector<Interval> gaps_;
    Scalar kappa_;
};

// Which continuity interval owns the cut x_i.
enum class CutSide { AttachLeft, AttachRight };

struct BoundaryAssignment {
    std::vector<CutSide> sides;  // one per cut

    static BoundaryAssignment all_left(int n_cuts) { return {std::vector<CutSide>(n_cuts, CutSide::AttachLeft)}; }
    static BoundaryAssignment all_right(int n_cuts) { return {std::vector<CutSide>(n_cuts, CutSide::AttachRight)}; }
    std::string str() const;  // "L"/"R" per cut
};

struct ParameterPoint {
    std::vector<Scalar> cuts;  // x_1 < ... < x_{n-1}, all in (0,1)

    static ParameterPoint validate(std::vector<Scalar> cuts);
};

// The piecewise contraction f: x -> phi_i(x) on I_i. In class-C mode the
// branch system is validated (disjoint images in (0,1)) and the expanding
// left inverse exists; general mode only requires that f maps [0,1) into
// itself injectively (Example-4.1-style fixtures), and disables the
// inverse/quasi-partition pipeline.
class PiecewiseContraction {
public:
    static PiecewiseContraction create(BranchSystem system, ParameterPoint params, BoundaryAssignment assignment);
    static PiecewiseContraction create_general(std::vector<BranchDescriptor> branches, ParameterPoint params,
                                               BoundaryAssignment assignment);

    int n() const { return static_cast<int>(branches_.size()); }
    Backend backend() const { return branches_.front().backend(); }
    bool general_mode() const { return !system_.has_value(); }
    const BranchSystem& system() const;  // throws in general mode
    const std::vector<BranchDescriptor>& branches() const { return branches_; }
    const std::vector<Scalar>& cuts() const { return cuts_; }
    const BoundaryAssignment& assignment() const { return assignment_; }
    // continuity interval I_i (1-based), with endpoint flags from the assignment
    const Interval& continuity_interval(int i) const;
    const Scalar& kappa() const { return kappa_; }

    Scalar eval(const Scalar& x) const;   // pc_eval; domain [0,1)
    double eval_d(double x) const;
    int branch_at(const Scalar& x) const;  // pc_branch; 1-based digit
    int branch_at_d(double x) const;

    IntervalSet image_set() const;  // union of phi_i(I_i), exact flags
    IntervalSet gap_set() const;    // G = [0,1) \ image_set
    // image of an arbitrary subset of [0,1) under f (splits at the I_i)
    IntervalSet image_of(const IntervalSet& s) const;

private:
    PiecewiseContraction() = default;
    void build_continuity_intervals();

    std::vector<BranchDescriptor> branches_;
    std::vector<Scalar> cuts_;
    BoundaryAssignment assignment_;
    std::optional<BranchSystem> system_;
    std::vector<Interval> intervals_;  // I_1..I_n
    Scalar kappa_;
};

}  // namespace pcdyn
