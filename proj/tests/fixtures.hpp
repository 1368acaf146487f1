#pragma once

#include "pcdyn/presets.hpp"

namespace fixtures {

using namespace pcdyn;

inline Scalar rq(const char* s) { return Scalar::parse(s, Backend::Rational); }
inline Scalar fl(double v) { return Scalar::floating(v); }

// S2: branches 3/10 x + 1/10 and 3/10 x + 1/2
inline BranchSystem s2_system() {
    return BranchSystem::validate({BranchDescriptor::affine(rq("3/10"), rq("1/10")),
                                   BranchDescriptor::affine(rq("3/10"), rq("1/2"))});
}

inline PiecewiseContraction s2_map(const char* cut = "3/10", CutSide side = CutSide::AttachRight) {
    return PiecewiseContraction::create(s2_system(), ParameterPoint::validate({rq(cut)}),
                                        BoundaryAssignment{{side}});
}

inline PiecewiseContraction f1_map() { return build_map(preset_spec("example-4.1-f1")); }
inline PiecewiseContraction f2_map() { return build_map(preset_spec("example-4.1-f2")); }
inline PiecewiseContraction f2_eps_map(const char* eps) {
    return build_map(preset_spec("example-4.1-f2-eps", std::string(eps)));
}

// three equal-slope branches whose g has five full affine branches of slope 5
inline BranchSystem equal_slope_system() {
    return BranchSystem::validate({BranchDescriptor::affine(rq("1/5"), rq("1/5")),
                                   BranchDescriptor::affine(rq("1/5"), rq("3/5"))});
}

}  // namespace fixtures
