#include "pcdyn/presets.hpp"

namespace pcdyn {

namespace {

Scalar rq(const char* text) { return Scalar::parse(text, Backend::Rational); }
Scalar fq(const char* text) { return Scalar::parse(text, Backend::Float); }

MapSpec f1_spec() {
    MapSpec s;
    s.backend = Backend::Rational;
    s.general_mode = true;
    s.branches = {BranchDescriptor::affine(rq("1/2"), rq("1/4")),
                  BranchDescriptor::affine(rq("1/2"), rq("-1/4"))};
    s.cuts = {rq("1/2")};
    s.has_cuts = true;
    s.assignment = BoundaryAssignment::all_right(1);  // I_1=[0,1/2), I_2=[1/2,1)
    return s;
}

MapSpec f2_spec(const Scalar& eps) {
    MapSpec s;
    s.backend = Backend::Rational;
    s.general_mode = true;
    s.branches = {BranchDescriptor::affine(rq("1/2"), rq("1/4") + eps),
                  BranchDescriptor::affine(rq("1/2"), rq("-1/4") + eps)};
    s.cuts = {rq("1/2")};
    s.has_cuts = true;
    s.assignment = BoundaryAssignment::all_left(1);  // the cut belongs to I_1
    return s;
}

MapSpec s2_spec() {
    MapSpec s;
    s.backend = Backend::Rational;
    s.branches = {BranchDescriptor::affine(rq("3/10"), rq("1/10")),
                  BranchDescriptor::affine(rq("3/10"), rq("1/2"))};
    s.cuts = {rq("3/10")};
    s.has_cuts = true;
    s.assignment = BoundaryAssignment::all_right(1);
    return s;
}

MapSpec s3_spec() {
    MapSpec s;
    s.backend = Backend::Float;
    s.branches = {BranchDescriptor::quadratic(fq("0.15"), fq("0.25"), fq("0.05")),
                  BranchDescriptor::affine(fq("0.3"), fq("0.62"))};
    s.cuts = {fq("0.5")};
    s.has_cuts = true;
    s.assignment = BoundaryAssignment::all_right(1);
    return s;
}

MapSpec s4_spec() {
    MapSpec s;
    s.backend = Backend::Rational;
    s.branches = {BranchDescriptor::affine(rq("3/20"), rq("1/20")),
                  BranchDescriptor::affine(rq("1/5"), rq("7/25")),
                  BranchDescriptor::affine(rq("-1/5"), rq("19/25")),
                  BranchDescriptor::affine(rq("3/20"), rq("41/50"))};
    s.cuts = {rq("1/4"), rq("1/2"), rq("3/4")};
    s.has_cuts = true;
    s.assignment = BoundaryAssignment::all_right(3);
    return s;
}

}  // namespace

std::vector<Preset> presets() {
    std::vector<Preset> out;
    out.push_back({"example-4.1-f1",
                   "two-interval PC with eventually periodic itineraries and no periodic orbit "
                   "(general mode; the point 1/2 is a phantom attractor)",
                   f1_spec()});
    out.push_back({"example-4.1-f2",
                   "same branches with the cut attached left: asymptotically periodic, fixed point 1/2",
                   f2_spec(rq("0"))});
    out.push_back({"example-4.1-f2-eps",
                   "f2 shifted up by eps (default 1/10): destroys the fixed point (use --eps)",
                   f2_spec(rq("1/10"))});
    out.push_back({"S2", "affine class-C system, branches 3/10 x + 1/10 and 3/10 x + 1/2", s2_spec()});
    out.push_back({"S3", "quadratic-affine class-C system on the float backend", s3_spec()});
    out.push_back({"S4", "four-branch affine class-C system with one decreasing branch", s4_spec()});
    return out;
}

MapSpec preset_spec(const std::string& name, const std::optional<std::string>& eps) {
    if (name == "example-4.1-f2-eps") {
        Scalar e = rq("1/10");
        if (eps) e = Scalar::parse(*eps, Backend::Rational);
        if (e <= rq("0") || e >= rq("1/4"))
            throw_validation("example-4.1-f2-eps needs 0 < eps < 1/4, got " + e.str());
        return f2_spec(e);
    }
    for (const Preset& p : presets())
        if (p.name == name) return p.spec;
    std::string known;
    for (const Preset& p : presets()) known += (known.empty() ? "" : ", ") + p.name;
    throw_validation("unknown preset '" + name + "'; available: " + known);
}

Json presets_json() {
    Json arr = Json::array();
    for (const Preset& p : presets()) {
        Json j;
        j["name"] = p.name;
        j["description"] = p.description;
        j["spec"] = map_spec_to_json(p.spec);
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace pcdyn
