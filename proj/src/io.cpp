#include "pcdyn/io.hpp"

#include <cmath>
#include <fstream>

namespace pcdyn {

Scalar scalar_from_json(const Json& j, Backend b) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), b);
    if (j.is_number_integer()) return Scalar::of(j.get<long>(), b);
    if (j.is_number_float()) {
        double v = j.get<double>();
        if (b == Backend::Float) return Scalar::floating(v);
        if (v == std::floor(v) && std::fabs(v) < 1e15) return Scalar::of(static_cast<long>(v), b);
        throw_parse("non-integral JSON number on the rational backend; quote it as a string (e.g. \"3/10\")");
    }
    throw_parse("expected a scalar (string or number), got " + j.dump());
}

Json scalar_to_json(const Scalar& s) { return s.str(); }

namespace {

BranchDescriptor branch_from_json(const Json& j, Backend b) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "affine")
        return BranchDescriptor::affine(scalar_from_json(j.at("slope"), b), scalar_from_json(j.at("intercept"), b));
    if (kind == "quadratic")
        return BranchDescriptor::quadratic(scalar_from_json(j.at("c0"), b), scalar_from_json(j.at("c1"), b),
                                           scalar_from_json(j.at("c2"), b));
    throw_parse("unknown branch kind '" + kind + "' (expected affine|quadratic)");
}

Json branch_to_json(const BranchDescriptor& b) {
    Json j;
    if (b.kind() == BranchDescriptor::Kind::Affine) {
        j["kind"] = "affine";
        j["slope"] = scalar_to_json(b.coeff(1));
        j["intercept"] = scalar_to_json(b.coeff(0));
    } else {
        j["kind"] = "quadratic";
        j["c0"] = scalar_to_json(b.coeff(0));
        j["c1"] = scalar_to_json(b.coeff(1));
        j["c2"] = scalar_to_json(b.coeff(2));
    }
    return j;
}

BoundaryAssignment assignment_from_string(const std::string& text, int n_cuts) {
    if (text.empty() || text == "all-right") return BoundaryAssignment::all_right(n_cuts);
    if (text == "all-left") return BoundaryAssignment::all_left(n_cuts);
    BoundaryAssignment a;
    for (char c : text) {
        if (c == 'L' || c == 'l')
            a.sides.push_back(CutSide::AttachLeft);
        else if (c == 'R' || c == 'r')
            a.sides.push_back(CutSide::AttachRight);
        else
            throw_parse("bad assignment '" + text + "' (expected all-left|all-right|[LR]+)");
    }
    if (static_cast<int>(a.sides.size()) != n_cuts)
        throw_parse("assignment '" + text + "' has " + std::to_string(a.sides.size()) + " sides, expected " +
                    std::to_string(n_cuts));
    return a;
}

}  // namespace

MapSpec map_spec_from_json(const Json& j) {
    MapSpec spec;
    spec.backend = backend_from_name(j.value("backend", "rational"));
    spec.general_mode = j.value("general_mode", false);
    if (!j.contains("branches") || !j.at("branches").is_array() || j.at("branches").empty())
        throw_parse("map spec needs a non-empty 'branches' array");
    for (const Json& b : j.at("branches")) spec.branches.push_back(branch_from_json(b, spec.backend));
    if (j.contains("cuts")) {
        for (const Json& c : j.at("cuts")) spec.cuts.push_back(scalar_from_json(c, spec.backend));
        spec.has_cuts = true;
    }
    std::string asg = j.value("assignment", "");
    spec.assignment = assignment_from_string(asg, static_cast<int>(spec.cuts.size()));
    return spec;
}

MapSpec map_spec_from_string(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw_parse("invalid JSON in map spec");
    return map_spec_from_json(j);
}

MapSpec map_spec_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_io("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return map_spec_from_string(text);
}

Json map_spec_to_json(const MapSpec& spec) {
    Json j;
    j["backend"] = backend_name(spec.backend);
    j["general_mode"] = spec.general_mode;
    Json branches = Json::array();
    for (const BranchDescriptor& b : spec.branches) branches.push_back(branch_to_json(b));
    j["branches"] = std::move(branches);
    if (spec.has_cuts) {
        Json cuts = Json::array();
        for (const Scalar& c : spec.cuts) cuts.push_back(scalar_to_json(c));
        j["cuts"] = std::move(cuts);
        j["assignment"] = spec.assignment.str();
    }
    return j;
}

BranchSystem build_system(const MapSpec& spec) {
    if (spec.general_mode)
        throw_validation("general-mode spec has no class-C branch system");
    return BranchSystem::validate(spec.branches);
}

PiecewiseContraction build_map(const MapSpec& spec) {
    if (!spec.has_cuts && spec.branches.size() != 1)
        throw_validation("map spec has no cuts");
    ParameterPoint pp = ParameterPoint::validate(spec.cuts);
    BoundaryAssignment asg = spec.assignment;
    if (asg.sides.size() != spec.cuts.size())
        asg = BoundaryAssignment::all_right(static_cast<int>(spec.cuts.size()));
    if (spec.general_mode) return PiecewiseContraction::create_general(spec.branches, pp, asg);
    return PiecewiseContraction::create(BranchSystem::validate(spec.branches), pp, asg);
}

Json interval_to_json(const Interval& iv) {
    Json j;
    j["lo"] = scalar_to_json(iv.lo);
    j["hi"] = scalar_to_json(iv.hi);
    j["lo_closed"] = iv.lo_closed;
    j["hi_closed"] = iv.hi_closed;
    return j;
}

Json interval_set_to_json(const IntervalSet& s) {
    Json arr = Json::array();
    for (const Interval& iv : s.components()) arr.push_back(interval_to_json(iv));
    return arr;
}

Json system_report_json(const BranchSystem& sys) {
    Json j;
    j["n"] = sys.n();
    j["backend"] = backend_name(sys.backend());
    Json branches = Json::array();
    for (const BranchDescriptor& b : sys.branches()) branches.push_back(branch_to_json(b));
    j["branches"] = std::move(branches);
    Json images = Json::array();
    for (const Interval& a : sys.images()) images.push_back(interval_to_json(a));
    j["images"] = std::move(images);
    Json gaps = Json::array();
    for (const Interval& b : sys.gaps()) gaps.push_back(interval_to_json(b));
    j["gaps"] = std::move(gaps);
    j["kappa"] = scalar_to_json(sys.kappa());
    return j;
}

Json expanding_map_json(const ExpandingMap& g) {
    Json j;
    j["expansion_constant"] = scalar_to_json(g.expansion_constant());
    Json pieces = Json::array();
    for (const ExpandingMap::Piece& p : g.pieces()) {
        Json pj = interval_to_json(p.domain);
        pj["kind"] = p.is_image_piece ? "image" : "gap";
        pj["index"] = p.branch;
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    return j;
}

Json orbit_json(const std::vector<Scalar>& pts, const std::vector<int>* digits) {
    Json steps = Json::array();
    for (size_t k = 0; k < pts.size(); ++k) {
        Json s;
        s["k"] = k;
        s["x"] = scalar_to_json(pts[k]);
        if (digits && k < digits->size()) s["d"] = (*digits)[k];
        steps.push_back(std::move(s));
    }
    Json j;
    j["steps"] = std::move(steps);
    return j;
}

Json itinerary_json(const ItineraryWord& w) {
    Json j;
    j["digits"] = w.digits;
    if (w.kind == ItineraryWord::Kind::EventuallyPeriodic) {
        j["classification"] = "eventually-periodic";
        j["preperiod"] = w.preperiod;
        j["period"] = w.period;
    } else {
        j["classification"] = "truncated";
    }
    return j;
}

Json gap_hit_json(const GapHit& hit) {
    Json j;
    j["cut"] = hit.cut_index;
    j["verdict"] = verdict_name(hit.verdict);
    if (hit.verdict == GapHit::Verdict::HitInterior) j["q"] = hit.hitting_time;
    Json trail = Json::array();
    for (const Scalar& p : hit.trail) trail.push_back(scalar_to_json(p));
    j["trail"] = std::move(trail);
    return j;
}

Json quasi_partition_json(const QuasiPartition& qp) {
    Json j;
    Json hull = Json::array();
    for (const Scalar& h : qp.hull) hull.push_back(scalar_to_json(h));
    j["H"] = std::move(hull);
    Json comps = Json::array();
    for (int l = 0; l < qp.m(); ++l) {
        Json c;
        c["lo"] = scalar_to_json(qp.components[l].lo);
        c["hi"] = scalar_to_json(qp.components[l].hi);
        c["eta"] = qp.eta[l];
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    Json tau = Json::array();
    for (int t : qp.tau) tau.push_back(t + 1);  // 1-based in reports
    j["tau"] = std::move(tau);
    j["q"] = qp.max_hitting_time;
    Json trails = Json::array();
    for (const GapHit& h : qp.hits) {
        Json t = Json::array();
        for (const Scalar& p : h.trail) t.push_back(scalar_to_json(p));
        trails.push_back(std::move(t));
    }
    j["trails"] = std::move(trails);
    return j;
}

Json verify_report_json(const VerifyReport& rep) {
    Json j;
    j["ok"] = rep.ok();
    j["p1"] = rep.p1;
    j["p2"] = rep.p2;
    j["eta_containment"] = rep.eta_containment;
    j["gap_iterates_disjoint"] = rep.gap_iterates_disjoint;
    j["trails_in_gap_interiors"] = rep.trails_in_gap_interiors;
    j["post_period_disjoint"] = rep.post_period_disjoint;
    j["failures"] = rep.failures;
    return j;
}

Json periodic_orbit_json(const PeriodicOrbit& orbit) {
    Json j;
    Json pts = Json::array();
    for (const Scalar& p : orbit.points) pts.push_back(scalar_to_json(p));
    j["points"] = std::move(pts);
    j["period"] = orbit.period;
    j["word"] = orbit.word;
    j["stable"] = orbit.stable;
    if (!orbit.component_cycle.empty()) {
        Json cyc = Json::array();
        for (int l : orbit.component_cycle) cyc.push_back(l + 1);
        j["component_cycle"] = std::move(cyc);
        j["solve_power"] = orbit.solve_power;
    }
    return j;
}

Json attractor_report_json(const AttractorReport& rep) {
    Json j;
    j["r"] = rep.count();
    Json orbits = Json::array();
    for (const PeriodicOrbit& o : rep.orbits) orbits.push_back(periodic_orbit_json(o));
    j["orbits"] = std::move(orbits);
    Json phantoms = Json::array();
    for (const PhantomAttractor& p : rep.phantoms) {
        Json pj;
        pj["point"] = scalar_to_json(p.point);
        pj["word"] = p.word;
        phantoms.push_back(std::move(pj));
    }
    j["phantoms"] = std::move(phantoms);
    // basin histogram per orbit plus sample records
    std::vector<long> histogram(rep.orbits.size(), 0);
    Json samples = Json::array();
    for (const BasinSample& s : rep.basins) {
        if (s.orbit >= 0) ++histogram[s.orbit];
        Json sj;
        sj["x0"] = scalar_to_json(s.x0);
        sj["orbit"] = s.orbit;
        sj["iterations"] = s.iterations;
        samples.push_back(std::move(sj));
    }
    j["basin_histogram"] = histogram;
    j["unattributed"] = rep.unattributed;
    j["basin_samples"] = std::move(samples);
    Json conv;
    conv["mean_iterations"] = rep.mean_iterations;
    conv["max_iterations"] = rep.max_iterations;
    j["convergence"] = std::move(conv);
    return j;
}

Json oracle_outcome_json(const OracleOutcome& out) {
    Json j;
    switch (out.kind) {
        case OracleOutcome::Kind::Orbit: {
            j["kind"] = "orbit";
            Json pts = Json::array();
            for (const Scalar& p : out.points) pts.push_back(scalar_to_json(p));
            j["points"] = std::move(pts);
            j["period"] = out.period;
            j["word"] = out.word;
            break;
        }
        case OracleOutcome::Kind::Phantom:
            j["kind"] = "phantom";
            j["point"] = scalar_to_json(*out.phantom_point);
            j["word"] = out.word;
            break;
        case OracleOutcome::Kind::Undetermined:
            j["kind"] = "undetermined";
            break;
    }
    return j;
}

Json g_connection_json(const std::optional<GConnection>& c) {
    Json j;
    j["found"] = c.has_value();
    if (c) {
        j["i"] = c->cut_index;
        j["j"] = c->endpoint_index;
        j["k"] = c->steps;
    }
    return j;
}

Json ulam_json(const UlamModel& model, bool include_density) {
    Json j;
    j["bins"] = model.bins;
    j["invariance_residual"] = model.invariance_residual;
    j["sweeps"] = model.sweeps;
    double mn = 1.0, mx = 0.0;
    for (double v : model.density) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    j["min_mass"] = mn;
    j["max_mass"] = mx;
    if (include_density) {
        Json bins = Json::array();
        double width = 1.0 / model.bins;
        for (int b = 0; b < model.bins; ++b) {
            Json bj;
            bj["lo"] = b * width;
            bj["hi"] = (b + 1) * width;
            bj["mass"] = model.density[b];
            bins.push_back(std::move(bj));
        }
        j["density"] = std::move(bins);
    }
    return j;
}

}  // namespace pcdyn
