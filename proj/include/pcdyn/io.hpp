#pragma once

#include <json.hpp>

#include "pcdyn/attractors.hpp"
#include "pcdyn/ulam.hpp"

namespace pcdyn {

using Json = nlohmann::ordered_json;

// Map/system description:
//   {"backend": "rational"|"float", "general_mode": bool,
//    "branches": [{"kind":"affine","slope":"3/10","intercept":"1/10"} |
//                 {"kind":"quadratic","c0":0.15,"c1":0.25,"c2":0.05}],
//    "cuts": ["3/10", ...],            (optional until a map is built)
//    "assignment": "all-right"|"all-left"|"LRL..."}
// Scalar values are strings; plain JSON numbers are accepted only when
// integral (a JSON 0.3 is a binary double, not 3/10).
struct MapSpec {
    Backend backend = Backend::Rational;
    bool general_mode = false;
    std::vector<BranchDescriptor> branches;
    std::vector<Scalar> cuts;
    BoundaryAssignment assignment;  // empty => all-right by default
    bool has_cuts = false;
};

MapSpec map_spec_from_json(const Json& j);
MapSpec map_spec_from_string(const std::string& text);
MapSpec map_spec_from_file(const std::string& path);
Json map_spec_to_json(const MapSpec& spec);

BranchSystem build_system(const MapSpec& spec);         // class-C validation
PiecewiseContraction build_map(const MapSpec& spec);    // general or class-C per spec

Scalar scalar_from_json(const Json& j, Backend b);
Json scalar_to_json(const Scalar& s);  // fraction string / decimal string

Json interval_to_json(const Interval& iv);
Json interval_set_to_json(const IntervalSet& s);
Json system_report_json(const BranchSystem& sys);
Json expanding_map_json(const ExpandingMap& g);
Json orbit_json(const std::vector<Scalar>& pts, const std::vector<int>* digits);
Json itinerary_json(const ItineraryWord& w);
Json gap_hit_json(const GapHit& hit);
Json quasi_partition_json(const QuasiPartition& qp);
Json verify_report_json(const VerifyReport& rep);
Json periodic_orbit_json(const PeriodicOrbit& orbit);
Json attractor_report_json(const AttractorReport& rep);
Json oracle_outcome_json(const OracleOutcome& out);
Json g_connection_json(const std::optional<GConnection>& c);
Json ulam_json(const UlamModel& model, bool include_density);

}  // namespace pcdyn
