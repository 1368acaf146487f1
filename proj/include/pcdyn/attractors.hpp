#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pcdyn/quasi_partition.hpp"

namespace pcdyn {

struct PeriodicOrbit {
    std::vector<Scalar> points;      // one cycle of f, points[j+1] = f(points[j])
    int period = 0;                  // == points.size()
    std::vector<int> word;           // branch digit per point
    bool stable = false;             // no point equals a cut
    std::vector<int> component_cycle;  // tau cycle that produced it (0-based), empty for oracle finds
    int solve_power = 0;             // P used for the fixed-point solve (p or 2p)
};

// Limit point whose own branch breaks the limiting word (Example-4.1 style):
// orbits converge to it but it is not a periodic point.
struct PhantomAttractor {
    Scalar point;
    std::vector<int> word;
    std::vector<int> component_cycle;
};

// all cycles of the functional graph of tau, canonical rotation, sorted
std::vector<std::vector<int>> tau_cycles(const QuasiPartition& qp);

using LocateOrbitResult = std::variant<PeriodicOrbit, PhantomAttractor>;

// Fixed point of the return map on the cycle's first component: solved
// exactly on the rational backend (affine word composition, power p when
// orientation-preserving, else 2p), iterated to convergence on the float
// backend.
LocateOrbitResult locate_periodic_orbit(const PiecewiseContraction& f, const QuasiPartition& qp,
                                        const std::vector<int>& cycle);

struct BasinSample {
    Scalar x0;
    int orbit = -1;       // index into AttractorReport::orbits, -1 unattributed
    long iterations = 0;  // steps until within tolerance
};

struct AttractorOptions {
    int basin_samples = 100;
    long basin_iter_cap = 100000;
    double basin_tol = 1e-8;
    std::uint64_t rng_seed = 0;
    bool include_hull_points = true;
};

struct AttractorReport {
    std::vector<PeriodicOrbit> orbits;
    std::vector<PhantomAttractor> phantoms;
    std::vector<BasinSample> basins;
    int unattributed = 0;
    double mean_iterations = 0.0;
    long max_iterations = 0;

    int count() const { return static_cast<int>(orbits.size()); }  // r
};

// Full pipeline over a verified quasi-partition: locates all orbits via the
// tau cycles, asserts 1 <= r <= n, classifies stability, attributes basins.
AttractorReport attractor_set(const PiecewiseContraction& f, const QuasiPartition& qp,
                              const AttractorOptions& opts = {});

// iterate x0 until within tol of an orbit point whose branch digit matches;
// orbit = -1 when the cap runs out
BasinSample attribute_point(const PiecewiseContraction& f, const std::vector<PeriodicOrbit>& orbits,
                            const Scalar& x0, double tol, long iter_cap);

struct OracleOptions {
    long burn_in = 1000;   // max transient scanned for a recurrence
    int probe_len = 256;   // max candidate period
    double tol = 1e-9;
    long refine_cap = 100000;
};

struct OracleOutcome {
    enum class Kind { Orbit, Phantom, Undetermined };
    Kind kind = Kind::Undetermined;
    std::vector<Scalar> points;  // orbit cycle (Orbit)
    int period = 0;
    std::vector<int> word;
    std::optional<Scalar> phantom_point;
};

// Brute-force attractor oracle, independent of the quasi-partition route:
// iterates f, detects a digit/point recurrence, then pins the limit cycle
// (exact affine solve on the rational backend, f^p refinement on float)
// and classifies genuine orbit vs phantom.
OracleOutcome direct_attractor_oracle(const PiecewiseContraction& f, const Scalar& x,
                                      const OracleOptions& opts = {});

}  // namespace pcdyn
