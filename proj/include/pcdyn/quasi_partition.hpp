#pragma once

#include <string>
#include <vector>

#include "pcdyn/orbits.hpp"

namespace pcdyn {

// Backward orbit of one cut under g until it enters the gap set G.
struct GapHit {
    enum class Verdict { HitInterior, HitBoundary, BudgetExhausted };
    int cut_index = 0;          // i, 1-based
    int hitting_time = 0;       // q_i, valid on HitInterior
    std::vector<Scalar> trail;  // g^0(x_i) .. g^last(x_i)
    Verdict verdict = Verdict::BudgetExhausted;
};

const char* verdict_name(GapHit::Verdict v);

// 10 * ceil(log(1/min gap component)/log c): expansion makes longer trails
// exponentially unlikely
int default_gap_budget(const PiecewiseContraction& f, const ExpandingMap& g);

GapHit gap_hitting_time(const PiecewiseContraction& f, const ExpandingMap& g, int cut_index, int budget);

// Components J_1..J_m of (0,1) minus the hull H (trails of all cuts),
// with the transition map tau and branch containment eta of (P1)/(P2).
struct QuasiPartition {
    std::vector<Interval> components;  // open, sorted left to right
    std::vector<Scalar> hull;          // H, sorted
    std::vector<int> tau;              // 0-based component index per component
    std::vector<int> eta;              // 1-based branch digit per component
    int max_hitting_time = 0;          // q
    std::vector<GapHit> hits;          // per cut, in cut order

    int m() const { return static_cast<int>(components.size()); }
};

// requires every hit to be HitInterior; verifies (P2) while building
QuasiPartition build_quasi_partition(const PiecewiseContraction& f, std::vector<GapHit> hits);
// convenience: runs the gap hits itself, throws Error(Validation) on a
// non-interior verdict
QuasiPartition build_quasi_partition(const PiecewiseContraction& f, const ExpandingMap& g, int budget = 0);

struct VerifyReport {
    bool p1 = false;                    // H finite and contains the cuts
    bool p2 = false;                    // f(J_l) inside J_tau(l), every l
    bool eta_containment = false;       // J_l inside I_eta(l)
    bool gap_iterates_disjoint = false; // G, f(G), ..., f^q(G) pairwise disjoint
    bool trails_in_gap_interiors = false;  // union of Q_i inside E = int(union f^k(G))
    bool post_period_disjoint = false;  // f^p(E) disjoint from E for sampled p > q
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

VerifyReport verify_quasi_partition(const PiecewiseContraction& f, const QuasiPartition& qp);

// exact eventually periodic word of every x in component l0 (0-based),
// read off the finite functional graph of tau through eta
ItineraryWord symbolic_itinerary_from_tau(const QuasiPartition& qp, int l0);

}  // namespace pcdyn
