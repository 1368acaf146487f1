#include "pcdyn/quasi_partition.hpp"

#include <algorithm>
#include <cmath>

namespace pcdyn {

const char* verdict_name(GapHit::Verdict v) {
    switch (v) {
        case GapHit::Verdict::HitInterior: return "hit-interior";
        case GapHit::Verdict::HitBoundary: return "hit-boundary";
        case GapHit::Verdict::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

int default_gap_budget(const PiecewiseContraction& f, const ExpandingMap& g) {
    double min_gap = f.gap_set().min_component_length().to_double();
    double c = g.expansion_constant().to_double();
    int b = 10 * static_cast<int>(std::ceil(std::log(1.0 / min_gap) / std::log(c)));
    return std::max(b, 10);
}

GapHit gap_hitting_time(const PiecewiseContraction& f, const ExpandingMap& g, int cut_index, int budget) {
    if (cut_index < 1 || cut_index > f.n() - 1) throw_domain("gap_hitting_time: cut index out of range");
    if (budget < 0) throw_domain("gap_hitting_time: negative budget");
    IntervalSet gap = f.gap_set();
    GapHit hit;
    hit.cut_index = cut_index;
    Scalar y = f.cuts()[cut_index - 1];
    Scalar one = Scalar::one(f.backend());
    for (int k = 0; k <= budget; ++k) {
        hit.trail.push_back(y);
        if (y >= one) {
            // g-orbit escaped [0,1): a g-connection-grade degeneracy
            hit.verdict = GapHit::Verdict::HitBoundary;
            return hit;
        }
        LocateResult loc = gap.locate(y);
        if (loc.kind == LocateResult::Kind::Inside) {
            hit.hitting_time = k;
            hit.verdict = GapHit::Verdict::HitInterior;
            return hit;
        }
        if (loc.kind == LocateResult::Kind::Boundary && loc.member) {
            // in G but not in its interior; excluded generically (no guessing)
            hit.hitting_time = k;
            hit.verdict = GapHit::Verdict::HitBoundary;
            return hit;
        }
        y = g.eval(y);
    }
    hit.verdict = GapHit::Verdict::BudgetExhausted;
    return hit;
}

QuasiPartition build_quasi_partition(const PiecewiseContraction& f, const ExpandingMap& g, int budget) {
    if (budget <= 0) budget = default_gap_budget(f, g);
    std::vector<GapHit> hits;
    for (int i = 1; i <= f.n() - 1; ++i) {
        GapHit h = gap_hitting_time(f, g, i, budget);
        if (h.verdict != GapHit::Verdict::HitInterior)
            throw_validation("gap hit for cut " + std::to_string(i) + " ended " + verdict_name(h.verdict));
        hits.push_back(std::move(h));
    }
    return build_quasi_partition(f, std::move(hits));
}

QuasiPartition build_quasi_partition(const PiecewiseContraction& f, std::vector<GapHit> hits) {
    if (static_cast<int>(hits.size()) != f.n() - 1)
        throw_validation("build_quasi_partition: expected one gap hit per cut");
    Backend bk = f.backend();
    Scalar zero = Scalar::zero(bk), one = Scalar::one(bk);

    QuasiPartition qp;
    qp.max_hitting_time = 0;
    std::vector<Scalar> hull;
    for (const GapHit& h : hits) {
        if (h.verdict != GapHit::Verdict::HitInterior)
            throw_validation("build_quasi_partition: cut " + std::to_string(h.cut_index) + " verdict " +
                             verdict_name(h.verdict));
        qp.max_hitting_time = std::max(qp.max_hitting_time, h.hitting_time);
        for (const Scalar& p : h.trail)
            if (p > zero && p < one) hull.push_back(p);
    }
    std::sort(hull.begin(), hull.end(), [](const Scalar& a, const Scalar& b) { return a < b; });
    hull.erase(std::unique(hull.begin(), hull.end(), [](const Scalar& a, const Scalar& b) { return a == b; }),
               hull.end());
    qp.hull = hull;
    qp.hits = std::move(hits);

    // open components of (0,1) \ H
    Scalar lo = zero;
    for (const Scalar& h : hull) {
        qp.components.push_back(Interval::open(lo, h));
        lo = h;
    }
    qp.components.push_back(Interval::open(lo, one));

    // tau and eta by midpoint probing (no discontinuity inside a component),
    // then the (P2) inclusion via endpoint images
    for (int l = 0; l < qp.m(); ++l) {
        const Interval& J = qp.components[l];
        Scalar mid = J.midpoint();
        qp.eta.push_back(f.branch_at(mid));
        Scalar fmid = f.eval(mid);
        int target = -1;
        for (int t = 0; t < qp.m(); ++t) {
            if (qp.components[t].contains(fmid)) {
                target = t;
                break;
            }
        }
        if (target < 0)
            throw_invariant("(P2) violation: f(midpoint of J_" + std::to_string(l + 1) + ") = " + fmid.str() +
                            " lies in the hull; rerun with the rational backend");
        qp.tau.push_back(target);

        const BranchDescriptor& b = f.branches()[qp.eta[l] - 1];
        Scalar ia = b.eval(J.lo), ib = b.eval(J.hi);
        Interval img = b.increasing() ? Interval::open(ia, ib) : Interval::open(ib, ia);
        const Interval& tgt = qp.components[target];
        if (!(img.lo >= tgt.lo) || !(img.hi <= tgt.hi))
            throw_invariant("(P2) violation: f(J_" + std::to_string(l + 1) + ") = " + img.str() +
                            " not inside J_" + std::to_string(target + 1) + " = " + tgt.str());
        for (const Scalar& h : qp.hull)
            if (h > img.lo && h < img.hi)
                throw_invariant("(P2) violation: hull point " + h.str() + " inside f(J_" + std::to_string(l + 1) +
                                ")");
    }
    return qp;
}

VerifyReport verify_quasi_partition(const PiecewiseContraction& f, const QuasiPartition& qp) {
    VerifyReport rep;
    Backend bk = f.backend();
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    // (P1): H finite (by construction) and contains every cut
    rep.p1 = true;
    for (size_t i = 0; i < f.cuts().size(); ++i) {
        bool found = false;
        for (const Scalar& h : qp.hull)
            if (h == f.cuts()[i]) {
                found = true;
                break;
            }
        if (!found) {
            rep.p1 = false;
            fail("(P1): hull misses cut x_" + std::to_string(i + 1));
        }
    }
    // components + hull partition (0,1)
    {
        std::vector<Interval> parts = qp.components;
        for (const Scalar& h : qp.hull) parts.push_back(Interval::point(h));
        IntervalSet covered = IntervalSet::normalize(parts, bk);
        IntervalSet unit_open = IntervalSet::of({Interval::open(Scalar::zero(bk), Scalar::one(bk))});
        if (!(covered == unit_open)) {
            rep.p1 = false;
            fail("(P1): components + hull do not partition (0,1)");
        }
    }

    // (P2) and eta containment
    rep.p2 = true;
    rep.eta_containment = true;
    if (static_cast<int>(qp.tau.size()) != qp.m() || static_cast<int>(qp.eta.size()) != qp.m()) {
        rep.p2 = false;
        fail("(P2): tau/eta size mismatch");
    } else {
        for (int l = 0; l < qp.m(); ++l) {
            const Interval& J = qp.components[l];
            int digit = f.branch_at(J.midpoint());
            if (digit != qp.eta[l]) {
                rep.eta_containment = false;
                fail("eta: component " + std::to_string(l + 1) + " probes branch " + std::to_string(digit) +
                     " but eta says " + std::to_string(qp.eta[l]));
                continue;
            }
            if (!f.continuity_interval(digit).contains_interval(J)) {
                rep.eta_containment = false;
                fail("eta: J_" + std::to_string(l + 1) + " not inside I_" + std::to_string(digit));
            }
            const BranchDescriptor& b = f.branches()[digit - 1];
            Scalar ia = b.eval(J.lo), ib = b.eval(J.hi);
            Interval img = b.increasing() ? Interval::open(ia, ib) : Interval::open(ib, ia);
            int t = qp.tau[l];
            if (t < 0 || t >= qp.m()) {
                rep.p2 = false;
                fail("(P2): tau out of range at component " + std::to_string(l + 1));
                continue;
            }
            const Interval& tgt = qp.components[t];
            bool inside = img.lo >= tgt.lo && img.hi <= tgt.hi;
            if (inside)
                for (const Scalar& h : qp.hull)
                    if (h > img.lo && h < img.hi) inside = false;
            if (!inside) {
                rep.p2 = false;
                fail("(P2): f(J_" + std::to_string(l + 1) + ") = " + img.str() + " not inside J_" +
                     std::to_string(t + 1) + " = " + tgt.str());
            }
        }
    }

    // gap iterates G, f(G), ..., f^q(G) pairwise disjoint; their interior
    // swallows every trail point
    IntervalSet gap = f.gap_set();
    std::vector<IntervalSet> iterates{gap};
    for (int k = 1; k <= qp.max_hitting_time; ++k) iterates.push_back(f.image_of(iterates.back()));
    rep.gap_iterates_disjoint = true;
    for (size_t a = 0; a < iterates.size(); ++a)
        for (size_t b2 = a + 1; b2 < iterates.size(); ++b2)
            if (!iterates[a].is_disjoint(iterates[b2])) {
                rep.gap_iterates_disjoint = false;
                fail("gap iterates f^" + std::to_string(a) + "(G) and f^" + std::to_string(b2) +
                     "(G) intersect");
            }
    IntervalSet big = IntervalSet::empty_set(bk);
    for (const IntervalSet& s : iterates) big = big.unite(s);
    IntervalSet interior = big.interior();
    rep.trails_in_gap_interiors = true;
    for (const GapHit& h : qp.hits)
        for (const Scalar& p : h.trail) {
            LocateResult loc = interior.locate(p);
            if (loc.kind != LocateResult::Kind::Inside) {
                rep.trails_in_gap_interiors = false;
                fail("trail point " + p.str() + " of cut " + std::to_string(h.cut_index) +
                     " not in the interior of the gap iterates");
            }
        }

    // spot check: f^p(E) disjoint from E for a few powers p > q
    rep.post_period_disjoint = true;
    IntervalSet pushed = interior;
    int q = qp.max_hitting_time;
    for (int p = 1; p <= q + 3; ++p) {
        pushed = f.image_of(pushed);
        if (p <= q) continue;
        if (!pushed.is_disjoint(interior)) {
            rep.post_period_disjoint = false;
            fail("f^" + std::to_string(p) + "(E) intersects E");
        }
    }
    return rep;
}

ItineraryWord symbolic_itinerary_from_tau(const QuasiPartition& qp, int l0) {
    if (l0 < 0 || l0 >= qp.m()) throw_domain("symbolic_itinerary_from_tau: component out of range");
    std::vector<int> seen(qp.m(), -1);
    std::vector<int> seq;
    int l = l0;
    while (seen[l] < 0) {
        seen[l] = static_cast<int>(seq.size());
        seq.push_back(l);
        l = qp.tau[l];
    }
    int s = seen[l];
    int p = static_cast<int>(seq.size()) - s;
    ItineraryWord w;
    w.kind = ItineraryWord::Kind::EventuallyPeriodic;
    w.preperiod = s;
    w.period = p;
    for (int k = 0; k < s + p; ++k) w.digits.push_back(qp.eta[seq[k]]);
    return w;
}

}  // namespace pcdyn
