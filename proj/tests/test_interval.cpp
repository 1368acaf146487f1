#include <doctest.h>

#include <random>

#include "pcdyn/interval_set.hpp"

using namespace pcdyn;

namespace {

Scalar rq(const char* s) { return Scalar::parse(s, Backend::Rational); }

Interval iv(const char* lo, const char* hi, bool lc, bool hc) {
    return Interval::make(rq(lo), rq(hi), lc, hc);
}

// independent membership oracle over the raw (un-normalized) input
bool raw_member(const std::vector<Interval>& raw, const Scalar& x) {
    for (const Interval& i : raw)
        if (i.contains(x)) return true;
    return false;
}

}  // namespace

TEST_CASE("normalize merges adjacent half-open intervals") {
    IntervalSet s = IntervalSet::of({iv("0", "1/2", true, false), iv("1/2", "1", true, false)});
    REQUIRE(s.size() == 1);
    CHECK(s.components()[0].str() == "[0,1)");
}

TEST_CASE("normalize of the empty list is the empty set") {
    IntervalSet s = IntervalSet::normalize({}, Backend::Rational);
    CHECK(s.empty());
}

TEST_CASE("already canonical input is unchanged") {
    std::vector<Interval> raw{iv("1/10", "2/5", true, true), iv("1/2", "4/5", true, true)};
    IntervalSet s = IntervalSet::of(raw);
    REQUIRE(s.size() == 2);
    CHECK(s.components()[0].str() == "[1/10,2/5]");
    CHECK(s.components()[1].str() == "[1/2,4/5]");
}

TEST_CASE("normalize keeps open touching intervals apart") {
    IntervalSet s = IntervalSet::of({iv("2/5", "1/2", false, false), iv("1/2", "3/5", false, false)});
    CHECK(s.size() == 2);
    IntervalSet t = IntervalSet::of({iv("2/5", "1/2", false, true), iv("1/2", "3/5", false, false)});
    CHECK(t.size() == 1);
}

TEST_CASE("normalize is idempotent and order independent") {
    std::vector<Interval> raw{iv("0", "1/4", true, false), iv("1/8", "1/3", true, true),
                              iv("1/2", "1/2", true, true), iv("1/3", "1/2", false, false)};
    IntervalSet a = IntervalSet::of(raw);
    std::reverse(raw.begin(), raw.end());
    IntervalSet b = IntervalSet::of(raw);
    CHECK(a == b);
    CHECK(IntervalSet::normalize(a.components(), Backend::Rational) == a);
}

TEST_CASE("complement example from the gap construction") {
    IntervalSet s = IntervalSet::of({iv("1/10", "19/100", true, false), iv("59/100", "4/5", true, false)});
    IntervalSet c = s.complement_in_unit();
    REQUIRE(c.size() == 3);
    CHECK(c.components()[0].str() == "[0,1/10)");
    CHECK(c.components()[1].str() == "[19/100,59/100)");
    CHECK(c.components()[2].str() == "[4/5,1)");
}

TEST_CASE("complement trivial cases") {
    CHECK(IntervalSet::empty_set(Backend::Rational).complement_in_unit() == IntervalSet::unit(Backend::Rational));
    CHECK(IntervalSet::unit(Backend::Rational).complement_in_unit().empty());
}

TEST_CASE("complement is an involution and matches pointwise negation") {
    std::mt19937_64 rng(7);
    // subsets of [0,1): endpoints stay below 1
    std::uniform_int_distribution<long> num(0, 999);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Interval> raw;
        int k = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) {
            long a = num(rng), b = num(rng);
            if (a > b) std::swap(a, b);
            bool lc = rng() & 1, hc = rng() & 1;
            if (a == b) lc = hc = true;
            raw.push_back(Interval::make(Scalar::rational(a, 1000), Scalar::rational(b, 1000), lc, hc));
        }
        IntervalSet s = IntervalSet::of(raw);
        IntervalSet c = s.complement_in_unit();
        CHECK(c.complement_in_unit() == s);
        // dense probe grid plus every endpoint
        for (long p = 0; p < 1000; p += 7) {
            Scalar x = Scalar::rational(p, 1000);
            CHECK(c.member(x) == !s.member(x));
        }
        for (const Interval& i : raw) {
            for (const Scalar& x : {i.lo, i.hi}) {
                if (x >= Scalar::rational(1)) continue;
                CHECK(c.member(x) == !s.member(x));
            }
        }
    }
}

TEST_CASE("locate distinguishes inside, boundary, outside") {
    IntervalSet s = IntervalSet::of({iv("19/100", "59/100", true, false)});
    LocateResult at_lo = s.locate(rq("19/100"));
    CHECK(at_lo.kind == LocateResult::Kind::Boundary);
    CHECK(at_lo.component == 0);
    CHECK(at_lo.member);

    LocateResult inside = s.locate(rq("3/10"));
    CHECK(inside.kind == LocateResult::Kind::Inside);
    CHECK(inside.member);

    LocateResult outside = s.locate(rq("7/10"));
    CHECK(outside.kind == LocateResult::Kind::Outside);
    CHECK_FALSE(outside.member);

    LocateResult at_hi = s.locate(rq("59/100"));
    CHECK(at_hi.kind == LocateResult::Kind::Boundary);
    CHECK_FALSE(at_hi.member);
}

TEST_CASE("intersection endpoint flags") {
    IntervalSet a = IntervalSet::of({iv("0", "1/2", true, false)});
    IntervalSet b = IntervalSet::of({iv("1/2", "1", true, false)});
    CHECK(a.intersect(b).empty());
    CHECK(a.is_disjoint(b));

    IntervalSet ac = IntervalSet::of({iv("0", "1/2", true, true)});
    IntervalSet meet = ac.intersect(b);
    REQUIRE(meet.size() == 1);
    CHECK(meet.components()[0].str() == "[1/2,1/2]");

    IntervalSet c = IntervalSet::of({iv("1/10", "2/5", true, true)});
    IntervalSet d = IntervalSet::of({iv("1/5", "4/5", true, true)});
    CHECK(c.intersect(d).components()[0].str() == "[1/5,2/5]");
}

TEST_CASE("intersection matches pointwise conjunction on a dense grid") {
    IntervalSet a = IntervalSet::of(
        {iv("1/100", "33/100", true, false), iv("2/5", "2/5", true, true), iv("1/2", "9/10", false, true)});
    IntervalSet b = IntervalSet::of({iv("0", "2/5", false, true), iv("3/5", "1", true, false)});
    IntervalSet both = a.intersect(b);
    for (long p = 0; p <= 1000; ++p) {
        Scalar x = Scalar::rational(p, 1000);
        if (x > Scalar::rational(1)) break;
        CHECK(both.member(x) == (a.member(x) && b.member(x)));
    }
}

TEST_CASE("interior drops points and opens endpoints") {
    IntervalSet s = IntervalSet::of({iv("1/10", "2/5", true, true), iv("1/2", "1/2", true, true)});
    IntervalSet in = s.interior();
    REQUIRE(in.size() == 1);
    CHECK(in.components()[0].str() == "(1/10,2/5)");
}

TEST_CASE("lengths") {
    IntervalSet s = IntervalSet::of({iv("0", "1/4", true, false), iv("1/2", "5/8", false, false)});
    CHECK(s.total_length() == rq("3/8"));
    CHECK(s.min_component_length() == rq("1/8"));
}

TEST_CASE("interval validation errors name the offender") {
    CHECK_THROWS_WITH_AS(Interval::make(rq("1/2"), rq("1/4"), true, true),
                         doctest::Contains("lo > hi"), Error);
    CHECK_THROWS_AS(Interval::make(rq("1/2"), rq("3/2"), true, true), Error);
    CHECK_THROWS_AS(Interval::make(rq("1/2"), rq("1/2"), true, false), Error);
}

TEST_CASE("float backend snapping keeps slivers out") {
    Scalar a = Scalar::floating(0.3);
    Scalar b = Scalar::floating(0.3 + 1e-13);
    IntervalSet s = IntervalSet::of({Interval::make(Scalar::floating(0.0), a, true, false),
                                     Interval::make(b, Scalar::floating(1.0), true, false)});
    CHECK(s.size() == 1);
}
