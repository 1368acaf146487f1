#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace pcdyn;
using fixtures::rq;

TEST_CASE("validate_system computes images, gaps and kappa") {
    BranchSystem sys = fixtures::s2_system();
    REQUIRE(sys.n() == 2);
    CHECK(sys.images()[0].str() == "[1/10,2/5]");
    CHECK(sys.images()[1].str() == "[1/2,4/5]");
    REQUIRE(sys.gaps().size() == 3);
    CHECK(sys.gaps()[0].str() == "[0,1/10)");
    CHECK(sys.gaps()[1].str() == "(2/5,1/2)");
    CHECK(sys.gaps()[2].str() == "(4/5,1)");
    CHECK(sys.kappa() == rq("3/10"));
}

TEST_CASE("validate_system rejects Example 4.1 branches for class C") {
    CHECK_THROWS_WITH_AS(BranchSystem::validate({BranchDescriptor::affine(rq("1/2"), rq("1/4")),
                                                 BranchDescriptor::affine(rq("1/2"), rq("-1/4"))}),
                         doctest::Contains("branch 2"), Error);
}

TEST_CASE("validate_system accepts the quadratic-affine pair") {
    BranchSystem sys = BranchSystem::validate(
        {BranchDescriptor::quadratic(Scalar::floating(0.2), Scalar::floating(0.25), Scalar::floating(0.05)),
         BranchDescriptor::affine(Scalar::floating(0.3), Scalar::floating(0.6))});
    CHECK(sys.images()[0].lo.to_double() == doctest::Approx(0.2));
    CHECK(sys.images()[0].hi.to_double() == doctest::Approx(0.5));
    CHECK(sys.images()[1].lo.to_double() == doctest::Approx(0.6));
    CHECK(sys.images()[1].hi.to_double() == doctest::Approx(0.9));
}

TEST_CASE("validate_system error cases name the branch") {
    // overlapping images
    CHECK_THROWS_WITH_AS(BranchSystem::validate({BranchDescriptor::affine(rq("3/10"), rq("1/10")),
                                                 BranchDescriptor::affine(rq("3/10"), rq("3/10"))}),
                         doctest::Contains("overlap"), Error);
    // touching closures are rejected too
    CHECK_THROWS_AS(BranchSystem::validate({BranchDescriptor::affine(rq("3/10"), rq("1/10")),
                                            BranchDescriptor::affine(rq("3/10"), rq("2/5"))}),
                    Error);
    // derivative bound violated
    CHECK_THROWS_WITH_AS(BranchSystem::validate({BranchDescriptor::affine(rq("1"), rq("0"))}),
                         doctest::Contains("not a contraction"), Error);
    CHECK_THROWS_AS(BranchSystem::validate({BranchDescriptor::affine(rq("0"), rq("1/2"))}), Error);
    // image touching the unit boundary
    CHECK_THROWS_AS(BranchSystem::validate({BranchDescriptor::affine(rq("1/2"), rq("1/2"))}), Error);
    // quadratic with the critical point inside [0,1]
    CHECK_THROWS_WITH_AS(
        BranchSystem::validate(
            {BranchDescriptor::quadratic(Scalar::floating(0.5), Scalar::floating(0.2), Scalar::floating(-0.2))}),
        doctest::Contains("critical point"), Error);
    // quadratic needs the float backend
    CHECK_THROWS_WITH_AS(BranchDescriptor::quadratic(rq("1/5"), rq("1/4"), rq("1/20")),
                         doctest::Contains("float backend"), Error);
}

TEST_CASE("pc_eval on the paper fixtures") {
    PiecewiseContraction f1 = fixtures::f1_map();
    CHECK(f1.eval(rq("0")) == rq("1/4"));
    CHECK(f1.eval(rq("1/2")) == rq("0"));

    PiecewiseContraction s2 = fixtures::s2_map();
    CHECK(s2.eval(rq("3/10")) == rq("59/100"));

    CHECK_THROWS_AS(s2.eval(rq("1")), Error);
    CHECK_THROWS_AS(f1.eval(rq("-1/10")), Error);
}

TEST_CASE("pc_branch follows the boundary assignment") {
    PiecewiseContraction f1 = fixtures::f1_map();
    CHECK(f1.branch_at(rq("49/100")) == 1);
    CHECK(f1.branch_at(rq("1/2")) == 2);

    PiecewiseContraction left = fixtures::s2_map("3/10", CutSide::AttachLeft);
    CHECK(left.branch_at(rq("3/10")) == 1);
    PiecewiseContraction right = fixtures::s2_map("3/10", CutSide::AttachRight);
    CHECK(right.branch_at(rq("3/10")) == 2);
}

TEST_CASE("image and gap sets with exact endpoint flags") {
    PiecewiseContraction right = fixtures::s2_map();  // I_i = [x_{i-1}, x_i)
    IntervalSet image = right.image_set();
    REQUIRE(image.size() == 2);
    CHECK(image.components()[0].str() == "[1/10,19/100)");
    CHECK(image.components()[1].str() == "[59/100,4/5)");
    IntervalSet gap = right.gap_set();
    REQUIRE(gap.size() == 3);
    CHECK(gap.components()[0].str() == "[0,1/10)");
    CHECK(gap.components()[1].str() == "[19/100,59/100)");
    CHECK(gap.components()[2].str() == "[4/5,1)");

    PiecewiseContraction left = fixtures::s2_map("3/10", CutSide::AttachLeft);
    IntervalSet limage = left.image_set();
    CHECK(limage.components()[0].str() == "[1/10,19/100]");
    CHECK(limage.components()[1].str() == "(59/100,4/5)");

    // f1 in general mode: image [0,1/2), gap [1/2,1)
    PiecewiseContraction f1 = fixtures::f1_map();
    IntervalSet fimage = f1.image_set();
    REQUIRE(fimage.size() == 1);
    CHECK(fimage.components()[0].str() == "[0,1/2)");
    CHECK(f1.gap_set().components()[0].str() == "[1/2,1)");
}

TEST_CASE("gap set interior is nonempty for class-C maps") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> cut(1, 999);
    for (int t = 0; t < 20; ++t) {
        PiecewiseContraction f = PiecewiseContraction::create(
            fixtures::s2_system(), ParameterPoint::validate({Scalar::rational(cut(rng), 1000)}),
            BoundaryAssignment::all_right(1));
        CHECK_FALSE(f.gap_set().interior().empty());
        CHECK(f.gap_set() == f.image_set().complement_in_unit());
    }
}

TEST_CASE("build_inverse evaluates branch inverses and gap surjections") {
    BranchSystem sys = fixtures::s2_system();
    ExpandingMap g = ExpandingMap::build(sys);
    REQUIRE(g.piece_count() == 5);
    CHECK(g.eval(rq("1/4")) == rq("1/2"));   // A_1 piece: (x - 1/10)/(3/10)
    CHECK(g.eval(rq("9/20")) == rq("1/2"));  // B_2 piece: (x - 2/5)/(1/10)
    CHECK(g.eval(rq("0")) == rq("0"));
    CHECK(g.eval(rq("1")) == rq("1"));
    CHECK(g.eval(rq("2/3")) == rq("5/9"));
    CHECK(g.expansion_constant() == rq("10/3"));

    PiecewiseContraction f = fixtures::s2_map();
    Scalar y = f.eval(rq("7/10"));
    CHECK(y == rq("71/100"));
    CHECK(g.eval(y) == rq("7/10"));
}

TEST_CASE("general mode refuses the inverse pipeline") {
    PiecewiseContraction f1 = fixtures::f1_map();
    CHECK(f1.general_mode());
    CHECK_THROWS_AS((void)f1.system(), Error);
}

TEST_CASE("left-inverse identity holds exactly on random points and assignments") {
    BranchSystem sys = fixtures::s2_system();
    ExpandingMap g = ExpandingMap::build(sys);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> pt(0, 999999);
    for (CutSide side : {CutSide::AttachLeft, CutSide::AttachRight}) {
        PiecewiseContraction f = PiecewiseContraction::create(sys, ParameterPoint::validate({rq("3/10")}),
                                                              BoundaryAssignment{{side}});
        for (int t = 0; t < 2000; ++t) {
            Scalar x = Scalar::rational(pt(rng), 1000000);
            CHECK(g.eval(f.eval(x)) == x);
        }
    }
}

TEST_CASE("left-inverse identity within 1e-12 on the quadratic system") {
    BranchSystem sys = BranchSystem::validate(
        {BranchDescriptor::quadratic(Scalar::floating(0.15), Scalar::floating(0.25), Scalar::floating(0.05)),
         BranchDescriptor::affine(Scalar::floating(0.3), Scalar::floating(0.62))});
    ExpandingMap g = ExpandingMap::build(sys);
    PiecewiseContraction f = PiecewiseContraction::create(sys, ParameterPoint::validate({Scalar::floating(0.5)}),
                                                          BoundaryAssignment::all_right(1));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> pt(0.0, 1.0);
    for (int t = 0; t < 2000; ++t) {
        double x = pt(rng);
        double y = g.eval_d(f.eval_d(x));
        CHECK(std::fabs(y - x) <= 1e-12);
    }
}

TEST_CASE("injectivity and the contraction bound on shared branches") {
    PiecewiseContraction f = fixtures::s2_map();
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> pt(0, 999999);
    for (int t = 0; t < 2000; ++t) {
        Scalar x = Scalar::rational(pt(rng), 1000000);
        Scalar y = Scalar::rational(pt(rng), 1000000);
        if (x == y) continue;
        CHECK(f.eval(x) != f.eval(y));
        if (f.branch_at(x) == f.branch_at(y))
            CHECK((f.eval(x) - f.eval(y)).abs() <= f.kappa() * (x - y).abs());
    }
}

TEST_CASE("finite-difference slope of g meets the expansion constant") {
    BranchSystem sys = fixtures::s2_system();
    ExpandingMap g = ExpandingMap::build(sys);
    double c = g.expansion_constant().to_double();
    for (int k = 0; k < g.piece_count(); ++k) {
        const ExpandingMap::Piece& p = g.pieces()[k];
        double lo = p.domain.lo.to_double(), hi = p.domain.hi.to_double();
        double h = (hi - lo) / 64.0;
        for (int j = 1; j < 63; ++j) {
            double a = lo + j * h;
            double slope = (g.piece_forward_d(k, a + h * 0.5) - g.piece_forward_d(k, a)) / (h * 0.5);
            CHECK(std::fabs(slope) >= c - 1e-6);
        }
    }
}

TEST_CASE("general-mode validation catches maps leaving the unit interval") {
    // f2 + eps with eps >= 1/4 is rejected by the preset guard
    CHECK_THROWS_AS(fixtures::f2_eps_map("1/3"), Error);
    // and by map validation when built directly: branch 1 image exits [0,1)
    std::vector<BranchDescriptor> branches{BranchDescriptor::affine(rq("1/2"), rq("3/5")),
                                           BranchDescriptor::affine(rq("1/2"), rq("-1/4"))};
    CHECK_THROWS_WITH_AS(PiecewiseContraction::create_general(branches, ParameterPoint::validate({rq("1/2")}),
                                                              BoundaryAssignment::all_left(1)),
                         doctest::Contains("leaves [0,1)"), Error);
    // non-injective general map: overlapping branch images
    std::vector<BranchDescriptor> overlap{BranchDescriptor::affine(rq("1/2"), rq("1/4")),
                                          BranchDescriptor::affine(rq("1/2"), rq("0"))};
    CHECK_THROWS_WITH_AS(PiecewiseContraction::create_general(overlap, ParameterPoint::validate({rq("1/2")}),
                                                              BoundaryAssignment::all_right(1)),
                         doctest::Contains("not injective"), Error);
}

TEST_CASE("cut validation") {
    CHECK_THROWS_AS(ParameterPoint::validate({rq("0")}), Error);
    CHECK_THROWS_AS(ParameterPoint::validate({rq("1")}), Error);
    CHECK_THROWS_AS(ParameterPoint::validate({rq("1/2"), rq("1/2")}), Error);
    CHECK_THROWS_AS(ParameterPoint::validate({rq("2/3"), rq("1/3")}), Error);
}
