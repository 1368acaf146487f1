#pragma once

#include <vector>

#include "pcdyn/expanding.hpp"

namespace pcdyn {

// Ulam discretization of the transfer operator of g over `bins` uniform
// bins. Rows are built from exact branch-image lengths (closed-form
// inverses, no sampling) and renormalized to row sum 1; the stationary
// density comes from power iteration. All of it runs on the double
// projection of g.
struct UlamModel {
    int bins = 0;
    std::vector<double> density;      // stationary, sums to 1
    double invariance_residual = 0.0; // ||rho P - rho||_1 at the returned rho
    long sweeps = 0;

    struct Row {
        int start = 0;             // first target bin
        std::vector<double> w;     // contiguous weights, sum 1
    };
    std::vector<Row> rows;

    // rho P for a row-stochastic P
    std::vector<double> apply(const std::vector<double>& rho) const;
    double row_sum(int b) const;
};

UlamModel ulam_model(const ExpandingMap& g, int bins, double residual_tol = 1e-10, long max_sweeps = 100000);

// largest empty gap (boundary gaps included) left in [0,1] by the g-orbit
// x, g(x), ..., g^m(x)
double orbit_density_gap(const ExpandingMap& g, double x, long m);

}  // namespace pcdyn
