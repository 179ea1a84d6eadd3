#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "twobridge/polyseq.hpp"

namespace twobridge {

struct RootSolveOptions {
    double tol_residual = 1e-12;  // relative to max |coefficient|
    int max_iterations = 500;     // Aberth-Ehrlich sweeps
    int polish_iterations = 50;   // Newton steps per root
    double cluster_radius = 1e-8;
};

// All complex roots of an integer polynomial. roots.size() == poly_degree;
// near-coincident roots (within cluster_radius) share one entry of
// representatives. Sorted lexicographically by (Re, Im).
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::vector<double> residuals;  // |P(root)| / max|coeff|
    int poly_degree = 0;
    std::vector<std::size_t> representatives;  // indices of cluster representatives
};

// Aberth-Ehrlich simultaneous iteration with compensated (double-double)
// Horner evaluation, started on Newton-polygon circles; even polynomials
// are first solved in y = x^2 at half the degree. Newton-style refinement
// (polish_iterations) settles the final digits. Throws NoConvergence if
// the budget runs out.
RootSet find_roots(const IntPoly& poly, const RootSolveOptions& opt = {});

// |P(x)| / max|coeff| evaluated in compensated arithmetic.
double root_residual(const IntPoly& poly, std::complex<double> x);

// Horner evaluation carried out in double-double arithmetic; accurate even
// under the heavy cancellation near clustered roots.
std::complex<double> eval_compensated(const IntPoly& poly, std::complex<double> x);

}  // namespace twobridge
