#pragma once

#include <complex>

namespace twobridge {

struct DilogConfig {
    double series_tol = 1e-15;
    int max_terms = 1000000;
};

// Dilogarithm Li_2(z), principal branch.
std::complex<double> li2(std::complex<double> z, const DilogConfig& cfg = {});

// Bloch-Wigner dilogarithm D(z) = Im Li_2(z) + arg(1-z) log|z|: the signed
// volume of the ideal tetrahedron with vertex cross-ratio z. Vanishes on the
// real line and at the degenerate points 0, 1, infinity (nonfinite input).
double bloch_wigner(std::complex<double> z, const DilogConfig& cfg = {});

// Lobachevsky function L(theta) = 1/2 sum_{n>=1} sin(2 n theta)/n^2,
// odd and pi-periodic. Plain series evaluation.
double lobachevsky(double theta, const DilogConfig& cfg = {});

// v3 = D(e^{i pi/3}), the volume of the regular ideal tetrahedron.
double v3();

}  // namespace twobridge
