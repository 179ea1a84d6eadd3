#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/knotparams.hpp"

namespace twobridge {

using bigint = boost::multiprecision::cpp_int;

// Dense integer polynomial, exact coefficients, index = degree.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<bigint> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly constant(bigint c);
    static IntPoly monomial(int degree, bigint c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bigint coeff(int d) const;
    const std::vector<bigint>& coeffs() const { return c_; }
    const bigint& leading() const { return c_.back(); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly shifted(int k) const;  // multiply by x^k
    IntPoly scaled(const bigint& s) const;

    bool operator==(const IntPoly& o) const = default;

    // "x^4 - x^2 + 1", descending powers.
    std::string str(std::string_view var = "x") const;

private:
    std::vector<bigint> c_;
    void normalize();
};

// Continued-fraction convergent P_n / Q_n of eps_1 x + 1/(eps_2 x + ...),
// deg P = n, deg Q = n-1, coefficients supported on degrees of the same
// parity as the degree.
struct ConvergentPair {
    int n = 0;
    IntPoly P;
    IntPoly Q;
};

// Pairs for n = 1..n_max via P_n = eps_n x P_{n-1} + P_{n-2} (seeds
// P_0 = 1, P_{-1} = 0) and likewise Q_n with seeds Q_0 = 0, Q_{-1} = 1.
std::vector<ConvergentPair> convergents(const BridgeParams& k, int n_max);

// P_{p-1}: the roots parametrize the parabolic SL2 representations.
IntPoly riley_poly(const BridgeParams& k);

// Horner evaluation in double precision.
std::complex<double> eval_complex(const IntPoly& poly, std::complex<double> x);

}  // namespace twobridge
