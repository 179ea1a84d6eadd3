#include "twobridge/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "twobridge/errors.hpp"

namespace twobridge {

namespace {

// ---- double-double arithmetic (error-free transformations) ----
//
// The convergent polynomials are violently ill-conditioned in the monomial
// basis: near their outermost roots a plain double Horner value is pure
// rounding noise (Newton steps of size ~0.1 that never settle). Every
// iteration below therefore evaluates P with compensated arithmetic,
// giving values as if computed in twice the working precision.

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return two_sum(s.hi, lo);
}

dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
}

struct ddc {
    dd re, im;
};

ddc ddc_add(ddc a, ddc b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

ddc ddc_mul(ddc a, ddc b) {
    dd rr = dd_add(dd_mul(a.re, b.re), dd_mul({-a.im.hi, -a.im.lo}, b.im));
    dd ii = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
    return {rr, ii};
}

dd dd_from_bigint(const bigint& c) {
    double hi = c.convert_to<double>();
    bigint rem = c - bigint(hi);
    return {hi, rem.convert_to<double>()};
}

std::vector<dd> dd_coeffs(const IntPoly& poly) {
    std::vector<dd> out;
    out.reserve(poly.coeffs().size());
    for (const bigint& c : poly.coeffs()) out.push_back(dd_from_bigint(c));
    return out;
}

std::complex<double> eval_dd(const std::vector<dd>& coeffs, std::complex<double> x) {
    ddc z{{x.real(), 0.0}, {x.imag(), 0.0}};
    ddc acc{{0.0, 0.0}, {0.0, 0.0}};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = ddc_add(ddc_mul(acc, z), ddc{*it, {0.0, 0.0}});
    return {acc.re.hi, acc.im.hi};
}

std::vector<dd> dd_deriv_coeffs(const std::vector<dd>& coeffs) {
    std::vector<dd> out;
    out.reserve(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        out.push_back(dd_mul(coeffs[k], {static_cast<double>(k), 0.0}));
    return out;
}

// Starting points from the Newton polygon: the upper convex hull of
// (k, log|a_k|) splits the degree into annuli whose radii estimate the
// root moduli far better than a single coefficient bound.
std::vector<std::complex<double>> polygon_starts(const std::vector<double>& monic) {
    const int d = static_cast<int>(monic.size()) - 1;
    std::vector<std::pair<double, double>> pts;
    for (int k = 0; k <= d; ++k)
        if (monic[static_cast<std::size_t>(k)] != 0.0)
            pts.push_back({static_cast<double>(k),
                           std::log(std::abs(monic[static_cast<std::size_t>(k)]))});

    std::vector<std::pair<double, double>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            if ((b.second - a.second) * (pt.first - a.first) <=
                (pt.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    std::vector<std::complex<double>> x;
    x.reserve(static_cast<std::size_t>(d));
    int zeros = static_cast<int>(pts.front().first);
    for (int i = 0; i < zeros; ++i)
        x.push_back(std::polar(1e-6, 2.0 * std::numbers::pi * i / std::max(1, zeros)));
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        int k1 = static_cast<int>(hull[e].first);
        int k2 = static_cast<int>(hull[e + 1].first);
        double r = std::exp((hull[e].second - hull[e + 1].second) / (k2 - k1));
        int m = k2 - k1;
        for (int i = 0; i < m; ++i) {
            double angle = 2.0 * std::numbers::pi * i / m + 0.376994 +
                           0.8191 * static_cast<double>(e);
            x.push_back(std::polar(r, angle));
        }
    }
    return x;
}

// One Gauss-Seidel Aberth-Ehrlich sweep with a short backtracking line
// search per point (full steps cycle on the crowded configurations these
// polynomials produce). Returns the largest relative correction.
double aberth_sweep(std::vector<std::complex<double>>& x, const std::vector<dd>& exact,
                    const std::vector<dd>& dexact, double lead) {
    const int d = static_cast<int>(x.size());
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
        std::complex<double>& xi = x[static_cast<std::size_t>(i)];
        std::complex<double> p = eval_dd(exact, xi) / lead;
        if (std::abs(p) == 0.0) continue;
        std::complex<double> dp = eval_dd(dexact, xi) / lead;
        std::complex<double> newton = dp == std::complex<double>(0.0, 0.0)
                                          ? std::complex<double>(1e-3, 1e-3)
                                          : p / dp;
        std::complex<double> repulsion{0.0, 0.0};
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            std::complex<double> diff = xi - x[static_cast<std::size_t>(j)];
            if (std::abs(diff) < 1e-300) diff = {1e-300, 0.0};
            repulsion += 1.0 / diff;
        }
        std::complex<double> denom = 1.0 - newton * repulsion;
        std::complex<double> w = std::abs(denom) < 1e-300 ? newton : newton / denom;

        const double p0 = std::abs(p);
        std::complex<double> step = w;
        bool moved = false;
        for (int h = 0; h < 5; ++h) {
            std::complex<double> cand = xi - step;
            if (std::abs(eval_dd(exact, cand) / lead) < p0) {
                xi = cand;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) xi -= step;  // smallest step; keeps crowded points moving
        worst = std::max(worst, std::abs(step) / (1.0 + std::abs(xi)));
    }
    return worst;
}

// True when only even powers carry nonzero coefficients.
bool is_even_poly(const IntPoly& poly) {
    for (int d = 1; d <= poly.degree(); d += 2)
        if (poly.coeff(d) != 0) return false;
    return poly.degree() >= 2;
}

std::vector<std::complex<double>> solve_roots(const IntPoly& poly,
                                              const RootSolveOptions& opt) {
    const int d = poly.degree();
    std::vector<dd> exact = dd_coeffs(poly);
    std::vector<dd> dexact = dd_deriv_coeffs(exact);
    const double lead = poly.leading().convert_to<double>();
    std::vector<double> monic(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        monic[static_cast<std::size_t>(i)] = exact[static_cast<std::size_t>(i)].hi / lead;

    std::vector<std::complex<double>> x;
    int budget = opt.max_iterations;
    if (is_even_poly(poly) && d >= 4) {
        // Recurse on the half-degree polynomial in y = x^2, then split each
        // root into its +-sqrt pair; a short refinement settles the pairs.
        std::vector<bigint> half(static_cast<std::size_t>(d / 2) + 1);
        for (int i = 0; i <= d / 2; ++i)
            half[static_cast<std::size_t>(i)] = poly.coeff(2 * i);
        std::vector<std::complex<double>> y = solve_roots(IntPoly(std::move(half)), opt);
        x.reserve(static_cast<std::size_t>(d));
        for (const auto& yr : y) {
            std::complex<double> s = std::sqrt(yr);
            x.push_back(s);
            x.push_back(-s);
        }
        budget = opt.polish_iterations;
    } else {
        x = polygon_starts(monic);
    }

    for (int iter = 0; iter < budget; ++iter) {
        if (aberth_sweep(x, exact, dexact, lead) < 4e-16) break;
    }
    return x;
}

// Compensated evaluation certifies a root only down to
// noise/|P'| ~ d eps^2 sum|a_k||x|^k / |P'(x)|. At Wilkinson-type parameter
// pairs (|P'| many orders below the coefficient envelope) that bound, or
// the derivative itself, drowns in noise and the roots need more precision.
bool roots_certified(const std::vector<dd>& exact, const std::vector<dd>& dexact,
                     const std::vector<std::complex<double>>& roots) {
    const double d = static_cast<double>(exact.size() - 1);
    for (const auto& r : roots) {
        double ax = std::abs(r);
        double env_p = 0.0, env_dp = 0.0;
        for (auto it = exact.rbegin(); it != exact.rend(); ++it)
            env_p = env_p * ax + std::abs(it->hi);
        for (auto it = dexact.rbegin(); it != dexact.rend(); ++it)
            env_dp = env_dp * ax + std::abs(it->hi);
        double noise_p = 2.0 * d * 1.2e-32 * env_p;
        double noise_dp = 2.0 * d * 1.2e-32 * env_dp;
        double dp = std::abs(eval_dd(dexact, r)) - noise_dp;
        if (dp <= 0.0 || noise_p / dp > 1e-13 * (1.0 + ax)) return false;
    }
    return true;
}

// ---- 50-digit refinement for the uncertified cases ----

using mpfloat = boost::multiprecision::cpp_bin_float_50;

struct mpc {
    mpfloat re, im;
};

mpc operator+(const mpc& a, const mpc& b) { return {a.re + b.re, a.im + b.im}; }
mpc operator-(const mpc& a, const mpc& b) { return {a.re - b.re, a.im - b.im}; }
mpc operator*(const mpc& a, const mpc& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
mpc operator/(const mpc& a, const mpc& b) {
    mpfloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
mpfloat abs2(const mpc& a) { return a.re * a.re + a.im * a.im; }

void refine_multiprecision(const IntPoly& poly, std::vector<std::complex<double>>& roots,
                           int budget) {
    const int d = poly.degree();
    std::vector<mpfloat> coeffs, dcoeffs;
    coeffs.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) coeffs.push_back(mpfloat(poly.coeff(k)));
    for (int k = 1; k <= d; ++k) dcoeffs.push_back(coeffs[static_cast<std::size_t>(k)] * k);

    auto horner = [](const std::vector<mpfloat>& c, const mpc& z) {
        mpc acc{0, 0};
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + mpc{*it, 0};
        return acc;
    };

    std::vector<mpc> x;
    x.reserve(roots.size());
    for (const auto& r : roots) x.push_back({mpfloat(r.real()), mpfloat(r.imag())});

    const mpfloat tol = mpfloat("1e-60");
    for (int iter = 0; iter < budget; ++iter) {
        mpfloat worst = 0;
        for (int i = 0; i < d; ++i) {
            mpc& xi = x[static_cast<std::size_t>(i)];
            mpc p = horner(coeffs, xi);
            if (abs2(p) == 0) continue;
            mpc dp = horner(dcoeffs, xi);
            mpc newton = abs2(dp) == 0 ? mpc{mpfloat("1e-3"), mpfloat("1e-3")} : p / dp;
            mpc repulsion{0, 0};
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                mpc diff = xi - x[static_cast<std::size_t>(j)];
                if (abs2(diff) == 0) diff = {mpfloat("1e-60"), 0};
                repulsion = repulsion + mpc{1, 0} / diff;
            }
            mpc denom = mpc{1, 0} - newton * repulsion;
            mpc w = abs2(denom) == 0 ? newton : newton / denom;
            xi = xi - w;
            worst = std::max(worst, abs2(w) / (1 + abs2(xi)));
        }
        if (worst < tol) break;
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        roots[i] = {x[i].re.convert_to<double>(), x[i].im.convert_to<double>()};
}

}  // namespace

std::complex<double> eval_compensated(const IntPoly& poly, std::complex<double> x) {
    return eval_dd(dd_coeffs(poly), x);
}

double root_residual(const IntPoly& poly, std::complex<double> x) {
    double scale = 0.0;
    for (const bigint& c : poly.coeffs())
        scale = std::max(scale, std::abs(c.convert_to<double>()));
    if (scale == 0.0) return 0.0;
    return std::abs(eval_compensated(poly, x)) / scale;
}

RootSet find_roots(const IntPoly& poly, const RootSolveOptions& opt) {
    const int d = poly.degree();
    if (d < 1) throw std::invalid_argument("find_roots: degree must be >= 1");

    double scale = 0.0;
    for (const bigint& c : poly.coeffs())
        scale = std::max(scale, std::abs(c.convert_to<double>()));

    std::vector<std::complex<double>> x = solve_roots(poly, opt);
    std::vector<dd> exact = dd_coeffs(poly);
    std::vector<dd> dexact = dd_deriv_coeffs(exact);
    if (!roots_certified(exact, dexact, x))
        refine_multiprecision(poly, x, opt.max_iterations);

    RootSet rs;
    rs.poly_degree = d;
    rs.roots = std::move(x);
    std::sort(rs.roots.begin(), rs.roots.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    rs.residuals.reserve(rs.roots.size());
    double worst = 0.0;
    for (const auto& r : rs.roots) {
        rs.residuals.push_back(std::abs(eval_dd(exact, r)) / scale);
        worst = std::max(worst, rs.residuals.back());
    }
    if (worst > opt.tol_residual) throw NoConvergence(opt.max_iterations, worst);

    // Clusters: greedy pass over the sorted roots.
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        bool duplicate = false;
        for (std::size_t rep : rs.representatives) {
            if (std::abs(rs.roots[i] - rs.roots[rep]) <= opt.cluster_radius) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) rs.representatives.push_back(i);
    }
    return rs;
}

}  // namespace twobridge
