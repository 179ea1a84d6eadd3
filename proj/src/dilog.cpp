#include "twobridge/dilog.hpp"

#include <cmath>
#include <numbers>

namespace twobridge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2Over6 = kPi * kPi / 6.0;

// B_{2k} / (2k+1)! for the expansion Li_2(z) = u - u^2/4 + sum b_k u^{2k+1},
// u = -log(1-z). After the inversion/reflection mappings |u| stays below
// ~1.1, so twelve terms reach full double precision.
constexpr double kBernoulli[] = {
    1.0 / 36.0,
    -1.0 / 3600.0,
    1.0 / 211680.0,
    -1.0 / 10886400.0,
    1.0 / 526901760.0,
    -4.0647616451442255e-11,
    8.9216910204564526e-13,
    -1.9939295860721076e-14,
    4.5189800296199182e-16,
    -1.0356517612181247e-17,
    2.3952186210261867e-19,
    -5.5817858743250093e-21,
};

std::complex<double> sqr(std::complex<double> z) { return z * z; }

}  // namespace

std::complex<double> li2(std::complex<double> z, const DilogConfig& cfg) {
    if (z == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
    if (z == std::complex<double>(1.0, 0.0)) return {kPi2Over6, 0.0};

    // Map into |w| <= 1, Re w <= 1/2 where the series in u = -log(1-w)
    // converges rapidly.
    std::complex<double> rest{0.0, 0.0};
    double sgn = 1.0;
    std::complex<double> w = z;
    if (std::norm(w) > 1.0) {
        rest += -kPi2Over6 - 0.5 * sqr(std::log(-w));
        sgn = -sgn;
        w = 1.0 / w;
    }
    if (w.real() > 0.5) {
        rest += sgn * (kPi2Over6 - std::log(w) * std::log(1.0 - w));
        sgn = -sgn;
        w = 1.0 - w;
    }

    const std::complex<double> u = -std::log(1.0 - w);
    const std::complex<double> u2 = u * u;
    std::complex<double> sum = u - 0.25 * u2;
    std::complex<double> upow = u * u2;
    for (double b : kBernoulli) {
        std::complex<double> term = b * upow;
        sum += term;
        if (std::abs(term) <= cfg.series_tol * std::abs(sum)) break;
        upow *= u2;
    }
    return rest + sgn * sum;
}

double bloch_wigner(std::complex<double> z, const DilogConfig& cfg) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return 0.0;
    if (z.imag() == 0.0) return 0.0;
    return li2(z, cfg).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

namespace {

// Tail sum_{n>N} e^{i n alpha} / n^2 by three levels of summation by parts
// against the geometric series: each level trades one power of n for a
// factor 1/(1 - e^{i alpha}). Truncation left after three levels is
// O(N^-4 / |1-z|^3), far below double precision at N ~ 10^6.
std::complex<double> clausen_tail(std::int64_t N, double alpha) {
    const std::complex<double> z = std::polar(1.0, alpha);
    // Dropped remainder is O(N^-4 |1-z|^-3); useless once alpha N ~ 1.
    const double nn = static_cast<double>(N);
    if (6.0 / (nn * nn * nn * nn * std::pow(std::abs(1.0 - z), 3.0)) > 1e-14)
        return {0.0, 0.0};
    const std::complex<double> geo = 1.0 / (1.0 - z);
    auto f0 = [](double n) { return 1.0 / (n * n); };
    // f1(n) = f0(n) - f0(n-1), cancellation-free closed form
    auto f1 = [](double n) { return -(2.0 * n - 1.0) / (n * n * (n - 1.0) * (n - 1.0)); };
    auto f2 = [&](double n) { return f1(n) - f1(n - 1.0); };
    auto zpow = [&](std::int64_t n) { return std::polar(1.0, alpha * static_cast<double>(n)); };

    std::complex<double> tail = f0(static_cast<double>(N + 1)) * zpow(N + 1) * geo;
    tail += f1(static_cast<double>(N + 2)) * zpow(N + 2) * geo * geo;
    tail += f2(static_cast<double>(N + 3)) * zpow(N + 3) * geo * geo * geo;
    return tail;
}

}  // namespace

double lobachevsky(double theta, const DilogConfig& cfg) {
    // Reduce to |t| <= pi/2 using pi-periodicity.
    double t = theta - kPi * std::round(theta / kPi);
    if (t == 0.0) return 0.0;

    const double alpha = 2.0 * t;
    const double c2 = 2.0 * std::cos(alpha);
    const double s_abs = std::abs(std::sin(t));
    // sin(2 n t) by the Chebyshev two-term recurrence, resynchronized
    // periodically to stop drift; Kahan compensation on the sum.
    double s_prev = 0.0;
    double s_cur = std::sin(alpha);
    double sum = s_cur, comp = 0.0;
    std::int64_t last = 1;
    for (std::int64_t n = 2; n <= cfg.max_terms; ++n) {
        if (n % 1024 == 0) {
            s_cur = std::sin(alpha * static_cast<double>(n));
            s_prev = std::sin(alpha * static_cast<double>(n - 1));
        } else {
            double next = c2 * s_cur - s_prev;
            s_prev = s_cur;
            s_cur = next;
        }
        double term = s_cur / (static_cast<double>(n) * static_cast<double>(n));
        double y = term - comp;
        double tt = sum + y;
        comp = (tt - sum) - y;
        sum = tt;
        last = n;
        // Abel bound on the remaining tail, for coarse tolerances.
        if (1.0 / (s_abs * static_cast<double>(n) * static_cast<double>(n)) < cfg.series_tol)
            break;
    }
    sum += clausen_tail(last, alpha).imag();
    return 0.5 * sum;
}

double v3() {
    static const double value = bloch_wigner(std::polar(1.0, kPi / 3.0));
    return value;
}

}  // namespace twobridge
