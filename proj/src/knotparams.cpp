#include "twobridge/knotparams.hpp"

#include <numeric>

#include "twobridge/dilog.hpp"
#include "twobridge/errors.hpp"

namespace twobridge {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// x with a*x = 1 (mod m); requires gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = mod_pos(a, m);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    return mod_pos(t0, m);
}

// Keeps p*q and ell*q clear of 64-bit overflow with a wide margin.
constexpr std::int64_t kMaxP = std::int64_t(1) << 30;

}  // namespace

BridgeParams make_params(std::int64_t p, std::int64_t q) {
    if (p <= 1) throw OutOfRange("p = " + std::to_string(p) + ", need p > 1");
    if (p >= kMaxP) throw OutOfRange("p = " + std::to_string(p) + " exceeds supported range");
    if (q <= 0 || q >= p)
        throw OutOfRange("q = " + std::to_string(q) + ", need 0 < q < p = " + std::to_string(p));
    if (p % 2 == 0) throw NotOdd("p", p);
    if (q % 2 == 0) throw NotOdd("q", q);
    std::int64_t g = std::gcd(p, q);
    if (g != 1) throw NotCoprime(p, q, g);

    // ell = -q^{-1} mod 2p; q is invertible mod 2p since q is odd and coprime to p.
    std::int64_t ell = mod_pos(-mod_inverse(q, 2 * p), 2 * p);
    BridgeParams k{p, q, ell};
    return k;
}

int epsilon(const BridgeParams& k, std::int64_t n) {
    return floor_div(n * k.q, k.p) % 2 == 0 ? 1 : -1;
}

SignSequence epsilon_sequence(const BridgeParams& k, std::int64_t n_max) {
    if (n_max < 1) throw OutOfRange("n_max = " + std::to_string(n_max) + ", need n_max >= 1");
    SignSequence s;
    s.signs.reserve(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n) s.signs.push_back(epsilon(k, n));
    return s;
}

CFExpansion cf_positive(std::int64_t p, std::int64_t q) {
    if (q <= 0 || q >= p) throw OutOfRange("cf_positive needs 0 < q < p");
    if (std::gcd(p, q) != 1) throw OutOfRange("cf_positive needs gcd(p, q) = 1");
    CFExpansion cf;
    cf.value_num = p;
    cf.value_den = q;
    // Euclidean quotients; the last one is automatically >= 2 for q > 1.
    std::int64_t a = p, b = q;
    while (b != 0) {
        cf.terms.push_back(a / b);
        std::int64_t r = a % b;
        a = b;
        b = r;
    }
    return cf;
}

LackenbyBounds lackenby_bounds(const CFExpansion& cf) {
    const double n = static_cast<double>(cf.terms.size());
    return {v3() * (n - 2) / 2.0, 16.0 * v3() * (n - 1)};
}

std::set<std::int64_t> equivalent_params(const BridgeParams& k) {
    std::int64_t qi = mod_inverse(k.q, k.p);
    std::set<std::int64_t> out;
    for (std::int64_t c : {k.q, mod_pos(-k.q, k.p), qi, mod_pos(-qi, k.p)}) {
        if (c % 2 == 1) out.insert(c);
    }
    return out;
}

}  // namespace twobridge
