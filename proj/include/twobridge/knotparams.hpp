#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace twobridge {

// Validated two-bridge parameter pair (p, q): coprime odd integers with
// 0 < q < p, together with the odd integer ell in (0, 2p) satisfying
// ell * q = -1 (mod 2p).
struct BridgeParams {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t ell = 0;
};

BridgeParams make_params(std::int64_t p, std::int64_t q);

// eps_n = (-1)^floor(n q / p), for any integer n (exact floor division).
int epsilon(const BridgeParams& k, std::int64_t n);

// Signs eps_1 .. eps_{n_max}, 1-based access.
struct SignSequence {
    std::vector<int> signs;

    int at(std::int64_t n) const { return signs.at(static_cast<std::size_t>(n - 1)); }
    std::int64_t size() const { return static_cast<std::int64_t>(signs.size()); }
};

SignSequence epsilon_sequence(const BridgeParams& k, std::int64_t n_max);

// Positive continued fraction p/q = a_1 + 1/(a_2 + 1/(... + 1/a_n)),
// canonical (a_n >= 2 unless n = 1).
struct CFExpansion {
    std::vector<std::int64_t> terms;
    std::int64_t value_num = 0;
    std::int64_t value_den = 0;
};

CFExpansion cf_positive(std::int64_t p, std::int64_t q);

// v3 (n-2)/2 <= Vol <= 16 v3 (n-1), n = depth of the positive expansion.
struct LackenbyBounds {
    double lower = 0;
    double upper = 0;
};

LackenbyBounds lackenby_bounds(const CFExpansion& cf);

// All q' in (0, p), odd, with q' = +-q^{+-1} mod p. Contains q itself;
// the knots K(p, q') are exactly the isotopes of K(p, q).
std::set<std::int64_t> equivalent_params(const BridgeParams& k);

}  // namespace twobridge
