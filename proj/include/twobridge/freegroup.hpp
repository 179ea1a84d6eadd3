#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/knotparams.hpp"

namespace twobridge {

enum class Gen : std::uint8_t { u = 0, v = 1 };

inline Gen other(Gen g) { return g == Gen::u ? Gen::v : Gen::u; }

struct Syllable {
    Gen gen;
    int exp;  // nonzero

    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Freely reduced word on {u, v}, stored run-length encoded: adjacent
// syllables never share a generator, no zero exponents. Empty = identity.
class Word {
public:
    Word() = default;
    static Word generator(Gen g, int exp = 1);

    bool is_identity() const { return s_.empty(); }
    std::size_t syllable_count() const { return s_.size(); }
    int length() const;  // letter count, sum of |exp|
    const std::vector<Syllable>& syllables() const { return s_; }

    Word operator*(const Word& o) const;
    Word inverse() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

    // "u v^-1 u^2", identity prints "1".
    std::string str() const;

    // Reducing append of a single syllable; used by the free functions.
    void push(Gen g, int e);

private:
    std::vector<Syllable> s_;
};

// Free reduction of an arbitrary letter sequence; confluent.
Word reduce(const std::vector<std::pair<Gen, int>>& raw);

// x*: letters written in reverse order, exponent signs kept.
// Anti-involution: (xy)* = y* x*, (x*)* = x.
Word reverse_star(const Word& x);

Word commutator(const Word& a, const Word& b);

// The presentation words of G = <u, v | w u = v w>:
//   w  = u^{eps_1} v^{eps_2} ... u^{eps_{p-2}} v^{eps_{p-1}}
//   r  = w u w^{-1} v^{-1}
//   g  = u^{eps_0} v^{eps_1} ... u^{eps_{ell-1}} v^{eps_ell}
//   l  = w* w                    (the longitude)
struct PresentationWords {
    Word w, w_star, r, g, l;
};

PresentationWords build_presentation(const BridgeParams& k);

// The reversal anti-involution conjugates the relator:
// u w* v^{-1} (w*)^{-1} == g r g^{-1}, exactly in F.
bool check_star_conjugacy(const PresentationWords& words);

// The longitude commutes with the meridian through relator conjugates:
// [w* w, u] == [w*, r] [r, g], exactly in F.
bool check_longitude_commutator(const PresentationWords& words);

// Element of the integral group ring Z[F]: finite formal sum of reduced
// words with nonzero integer coefficients.
class GroupRingElement {
public:
    GroupRingElement() = default;
    static GroupRingElement of(const Word& w, std::int64_t c = 1);

    bool is_zero() const { return t_.empty(); }
    const std::map<Word, std::int64_t>& terms() const { return t_; }

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    void add_term(const Word& w, std::int64_t c);

private:
    std::map<Word, std::int64_t> t_;
};

// Fox derivative d f / d x in Z[F]: d x_j / d x_i = delta_ij and
// d(fg)/dx = df/dx + f dg/dx, which forces d(x^-1)/dx = -x^-1.
GroupRingElement fox_derivative(const Word& f, Gen x);

// f - 1 == (df/du)(u - 1) + (df/dv)(v - 1) in Z[F].
bool check_fundamental_formula(const Word& f);

}  // namespace twobridge
