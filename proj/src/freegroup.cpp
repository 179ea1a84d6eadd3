#include "twobridge/freegroup.hpp"

#include <sstream>

namespace twobridge {

Word Word::generator(Gen g, int exp) {
    Word w;
    w.push(g, exp);
    return w;
}

int Word::length() const {
    int n = 0;
    for (const auto& s : s_) n += s.exp < 0 ? -s.exp : s.exp;
    return n;
}

void Word::push(Gen g, int e) {
    if (e == 0) return;
    if (!s_.empty() && s_.back().gen == g) {
        s_.back().exp += e;
        if (s_.back().exp == 0) s_.pop_back();
        return;
    }
    s_.push_back({g, e});
}

Word Word::operator*(const Word& o) const {
    Word out = *this;
    for (const auto& s : o.s_) out.push(s.gen, s.exp);
    return out;
}

Word Word::inverse() const {
    Word out;
    for (auto it = s_.rbegin(); it != s_.rend(); ++it) out.push(it->gen, -it->exp);
    return out;
}

std::string Word::str() const {
    if (s_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : s_) {
        if (!first) os << " ";
        first = false;
        os << (s.gen == Gen::u ? "u" : "v");
        if (s.exp != 1) os << "^" << s.exp;
    }
    return os.str();
}

Word reduce(const std::vector<std::pair<Gen, int>>& raw) {
    Word out;
    for (const auto& [g, e] : raw) out.push(g, e);
    return out;
}

Word reverse_star(const Word& x) {
    Word out;
    for (auto it = x.syllables().rbegin(); it != x.syllables().rend(); ++it)
        out.push(it->gen, it->exp);
    return out;
}

Word commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

PresentationWords build_presentation(const BridgeParams& k) {
    PresentationWords pw;
    // Letters alternate u, v; w starts at eps_1 on u, g starts at eps_0 on u.
    for (std::int64_t i = 1; i <= k.p - 1; ++i)
        pw.w.push(i % 2 == 1 ? Gen::u : Gen::v, epsilon(k, i));
    for (std::int64_t i = 0; i <= k.ell; ++i)
        pw.g.push(i % 2 == 0 ? Gen::u : Gen::v, epsilon(k, i));
    pw.w_star = reverse_star(pw.w);
    pw.r = pw.w * Word::generator(Gen::u) * pw.w.inverse() * Word::generator(Gen::v, -1);
    pw.l = pw.w_star * pw.w;
    return pw;
}

bool check_star_conjugacy(const PresentationWords& words) {
    Word lhs = Word::generator(Gen::u) * words.w_star * Word::generator(Gen::v, -1) *
               words.w_star.inverse();
    Word rhs = words.g * words.r * words.g.inverse();
    return lhs == rhs;
}

bool check_longitude_commutator(const PresentationWords& words) {
    Word lhs = commutator(words.l, Word::generator(Gen::u));
    Word rhs = commutator(words.w_star, words.r) * commutator(words.r, words.g);
    return lhs == rhs;
}

GroupRingElement GroupRingElement::of(const Word& w, std::int64_t c) {
    GroupRingElement e;
    e.add_term(w, c);
    return e;
}

void GroupRingElement::add_term(const Word& w, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement out = *this;
    for (const auto& [w, c] : o.t_) out.add_term(w, c);
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    GroupRingElement out = *this;
    for (const auto& [w, c] : o.t_) out.add_term(w, -c);
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    GroupRingElement out;
    for (const auto& [wa, ca] : t_)
        for (const auto& [wb, cb] : o.t_) out.add_term(wa * wb, ca * cb);
    return out;
}

GroupRingElement fox_derivative(const Word& f, Gen x) {
    GroupRingElement out;
    Word prefix;
    for (const auto& s : f.syllables()) {
        if (s.gen == x) {
            // d(x^e)/dx = 1 + x + ... + x^{e-1}  (e > 0)
            //           = -(x^-1 + ... + x^e)    (e < 0)
            if (s.exp > 0) {
                for (int j = 0; j < s.exp; ++j)
                    out.add_term(prefix * Word::generator(x, j), 1);
            } else {
                for (int j = 1; j <= -s.exp; ++j)
                    out.add_term(prefix * Word::generator(x, -j), -1);
            }
        }
        prefix = prefix * Word::generator(s.gen, s.exp);
    }
    return out;
}

bool check_fundamental_formula(const Word& f) {
    const Word one;
    GroupRingElement lhs = GroupRingElement::of(f) - GroupRingElement::of(one);
    GroupRingElement rhs;
    for (Gen x : {Gen::u, Gen::v}) {
        GroupRingElement xm1 =
            GroupRingElement::of(Word::generator(x)) - GroupRingElement::of(one);
        rhs = rhs + fox_derivative(f, x) * xm1;
    }
    return lhs == rhs;
}

}  // namespace twobridge
