#include "twobridge/polyseq.hpp"

#include <sstream>

#include "twobridge/errors.hpp"

namespace twobridge {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(bigint c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(int degree, bigint c) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
        p.c_.back() = std::move(c);
    }
    return p;
}

bigint IntPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(d)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<bigint> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<bigint> out(c_);
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<bigint> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<bigint> out(static_cast<std::size_t>(k), 0);
    out.insert(out.end(), c_.begin(), c_.end());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const bigint& s) const {
    std::vector<bigint> out(c_);
    for (auto& c : out) c *= s;
    return IntPoly(std::move(out));
}

std::string IntPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const bigint& c = c_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        bigint a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || d == 0) os << a.str();
        if (d > 0) {
            if (a != 1) os << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

std::vector<ConvergentPair> convergents(const BridgeParams& k, int n_max) {
    if (n_max < 1) throw OutOfRange("convergents needs n_max >= 1");
    std::vector<ConvergentPair> out;
    out.reserve(static_cast<std::size_t>(n_max));
    IntPoly p_prev2;                          // P_{-1} = 0
    IntPoly p_prev = IntPoly::constant(1);    // P_0 = 1
    IntPoly q_prev2 = IntPoly::constant(1);   // Q_{-1} = 1
    IntPoly q_prev;                           // Q_0 = 0
    for (int n = 1; n <= n_max; ++n) {
        bigint e = epsilon(k, n);
        IntPoly p = p_prev.shifted(1).scaled(e) + p_prev2;
        IntPoly q = q_prev.shifted(1).scaled(e) + q_prev2;
        out.push_back({n, p, q});
        p_prev2 = std::move(p_prev);
        p_prev = std::move(p);
        q_prev2 = std::move(q_prev);
        q_prev = std::move(q);
    }
    return out;
}

IntPoly riley_poly(const BridgeParams& k) {
    return convergents(k, static_cast<int>(k.p) - 1).back().P;
}

std::complex<double> eval_complex(const IntPoly& poly, std::complex<double> x) {
    std::complex<double> acc{0.0, 0.0};
    for (int d = poly.degree(); d >= 0; --d)
        acc = acc * x + std::complex<double>(poly.coeff(d).convert_to<double>(), 0.0);
    return acc;
}

}  // namespace twobridge
