#include "twobridge/volume.hpp"

#include <algorithm>
#include <cmath>

#include "twobridge/errors.hpp"
#include "twobridge/polyseq.hpp"

namespace twobridge {

namespace {

cplx det2(const ProjectivePoint& p, const ProjectivePoint& q) {
    return p.a * q.b - q.a * p.b;
}

// Orientation of each printed fraction of the closed volume formula
// relative to its cross-ratio family: the second fraction z_{2j-2}/z_{2j}
// appears reciprocal to [inf : 0 : z_{2j-2} : z_{2j}]. Calibrated once
// against V(5,3) = 3 D(e^{2 i pi/3}) and V(7,3) = 2.82812208833078 and
// frozen; -1 means the printed fraction is used upside down.
constexpr int kFamilyOrientation[4] = {+1, -1, +1, +1};

}  // namespace

void ProjectivePoint::renormalize() {
    double m = std::max(std::abs(a), std::abs(b));
    if (m > 0.0) {
        a /= m;
        b /= m;
    }
}

double proj_distance(const ProjectivePoint& p1, const ProjectivePoint& p2) {
    double m1 = p1.magnitude(), m2 = p2.magnitude();
    if (m1 == 0.0 || m2 == 0.0) return 0.0;
    return std::abs(det2(p1, p2)) / (m1 * m2);
}

bool proj_equal(const ProjectivePoint& p1, const ProjectivePoint& p2, double tol) {
    return proj_distance(p1, p2) <= tol;
}

MobiusMap MobiusMap::operator*(const MobiusMap& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
}

MobiusMap MobiusMap::inverse() const { return {m22, -m12, -m21, m11}; }

MobiusMap MobiusMap::power(int e) const {
    MobiusMap base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    MobiusMap acc;
    for (int i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

ProjectivePoint MobiusMap::apply(const ProjectivePoint& p) const {
    ProjectivePoint out{m11 * p.a + m12 * p.b, m21 * p.a + m22 * p.b};
    out.renormalize();
    return out;
}

void MobiusMap::renormalize() {
    double m = std::max(std::max(std::abs(m11), std::abs(m12)),
                        std::max(std::abs(m21), std::abs(m22)));
    if (m > 0.0) {
        m11 /= m;
        m12 /= m;
        m21 /= m;
        m22 /= m;
    }
}

ZSequence z_sequence(const BridgeParams& k, cplx root, const VolumeOptions& opt) {
    double res = root_residual(riley_poly(k), root);
    if (!(res <= opt.root_residual_tol)) throw InvalidRoot(res);

    ZSequence zs;
    zs.root = root;
    zs.points.reserve(static_cast<std::size_t>(2 * k.p - 1));
    zs.points.push_back(ProjectivePoint::infinity());
    // The convergent recurrence over C on homogeneous pairs; renormalizing
    // the whole state keeps every point a positive multiple of
    // (P_n(x), Q_n(x)).
    cplx np = 1.0, dp = 0.0;   // (P_0, Q_0)
    cplx np2 = 0.0, dp2 = 1.0; // (P_{-1}, Q_{-1})
    for (std::int64_t n = 1; n <= 2 * k.p - 2; ++n) {
        double e = epsilon(k, n);
        cplx nn = e * root * np + np2;
        cplx dn = e * root * dp + dp2;
        double m = std::max(std::max(std::abs(nn), std::abs(dn)),
                            std::max(std::abs(np), std::abs(dp)));
        if (m > 0.0) {
            nn /= m;
            dn /= m;
            np2 = np / m;
            dp2 = dp / m;
        } else {
            np2 = np;
            dp2 = dp;
        }
        np = nn;
        dp = dn;
        zs.points.push_back({np, dp});
    }
    return zs;
}

double mobius_prefix_check(const BridgeParams& k, cplx root, const VolumeOptions& opt) {
    ZSequence zs = z_sequence(k, root, opt);
    MobiusMap acc;
    double worst = 0.0;
    for (std::int64_t n = 1; n <= 2 * k.p - 2; ++n) {
        MobiusMap letter = n % 2 == 1 ? MobiusMap::meridian_u(root)
                                      : MobiusMap::meridian_v(root);
        acc = acc * letter.power(epsilon(k, n));
        acc.renormalize();
        if (n % 2 == 0) {
            ProjectivePoint orbit = acc.apply(ProjectivePoint::infinity());
            worst = std::max(worst,
                             proj_distance(orbit, zs.points[static_cast<std::size_t>(n)]));
        }
    }
    return worst;
}

CrossRatioResult cross_ratio(const ProjectivePoint& p0, const ProjectivePoint& p1,
                             const ProjectivePoint& p2, const ProjectivePoint& p3,
                             double tol) {
    const ProjectivePoint* pts[4] = {&p0, &p1, &p2, &p3};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (proj_equal(*pts[i], *pts[j], tol)) return {{0.0, 0.0}, true};
    cplx num = det2(p0, p2) * det2(p1, p3);
    cplx den = det2(p0, p3) * det2(p1, p2);
    return {num / den, false};
}

std::size_t PreBlochElement::nondegenerate_count() const {
    std::size_t n = 0;
    for (const auto& t : terms)
        if (!t.argument.degenerate) ++n;
    return n;
}

PreBlochElement bloch_element(const BridgeParams& k, const ZSequence& zs,
                              const VolumeOptions& opt) {
    const auto& z = zs.points;
    const ProjectivePoint inf = ProjectivePoint::infinity();
    const ProjectivePoint zero = ProjectivePoint::zero();
    const ProjectivePoint& z_ell = z[static_cast<std::size_t>(k.ell - 1)];
    const ProjectivePoint& z_tail = z[static_cast<std::size_t>(2 * k.p - 2)];
    const ProjectivePoint v_z_ell = MobiusMap::meridian_v(zs.root).apply(z_ell);

    PreBlochElement el;
    el.terms.reserve(static_cast<std::size_t>(2 * (k.p - 1)));
    for (std::int64_t j = 1; j <= (k.p - 1) / 2; ++j) {
        const ProjectivePoint& zm = z[static_cast<std::size_t>(2 * j - 2)];
        const ProjectivePoint& zj = z[static_cast<std::size_t>(2 * j)];
        const ProjectivePoint* fam[4][4] = {
            {&v_z_ell, &inf, &zm, &zj},
            {&inf, &zero, &zm, &zj},
            {&zero, &z_tail, &zm, &zj},
            {&z_tail, &z_ell, &zm, &zj},
        };
        for (int f = 0; f < 4; ++f) {
            PreBlochTerm term;
            term.family = f + 1;
            term.j = static_cast<int>(j);
            term.argument = cross_ratio(*fam[f][0], *fam[f][1], *fam[f][2], *fam[f][3],
                                        opt.proj_tol);
            el.terms.push_back(term);
        }
    }
    return el;
}

namespace {

// D applied to a homogeneous value a/b; the degenerate positions
// (0, 1, infinity and indeterminate 0/0) contribute zero.
double dilog_of_pair(cplx a, cplx b, const VolumeOptions& opt) {
    double s = std::abs(a) + std::abs(b);
    if (s == 0.0) return 0.0;
    if (std::abs(b) <= opt.proj_tol * s) return 0.0;
    if (std::abs(a) <= opt.proj_tol * s) return 0.0;
    if (std::abs(a - b) <= opt.proj_tol * s) return 0.0;
    return bloch_wigner(a / b, opt.dilog);
}

// The closed volume formula: the four explicit fractions per j, written
// out in the z-values and evaluated on homogeneous pairs so that
// z_0 = infinity needs no special casing.
double closed_formula_sum(const BridgeParams& k, const ZSequence& zs, const VolumeOptions& opt) {
    const auto& z = zs.points;
    const cplx aL = z[static_cast<std::size_t>(k.ell - 1)].a;
    const cplx bL = z[static_cast<std::size_t>(k.ell - 1)].b;
    const cplx aT = z[static_cast<std::size_t>(2 * k.p - 2)].a;
    const cplx bT = z[static_cast<std::size_t>(2 * k.p - 2)].b;

    double total = 0.0;
    for (std::int64_t j = 1; j <= (k.p - 1) / 2; ++j) {
        const cplx am = z[static_cast<std::size_t>(2 * j - 2)].a;
        const cplx bm = z[static_cast<std::size_t>(2 * j - 2)].b;
        const cplx aj = z[static_cast<std::size_t>(2 * j)].a;
        const cplx bj = z[static_cast<std::size_t>(2 * j)].b;

        // (z_L z_T - z z_T + z z_L) for z = z_{2j-2} and z_{2j}
        const cplx num_m = aL * aT * bm - am * aT * bL + am * aL * bT;
        const cplx num_j = aL * aT * bj - aj * aT * bL + aj * aL * bT;
        const cplx dTm = aT * bm - am * bT;
        const cplx dTj = aT * bj - aj * bT;
        const cplx dLm = aL * bm - am * bL;
        const cplx dLj = aL * bj - aj * bL;

        cplx frac[4][2] = {
            {num_m * bj, num_j * bm},  // three-product fraction
            {am * bj, aj * bm},        // z_{2j-2} / z_{2j}
            {am * dTj, aj * dTm},      // z_{2j-2}(z_T - z_{2j}) / (z_{2j}(z_T - z_{2j-2}))
            {dTm * dLj, dTj * dLm},    // (z_T - z_{2j-2})(z_L - z_{2j}) / ((z_T - z_{2j})(z_L - z_{2j-2}))
        };
        for (int f = 0; f < 4; ++f) {
            if (kFamilyOrientation[f] > 0)
                total += dilog_of_pair(frac[f][0], frac[f][1], opt);
            else
                total += dilog_of_pair(frac[f][1], frac[f][0], opt);
        }
    }
    return total;
}

}  // namespace

RootVolume volume_at_root(const BridgeParams& k, const ZSequence& zs,
                          const VolumeOptions& opt) {
    RootVolume rv;
    rv.root = zs.root;
    PreBlochElement el = bloch_element(k, zs, opt);
    for (const auto& t : el.terms) {
        if (t.argument.degenerate) continue;
        rv.v_cross += t.coefficient * bloch_wigner(t.argument.value, opt.dilog);
    }
    rv.v_theorem = closed_formula_sum(k, zs, opt);
    rv.degenerate = el.nondegenerate_count() == 0 && k.p > 3 && k.q > 1;
    return rv;
}

VolumeResult volume(const BridgeParams& k, const VolumeOptions& opt) {
    VolumeResult vr;
    vr.params = k;
    RootSet rs = find_roots(riley_poly(k), opt.roots);
    vr.per_root.reserve(rs.representatives.size());
    bool have_best = false;
    for (std::size_t idx : rs.representatives) {
        ZSequence zs = z_sequence(k, rs.roots[idx], opt);
        RootVolume rv = volume_at_root(k, zs, opt);
        vr.per_root.push_back(rv);
        bool better = !have_best || rv.v_cross > vr.volume;
        if (!better && have_best && rv.v_cross == vr.volume) {
            // deterministic tie break: lexicographically smallest (Re, Im)
            auto key = [](cplx z) { return std::make_pair(z.real(), z.imag()); };
            better = key(rv.root) < key(vr.argmax_root);
        }
        if (better) {
            vr.volume = rv.v_cross;
            vr.argmax_root = rv.root;
            have_best = true;
        }
    }
    return vr;
}

}  // namespace twobridge
