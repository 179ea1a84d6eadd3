#pragma once

#include <complex>
#include <vector>

#include "twobridge/dilog.hpp"
#include "twobridge/knotparams.hpp"
#include "twobridge/roots.hpp"

namespace twobridge {

using cplx = std::complex<double>;

// Point of P^1(C) in homogeneous coordinates (a : b), value a/b.
// (1 : 0) is the point at infinity; no coordinate is ever divided out.
struct ProjectivePoint {
    cplx a{1.0, 0.0};
    cplx b{0.0, 0.0};

    static ProjectivePoint infinity() { return {{1.0, 0.0}, {0.0, 0.0}}; }
    static ProjectivePoint zero() { return {{0.0, 0.0}, {1.0, 0.0}}; }
    static ProjectivePoint finite(cplx z) { return {z, {1.0, 0.0}}; }

    double magnitude() const { return std::abs(a) + std::abs(b); }
    void renormalize();
};

// Chordal distance |a1 b2 - a2 b1| / (|p1| |p2|); zero iff projectively equal.
double proj_distance(const ProjectivePoint& p1, const ProjectivePoint& p2);
bool proj_equal(const ProjectivePoint& p1, const ProjectivePoint& p2, double tol = 1e-9);

// PGL2 element acting on P^1(C); u = [[1,x],[0,1]] and v = [[1,0],[x,1]]
// are the meridian images of the parabolic representation at parameter x.
struct MobiusMap {
    cplx m11{1.0, 0.0}, m12{0.0, 0.0}, m21{0.0, 0.0}, m22{1.0, 0.0};

    static MobiusMap meridian_u(cplx x) { return {{1.0, 0.0}, x, {0.0, 0.0}, {1.0, 0.0}}; }
    static MobiusMap meridian_v(cplx x) { return {{1.0, 0.0}, {0.0, 0.0}, x, {1.0, 0.0}}; }

    MobiusMap operator*(const MobiusMap& o) const;
    MobiusMap inverse() const;  // adjugate; projectively the inverse
    MobiusMap power(int e) const;
    ProjectivePoint apply(const ProjectivePoint& p) const;
    cplx det() const { return m11 * m22 - m12 * m21; }
    void renormalize();
};

// z_0 = infinity, z_n = P_n(x)/Q_n(x) as projective points, n = 0..2p-2.
struct ZSequence {
    cplx root{0.0, 0.0};
    std::vector<ProjectivePoint> points;
};

// Cross-ratio value, or the degenerate flag when two of the four points
// projectively coincide (such tuples count as zero downstream).
struct CrossRatioResult {
    cplx value{0.0, 0.0};
    bool degenerate = false;
};

CrossRatioResult cross_ratio(const ProjectivePoint& p0, const ProjectivePoint& p1,
                             const ProjectivePoint& p2, const ProjectivePoint& p3,
                             double tol = 1e-9);

// One summand of the pre-Bloch element: which of the four cross-ratio
// families it came from (1..4) and for which j.
struct PreBlochTerm {
    CrossRatioResult argument;
    int coefficient = 1;
    int family = 0;
    int j = 0;
};

struct PreBlochElement {
    std::vector<PreBlochTerm> terms;

    std::size_t nondegenerate_count() const;
};

struct VolumeOptions {
    DilogConfig dilog{};
    double proj_tol = 1e-9;
    double root_residual_tol = 1e-8;  // InvalidRoot threshold for supplied roots
    RootSolveOptions roots{};
};

ZSequence z_sequence(const BridgeParams& k, cplx root, const VolumeOptions& opt = {});

// Recomputes the even-index points by Mobius products u^{eps_1} v^{eps_2} ...
// applied to infinity and returns the worst projective distance to the
// convergent-based sequence.
double mobius_prefix_check(const BridgeParams& k, cplx root, const VolumeOptions& opt = {});

// The four families [v(z_{ell-1}) : inf : z_{2j-2} : z_{2j}],
// [inf : 0 : ...], [0 : z_{2p-2} : ...], [z_{2p-2} : z_{ell-1} : ...],
// j = 1 .. (p-1)/2.
PreBlochElement bloch_element(const BridgeParams& k, const ZSequence& zs,
                              const VolumeOptions& opt = {});

struct RootVolume {
    cplx root{0.0, 0.0};
    double v_cross = 0.0;    // dilogarithm sum over the cross-ratio families
    double v_theorem = 0.0;  // closed-formula fractions, evaluated projectively
    bool degenerate = false;  // every term degenerate at a would-be hyperbolic root
};

RootVolume volume_at_root(const BridgeParams& k, const ZSequence& zs,
                          const VolumeOptions& opt = {});

struct VolumeResult {
    BridgeParams params;
    std::vector<RootVolume> per_root;
    double volume = 0.0;
    cplx argmax_root{0.0, 0.0};
};

// Max of v_cross over the roots of P_{p-1} (cluster representatives).
VolumeResult volume(const BridgeParams& k, const VolumeOptions& opt = {});

}  // namespace twobridge
