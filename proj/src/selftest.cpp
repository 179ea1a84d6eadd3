#include "twobridge/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "twobridge/cli.hpp"
#include "twobridge/freegroup.hpp"
#include "twobridge/polyseq.hpp"
#include "twobridge/volume.hpp"

namespace twobridge {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

std::vector<BridgeParams> all_params_below(std::int64_t pmax) {
    std::vector<BridgeParams> out;
    for (std::int64_t p = 3; p < pmax; p += 2)
        for (std::int64_t q = 1; q < p; q += 2)
            if (std::gcd(p, q) == 1) out.push_back(make_params(p, q));
    return out;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Word random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, 3);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        int c = pick(rng);
        w.push(c < 2 ? Gen::u : Gen::v, c % 2 == 0 ? 1 : -1);
    }
    return w;
}

// Exact bottom-up expansion of eps_1 x + 1/(eps_2 x + ... + 1/(eps_n x))
// as a rational function; the independent route to (P_n, Q_n).
std::pair<IntPoly, IntPoly> cf_expand_symbolic(const BridgeParams& k, int n) {
    IntPoly num = IntPoly::monomial(1, epsilon(k, n));
    IntPoly den = IntPoly::constant(1);
    for (int j = n - 1; j >= 1; --j) {
        IntPoly next = IntPoly::monomial(1, epsilon(k, j)) * num + den;
        den = num;
        num = next;
    }
    return {num, den};
}

// Shared sweep over all (p, q) with p < 50: roots, z-sequences, per-root
// volumes. Several acceptance checks read from it.
struct SweepEntry {
    BridgeParams k;
    VolumeResult vr;
    double worst_dual_gap = 0.0;
    double worst_z_tail = 0.0;  // max deviation of z_{p-1} from 0, z_{2p-2} from -1/x
};

std::vector<SweepEntry> run_sweep(const VolumeOptions& vopt) {
    std::vector<BridgeParams> params = all_params_below(50);
    std::vector<SweepEntry> sweep(params.size());
    parallel_for(params.size(), [&](std::size_t i) {
        SweepEntry& e = sweep[i];
        e.k = params[i];
        RootSet rs = find_roots(riley_poly(e.k), vopt.roots);
        e.vr.params = e.k;
        bool have_best = false;
        for (std::size_t idx : rs.representatives) {
            ZSequence zs = z_sequence(e.k, rs.roots[idx], vopt);
            RootVolume rv = volume_at_root(e.k, zs, vopt);
            e.vr.per_root.push_back(rv);
            if (!have_best || rv.v_cross > e.vr.volume) {
                e.vr.volume = rv.v_cross;
                e.vr.argmax_root = rv.root;
                have_best = true;
            }
            e.worst_dual_gap = std::max(e.worst_dual_gap,
                                        std::abs(rv.v_cross - rv.v_theorem));
            const ProjectivePoint& zp1 = zs.points[static_cast<std::size_t>(e.k.p - 1)];
            const ProjectivePoint& ztail = zs.points[static_cast<std::size_t>(2 * e.k.p - 2)];
            ProjectivePoint minus_inv{{-1.0, 0.0}, zs.root};
            e.worst_z_tail = std::max(e.worst_z_tail,
                                      proj_distance(zp1, ProjectivePoint::zero()));
            e.worst_z_tail = std::max(e.worst_z_tail, proj_distance(ztail, minus_inv));
        }
    });
    return sweep;
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& opt) {
    std::vector<CheckResult> out;
    VolumeOptions vopt;
    vopt.dilog = opt.dilog;

    // 1. K(7,3) volume against the reference value, under 0.1 s.
    {
        auto t0 = std::chrono::steady_clock::now();
        VolumeResult vr = volume(make_params(7, 3), vopt);
        double dt = elapsed_s(t0);
        double err = std::abs(vr.volume - 2.82812208833078);
        out.push_back({"k73-volume", err <= 1e-9 && dt < 0.1,
                       fmt("V=%.14f err=%.2e t=%.0fms", vr.volume, err, dt * 1e3)});
    }

    // 2. K(5,3): V = 3 D(e^{2 i pi/3}) = 6 Lambda(pi/3), pairwise 1e-9.
    {
        double V = volume(make_params(5, 3), vopt).volume;
        double a = 3.0 * bloch_wigner(std::polar(1.0, 2.0 * kPi / 3.0), opt.dilog);
        double b = 6.0 * lobachevsky(kPi / 3.0, opt.dilog);
        double worst = std::max({std::abs(V - a), std::abs(V - b), std::abs(a - b)});
        out.push_back({"k53-triple-identity", worst <= 1e-9,
                       fmt("V=%.14f 3D(j)=%.14f 6L(pi/3)=%.14f gap=%.2e", V, a, b, worst)});
    }

    std::vector<SweepEntry> sweep = run_sweep(vopt);

    // 3. Torus knots K(p,1) have vanishing volume, p = 3..49.
    {
        double worst = 0.0;
        for (const auto& e : sweep)
            if (e.k.q == 1) worst = std::max(worst, std::abs(e.vr.volume));
        out.push_back({"torus-vanishing", worst <= 1e-8, fmt("max |V(p,1)|=%.2e", worst)});
    }

    // 4. Riley polynomial of K(5,3) exactly x^4 - x^2 + 1.
    {
        IntPoly expected(std::vector<bigint>{1, 0, -1, 0, 1});
        bool ok = riley_poly(make_params(5, 3)) == expected;
        out.push_back({"riley-exact-53", ok, riley_poly(make_params(5, 3)).str()});
    }

    // 5. Word lemmas for every valid (p, q), p < 100, exact.
    {
        int checked = 0;
        bool ok = true;
        for (const auto& k : all_params_below(100)) {
            PresentationWords pw = build_presentation(k);
            if (!check_star_conjugacy(pw) || !check_longitude_commutator(pw)) ok = false;
            ++checked;
        }
        out.push_back({"free-group-lemmas", ok, fmt("%d pairs, p<100", checked)});
    }

    // 6. Fundamental formula: presentation words for p < 50 plus random words.
    {
        bool ok = true;
        int checked = 0;
        for (const auto& k : all_params_below(50)) {
            PresentationWords pw = build_presentation(k);
            for (const Word* f : {&pw.w, &pw.g, &pw.r, &pw.l}) {
                if (!check_fundamental_formula(*f)) ok = false;
                ++checked;
            }
        }
        std::mt19937 rng(20250803);
        for (int i = 0; i < 1000; ++i) {
            if (!check_fundamental_formula(random_word(rng, 50))) ok = false;
            ++checked;
        }
        out.push_back({"fox-fundamental-formula", ok, fmt("%d words", checked)});
    }

    // 7. Convergent recurrence against the symbolic expansion, and the
    //    determinant identity P_n Q_{n-1} - P_{n-1} Q_n = (-1)^n.
    {
        bool ok = true;
        std::mt19937 rng(774422);
        std::vector<BridgeParams> pool = all_params_below(50);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            const BridgeParams& k = pool[pick(rng)];
            auto conv = convergents(k, 12);
            for (int n = 1; n <= 12; ++n) {
                auto [num, den] = cf_expand_symbolic(k, n);
                if (num != conv[static_cast<std::size_t>(n - 1)].P ||
                    den != conv[static_cast<std::size_t>(n - 1)].Q)
                    ok = false;
            }
        }
        for (const auto& k : {make_params(5, 3), make_params(7, 3), make_params(19, 7),
                              make_params(45, 43)}) {
            auto conv = convergents(k, 200);
            IntPoly p_prev = IntPoly::constant(1);  // P_0
            IntPoly q_prev;                         // Q_0
            for (int n = 1; n <= 200; ++n) {
                const auto& c = conv[static_cast<std::size_t>(n - 1)];
                IntPoly det = c.P * q_prev - p_prev * c.Q;
                if (det != IntPoly::constant(n % 2 == 0 ? 1 : -1)) ok = false;
                p_prev = c.P;
                q_prev = c.Q;
            }
        }
        out.push_back({"convergent-oracle", ok, "symbolic n<=12 x50, determinant n<=200"});
    }

    // 8. Dual-path agreement at every root, p < 50.
    {
        double worst = 0.0;
        for (const auto& e : sweep) worst = std::max(worst, e.worst_dual_gap);
        out.push_back({"dual-path-agreement", worst <= 1e-9,
                       fmt("max |v_cross - v_theorem|=%.2e", worst)});
    }

    // 9. Isotopy invariance across q' = +-q^{+-1} mod p.
    {
        std::map<std::pair<std::int64_t, std::int64_t>, double> vol_of;
        for (const auto& e : sweep) vol_of[{e.k.p, e.k.q}] = e.vr.volume;
        double worst = 0.0;
        for (const auto& e : sweep)
            for (std::int64_t q2 : equivalent_params(e.k))
                worst = std::max(worst, std::abs(e.vr.volume - vol_of.at({e.k.p, q2})));
        out.push_back({"isotopy-invariance", worst <= 1e-8, fmt("max gap=%.2e", worst)});
    }

    // 10. Lackenby sandwich for the hyperbolic cases.
    {
        bool ok = true;
        double margin = 1e-9;
        for (const auto& e : sweep) {
            if (e.k.q == 1) continue;
            LackenbyBounds lb = lackenby_bounds(cf_positive(e.k.p, e.k.q));
            if (e.vr.volume < lb.lower - margin || e.vr.volume > lb.upper + margin)
                ok = false;
        }
        out.push_back({"lackenby-sandwich", ok, "hyperbolic (p,q), p<50"});
    }

    // 11. Dilogarithm property suite.
    {
        std::mt19937 rng(99218844);
        std::uniform_real_distribution<double> coord(-3.0, 3.0);
        auto rand_z = [&] {
            while (true) {
                cplx z{coord(rng), coord(rng)};
                if (std::abs(z) > 0.05 && std::abs(z - 1.0) > 0.05 && std::abs(z) < 3.0)
                    return z;
            }
        };
        double worst5 = 0.0, worstc = 0.0;
        for (int i = 0; i < 1000; ++i) {
            cplx x = rand_z(), y = rand_z();
            double rel = bloch_wigner(x, opt.dilog) - bloch_wigner(y, opt.dilog) +
                         bloch_wigner(y / x, opt.dilog) -
                         bloch_wigner((1.0 - y) / (1.0 - x), opt.dilog) +
                         bloch_wigner((1.0 - 1.0 / y) / (1.0 - 1.0 / x), opt.dilog);
            worst5 = std::max(worst5, std::abs(rel));
            cplx z = rand_z();
            worstc = std::max(worstc, std::abs(bloch_wigner(std::conj(z), opt.dilog) +
                                               bloch_wigner(z, opt.dilog)));
        }
        double cat_err =
            std::abs(bloch_wigner(cplx(0.0, 1.0), opt.dilog) - 0.91596559417721901505);
        bool ok = worst5 <= 1e-10 && worstc <= 1e-12 && cat_err <= 1e-12;
        out.push_back({"dilog-properties", ok,
                       fmt("five-term=%.2e conj=%.2e catalan=%.2e", worst5, worstc, cat_err)});
    }

    // 12. z-sequence invariants z_{p-1} = 0 and z_{2p-2} = -1/x at every root.
    {
        double worst = 0.0;
        for (const auto& e : sweep) worst = std::max(worst, e.worst_z_tail);
        out.push_back({"z-sequence-invariants", worst <= 1e-9, fmt("max deviation=%.2e", worst)});
    }

    // 13. Scan completes under a minute with one record per valid pair;
    //     figure output is byte-stable.
    {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<ScanRecord> records = scan_records(49, vopt);
        double dt = elapsed_s(t0);
        std::size_t expected = 0;
        for (std::int64_t p = 3; p <= 49; p += 2)
            for (std::int64_t q = 1; q < p; q += 2)
                if (std::gcd(p, q) == 1) ++expected;
        bool count_ok = records.size() == expected;
        bool k73_ok = false;
        for (const auto& r : records)
            if (r.p == 7 && r.q == 3) k73_ok = format_fixed(r.volume) == "2.828122088331";
        std::string svg = render_figure_svg(records);
        bool svg_ok = svg == render_figure_svg(records) && !svg.empty();
        out.push_back({"scan-figure", count_ok && k73_ok && svg_ok && dt < 60.0,
                       fmt("%zu records in %.1fs, svg %zu bytes", records.size(), dt,
                           svg.size())});
    }

    return out;
}

bool print_selftest(std::ostream& os, const std::vector<CheckResult>& results) {
    bool all = true;
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        all = all && r.pass;
        std::ostringstream line;
        line << "[" << (i + 1 < 10 ? " " : "") << (i + 1) << "/" << results.size() << "] "
             << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        for (std::size_t pad = r.name.size(); pad < width + 2; ++pad) line << ' ';
        line << r.detail;
        os << line.str() << "\n";
    }
    os << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return all;
}

}  // namespace twobridge
