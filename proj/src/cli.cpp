#include "twobridge/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "twobridge/freegroup.hpp"
#include "twobridge/polyseq.hpp"

namespace twobridge {

int worker_threads() {
    if (const char* env = std::getenv("TWOBRIDGE_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int threads = worker_threads();
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(threads, static_cast<int>(count));
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::vector<ScanRecord> scan_records(std::int64_t pmax, const VolumeOptions& opt) {
    std::vector<BridgeParams> pairs;
    for (std::int64_t p = 3; p <= pmax; p += 2)
        for (std::int64_t q = 1; q < p; q += 2)
            if (std::gcd(p, q) == 1) pairs.push_back(make_params(p, q));

    std::vector<ScanRecord> out(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t i) {
        const BridgeParams& k = pairs[i];
        VolumeResult vr = volume(k, opt);
        CFExpansion cf = cf_positive(k.p, k.q);
        out[i] = {k.p,
                  k.q,
                  static_cast<double>(k.q) / static_cast<double>(k.p),
                  vr.volume,
                  static_cast<int>(cf.terms.size()),
                  k.ell};
    });
    return out;  // pairs were generated in (p, q) order
}

std::string format_fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    // avoid "-0.000000000000"
    if (buf[0] == '-') {
        bool all_zero = true;
        for (const char* c = buf + 1; *c; ++c)
            if (*c != '0' && *c != '.') all_zero = false;
        if (all_zero) return buf + 1;
    }
    return buf;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& records) {
    os << "p,q,ratio,volume,cf_len,ell\n";
    for (const auto& r : records) {
        os << r.p << "," << r.q << "," << format_fixed(r.ratio) << ","
           << format_fixed(r.volume) << "," << r.cf_len << "," << r.ell << "\n";
    }
}

void write_scan_json(std::ostream& os, const std::vector<ScanRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back({{"p", r.p},
                       {"q", r.q},
                       {"ratio", r.ratio},
                       {"volume", r.volume},
                       {"cf_len", r.cf_len},
                       {"ell", r.ell}});
    }
    os << arr.dump(2) << "\n";
}

std::string render_figure_svg(const std::vector<ScanRecord>& records) {
    // Fixed canvas and margins; all coordinates printed with two decimals
    // so regeneration is byte-identical.
    const double width = 800, height = 600;
    const double ml = 60, mr = 20, mt = 20, mb = 45;
    double vmax = 0.0;
    for (const auto& r : records) vmax = std::max(vmax, r.volume);
    double ymax = std::max(1.0, std::ceil(vmax));

    auto px = [&](double ratio) { return ml + ratio * (width - ml - mr); };
    auto py = [&](double vol) { return height - mb - vol / ymax * (height - mt - mb); };
    auto num = [](double x) {
        char b[32];
        std::snprintf(b, sizeof(b), "%.2f", x);
        return std::string(b);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
          "viewBox=\"0 0 800 600\">\n";
    os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    os << "<line x1=\"" << num(ml) << "\" y1=\"" << num(height - mb) << "\" x2=\""
       << num(width - mr) << "\" y2=\"" << num(height - mb)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << num(ml) << "\" y1=\"" << num(mt) << "\" x2=\"" << num(ml)
       << "\" y2=\"" << num(height - mb) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        double ratio = i / 4.0;
        os << "<text x=\"" << num(px(ratio)) << "\" y=\"" << num(height - mb + 18)
           << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
           << num(ratio) << "</text>\n";
    }
    int ysteps = static_cast<int>(ymax) > 8 ? 4 : static_cast<int>(ymax);
    for (int i = 0; i <= ysteps; ++i) {
        double vol = ymax * i / ysteps;
        os << "<text x=\"" << num(ml - 8) << "\" y=\"" << num(py(vol) + 4)
           << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
           << num(vol) << "</text>\n";
    }
    os << "<text x=\"" << num((ml + width - mr) / 2) << "\" y=\"" << num(height - 6)
       << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
          "q/p</text>\n";
    os << "<text x=\"14\" y=\"" << num((mt + height - mb) / 2)
       << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
          "transform=\"rotate(-90 14 "
       << num((mt + height - mb) / 2) << ")\">volume</text>\n";
    for (const auto& r : records) {
        os << "<circle cx=\"" << num(px(r.ratio)) << "\" cy=\"" << num(py(r.volume))
           << "\" r=\"2\" fill=\"#1f4e9c\" fill-opacity=\"0.75\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string volume_result_json(const VolumeResult& vr) {
    nlohmann::ordered_json j;
    j["p"] = vr.params.p;
    j["q"] = vr.params.q;
    j["volume"] = vr.volume;
    j["argmax_root"] = {{"re", vr.argmax_root.real()}, {"im", vr.argmax_root.imag()}};
    nlohmann::ordered_json per = nlohmann::ordered_json::array();
    for (const auto& rv : vr.per_root) {
        per.push_back({{"root", {{"re", rv.root.real()}, {"im", rv.root.imag()}}},
                       {"v_cross", rv.v_cross},
                       {"v_theorem", rv.v_theorem},
                       {"degenerate", rv.degenerate}});
    }
    j["per_root"] = per;
    return j.dump(2);
}

std::string info_report(const BridgeParams& k, bool with_roots) {
    std::ostringstream os;
    os << "K(" << k.p << "," << k.q << ")\n";
    os << "p = " << k.p << "\n";
    os << "q = " << k.q << "\n";
    os << "ell = " << k.ell << "\n";

    SignSequence eps = epsilon_sequence(k, k.p - 1);
    os << "epsilon =";
    for (int s : eps.signs) os << " " << (s > 0 ? "+" : "-");
    os << "\n";

    CFExpansion cf = cf_positive(k.p, k.q);
    os << "cf = [";
    for (std::size_t i = 0; i < cf.terms.size(); ++i)
        os << (i ? ", " : "") << cf.terms[i];
    os << "]\n";
    os << "conway twists = " << cf.terms.size() << " region(s)";
    for (std::size_t i = 0; i < cf.terms.size(); ++i) os << (i ? " " : ": ") << cf.terms[i];
    os << "\n";
    LackenbyBounds lb = lackenby_bounds(cf);
    os << "lackenby = [" << format_fixed(lb.lower, 6) << ", " << format_fixed(lb.upper, 6)
       << "]\n";

    PresentationWords pw = build_presentation(k);
    os << "w = " << pw.w.str() << "\n";
    os << "g = " << pw.g.str() << "\n";
    os << "r = " << pw.r.str() << "\n";
    os << "l = w* w (" << pw.l.length() << " letters)\n";

    IntPoly rp = riley_poly(k);
    os << "P_" << (k.p - 1) << " = " << rp.str() << "\n";
    os << "coeffs = [";
    for (int d = 0; d <= rp.degree(); ++d) os << (d ? ", " : "") << rp.coeff(d).str();
    os << "]\n";

    if (with_roots) {
        RootSet rs = find_roots(rp);
        os << "roots (" << rs.roots.size() << "):\n";
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            char line[128];
            std::snprintf(line, sizeof(line), "  %+.15g %+.15g i   residual %.2e\n",
                          rs.roots[i].real(), rs.roots[i].imag(), rs.residuals[i]);
            os << line;
        }
    }
    return os.str();
}

}  // namespace twobridge
