// twobridge: hyperbolic volumes of two-bridge knots from the closed formula.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twobridge/cli.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/selftest.hpp"

namespace {

// exit codes: 0 ok, 1 selftest failure, 2 invalid parameters, 3 output error
constexpr int kExitSelftest = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOutput = 3;

int write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return 0;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open " << path << " for writing\n";
        return kExitOutput;
    }
    os << payload;
    if (!os.flush()) {
        std::cerr << "write to " << path << " failed\n";
        return kExitOutput;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"volumes and pre-Bloch elements of two-bridge knots K(p,q)"};
    app.require_subcommand(1);

    std::int64_t p = 0, q = 0, pmax = 49;
    bool all_roots = false, as_json = false, with_roots = false;
    std::string format = "csv", outfile;

    auto* vol = app.add_subcommand("vol", "volume of K(p,q)");
    vol->add_option("p", p)->required();
    vol->add_option("q", q)->required();
    vol->add_flag("--all-roots", all_roots, "per-root table");
    vol->add_flag("--json", as_json, "JSON report");

    auto* info = app.add_subcommand("info", "parameters, words and polynomial of K(p,q)");
    info->add_option("p", p)->required();
    info->add_option("q", q)->required();
    info->add_flag("--roots", with_roots, "append the root table");

    auto* scan = app.add_subcommand("scan", "volume of every K(p,q) with p <= pmax");
    scan->add_option("--pmax", pmax, "largest p")->required();
    scan->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("-o,--output", outfile, "output file (default stdout)");

    auto* figure = app.add_subcommand("figure", "SVG scatter of (q/p, volume)");
    figure->add_option("--pmax", pmax, "largest p")->required();
    figure->add_option("-o,--output", outfile, "output file")->required();

    auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (vol->parsed()) {
            twobridge::VolumeResult vr = twobridge::volume(twobridge::make_params(p, q));
            if (as_json) {
                std::cout << twobridge::volume_result_json(vr) << "\n";
            } else {
                std::cout << twobridge::format_fixed(vr.volume) << "\n";
                if (all_roots) {
                    std::cout << "root (re, im)                             "
                                 "v_cross        v_theorem       flags\n";
                    for (const auto& rv : vr.per_root) {
                        std::printf("%+18.15f %+18.15f  %14.12f %14.12f  %s\n",
                                    rv.root.real(), rv.root.imag(), rv.v_cross,
                                    rv.v_theorem, rv.degenerate ? "degenerate" : "");
                    }
                }
            }
        } else if (info->parsed()) {
            std::cout << twobridge::info_report(twobridge::make_params(p, q), with_roots);
        } else if (scan->parsed()) {
            if (pmax < 3) throw twobridge::OutOfRange("pmax must be at least 3");
            auto records = twobridge::scan_records(pmax);
            std::ostringstream os;
            if (format == "json")
                twobridge::write_scan_json(os, records);
            else
                twobridge::write_scan_csv(os, records);
            return write_output(outfile, os.str());
        } else if (figure->parsed()) {
            if (pmax < 3) throw twobridge::OutOfRange("pmax must be at least 3");
            auto records = twobridge::scan_records(pmax);
            return write_output(outfile, twobridge::render_figure_svg(records));
        } else if (selftest->parsed()) {
            auto results = twobridge::run_selftest();
            bool ok = twobridge::print_selftest(std::cout, results);
            return ok ? 0 : kExitSelftest;
        }
    } catch (const twobridge::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}
