#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "twobridge/cli.hpp"
#include "twobridge/selftest.hpp"

using namespace twobridge;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs the installed binary; POSIX shell redirection.
RunResult run_cli(const std::string& args) {
    std::string out_path = "/tmp/twobridge_test_out.txt";
    std::string err_path = "/tmp/twobridge_test_err.txt";
    std::string cmd = std::string(TWOBRIDGE_BIN) + " " + args + " >" + out_path +
                      " 2>" + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    auto slurp = [](const std::string& path) {
        std::ifstream is(path);
        std::ostringstream os;
        os << is.rdbuf();
        return os.str();
    };
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

}  // namespace

TEST_CASE("scan_records enumerates valid pairs") {
    auto records = scan_records(5);
    REQUIRE(records.size() == 3);
    CHECK(records[0].p == 3);
    CHECK(records[0].q == 1);
    CHECK(records[1].p == 5);
    CHECK(records[1].q == 1);
    CHECK(records[2].p == 5);
    CHECK(records[2].q == 3);
    CHECK(records[2].volume == doctest::Approx(2.029883212819307).epsilon(1e-9));
    CHECK(std::abs(records[0].volume) <= 1e-8);
    CHECK(records[2].ell == 3);
    CHECK(records[2].cf_len == 3);
}

TEST_CASE("csv output and round trip") {
    auto records = scan_records(7);
    std::ostringstream os;
    write_scan_csv(os, records);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "p,q,ratio,volume,cf_len,ell");

    std::size_t rows = 0;
    std::string line;
    while (std::getline(is, line)) {
        ScanRecord parsed;
        char comma;
        std::istringstream ls(line);
        ls >> parsed.p >> comma >> parsed.q >> comma >> parsed.ratio >> comma >>
            parsed.volume >> comma >> parsed.cf_len >> comma >> parsed.ell;
        REQUIRE(rows < records.size());
        const ScanRecord& want = records[rows];
        CHECK(parsed.p == want.p);
        CHECK(parsed.q == want.q);
        CHECK(parsed.cf_len == want.cf_len);
        CHECK(parsed.ell == want.ell);
        // printed precision is 12 decimals
        CHECK(std::abs(parsed.ratio - want.ratio) <= 5e-13);
        CHECK(std::abs(parsed.volume - want.volume) <= 5e-13);
        ++rows;
    }
    CHECK(rows == records.size());
}

TEST_CASE("format_fixed") {
    CHECK(format_fixed(2.82812208833078) == "2.828122088331");
    CHECK(format_fixed(0.0) == "0.000000000000");
    CHECK(format_fixed(-1e-15) == "0.000000000000");  // no negative zero
    CHECK(format_fixed(1.5, 2) == "1.50");
}

TEST_CASE("figure svg is deterministic") {
    auto records = scan_records(9);
    std::string svg1 = render_figure_svg(records);
    std::string svg2 = render_figure_svg(scan_records(9));
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") == 0);
    CHECK(svg1.find("width=\"800\"") != std::string::npos);
    CHECK(svg1.find("height=\"600\"") != std::string::npos);

    std::size_t markers = 0;
    for (std::size_t pos = svg1.find("<circle"); pos != std::string::npos;
         pos = svg1.find("<circle", pos + 1))
        ++markers;
    CHECK(markers == records.size());
}

TEST_CASE("volume json schema") {
    VolumeResult vr = volume(make_params(7, 3));
    std::string js = volume_result_json(vr);
    for (const char* key : {"\"p\"", "\"q\"", "\"volume\"", "\"argmax_root\"", "\"re\"",
                            "\"im\"", "\"per_root\"", "\"v_cross\"", "\"v_theorem\"",
                            "\"degenerate\""})
        CHECK(js.find(key) != std::string::npos);
}

TEST_CASE("info report") {
    std::string report = info_report(make_params(5, 3), false);
    CHECK(report.find("ell = 3") != std::string::npos);
    CHECK(report.find("P_4 = x^4 - x^2 + 1") != std::string::npos);

    std::string r73 = info_report(make_params(7, 3), false);
    CHECK(r73.find("cf = [2, 3]") != std::string::npos);
    CHECK(r73.find("epsilon = + + - - + +") != std::string::npos);
}

TEST_CASE("selftest negative control") {
    SelftestOptions sabotage;
    sabotage.dilog.series_tol = 1e-1;
    sabotage.dilog.max_terms = 40;
    auto results = run_selftest(sabotage);
    bool all = true;
    bool k73_failed = false;
    for (const auto& r : results) {
        all = all && r.pass;
        if (r.name == "k73-volume" && !r.pass) k73_failed = true;
    }
    CHECK_FALSE(all);
    CHECK(k73_failed);
}

TEST_CASE("cli binary behaviors") {
    RunResult vol = run_cli("vol 7 3");
    CHECK(vol.exit_code == 0);
    CHECK(vol.out.find("2.828122088331") != std::string::npos);

    RunResult invalid = run_cli("vol 9 3");
    CHECK(invalid.exit_code == 2);
    CHECK(invalid.err.find("NotCoprime") != std::string::npos);

    RunResult torus = run_cli("vol 9 1");
    CHECK(torus.exit_code == 0);
    CHECK(torus.out.find("0.000000000000") != std::string::npos);

    RunResult badq = run_cli("vol 5 7");
    CHECK(badq.exit_code == 2);
    CHECK(badq.err.find("OutOfRange") != std::string::npos);

    RunResult info = run_cli("info 7 3");
    CHECK(info.exit_code == 0);
    CHECK(info.out.find("cf = [2, 3]") != std::string::npos);

    RunResult unwritable = run_cli("scan --pmax 5 -o /nonexistent-dir/x.csv");
    CHECK(unwritable.exit_code == 3);

    RunResult scan = run_cli("scan --pmax 7");
    CHECK(scan.exit_code == 0);
    CHECK(scan.out.find("p,q,ratio,volume,cf_len,ell") == 0);

    RunResult json = run_cli("vol 7 3 --json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"argmax_root\"") != std::string::npos);

    RunResult allroots = run_cli("vol 5 3 --all-roots");
    CHECK(allroots.exit_code == 0);
    CHECK(allroots.out.find("v_theorem") != std::string::npos);

    RunResult inforoots = run_cli("info 5 3 --roots");
    CHECK(inforoots.exit_code == 0);
    CHECK(inforoots.out.find("roots (4):") != std::string::npos);
    CHECK(inforoots.out.find("residual") != std::string::npos);

    RunResult scanjson = run_cli("scan --pmax 5 --format json");
    CHECK(scanjson.exit_code == 0);
    for (const char* key : {"\"p\"", "\"q\"", "\"ratio\"", "\"volume\"", "\"cf_len\"",
                            "\"ell\""})
        CHECK(scanjson.out.find(key) != std::string::npos);

    // figure regeneration is byte-identical
    RunResult fig1 = run_cli("figure --pmax 9 -o /tmp/twobridge_fig1.svg");
    RunResult fig2 = run_cli("figure --pmax 9 -o /tmp/twobridge_fig2.svg");
    CHECK(fig1.exit_code == 0);
    CHECK(fig2.exit_code == 0);
    std::ifstream f1("/tmp/twobridge_fig1.svg"), f2("/tmp/twobridge_fig2.svg");
    std::ostringstream b1, b2;
    b1 << f1.rdbuf();
    b2 << f2.rdbuf();
    CHECK(b1.str() == b2.str());
    CHECK(!b1.str().empty());
}

TEST_CASE("smallest scan has a single marker at (1/3, 0)") {
    auto records = scan_records(3);
    REQUIRE(records.size() == 1);
    CHECK(records[0].p == 3);
    CHECK(records[0].q == 1);
    CHECK(std::abs(records[0].volume) <= 1e-8);
    std::string svg = render_figure_svg(records);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("<circle") == svg.rfind("<circle"));
}

TEST_CASE("worker thread override") {
    setenv("TWOBRIDGE_THREADS", "2", 1);
    CHECK(worker_threads() == 2);
    setenv("TWOBRIDGE_THREADS", "1", 1);
    CHECK(worker_threads() == 1);
    auto serial = scan_records(7);
    unsetenv("TWOBRIDGE_THREADS");
    auto parallel = scan_records(7);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].p == parallel[i].p);
        CHECK(serial[i].volume == parallel[i].volume);
    }
}
