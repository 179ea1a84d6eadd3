#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "twobridge/volume.hpp"

namespace twobridge {

// One row of a parameter scan: every valid (p, q) with p odd <= pmax.
struct ScanRecord {
    std::int64_t p = 0;
    std::int64_t q = 0;
    double ratio = 0.0;  // q/p
    double volume = 0.0;
    int cf_len = 0;
    std::int64_t ell = 0;
};

// Number of worker threads: TWOBRIDGE_THREADS if set, else hardware count.
int worker_threads();

// Runs fn(0..count-1) on the worker pool; results order is up to the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

std::vector<ScanRecord> scan_records(std::int64_t pmax, const VolumeOptions& opt = {});

// Fixed-point decimal with the requested digits (round-half-even).
std::string format_fixed(double value, int digits = 12);

// Header p,q,ratio,volume,cf_len,ell; rows sorted by (p, q).
void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& records);
void write_scan_json(std::ostream& os, const std::vector<ScanRecord>& records);

// Deterministic standalone 800x600 scatter of (q/p, volume).
std::string render_figure_svg(const std::vector<ScanRecord>& records);

// JSON report for a single volume computation:
// {p, q, volume, argmax_root:{re, im}, per_root:[{root:{re,im}, v_cross,
//  v_theorem, degenerate}]}
std::string volume_result_json(const VolumeResult& vr);

// Plain-text report of cmd_info: parameters, sign sequence, continued
// fraction, presentation words, Riley polynomial, bounds.
std::string info_report(const BridgeParams& k, bool with_roots);

}  // namespace twobridge
