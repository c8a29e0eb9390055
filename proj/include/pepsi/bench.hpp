// Measurement helpers behind the `bench` CLI subcommands.
#pragma once

#include <cstdint>

#include "pepsi/batch.hpp"

namespace pepsi {

struct BenchResult {
    uint32_t trials = 0;
    double mean_ms = 0;
    double p95_ms = 0;
    size_t report_overhead_bytes = 0;
    // Sub-timings of the cold path: shared-secret derivation (hash-to-group
    // plus pairing) and the remaining tag/encrypt work.
    double shared_secret_mean_ms = 0;
    double encrypt_mean_ms = 0;
};

// Times report construction. cold = true recomputes the pairing every
// report, the per-report cost model; cold = false uses the cached node
// pipeline.
BenchResult bench_report(uint32_t trials, size_t payload_size, bool cold,
                         uint64_t seed = 0xB35Full);

struct KernelComparison {
    size_t labels = 0;
    double serial_ms = 0;
    double parallel_ms = 0;
    int threads = 1;
    bool identical = false;  // the two paths produced the same tag rows
};

// Runs batch_tag_pairs both ways and cross-checks the outputs.
KernelComparison bench_kernels(size_t num_labels, uint64_t seed = 0xB35Full);

struct MatchScaling {
    size_t small_subs = 0;
    size_t large_subs = 0;
    double small_mean_us = 0;
    double large_mean_us = 0;
};

// Mean match_report latency with small vs large subscription tables filled
// with synthetic tags; the hash-indexed table should be size-insensitive.
MatchScaling bench_match_scaling(size_t small_subs, size_t large_subs,
                                 size_t probes, uint64_t seed = 0xB35Full);

}  // namespace pepsi
