#include "pepsi/bench.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include <omp.h>

#include "pepsi/sp.hpp"

namespace pepsi {

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

Label bench_label() {
    std::vector<std::string> kws = {"Temp", "Irvine, CA"};
    return Label::canonicalize(kws);
}

}  // namespace

BenchResult bench_report(uint32_t trials, size_t payload_size, bool cold,
                         uint64_t seed) {
    SeededRng rng(seed);
    SystemParams params = SystemParams::current();
    MasterSecret ms = MasterSecret::generate(rng);
    NodeKey nk = register_node(ms, bench_label(), "bench-node");
    MobileNode warm_node(nk, params);

    std::vector<uint8_t> payload(payload_size, 0x42);
    BenchResult res;
    res.trials = trials;

    std::vector<double> totals(trials);
    double shared_sum = 0, encrypt_sum = 0;
    for (uint32_t t = 0; t < trials; ++t) {
        if (cold) {
            auto t0 = Clock::now();
            auto frame = make_report(nk, payload, params, rng);
            auto t1 = Clock::now();
            totals[t] = ms_between(t0, t1);
            res.report_overhead_bytes = frame.encode().size() - payload_size;
            // Sub-timings measured directly on separate calls: the
            // shared-secret derivation, and the cached-pipeline report build
            // (tag reuse + AEAD), which together make up the cold path.
            auto s0 = Clock::now();
            GTElement shared = node_shared_secret(nk, params);
            auto s1 = Clock::now();
            (void)shared;
            shared_sum += ms_between(s0, s1);
            auto e0 = Clock::now();
            auto warm_frame = warm_node.make_report(payload, rng);
            auto e1 = Clock::now();
            (void)warm_frame;
            encrypt_sum += ms_between(e0, e1);
        } else {
            auto t0 = Clock::now();
            auto frame = warm_node.make_report(payload, rng);
            auto t1 = Clock::now();
            totals[t] = ms_between(t0, t1);
            res.report_overhead_bytes = frame.encode().size() - payload_size;
            encrypt_sum += totals[t];
        }
    }

    double sum = 0;
    for (double v : totals) sum += v;
    res.mean_ms = sum / trials;
    std::sort(totals.begin(), totals.end());
    res.p95_ms = totals[std::min<size_t>(trials - 1, (size_t)(0.95 * trials))];
    if (cold) res.shared_secret_mean_ms = shared_sum / trials;
    res.encrypt_mean_ms = encrypt_sum / trials;
    return res;
}

KernelComparison bench_kernels(size_t num_labels, uint64_t seed) {
    SeededRng rng(seed);
    SystemParams params = SystemParams::current();
    MasterSecret ms = MasterSecret::generate(rng);

    std::vector<Label> labels;
    labels.reserve(num_labels);
    for (size_t i = 0; i < num_labels; ++i) {
        std::vector<std::string> kws = {"metric-" + std::to_string(i),
                                        "site-" + std::to_string(seed % 1000)};
        labels.push_back(Label::canonicalize(kws));
    }

    KernelComparison cmp;
    cmp.labels = num_labels;
    cmp.threads = omp_get_max_threads();

    auto t0 = Clock::now();
    auto serial = batch_tag_pairs(ms, labels, params, ExecMode::Serial);
    auto t1 = Clock::now();
    auto parallel = batch_tag_pairs(ms, labels, params, ExecMode::Parallel);
    auto t2 = Clock::now();

    cmp.serial_ms = ms_between(t0, t1);
    cmp.parallel_ms = ms_between(t1, t2);
    cmp.identical = serial.size() == parallel.size();
    for (size_t i = 0; cmp.identical && i < serial.size(); ++i)
        cmp.identical = serial[i].node_tag == parallel[i].node_tag &&
                        serial[i].querier_tag == parallel[i].querier_tag;
    return cmp;
}

MatchScaling bench_match_scaling(size_t small_subs, size_t large_subs,
                                 size_t probes, uint64_t seed) {
    SeededRng rng(seed);

    auto build_table = [&](size_t count, SeededRng& r, SubscriptionTable& table,
                           std::vector<wire::Tag>& tags) {
        tags.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            wire::SubscriptionFrame f;
            r.fill(f.tag.bytes);
            std::string ep = "q-" + std::to_string(i);
            f.endpoint.assign(ep.begin(), ep.end());
            table.subscribe(f.encode());
            tags.push_back(f.tag);
        }
    };

    // Half the probes hit an indexed tag, half miss; identical mix for both
    // table sizes. Frames are built once so measurement rounds only exercise
    // the lookup path.
    auto build_probes = [&](const std::vector<wire::Tag>& tags, SeededRng& r) {
        std::vector<std::vector<uint8_t>> frames;
        frames.reserve(probes);
        for (size_t i = 0; i < probes; ++i) {
            wire::ReportFrame f;
            if (i % 2 == 0) {
                f.tag = tags[r.uniform(tags.size())];
            } else {
                r.fill(f.tag.bytes);
            }
            r.fill(f.nonce);
            f.ciphertext.assign(16 + 16, (uint8_t)i);
            frames.push_back(f.encode());
        }
        return frames;
    };

    auto probe_mean_us = [&](SubscriptionTable& table,
                             const std::vector<std::vector<uint8_t>>& frames) {
        auto t0 = Clock::now();
        size_t sink = 0;
        for (const auto& fr : frames) sink += table.match_report(fr).size();
        auto t1 = Clock::now();
        (void)sink;
        return ms_between(t0, t1) * 1000.0 / (double)probes;
    };

    MatchScaling out;
    out.small_subs = small_subs;
    out.large_subs = large_subs;

    SubscriptionTable small_table, large_table;
    std::vector<wire::Tag> small_tags, large_tags;
    build_table(small_subs, rng, small_table, small_tags);
    build_table(large_subs, rng, large_table, large_tags);

    SeededRng pr1(seed ^ 0x51AB), pr2(seed ^ 0x51AB);
    auto small_frames = build_probes(small_tags, pr1);
    auto large_frames = build_probes(large_tags, pr2);

    // Steady-state measurement: two unmeasured warm-up passes per table,
    // then interleaved measured rounds with the median kept, so cold caches,
    // clock drift and background hiccups cannot skew one side.
    for (int warm = 0; warm < 2; ++warm) {
        probe_mean_us(small_table, small_frames);
        probe_mean_us(large_table, large_frames);
    }
    std::vector<double> small_runs, large_runs;
    for (int round = 0; round < 5; ++round) {
        small_runs.push_back(probe_mean_us(small_table, small_frames));
        large_runs.push_back(probe_mean_us(large_table, large_frames));
    }
    std::sort(small_runs.begin(), small_runs.end());
    std::sort(large_runs.begin(), large_runs.end());
    out.small_mean_us = small_runs[small_runs.size() / 2];
    out.large_mean_us = large_runs[large_runs.size() / 2];
    return out;
}

}  // namespace pepsi
