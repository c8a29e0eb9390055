// pepsi: command-line front end for the registration authority, node and
// querier pipelines, the matching broker, the simulation harness and the
// benchmarks. Exit codes: 0 success, 1 usage error, 2 protocol/format error.
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "pepsi/bench.hpp"
#include "pepsi/sim.hpp"

namespace {

using namespace pepsi;

std::vector<uint8_t> read_file_or_throw(const std::string& path, Err code) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(code, "cannot open " + path);
    return std::vector<uint8_t>((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
}

void write_file_or_throw(const std::string& path, std::span<const uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write((const char*)data.data(), (std::streamsize)data.size());
    if (!out) throw Error(Err::IoError, "cannot write " + path);
}

Label label_from_cli(const std::string& spec) {
    std::vector<std::string> kws;
    size_t pos = 0;
    while (true) {
        size_t bar = spec.find('|', pos);
        kws.push_back(spec.substr(pos, bar == std::string::npos ? std::string::npos
                                                                : bar - pos));
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    return Label::canonicalize(kws);
}

std::unique_ptr<EntropySource> make_rng(const std::optional<uint64_t>& seed) {
    if (seed) return std::make_unique<SeededRng>(*seed);
    return std::make_unique<SystemRng>();
}

std::string label_display(const Label& label) {
    std::string out;
    for (size_t i = 0; i < label.keywords().size(); ++i) {
        if (i) out += "|";
        out += label.keywords()[i];
    }
    return out;
}

// --- ra ---------------------------------------------------------------------

int cmd_ra_setup(const std::optional<uint64_t>& seed, const std::string& out,
                 const std::string& passphrase, uint32_t iters) {
    auto rng = make_rng(seed);
    auto [master, params] = setup(*rng);
    save_master(master, out, passphrase, *rng, iters);
    std::cout << "master_file=" << out << "\n";
    std::cout << "protocol_version=" << (int)params.protocol_version << "\n";
    std::cout << "curve=" << params.curve_id << "\n";
    return 0;
}

int cmd_ra_register(bool querier, const std::string& master_path,
                    const std::string& passphrase, const std::string& label_spec,
                    const std::string& party_id, const std::string& out,
                    const std::string& ledger_path) {
    MasterSecret ms = load_master(master_path, passphrase);
    Label label = label_from_cli(label_spec);
    std::optional<RegistrationLedger> ledger;
    if (!ledger_path.empty()) ledger.emplace(ledger_path);
    if (querier) {
        QuerierKey qk = register_querier(ms, label, party_id,
                                         ledger ? &*ledger : nullptr);
        export_key(qk, out);
    } else {
        NodeKey nk = register_node(ms, label, party_id,
                                   ledger ? &*ledger : nullptr);
        export_key(nk, out);
    }
    std::cout << "key_file=" << out << "\n";
    std::cout << "role=" << (querier ? "querier" : "node") << "\n";
    std::cout << "label=" << label_display(label) << "\n";
    return 0;
}

// --- node -------------------------------------------------------------------

int cmd_node_report(const std::string& key_path, const std::string& payload_str,
                    const std::string& payload_file, const std::string& out,
                    const std::optional<uint64_t>& seed) {
    auto any = import_key(key_path);
    auto* nk = std::get_if<NodeKey>(&any);
    if (nk == nullptr)
        throw Error(Err::MalformedKeyFile, "expected a node key, got a querier key");

    std::vector<uint8_t> payload;
    if (!payload_file.empty()) {
        payload = read_file_or_throw(payload_file, Err::IoError);
    } else {
        payload.assign(payload_str.begin(), payload_str.end());
    }
    auto rng = make_rng(seed);
    auto frame = make_report(*nk, payload, SystemParams::current(), *rng);
    auto bytes = frame.encode();
    write_file_or_throw(out, bytes);
    std::cout << "report_file=" << out << "\n";
    std::cout << "report_bytes=" << bytes.size() << "\n";
    std::cout << "overhead_bytes=" << bytes.size() - payload.size() << "\n";
    return 0;
}

// --- querier ------------------------------------------------------------------

int cmd_querier_subscribe(const std::string& key_path, const std::string& endpoint,
                          const std::string& out) {
    auto any = import_key(key_path);
    auto* qk = std::get_if<QuerierKey>(&any);
    if (qk == nullptr)
        throw Error(Err::MalformedKeyFile, "expected a querier key, got a node key");
    Querier querier(*qk, SystemParams::current());
    auto bytes = querier.make_subscription(endpoint).encode();
    write_file_or_throw(out, bytes);
    std::cout << "subscription_file=" << out << "\n";
    std::cout << "subscription_bytes=" << bytes.size() << "\n";
    return 0;
}

int cmd_querier_decrypt(const std::string& key_path, const std::string& report_path,
                        const std::string& out) {
    auto any = import_key(key_path);
    auto* qk = std::get_if<QuerierKey>(&any);
    if (qk == nullptr)
        throw Error(Err::MalformedKeyFile, "expected a querier key, got a node key");
    Querier querier(*qk, SystemParams::current());
    auto payload = querier.decrypt_report(
        std::span<const uint8_t>(read_file_or_throw(report_path, Err::MalformedReport)));
    if (out.empty()) {
        std::cout.write((const char*)payload.data(), (std::streamsize)payload.size());
    } else {
        write_file_or_throw(out, payload);
        std::cout << "payload_file=" << out << "\n";
        std::cout << "payload_bytes=" << payload.size() << "\n";
    }
    return 0;
}

// --- sp ------------------------------------------------------------------------

int cmd_sp_run(const std::vector<std::string>& sub_paths,
               const std::vector<std::string>& report_paths,
               const std::string& out) {
    SubscriptionTable table;
    for (const auto& path : sub_paths) {
        uint64_t id = table.subscribe(
            std::span<const uint8_t>(read_file_or_throw(path, Err::MalformedSubscription)));
        std::cout << "subscribed id=" << id << " file=" << path << "\n";
    }
    std::vector<uint8_t> delivery_blob;
    uint64_t deliveries = 0;
    for (const auto& path : report_paths) {
        auto bytes = read_file_or_throw(path, Err::MalformedReport);
        for (const auto& d : table.match_report(bytes)) {
            ++deliveries;
            for (int i = 7; i >= 0; --i)
                delivery_blob.push_back((uint8_t)(d.subscription_id >> (8 * i)));
            uint32_t len = (uint32_t)d.report.size();
            for (int i = 3; i >= 0; --i)
                delivery_blob.push_back((uint8_t)(len >> (8 * i)));
            delivery_blob.insert(delivery_blob.end(), d.report.begin(),
                                 d.report.end());
        }
    }
    if (!out.empty()) write_file_or_throw(out, delivery_blob);
    auto stats = table.stats();
    std::cout << "subs_active=" << stats.subs_active << "\n";
    std::cout << "reports_seen=" << stats.reports_seen << "\n";
    std::cout << "matches_made=" << stats.matches_made << "\n";
    std::cout << "deliveries=" << deliveries << "\n";
    if (!out.empty()) std::cout << "deliveries_file=" << out << "\n";
    return 0;
}

// --- sim -------------------------------------------------------------------------

int cmd_sim_run(const std::string& config_path, bool parallel, bool loopback) {
    ScenarioConfig cfg = ScenarioConfig::load(config_path);
    Transport transport;
    if (loopback)
        transport = [](std::span<const uint8_t> f) {
            return std::vector<uint8_t>(f.begin(), f.end());
        };
    ScenarioResult res = run_scenario(
        cfg, parallel ? ExecMode::Parallel : ExecMode::Serial, transport);
    std::cout << "deliveries_expected=" << res.deliveries_expected << "\n";
    std::cout << "deliveries_made=" << res.deliveries_made << "\n";
    std::cout << "decryptions_ok=" << res.decryptions_ok << "\n";
    std::cout << "decryptions_failed=" << res.decryptions_failed << "\n";
    std::cout << "false_deliveries=" << res.false_deliveries << "\n";
    std::cout << "reports_published=" << res.reports_published << "\n";
    std::cout << "subscriptions_active=" << res.subscriptions_active << "\n";
    std::cout << "registration_ms=" << res.timings.registration_ms << "\n";
    std::cout << "subscription_ms=" << res.timings.subscription_ms << "\n";
    std::cout << "reporting_ms=" << res.timings.reporting_ms << "\n";
    std::cout << "matching_ms=" << res.timings.matching_ms << "\n";
    std::cout << "decryption_ms=" << res.timings.decryption_ms << "\n";
    bool sound = res.deliveries_made == res.deliveries_expected &&
                 res.false_deliveries == 0 && res.decryptions_failed == 0;
    std::cout << "sound=" << (sound ? "true" : "false") << "\n";
    if (!sound) {
        std::cerr << "scenario failed the soundness oracle\n";
        return 2;
    }
    return 0;
}

// --- bench --------------------------------------------------------------------------

int cmd_bench_report(uint32_t trials, uint32_t payload_size, bool warm,
                     uint64_t seed) {
    BenchResult res = bench_report(trials, payload_size, !warm, seed);
    std::cout << "trials=" << res.trials << "\n";
    std::cout << "payload_bytes=" << payload_size << "\n";
    std::cout << "mode=" << (warm ? "warm" : "cold") << "\n";
    std::cout << "mean_ms=" << res.mean_ms << "\n";
    std::cout << "p95_ms=" << res.p95_ms << "\n";
    std::cout << "shared_secret_mean_ms=" << res.shared_secret_mean_ms << "\n";
    std::cout << "encrypt_mean_ms=" << res.encrypt_mean_ms << "\n";
    std::cout << "report_overhead_bytes=" << res.report_overhead_bytes << "\n";
    return 0;
}

int cmd_bench_kernels(uint32_t labels, uint64_t seed) {
    KernelComparison cmp = bench_kernels(labels, seed);
    std::cout << "labels=" << cmp.labels << "\n";
    std::cout << "threads=" << cmp.threads << "\n";
    std::cout << "serial_ms=" << cmp.serial_ms << "\n";
    std::cout << "parallel_ms=" << cmp.parallel_ms << "\n";
    std::cout << "speedup=" << (cmp.parallel_ms > 0 ? cmp.serial_ms / cmp.parallel_ms : 0)
              << "\n";
    std::cout << "identical=" << (cmp.identical ? "true" : "false") << "\n";
    return cmp.identical ? 0 : 2;
}

int cmd_bench_match(uint32_t small_subs, uint32_t large_subs, uint32_t probes,
                    uint64_t seed) {
    MatchScaling s = bench_match_scaling(small_subs, large_subs, probes, seed);
    std::cout << "small_subs=" << s.small_subs << "\n";
    std::cout << "large_subs=" << s.large_subs << "\n";
    std::cout << "small_mean_us=" << s.small_mean_us << "\n";
    std::cout << "large_mean_us=" << s.large_mean_us << "\n";
    std::cout << "ratio=" << (s.small_mean_us > 0 ? s.large_mean_us / s.small_mean_us : 0)
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"privacy-preserving participatory sensing toolkit"};
    app.require_subcommand(1);

    std::optional<uint64_t> seed;
    std::string out, passphrase, master_path, label_spec, party_id, ledger_path;
    std::string key_path, payload_str, payload_file, endpoint, report_path;
    std::string config_path;
    std::vector<std::string> sub_paths, report_paths;
    uint32_t iters = kMasterKdfIters;
    uint32_t trials = 100, payload_size = 64, labels = 16;
    uint32_t small_subs = 10000, large_subs = 100000, probes = 20000;
    uint64_t bench_seed = 0xB35F;
    bool warm = false, parallel = false, loopback = false;

    int rc = 0;
    auto* ra = app.add_subcommand("ra", "registration authority operations");
    auto* ra_setup = ra->add_subcommand("setup", "generate a master secret");
    ra_setup->add_option("--seed", seed, "deterministic seed (omit for OS entropy)");
    ra_setup->add_option("--out", out, "master key file")->required();
    ra_setup->add_option("--passphrase", passphrase, "at-rest encryption passphrase");
    ra_setup->add_option("--kdf-iters", iters, "PBKDF2 iteration count");
    ra_setup->callback([&] { rc = cmd_ra_setup(seed, out, passphrase, iters); });

    for (bool querier : {false, true}) {
        auto* sub = ra->add_subcommand(
            querier ? "register-querier" : "register-node",
            querier ? "issue a querier (decryption) key"
                    : "issue a node (tagging) key");
        sub->add_option("--master", master_path, "master key file")->required();
        sub->add_option("--passphrase", passphrase, "master passphrase");
        sub->add_option("--label", label_spec, "keywords, '|' separated")->required();
        sub->add_option("--id", party_id, "party identifier")->required();
        sub->add_option("--out", out, "output key file")->required();
        sub->add_option("--ledger", ledger_path, "append issuance to this ledger");
        sub->callback([&, querier] {
            rc = cmd_ra_register(querier, master_path, passphrase, label_spec,
                                 party_id, out, ledger_path);
        });
    }

    auto* node = app.add_subcommand("node", "mobile node operations");
    auto* node_report = node->add_subcommand("report", "tag and encrypt a measurement");
    node_report->add_option("--key", key_path, "node key file")->required();
    node_report->add_option("--payload", payload_str, "measurement text");
    node_report->add_option("--payload-file", payload_file, "measurement bytes from file");
    node_report->add_option("--out", out, "output report frame")->required();
    node_report->add_option("--seed", seed, "deterministic nonce seed");
    node_report->callback([&] {
        rc = cmd_node_report(key_path, payload_str, payload_file, out, seed);
    });

    auto* querier = app.add_subcommand("querier", "querier operations");
    auto* q_sub = querier->add_subcommand("subscribe", "emit a subscription frame");
    q_sub->add_option("--key", key_path, "querier key file")->required();
    q_sub->add_option("--endpoint", endpoint, "delivery endpoint")->required();
    q_sub->add_option("--out", out, "output subscription frame")->required();
    q_sub->callback([&] { rc = cmd_querier_subscribe(key_path, endpoint, out); });

    auto* q_dec = querier->add_subcommand("decrypt", "decrypt a delivered report");
    q_dec->add_option("--key", key_path, "querier key file")->required();
    q_dec->add_option("--report", report_path, "report frame file")->required();
    q_dec->add_option("--out", out, "payload output (stdout when omitted)");
    q_dec->callback([&] { rc = cmd_querier_decrypt(key_path, report_path, out); });

    auto* sp = app.add_subcommand("sp", "service provider operations");
    auto* sp_run = sp->add_subcommand("run", "match reports against subscriptions");
    sp_run->add_option("--subscription", sub_paths, "subscription frame file")
        ->required()
        ->take_all();
    sp_run->add_option("--report", report_paths, "report frame file")
        ->required()
        ->take_all();
    sp_run->add_option("--out", out, "delivery records output file");
    sp_run->callback([&] { rc = cmd_sp_run(sub_paths, report_paths, out); });

    auto* sim = app.add_subcommand("sim", "simulation harness");
    auto* sim_run = sim->add_subcommand("run", "run a scenario end to end");
    sim_run->add_option("--config", config_path, "scenario config file")->required();
    sim_run->add_flag("--parallel", parallel, "drive nodes with OpenMP");
    sim_run->add_flag("--loopback-transport", loopback,
                      "route frames through an explicit loopback hop");
    sim_run->callback([&] { rc = cmd_sim_run(config_path, parallel, loopback); });

    auto* bench = app.add_subcommand("bench", "benchmarks");
    auto* b_rep = bench->add_subcommand("report", "per-report cost, 100-trial mean");
    b_rep->add_option("--trials", trials, "trial count");
    b_rep->add_option("--payload-size", payload_size, "payload bytes");
    b_rep->add_flag("--warm", warm, "reuse the cached shared secret");
    b_rep->add_option("--seed", bench_seed, "bench rng seed");
    b_rep->callback([&] { rc = cmd_bench_report(trials, payload_size, warm, bench_seed); });

    auto* b_ker = bench->add_subcommand("kernels", "serial vs OpenMP tag batch");
    b_ker->add_option("--labels", labels, "batch size");
    b_ker->add_option("--seed", bench_seed, "bench rng seed");
    b_ker->callback([&] { rc = cmd_bench_kernels(labels, bench_seed); });

    auto* b_match = bench->add_subcommand("match", "broker lookup scaling");
    b_match->add_option("--small", small_subs, "small table size");
    b_match->add_option("--large", large_subs, "large table size");
    b_match->add_option("--probes", probes, "lookups per measurement");
    b_match->add_option("--seed", bench_seed, "bench rng seed");
    b_match->callback([&] {
        rc = cmd_bench_match(small_subs, large_subs, probes, bench_seed);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // fold CLI11's error codes into "usage error"
    } catch (const pepsi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
