#include "pepsi/sim.hpp"

#include <chrono>
#include <fstream>

namespace pepsi {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

std::vector<uint8_t> through(const Transport& transport,
                             std::span<const uint8_t> frame) {
    if (!transport) return std::vector<uint8_t>(frame.begin(), frame.end());
    return transport(frame);
}

}  // namespace

void ScenarioConfig::validate() const {
    if (num_nodes < 1 || num_queriers < 1)
        throw Error(Err::ConfigInvalid, "node and querier counts must be >= 1");
    if (reports_per_node < 1)
        throw Error(Err::ConfigInvalid, "reports_per_node must be >= 1");
    if (label_universe.empty())
        throw Error(Err::ConfigInvalid, "label universe is empty");
    if (!(subscription_density >= 0.0 && subscription_density <= 1.0))
        throw Error(Err::ConfigInvalid, "density must lie in [0, 1]");
    if (payload_size < 1 || payload_size > wire::kMaxPayload)
        throw Error(Err::ConfigInvalid, "payload_size must be 1..4096");
    std::vector<Label> canon;
    for (const auto& kws : label_universe) canon.push_back(Label::canonicalize(kws));
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
        throw Error(Err::ConfigInvalid, "duplicate label in universe");
}

ScenarioConfig ScenarioConfig::parse(std::string_view text) {
    ScenarioConfig cfg;
    cfg.label_universe.clear();
    size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line_v =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        std::string line = trim(line_v);
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(Err::ConfigInvalid,
                        "line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        try {
            if (key == "seed") {
                cfg.seed = std::stoull(value);
            } else if (key == "nodes") {
                cfg.num_nodes = (uint32_t)std::stoul(value);
            } else if (key == "queriers") {
                cfg.num_queriers = (uint32_t)std::stoul(value);
            } else if (key == "reports_per_node") {
                cfg.reports_per_node = (uint32_t)std::stoul(value);
            } else if (key == "density") {
                cfg.subscription_density = std::stod(value);
            } else if (key == "payload_size") {
                cfg.payload_size = (uint32_t)std::stoul(value);
            } else if (key == "label") {
                std::vector<std::string> kws;
                size_t p = 0;
                while (true) {
                    size_t bar = value.find('|', p);
                    kws.push_back(trim(std::string_view(value).substr(
                        p, bar == std::string::npos ? value.size() - p : bar - p)));
                    if (bar == std::string::npos) break;
                    p = bar + 1;
                }
                cfg.label_universe.push_back(std::move(kws));
            } else {
                throw Error(Err::ConfigInvalid, "unknown config key: " + key);
            }
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(Err::ConfigInvalid,
                        "line " + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::ConfigInvalid, "cannot open config " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse(text);
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, ExecMode mode,
                            const Transport& transport) {
    cfg.validate();
    const uint32_t n_labels = (uint32_t)cfg.label_universe.size();

    std::vector<Label> labels;
    labels.reserve(n_labels);
    for (const auto& kws : cfg.label_universe)
        labels.push_back(Label::canonicalize(kws));

    SystemParams params = SystemParams::current();
    SeededRng sim_rng(cfg.seed);
    auto ra_rng = sim_rng.child("ra");
    MasterSecret ms = MasterSecret::generate(ra_rng);

    // Serial planning draws; the byte stream here is mirrored by the offline
    // oracle, so the draw order is part of the harness contract.
    std::vector<uint32_t> node_label(cfg.num_nodes);
    for (auto& l : node_label) l = (uint32_t)sim_rng.uniform(n_labels);

    const bool always = cfg.subscription_density >= 1.0;
    const uint64_t threshold =
        always ? 0 : (uint64_t)(cfg.subscription_density * 18446744073709551616.0);
    std::vector<uint8_t> wants(cfg.num_queriers * n_labels);
    for (uint32_t q = 0; q < cfg.num_queriers; ++q)
        for (uint32_t l = 0; l < n_labels; ++l) {
            uint64_t draw = sim_rng.next_u64();
            wants[q * n_labels + l] = always || draw < threshold;
        }

    struct SubPlan {
        uint32_t querier;
        uint32_t label;
    };
    std::vector<SubPlan> plan;
    for (uint32_t q = 0; q < cfg.num_queriers; ++q)
        for (uint32_t l = 0; l < n_labels; ++l)
            if (wants[q * n_labels + l]) plan.push_back({q, l});

    ScenarioResult res;

    // --- registration: issue keys and build the cached endpoints -----------
    auto t0 = Clock::now();
    std::vector<std::unique_ptr<MobileNode>> nodes(cfg.num_nodes);
    std::vector<std::unique_ptr<Querier>> queriers(plan.size());
    if (mode == ExecMode::Serial) {
        for (uint32_t i = 0; i < cfg.num_nodes; ++i) {
            NodeKey nk = register_node(ms, labels[node_label[i]],
                                       "node-" + std::to_string(i));
            nodes[i] = std::make_unique<MobileNode>(std::move(nk), params);
        }
        for (size_t s = 0; s < plan.size(); ++s) {
            QuerierKey qk = register_querier(ms, labels[plan[s].label],
                                             "querier-" + std::to_string(plan[s].querier));
            queriers[s] = std::make_unique<Querier>(std::move(qk), params);
        }
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < (long)cfg.num_nodes; ++i) {
            NodeKey nk = register_node(ms, labels[node_label[i]],
                                       "node-" + std::to_string(i));
            nodes[i] = std::make_unique<MobileNode>(std::move(nk), params);
        }
#pragma omp parallel for schedule(dynamic)
        for (long s = 0; s < (long)plan.size(); ++s) {
            QuerierKey qk = register_querier(ms, labels[plan[s].label],
                                             "querier-" + std::to_string(plan[s].querier));
            queriers[s] = std::make_unique<Querier>(std::move(qk), params);
        }
    }
    res.timings.registration_ms = ms_since(t0);

    // --- subscription: fixed order so ids are deterministic ----------------
    t0 = Clock::now();
    SubscriptionTable table;
    std::vector<uint64_t> sub_ids(plan.size());
    std::unordered_map<uint64_t, size_t> plan_by_id;
    for (size_t s = 0; s < plan.size(); ++s) {
        auto frame = queriers[s]
                         ->make_subscription("q-" + std::to_string(plan[s].querier))
                         .encode();
        sub_ids[s] = table.subscribe(through(transport, frame));
        plan_by_id[sub_ids[s]] = s;
    }
    res.subscriptions_active = table.stats().subs_active;
    res.timings.subscription_ms = ms_since(t0);

    // --- reporting: per-node child rng keeps parallel runs bit-identical ---
    t0 = Clock::now();
    struct PublishedReport {
        uint32_t label;
        std::vector<uint8_t> bytes;
    };
    std::vector<PublishedReport> reports(
        (size_t)cfg.num_nodes * cfg.reports_per_node);
    auto publish_node = [&](uint32_t i) {
        SeededRng node_rng = SeededRng(cfg.seed).child_indexed("node", i);
        for (uint32_t j = 0; j < cfg.reports_per_node; ++j) {
            std::vector<uint8_t> payload(cfg.payload_size);
            node_rng.fill(payload);
            auto frame = nodes[i]->make_report(payload, node_rng);
            reports[(size_t)i * cfg.reports_per_node + j] =
                PublishedReport{node_label[i], frame.encode()};
        }
    };
    if (mode == ExecMode::Serial) {
        for (uint32_t i = 0; i < cfg.num_nodes; ++i) publish_node(i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < (long)cfg.num_nodes; ++i) publish_node((uint32_t)i);
    }
    res.reports_published = reports.size();
    res.timings.reporting_ms = ms_since(t0);

    // --- matching ------------------------------------------------------------
    t0 = Clock::now();
    struct RoutedDelivery {
        uint32_t report_label;
        uint64_t subscription_id;
        std::vector<uint8_t> bytes;
    };
    std::vector<RoutedDelivery> deliveries;
    if (mode == ExecMode::Serial) {
        for (const auto& rep : reports) {
            for (auto& d : table.match_report(through(transport, rep.bytes)))
                deliveries.push_back(
                    {rep.label, d.subscription_id, std::move(d.report)});
        }
    } else {
#pragma omp parallel
        {
            std::vector<RoutedDelivery> local;
#pragma omp for schedule(dynamic) nowait
            for (long k = 0; k < (long)reports.size(); ++k) {
                for (auto& d : table.match_report(through(transport, reports[k].bytes)))
                    local.push_back({reports[k].label, d.subscription_id,
                                     std::move(d.report)});
            }
#pragma omp critical
            deliveries.insert(deliveries.end(),
                              std::make_move_iterator(local.begin()),
                              std::make_move_iterator(local.end()));
        }
    }
    res.deliveries_made = deliveries.size();
    res.timings.matching_ms = ms_since(t0);

    // --- decryption + ground-truth audit --------------------------------------
    t0 = Clock::now();
    uint64_t ok = 0, failed = 0, false_deliveries = 0;
    auto consume = [&](const RoutedDelivery& d, uint64_t& ok_acc,
                       uint64_t& failed_acc, uint64_t& false_acc) {
        size_t s = plan_by_id.at(d.subscription_id);
        if (plan[s].label != d.report_label) ++false_acc;
        try {
            auto payload = queriers[s]->decrypt_report(through(transport, d.bytes));
            (void)payload;
            ++ok_acc;
        } catch (const Error&) {
            ++failed_acc;
        }
    };
    if (mode == ExecMode::Serial) {
        for (const auto& d : deliveries) consume(d, ok, failed, false_deliveries);
    } else {
#pragma omp parallel
        {
            uint64_t l_ok = 0, l_failed = 0, l_false = 0;
#pragma omp for schedule(dynamic) nowait
            for (long k = 0; k < (long)deliveries.size(); ++k)
                consume(deliveries[k], l_ok, l_failed, l_false);
#pragma omp critical
            {
                ok += l_ok;
                failed += l_failed;
                false_deliveries += l_false;
            }
        }
    }
    res.decryptions_ok = ok;
    res.decryptions_failed = failed;
    res.false_deliveries = false_deliveries;
    res.timings.decryption_ms = ms_since(t0);

    // --- plaintext oracle: expected deliveries from label indices alone ----
    std::vector<uint64_t> subs_per_label(n_labels, 0);
    for (const auto& s : plan) ++subs_per_label[s.label];
    for (uint32_t i = 0; i < cfg.num_nodes; ++i)
        res.deliveries_expected += (uint64_t)cfg.reports_per_node *
                                   subs_per_label[node_label[i]];

    return res;
}

}  // namespace pepsi
