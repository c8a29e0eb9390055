// End-to-end scenario harness: registration, subscription, reporting,
// matching and decryption against an in-process SubscriptionTable, checked
// against a plaintext oracle that compares label indices directly and never
// touches a tag.
#pragma once

#include <filesystem>
#include <functional>
#include <string>

#include "pepsi/batch.hpp"
#include "pepsi/sp.hpp"

namespace pepsi {

struct ScenarioConfig {
    uint64_t seed = 1;
    uint32_t num_nodes = 1;
    uint32_t num_queriers = 1;
    std::vector<std::vector<std::string>> label_universe;
    uint32_t reports_per_node = 1;
    double subscription_density = 1.0;
    uint32_t payload_size = 16;

    void validate() const;  // ConfigInvalid

    // key = value lines; '#' comments; repeated `label = kw | kw | ...`
    // lines build the universe.
    static ScenarioConfig parse(std::string_view text);
    static ScenarioConfig load(const std::filesystem::path& path);
};

struct PhaseTimings {
    double registration_ms = 0;
    double subscription_ms = 0;
    double reporting_ms = 0;
    double matching_ms = 0;
    double decryption_ms = 0;
};

struct ScenarioResult {
    uint64_t deliveries_expected = 0;
    uint64_t deliveries_made = 0;
    uint64_t decryptions_ok = 0;
    uint64_t decryptions_failed = 0;
    uint64_t false_deliveries = 0;
    uint64_t reports_published = 0;
    uint64_t subscriptions_active = 0;
    PhaseTimings timings;

    bool counters_equal(const ScenarioResult& o) const {
        return deliveries_expected == o.deliveries_expected &&
               deliveries_made == o.deliveries_made &&
               decryptions_ok == o.decryptions_ok &&
               decryptions_failed == o.decryptions_failed &&
               false_deliveries == o.false_deliveries &&
               reports_published == o.reports_published &&
               subscriptions_active == o.subscriptions_active;
    }
};

// The simulated network operator: frames pass through verbatim and carry no
// sender identity. Supplying a custom hop must not change any counter.
using Transport = std::function<std::vector<uint8_t>(std::span<const uint8_t>)>;

ScenarioResult run_scenario(const ScenarioConfig& cfg,
                            ExecMode mode = ExecMode::Serial,
                            const Transport& transport = {});

}  // namespace pepsi
