// The Service Provider's matching broker. It stores subscription tags,
// compares report tags by byte equality, and forwards report frames
// verbatim. This module deliberately depends on the wire framing alone: it
// cannot name labels, keys, or any pairing type, and the build enforces
// that isolation.
//
// The tag index is a flat open-addressed table (32-byte slots, linear
// probing, load factor <= 1/2) so a lookup costs one cache line in the
// common case regardless of table size; per-tag subscriber lists live in a
// side pool threaded by index in insertion order.
#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "pepsi/wire.hpp"

namespace pepsi {

class SubscriptionTable {
  public:
    struct Delivery {
        uint64_t subscription_id;
        std::vector<uint8_t> report;  // frame bytes, bit-exact
    };

    struct Stats {
        uint64_t reports_seen = 0;
        uint64_t matches_made = 0;
        uint64_t subs_active = 0;
    };

    SubscriptionTable();
    SubscriptionTable(const SubscriptionTable&) = delete;
    SubscriptionTable& operator=(const SubscriptionTable&) = delete;

    // Throws MalformedSubscription. Duplicate (tag, endpoint) pairs are
    // accepted and get fresh ids.
    uint64_t subscribe(std::span<const uint8_t> subscription_frame);

    // Unknown ids return false.
    bool unsubscribe(uint64_t id);

    // Throws MalformedReport. Deliveries follow subscription insertion order
    // within a tag bucket. Safe to call concurrently with other matches;
    // subscribe/unsubscribe serialize against each other and publish
    // atomically with respect to in-flight matches.
    std::vector<Delivery> match_report(std::span<const uint8_t> report_bytes);

    Stats stats() const;

    // Diagnostic: current capacity of the tag index (power of two).
    size_t index_slots() const {
        std::shared_lock lock(mu_);
        return slots_.size();
    }

  private:
    static constexpr uint32_t kNil = 0xFFFFFFFF;

    struct Slot {
        wire::Tag tag;
        uint32_t head = kNil;  // kNil = empty slot, kTomb = deleted slot
        uint32_t tail = kNil;
    };
    static constexpr uint32_t kTomb = 0xFFFFFFFE;

    // Chain nodes stay small so a matched bucket costs few cache lines; the
    // endpoints live in a parallel array the match path never touches.
    struct Entry {
        uint64_t id;
        uint32_t next = kNil;
    };

    static uint64_t hash_tag(const wire::Tag& t);
    size_t find_slot(const wire::Tag& t) const;     // existing tag or SIZE_MAX
    size_t find_insert_slot(const wire::Tag& t) const;
    void grow_and_rehash();

    mutable std::shared_mutex mu_;
    std::vector<Slot> slots_;
    std::vector<Entry> pool_;
    std::vector<std::vector<uint8_t>> endpoints_;  // parallel to pool_
    std::vector<uint32_t> free_entries_;
    size_t used_slots_ = 0;  // occupied + tombstones
    size_t live_slots_ = 0;
    std::unordered_map<uint64_t, wire::Tag> tag_by_id_;
    uint64_t next_id_ = 1;

    std::atomic<uint64_t> reports_seen_{0};
    std::atomic<uint64_t> matches_made_{0};
    std::atomic<uint64_t> subs_active_{0};
};

}  // namespace pepsi
