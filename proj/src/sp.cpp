#include "pepsi/sp.hpp"

#include <cstring>

namespace pepsi {

namespace {

constexpr size_t kInitialSlots = 64;

}  // namespace

SubscriptionTable::SubscriptionTable() : slots_(kInitialSlots) {}

uint64_t SubscriptionTable::hash_tag(const wire::Tag& t) {
    // Tags are hash outputs already; fold all 20 bytes so arbitrary test
    // inputs still spread.
    uint64_t a, b;
    uint32_t c;
    std::memcpy(&a, t.bytes.data(), 8);
    std::memcpy(&b, t.bytes.data() + 8, 8);
    std::memcpy(&c, t.bytes.data() + 16, 4);
    uint64_t h = a * 0x9E3779B97F4A7C15ull;
    h ^= (b + 0x9E3779B97F4A7C15ull) + (h << 6) + (h >> 2);
    h ^= (c + 0x517CC1B727220A95ull) + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 31;
    return h;
}

size_t SubscriptionTable::find_slot(const wire::Tag& t) const {
    const size_t mask = slots_.size() - 1;
    size_t idx = hash_tag(t) & mask;
    while (true) {
        const Slot& s = slots_[idx];
        if (s.head == kNil) return SIZE_MAX;
        if (s.head != kTomb && s.tag == t) return idx;
        idx = (idx + 1) & mask;
    }
}

size_t SubscriptionTable::find_insert_slot(const wire::Tag& t) const {
    const size_t mask = slots_.size() - 1;
    size_t idx = hash_tag(t) & mask;
    size_t first_tomb = SIZE_MAX;
    while (true) {
        const Slot& s = slots_[idx];
        if (s.head == kNil) return first_tomb != SIZE_MAX ? first_tomb : idx;
        if (s.head == kTomb) {
            if (first_tomb == SIZE_MAX) first_tomb = idx;
        } else if (s.tag == t) {
            return idx;
        }
        idx = (idx + 1) & mask;
    }
}

void SubscriptionTable::grow_and_rehash() {
    // Size from the live count, not the occupied count: churn-heavy loads
    // rebuild at the same capacity instead of doubling on tombstones.
    size_t new_size = kInitialSlots;
    while (new_size < 4 * (live_slots_ + 1)) new_size *= 2;
    std::vector<Slot> fresh(new_size);
    const size_t mask = new_size - 1;
    for (const Slot& s : slots_) {
        if (s.head == kNil || s.head == kTomb) continue;
        size_t idx = hash_tag(s.tag) & mask;
        while (fresh[idx].head != kNil) idx = (idx + 1) & mask;
        fresh[idx] = s;
    }
    slots_ = std::move(fresh);
    used_slots_ = live_slots_;
}

uint64_t SubscriptionTable::subscribe(std::span<const uint8_t> subscription_frame) {
    auto sub = wire::SubscriptionFrame::parse(subscription_frame);
    std::unique_lock lock(mu_);

    // Keep load (occupied + tombstones) at or below half capacity.
    if (2 * (used_slots_ + 1) > slots_.size()) grow_and_rehash();

    uint64_t id = next_id_++;
    uint32_t entry_idx;
    if (!free_entries_.empty()) {
        entry_idx = free_entries_.back();
        free_entries_.pop_back();
        pool_[entry_idx] = Entry{id, kNil};
        endpoints_[entry_idx] = std::move(sub.endpoint);
    } else {
        entry_idx = (uint32_t)pool_.size();
        pool_.push_back(Entry{id, kNil});
        endpoints_.push_back(std::move(sub.endpoint));
    }

    size_t idx = find_insert_slot(sub.tag);
    Slot& slot = slots_[idx];
    if (slot.head == kNil || slot.head == kTomb) {
        if (slot.head == kNil) ++used_slots_;
        ++live_slots_;
        slot.tag = sub.tag;
        slot.head = slot.tail = entry_idx;
    } else {
        pool_[slot.tail].next = entry_idx;
        slot.tail = entry_idx;
    }
    tag_by_id_.emplace(id, sub.tag);
    subs_active_.fetch_add(1, std::memory_order_relaxed);
    return id;
}

bool SubscriptionTable::unsubscribe(uint64_t id) {
    std::unique_lock lock(mu_);
    auto it = tag_by_id_.find(id);
    if (it == tag_by_id_.end()) return false;

    size_t idx = find_slot(it->second);
    if (idx != SIZE_MAX) {
        Slot& slot = slots_[idx];
        uint32_t prev = kNil;
        for (uint32_t cur = slot.head; cur != kNil; cur = pool_[cur].next) {
            if (pool_[cur].id == id) {
                if (prev == kNil) {
                    slot.head = pool_[cur].next;
                } else {
                    pool_[prev].next = pool_[cur].next;
                }
                if (slot.tail == cur) slot.tail = prev;
                endpoints_[cur].clear();
                free_entries_.push_back(cur);
                if (slot.head == kNil) {
                    slot.head = kTomb;  // keep probe chains intact
                    slot.tail = kNil;
                    --live_slots_;
                }
                break;
            }
            prev = cur;
        }
    }
    tag_by_id_.erase(it);
    subs_active_.fetch_sub(1, std::memory_order_relaxed);
    return true;
}

std::vector<SubscriptionTable::Delivery> SubscriptionTable::match_report(
    std::span<const uint8_t> report_bytes) {
    // Validate framing before touching any state; the tag and the total
    // length are the only fields inspected.
    wire::Tag tag = wire::peek_report_tag(report_bytes);

    std::vector<Delivery> out;
    {
        std::shared_lock lock(mu_);
        size_t idx = find_slot(tag);
        if (idx != SIZE_MAX) {
            for (uint32_t cur = slots_[idx].head; cur != kNil; cur = pool_[cur].next)
                out.push_back(Delivery{
                    pool_[cur].id,
                    std::vector<uint8_t>(report_bytes.begin(), report_bytes.end())});
        }
    }
    reports_seen_.fetch_add(1, std::memory_order_relaxed);
    matches_made_.fetch_add(out.size(), std::memory_order_relaxed);
    return out;
}

SubscriptionTable::Stats SubscriptionTable::stats() const {
    Stats s;
    s.reports_seen = reports_seen_.load(std::memory_order_relaxed);
    s.matches_made = matches_made_.load(std::memory_order_relaxed);
    s.subs_active = subs_active_.load(std::memory_order_relaxed);
    return s;
}

}  // namespace pepsi
