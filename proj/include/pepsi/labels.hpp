// Canonical keyword sets and their injective identity encoding. Both sides
// of the protocol must agree on these bytes exactly, so the rules here are
// protocol constants: at most 8 keywords, each at most 128 bytes after
// normalization, lowercased, whitespace-collapsed, deduplicated, byte-sorted.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pepsi/errors.hpp"

namespace pepsi {

constexpr size_t kMaxKeywords = 8;
constexpr size_t kMaxKeywordBytes = 128;

class Label {
  public:
    // Normalizes, deduplicates and sorts. Throws EmptyLabel when nothing
    // survives normalization, KeywordTooLong / TooManyKeywords on the caps.
    static Label canonicalize(std::span<const std::string> raw_keywords);

    const std::vector<std::string>& keywords() const { return keywords_; }

    // Length-prefixed concatenation: (u16 be length || utf-8 bytes) per
    // keyword, in list order.
    std::vector<uint8_t> encode_identity() const;
    static std::optional<Label> decode_identity(std::span<const uint8_t> bytes);

    bool operator==(const Label&) const = default;
    bool operator<(const Label& o) const { return keywords_ < o.keywords_; }

  private:
    Label() = default;
    std::vector<std::string> keywords_;
};

}  // namespace pepsi
