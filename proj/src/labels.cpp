#include "pepsi/labels.hpp"

#include <algorithm>
#include <set>

namespace pepsi {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// ASCII case fold and whitespace normalization. Non-ASCII UTF-8 passes
// through byte-for-byte; full Unicode folding is out of scope for v1 and
// both parties apply the same rule, which is what matching needs.
std::string normalize_keyword(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (is_space(c)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        if (c >= 'A' && c <= 'Z') c = (char)(c - 'A' + 'a');
        out.push_back(c);
    }
    return out;
}

}  // namespace

Label Label::canonicalize(std::span<const std::string> raw_keywords) {
    if (raw_keywords.size() > kMaxKeywords)
        throw Error(Err::TooManyKeywords, "more than 8 keywords");
    std::set<std::string> seen;
    for (const auto& raw : raw_keywords) {
        std::string norm = normalize_keyword(raw);
        if (norm.empty()) continue;
        if (norm.size() > kMaxKeywordBytes)
            throw Error(Err::KeywordTooLong, "keyword exceeds 128 bytes");
        seen.insert(std::move(norm));
    }
    if (seen.empty())
        throw Error(Err::EmptyLabel, "no keywords survive normalization");
    Label l;
    l.keywords_.assign(seen.begin(), seen.end());  // std::set iterates sorted
    return l;
}

std::vector<uint8_t> Label::encode_identity() const {
    std::vector<uint8_t> out;
    for (const auto& kw : keywords_) {
        out.push_back((uint8_t)(kw.size() >> 8));
        out.push_back((uint8_t)kw.size());
        out.insert(out.end(), kw.begin(), kw.end());
    }
    return out;
}

std::optional<Label> Label::decode_identity(std::span<const uint8_t> bytes) {
    std::vector<std::string> kws;
    size_t off = 0;
    while (off < bytes.size()) {
        if (off + 2 > bytes.size()) return std::nullopt;
        size_t len = ((size_t)bytes[off] << 8) | bytes[off + 1];
        off += 2;
        if (len == 0 || len > kMaxKeywordBytes || off + len > bytes.size())
            return std::nullopt;
        kws.emplace_back((const char*)bytes.data() + off, len);
        off += len;
    }
    if (kws.empty() || kws.size() > kMaxKeywords) return std::nullopt;
    // The encoding must be canonical already: sorted, unique, normalized.
    for (size_t i = 0; i + 1 < kws.size(); ++i)
        if (!(kws[i] < kws[i + 1])) return std::nullopt;
    Label l;
    l.keywords_ = std::move(kws);
    Label re = canonicalize(l.keywords_);
    if (!(re == l)) return std::nullopt;
    return l;
}

}  // namespace pepsi
