// Finite 0/1 sequences with the alphabetic (dictionary) order used to
// compare random-bit prefixes: a proper prefix sorts before its extensions,
// and "0..." sorts before "1...".
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace anet {

class BitSeq {
public:
    BitSeq() = default;
    explicit BitSeq(std::string_view s) {
        for (char c : s) bits_.push_back(c == '1' ? 1 : 0);
    }

    void append(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit & 1)); }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int at(std::size_t i) const { return bits_[i]; }

    // true iff *this is a (non-strict) prefix of other
    bool prefix_of(const BitSeq& other) const {
        if (bits_.size() > other.bits_.size()) return false;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] != other.bits_[i]) return false;
        return true;
    }

    // alphabetic order on binary strings: "" < "0" < "01" < "1"
    friend int compare(const BitSeq& a, const BitSeq& b) {
        std::size_t n = std::min(a.bits_.size(), b.bits_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.bits_[i] != b.bits_[i]) return a.bits_[i] < b.bits_[i] ? -1 : 1;
        }
        if (a.bits_.size() == b.bits_.size()) return 0;
        return a.bits_.size() < b.bits_.size() ? -1 : 1;
    }

    bool operator==(const BitSeq& o) const { return bits_ == o.bits_; }
    bool operator!=(const BitSeq& o) const { return bits_ != o.bits_; }
    bool operator<(const BitSeq& o) const { return compare(*this, o) < 0; }

    std::string str() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

private:
    std::vector<std::uint8_t> bits_;
};

} // namespace anet
