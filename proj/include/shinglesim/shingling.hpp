#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace shinglesim {

/// A k-shingle together with its 1-based position in the text.
struct Shingle {
    std::size_t rank = 0;
    std::string value;

    friend bool operator==(const Shingle&, const Shingle&) = default;
};

/// Positional k-shingles of a text. Ranks run 1..size() in order; repeated
/// values stay distinct through their rank.
class ShingleSequence {
public:
    ShingleSequence() = default;
    explicit ShingleSequence(std::size_t k, std::vector<Shingle> entries = {});

    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    const std::vector<Shingle>& entries() const noexcept { return entries_; }
    const Shingle& operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const ShingleSequence&, const ShingleSequence&) = default;

private:
    std::size_t k_ = 0;
    std::vector<Shingle> entries_;
};

/// Entry i is the substring of k code points starting at code point i.
/// Throws ParameterError when k == 0.
ShingleSequence shingle(std::string_view text, std::size_t k);

/// Incremental shingler over a document delivered one line at a time. The
/// last k-1 code points of everything consumed so far are carried into the
/// next line, so the concatenated output equals shingle() of the lines joined
/// without separator. State is O(k) plus the current line.
class StreamShingler {
public:
    explicit StreamShingler(std::size_t k);

    /// Consumes one line and appends the shingles that became complete.
    void feed(std::string_view line, std::vector<Shingle>& out);

    std::size_t k() const noexcept { return k_; }
    std::size_t emitted() const noexcept { return next_rank_ - 1; }
    const std::string& carry() const noexcept { return carry_; }

private:
    std::size_t k_;
    std::size_t next_rank_ = 1;
    std::string carry_;
    std::string buffer_;
};

template <class LineRange>
ShingleSequence stream_shingle(const LineRange& lines, std::size_t k) {
    StreamShingler shingler(k);
    std::vector<Shingle> out;
    for (const auto& line : lines) shingler.feed(std::string_view(line), out);
    return ShingleSequence(k, std::move(out));
}

inline constexpr std::size_t kDefaultShingleLength = 3;

}  // namespace shinglesim
