#include "shinglesim/shingling.hpp"

#include "shinglesim/error.hpp"
#include "shinglesim/utf8.hpp"

#include <algorithm>

namespace shinglesim {

namespace {

void require_k(std::size_t k) {
    if (k == 0) throw ParameterError("shingle length k must be at least 1");
}

// Appends the shingles of `text` (whose code point starts are `bounds`) to out.
void emit_shingles(std::string_view text, const std::vector<std::size_t>& bounds, std::size_t k,
                   std::size_t& next_rank, std::vector<Shingle>& out) {
    const std::size_t count = bounds.size() - 1;
    if (count < k) return;
    out.reserve(out.size() + count - k + 1);
    for (std::size_t i = 0; i + k <= count; ++i) {
        out.push_back({next_rank++, std::string(text.substr(bounds[i], bounds[i + k] - bounds[i]))});
    }
}

}  // namespace

ShingleSequence::ShingleSequence(std::size_t k, std::vector<Shingle> entries)
    : k_(k), entries_(std::move(entries)) {
    require_k(k);
}

ShingleSequence shingle(std::string_view text, std::size_t k) {
    require_k(k);
    const auto bounds = utf8::boundaries(text);
    std::vector<Shingle> out;
    std::size_t rank = 1;
    emit_shingles(text, bounds, k, rank, out);
    return ShingleSequence(k, std::move(out));
}

StreamShingler::StreamShingler(std::size_t k) : k_(k) {
    require_k(k);
}

void StreamShingler::feed(std::string_view line, std::vector<Shingle>& out) {
    buffer_.assign(carry_);
    buffer_.append(line);
    const auto bounds = utf8::boundaries(buffer_);
    emit_shingles(buffer_, bounds, k_, next_rank_, out);

    const std::size_t count = bounds.size() - 1;
    const std::size_t keep = std::min(count, k_ - 1);
    carry_.assign(buffer_, bounds[count - keep], std::string::npos);
}

}  // namespace shinglesim
