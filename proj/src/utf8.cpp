#include "shinglesim/utf8.hpp"

#include "shinglesim/error.hpp"

#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cstdint>
#include <limits>

namespace shinglesim::utf8 {

namespace {

template <class Visit>
void for_each_code_point(std::string_view text, Visit&& visit) {
    if (text.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        throw EncodingError("text exceeds 2 GiB");
    }
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
    const auto size = static_cast<std::int32_t>(text.size());
    std::int32_t i = 0;
    while (i < size) {
        const std::int32_t start = i;
        UChar32 c = 0;
        U8_NEXT(bytes, i, size, c);
        if (c < 0) {
            throw EncodingError("invalid UTF-8 at byte " + std::to_string(start));
        }
        visit(static_cast<std::size_t>(start), static_cast<char32_t>(c));
    }
}

}  // namespace

std::vector<std::size_t> boundaries(std::string_view text) {
    std::vector<std::size_t> offsets;
    offsets.reserve(text.size() + 1);
    for_each_code_point(text, [&](std::size_t at, char32_t) { offsets.push_back(at); });
    offsets.push_back(text.size());
    return offsets;
}

std::size_t length(std::string_view text) {
    std::size_t n = 0;
    for_each_code_point(text, [&](std::size_t, char32_t) { ++n; });
    return n;
}

bool is_letter(char32_t cp) noexcept {
    return u_isalpha(static_cast<UChar32>(cp)) != 0;
}

bool is_space(char32_t cp) noexcept {
    return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

std::size_t count_letters(std::string_view text) {
    std::size_t n = 0;
    for_each_code_point(text, [&](std::size_t, char32_t c) { n += is_letter(c) ? 1 : 0; });
    return n;
}

std::string fold_case(std::string_view text) {
    // Validate first; ICU silently substitutes U+FFFD.
    (void)length(text);
    auto s = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<std::int32_t>(text.size())));
    s.foldCase();
    std::string out;
    s.toUTF8String(out);
    return out;
}

std::u32string decode(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    for_each_code_point(text, [&](std::size_t, char32_t c) { out.push_back(c); });
    return out;
}

}  // namespace shinglesim::utf8
