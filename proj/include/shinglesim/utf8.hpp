#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace shinglesim::utf8 {

/// Byte offsets of every code point start in `text`, followed by text.size().
/// The result therefore has (code point count + 1) entries.
/// Throws EncodingError on malformed input.
std::vector<std::size_t> boundaries(std::string_view text);

std::size_t length(std::string_view text);

/// Unicode general category L*.
bool is_letter(char32_t cp) noexcept;
bool is_space(char32_t cp) noexcept;

std::size_t count_letters(std::string_view text);

/// Full Unicode case folding.
std::string fold_case(std::string_view text);

/// Decodes `text` into scalar values. Throws EncodingError on malformed input.
std::u32string decode(std::string_view text);

}  // namespace shinglesim::utf8
