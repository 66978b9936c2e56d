#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace shinglesim {

/// A document after the editing pass. `lines` holds the edited rows in source
/// order; the letter counts refer to Unicode letters only (spaces, digits and
/// punctuation are not counted).
struct EditedDocument {
    std::string id;
    std::vector<std::string> lines;
    std::size_t letter_count_before = 0;
    std::size_t letter_count_after = 0;
    std::size_t row_count = 0;

    /// Edited lines concatenated without separator; this is the text that gets shingled.
    std::string joined() const;
};

struct CorpusStats {
    std::size_t row_count = 0;
    std::size_t letter_count_before = 0;
    std::size_t letter_count_after = 0;

    friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

struct IngestOptions {
    bool fold_case = false;
};

/// Splits on '\n'. A trailing newline terminates the last row rather than
/// opening a new one, so "" has zero rows and "a\n" has one.
std::vector<std::string_view> split_lines(std::string_view text);

/// Drops every whitespace-delimited token with fewer than three letters and
/// rejoins the survivors with single spaces.
std::string edit_line(std::string_view line);

/// edit_line applied row by row; row boundaries (and a final newline) are kept.
std::string edit_text(std::string_view raw);

EditedDocument edit_document(std::string id, std::string_view raw, const IngestOptions& options = {});

/// Reads and edits a UTF-8 file. The id is the file stem.
/// Throws IngestError naming the path on I/O or encoding failure.
EditedDocument load_document(const std::filesystem::path& path, const IngestOptions& options = {});

/// Every regular file in `dir`, sorted by file name.
std::vector<EditedDocument> load_corpus(const std::filesystem::path& dir, const IngestOptions& options = {});

CorpusStats corpus_stats(const EditedDocument& document);
CorpusStats corpus_stats(const std::filesystem::path& path, const IngestOptions& options = {});

}  // namespace shinglesim
