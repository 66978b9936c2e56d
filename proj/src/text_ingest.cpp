#include "shinglesim/text_ingest.hpp"

#include "shinglesim/error.hpp"
#include "shinglesim/utf8.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

namespace shinglesim {

std::string EditedDocument::joined() const {
    std::size_t total = 0;
    for (const auto& line : lines) total += line.size();
    std::string out;
    out.reserve(total);
    for (const auto& line : lines) out += line;
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> rows;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            rows.push_back(text.substr(start));
            break;
        }
        rows.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return rows;
}

std::string edit_line(std::string_view line) {
    const auto cps = utf8::decode(line);
    const auto bounds = utf8::boundaries(line);

    std::string out;
    std::size_t i = 0;
    while (i < cps.size()) {
        while (i < cps.size() && utf8::is_space(cps[i])) ++i;
        const std::size_t begin = i;
        std::size_t letters = 0;
        while (i < cps.size() && !utf8::is_space(cps[i])) {
            letters += utf8::is_letter(cps[i]) ? 1 : 0;
            ++i;
        }
        if (i > begin && letters >= 3) {
            if (!out.empty()) out += ' ';
            out.append(line.substr(bounds[begin], bounds[i] - bounds[begin]));
        }
    }
    return out;
}

std::string edit_text(std::string_view raw) {
    std::string out;
    const auto rows = split_lines(raw);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) out += '\n';
        out += edit_line(rows[r]);
    }
    if (!raw.empty() && raw.back() == '\n') out += '\n';
    return out;
}

EditedDocument edit_document(std::string id, std::string_view raw, const IngestOptions& options) {
    std::string folded;
    if (options.fold_case) {
        folded = utf8::fold_case(raw);
        raw = folded;
    }
    EditedDocument doc;
    doc.id = std::move(id);
    const auto rows = split_lines(raw);
    doc.row_count = rows.size();
    doc.lines.reserve(rows.size());
    for (const auto row : rows) {
        doc.letter_count_before += utf8::count_letters(row);
        doc.lines.push_back(edit_line(row));
        doc.letter_count_after += utf8::count_letters(doc.lines.back());
    }
    return doc;
}

EditedDocument load_document(const std::filesystem::path& path, const IngestOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError(path, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IngestError(path, "read failure");
    try {
        return edit_document(path.stem().string(), buffer.str(), options);
    } catch (const EncodingError& e) {
        throw IngestError(path, e.what());
    }
}

std::vector<EditedDocument> load_corpus(const std::filesystem::path& dir, const IngestOptions& options) {
    std::error_code ec;
    std::filesystem::directory_iterator it(dir, ec);
    if (ec) throw IngestError(dir, ec.message());

    std::vector<std::filesystem::path> files;
    for (const auto& entry : it) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

    std::vector<EditedDocument> docs;
    docs.reserve(files.size());
    for (const auto& f : files) docs.push_back(load_document(f, options));
    return docs;
}

CorpusStats corpus_stats(const EditedDocument& document) {
    return {document.row_count, document.letter_count_before, document.letter_count_after};
}

CorpusStats corpus_stats(const std::filesystem::path& path, const IngestOptions& options) {
    return corpus_stats(load_document(path, options));
}

}  // namespace shinglesim
