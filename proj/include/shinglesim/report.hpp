#pragma once

#include "shinglesim/text_ingest.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shinglesim {

enum class Method { exact, exact_stream, gc, rum };

std::string_view to_string(Method method) noexcept;
/// Accepts exact, stream, exact-stream, gc, rum. Throws ParameterError otherwise.
Method parse_method(std::string_view name);

struct MethodParams {
    std::size_t k = 3;
    std::size_t ng = 10000;
    std::size_t p = 20;
    /// 0 selects the method default: 10 for gc, 50 for rum.
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    bool coprime = false;

    std::size_t effective_reps(Method method) const noexcept;
};

/// One document pair under one method. `significant` is the bare comparison
/// value > baseline; no test statistic is implied.
struct SimilarityReport {
    std::string doc_a;
    std::string doc_b;
    Method method = Method::exact;
    MethodParams params;
    double value = 0.0;
    double std_dev = 0.0;
    std::optional<std::size_t> kc;
    double elapsed_ms = 0.0;
    double baseline = 0.0;
    bool significant = false;
};

/// Worker count for pairwise_matrix: `requested` (0 = hardware concurrency),
/// capped by the SHINGLE_SIM_WORKERS environment variable when set.
std::size_t resolve_worker_count(std::size_t requested = 0);

/// Similarity of every unordered pair of `documents` (ids compared
/// lexicographically, doc_a < doc_b), sorted by (doc_a, doc_b). Throws
/// ParameterError for fewer than two documents.
std::vector<SimilarityReport> pairwise_matrix(const std::vector<EditedDocument>& documents, Method method,
                                              const MethodParams& params, std::size_t workers = 0);

/// Loads every file of `corpus_dir` and forwards to the overload above.
std::vector<SimilarityReport> pairwise_matrix(const std::filesystem::path& corpus_dir, Method method,
                                              const MethodParams& params, std::size_t workers = 0,
                                              const IngestOptions& options = {});

enum class Format { json, csv };

Format parse_format(std::string_view name);

inline constexpr std::string_view kCsvHeader = "doc_a,doc_b,method,k,value,std_dev,kc,elapsed_ms,baseline,significant";

/// JSON: array of report objects. CSV: kCsvHeader then one row per report.
/// Real numbers carry 4 decimals.
void emit(const std::vector<SimilarityReport>& reports, Format format, std::ostream& out);
/// Throws OutputError if `destination` cannot be written.
void emit(const std::vector<SimilarityReport>& reports, Format format, const std::filesystem::path& destination);

std::vector<SimilarityReport> parse_reports(std::istream& in, Format format);

}  // namespace shinglesim
