#include "shinglesim/report.hpp"

#include "shinglesim/error.hpp"
#include "shinglesim/minhash.hpp"
#include "shinglesim/random_baseline.hpp"
#include "shinglesim/sampling.hpp"
#include "shinglesim/shingling.hpp"
#include "shinglesim/similarity_exact.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <thread>

namespace shinglesim {

namespace {

double round4(double x) {
    return std::round(x * 1e4) / 1e4;
}

std::string fixed4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

ShingleSequence shingles_for(const EditedDocument& doc, Method method, std::size_t k) {
    if (method == Method::exact_stream) return stream_shingle(doc.lines, k);
    return shingle(doc.joined(), k);
}

SimilarityReport compare(const std::string& id_a, const ShingleSequence& a, const std::string& id_b,
                         const ShingleSequence& b, Method method, const MethodParams& params) {
    SimilarityReport report;
    report.doc_a = id_a;
    report.doc_b = id_b;
    report.method = method;
    report.params = params;
    report.params.reps = params.effective_reps(method);

    const auto start = std::chrono::steady_clock::now();
    switch (method) {
        case Method::exact:
        case Method::exact_stream: {
            const auto r = multiplicity_oracle(a, b);
            report.value = r.similarity;
            report.kc = r.kc;
            break;
        }
        case Method::gc: {
            const auto r = gc_estimate(a, b, {params.ng, report.params.reps, params.seed});
            report.value = r.mean;
            report.std_dev = r.std_dev;
            break;
        }
        case Method::rum: {
            const auto r = rum_repeated(a, b, params.p, report.params.reps, params.seed, {params.coprime});
            report.value = r.mean;
            report.std_dev = r.std_dev;
            break;
        }
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.baseline = text_baseline(a.size(), b.size());
    report.significant = report.value > report.baseline;
    return report;
}

}  // namespace

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::exact: return "exact";
        case Method::exact_stream: return "exact-stream";
        case Method::gc: return "gc";
        case Method::rum: return "rum";
    }
    return "exact";
}

Method parse_method(std::string_view name) {
    if (name == "exact") return Method::exact;
    if (name == "stream" || name == "exact-stream") return Method::exact_stream;
    if (name == "gc") return Method::gc;
    if (name == "rum") return Method::rum;
    throw ParameterError("unknown method '" + std::string(name) + "'");
}

std::size_t MethodParams::effective_reps(Method method) const noexcept {
    switch (method) {
        case Method::gc: return reps == 0 ? 10 : reps;
        case Method::rum: return reps == 0 ? 50 : reps;
        default: return 1;
    }
}

std::size_t resolve_worker_count(std::size_t requested) {
    std::size_t workers = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("SHINGLE_SIM_WORKERS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(cap, &end, 10);
        if (end != cap && v > 0) workers = std::min<std::size_t>(workers, v);
    }
    return workers;
}

std::vector<SimilarityReport> pairwise_matrix(const std::vector<EditedDocument>& documents, Method method,
                                              const MethodParams& params, std::size_t workers) {
    if (documents.size() < 2) throw ParameterError("pairwise comparison needs at least two documents");
    if (params.k == 0) throw ParameterError("shingle length k must be at least 1");

    std::vector<std::size_t> order(documents.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return documents[x].id < documents[y].id; });

    std::vector<ShingleSequence> shingles(documents.size());
    for (std::size_t i = 0; i < documents.size(); ++i) shingles[i] = shingles_for(documents[order[i]], method, params.k);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) pairs.emplace_back(i, j);
    }

    std::vector<SimilarityReport> reports(pairs.size());
    std::atomic<std::size_t> next{0};
    const auto run = [&] {
        for (std::size_t t = next++; t < pairs.size(); t = next++) {
            const auto [i, j] = pairs[t];
            reports[t] = compare(documents[order[i]].id, shingles[i], documents[order[j]].id, shingles[j], method,
                                 params);
        }
    };

    const std::size_t threads = std::min(resolve_worker_count(workers), pairs.size());
    if (threads <= 1) {
        run();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(run);
    }
    return reports;
}

std::vector<SimilarityReport> pairwise_matrix(const std::filesystem::path& corpus_dir, Method method,
                                              const MethodParams& params, std::size_t workers,
                                              const IngestOptions& options) {
    return pairwise_matrix(load_corpus(corpus_dir, options), method, params, workers);
}

Format parse_format(std::string_view name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw ParameterError("unknown format '" + std::string(name) + "'");
}

void emit(const std::vector<SimilarityReport>& reports, Format format, std::ostream& out) {
    if (format == Format::csv) {
        out << kCsvHeader << '\n';
        for (const auto& r : reports) {
            out << csv_field(r.doc_a) << ',' << csv_field(r.doc_b) << ',' << to_string(r.method) << ','
                << r.params.k << ',' << fixed4(r.value) << ',' << fixed4(r.std_dev) << ','
                << (r.kc ? std::to_string(*r.kc) : std::string()) << ',' << fixed4(r.elapsed_ms) << ','
                << fixed4(r.baseline) << ',' << (r.significant ? "true" : "false") << '\n';
        }
        return;
    }

    auto array = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json o;
        o["doc_a"] = r.doc_a;
        o["doc_b"] = r.doc_b;
        o["method"] = to_string(r.method);
        o["params"] = {{"k", r.params.k},
                       {"ng", r.params.ng},
                       {"p", r.params.p},
                       {"reps", r.params.reps},
                       {"seed", r.params.seed}};
        o["value"] = round4(r.value);
        o["std_dev"] = round4(r.std_dev);
        o["kc"] = r.kc ? nlohmann::ordered_json(*r.kc) : nlohmann::ordered_json(nullptr);
        o["elapsed_ms"] = round4(r.elapsed_ms);
        o["baseline"] = round4(r.baseline);
        o["significant"] = r.significant;
        array.push_back(std::move(o));
    }
    out << array.dump(2) << '\n';
}

void emit(const std::vector<SimilarityReport>& reports, Format format, const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw OutputError(destination, "cannot open for writing");
    emit(reports, format, out);
    out.flush();
    if (!out) throw OutputError(destination, "write failure");
}

std::vector<SimilarityReport> parse_reports(std::istream& in, Format format) {
    std::vector<SimilarityReport> reports;
    if (format == Format::json) {
        const auto array = nlohmann::json::parse(in);
        for (const auto& o : array) {
            SimilarityReport r;
            r.doc_a = o.at("doc_a").get<std::string>();
            r.doc_b = o.at("doc_b").get<std::string>();
            r.method = parse_method(o.at("method").get<std::string>());
            const auto& p = o.at("params");
            r.params.k = p.at("k").get<std::size_t>();
            r.params.ng = p.at("ng").get<std::size_t>();
            r.params.p = p.at("p").get<std::size_t>();
            r.params.reps = p.at("reps").get<std::size_t>();
            r.params.seed = p.at("seed").get<std::uint64_t>();
            r.value = o.at("value").get<double>();
            r.std_dev = o.at("std_dev").get<double>();
            if (!o.at("kc").is_null()) r.kc = o.at("kc").get<std::size_t>();
            r.elapsed_ms = o.at("elapsed_ms").get<double>();
            r.baseline = o.at("baseline").get<double>();
            r.significant = o.at("significant").get<bool>();
            reports.push_back(std::move(r));
        }
        return reports;
    }

    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw ParameterError("missing CSV header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_row(line);
        if (f.size() != 10) throw ParameterError("CSV row must have 10 fields");
        SimilarityReport r;
        r.doc_a = f[0];
        r.doc_b = f[1];
        r.method = parse_method(f[2]);
        r.params.k = std::stoull(f[3]);
        r.value = std::stod(f[4]);
        r.std_dev = std::stod(f[5]);
        if (!f[6].empty()) r.kc = std::stoull(f[6]);
        r.elapsed_ms = std::stod(f[7]);
        r.baseline = std::stod(f[8]);
        r.significant = f[9] == "true";
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace shinglesim
