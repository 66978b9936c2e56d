// Command-line front end: corpus statistics, shingle dumps, pairwise
// similarity by every method, and the random-writing baseline.

#include "shinglesim/shinglesim.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace shinglesim;
using Json = nlohmann::ordered_json;

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

double round4(double x) { return std::round(x * 1e4) / 1e4; }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Json per_rep_json(const std::vector<double>& values) {
    auto a = Json::array();
    for (double v : values) a.push_back(round4(v));
    return a;
}

void warn_if_empty(const ShingleSequence& seq, const std::string& file) {
    if (seq.empty()) std::cerr << "warning: " << file << " yields no shingles; estimate is degenerate\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shingle-based text similarity: exact, subsampled and min-hash estimates"};
    app.require_subcommand(1);

    IngestOptions ingest;
    app.add_flag("--fold-case", ingest.fold_case, "Case-fold text before editing");

    // stats
    auto* stats = app.add_subcommand("stats", "Row and letter counts before/after editing, one JSON object per file");
    std::vector<std::string> stats_files;
    stats->add_option("files", stats_files, "Text files")->required()->check(CLI::ExistingFile);

    // shingle
    auto* shingle_cmd = app.add_subcommand("shingle", "Dump the positional k-shingles of an edited file");
    std::string shingle_file;
    std::size_t shingle_k = kDefaultShingleLength;
    shingle_cmd->add_option("file", shingle_file)->required()->check(CLI::ExistingFile);
    shingle_cmd->add_option("-k", shingle_k, "Shingle length")->check(CLI::PositiveNumber);

    // sim
    auto* sim = app.add_subcommand("sim", "Similarity of two files");
    sim->require_subcommand(1);
    std::string file_a, file_b;
    std::size_t k = kDefaultShingleLength;
    std::uint64_t seed = 0;

    auto* sim_exact = sim->add_subcommand("exact", "Exact multiset similarity");
    std::string engine = "oracle";
    sim_exact->add_option("file_a", file_a)->required()->check(CLI::ExistingFile);
    sim_exact->add_option("file_b", file_b)->required()->check(CLI::ExistingFile);
    sim_exact->add_option("-k", k, "Shingle length")->check(CLI::PositiveNumber);
    sim_exact->add_option("--engine", engine, "matcher (quadratic) or oracle (hash tables)")
        ->check(CLI::IsMember({"matcher", "oracle"}));

    auto* sim_rum = sim->add_subcommand("rum", "Min-hash estimate over the combined shingle collection");
    std::size_t hash_count = 20;
    std::size_t rum_reps = 50;
    sim_rum->add_option("file_a", file_a)->required()->check(CLI::ExistingFile);
    sim_rum->add_option("file_b", file_b)->required()->check(CLI::ExistingFile);
    sim_rum->add_option("-k", k, "Shingle length")->check(CLI::PositiveNumber);
    sim_rum->add_option("-p", hash_count, "Number of hash functions")->check(CLI::PositiveNumber);
    sim_rum->add_option("--reps", rum_reps, "Repetitions")->check(CLI::PositiveNumber);
    sim_rum->add_option("--seed", seed, "Generator seed");
    RumOptions rum_options;
    sim_rum->add_flag("--coprime", rum_options.coprime_multipliers, "Draw multipliers coprime with the modulus");

    auto* sim_gc = sim->add_subcommand("gc", "Exact similarity of random subsamples, averaged");
    std::size_t ng = 10000;
    std::size_t gc_reps = 10;
    sim_gc->add_option("file_a", file_a)->required()->check(CLI::ExistingFile);
    sim_gc->add_option("file_b", file_b)->required()->check(CLI::ExistingFile);
    sim_gc->add_option("-k", k, "Shingle length")->check(CLI::PositiveNumber);
    sim_gc->add_option("--ng", ng, "Subsample size per document")->check(CLI::PositiveNumber);
    sim_gc->add_option("--reps", gc_reps, "Repetitions")->check(CLI::PositiveNumber);
    sim_gc->add_option("--seed", seed, "Generator seed");

    // baseline
    auto* baseline = app.add_subcommand("baseline", "Expected similarity of two random subsets");
    std::size_t universe = 0, size_k = 0, size_m = 0, mc_trials = 0;
    baseline->add_option("-n", universe, "Universe size")->required();
    baseline->add_option("-k", size_k, "First subset size")->required();
    baseline->add_option("-m", size_m, "Second subset size")->required();
    baseline->add_option("--mc", mc_trials, "Monte Carlo trials (estimate instead of exact law)");
    baseline->add_option("--seed", seed, "Generator seed");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Pairwise similarity over a directory of text files");
    std::string corpus_dir, method_name = "exact", format_name = "json", output;
    MethodParams params;
    std::size_t workers = 0;
    matrix->add_option("dir", corpus_dir)->required()->check(CLI::ExistingDirectory);
    matrix->add_option("--method", method_name)->check(CLI::IsMember({"exact", "stream", "exact-stream", "gc", "rum"}));
    matrix->add_option("-k", params.k, "Shingle length")->check(CLI::PositiveNumber);
    matrix->add_option("--ng", params.ng, "gc subsample size")->check(CLI::PositiveNumber);
    matrix->add_option("-p", params.p, "rum hash count")->check(CLI::PositiveNumber);
    matrix->add_option("--reps", params.reps, "Repetitions (default 10 for gc, 50 for rum)");
    matrix->add_option("--seed", params.seed, "Generator seed");
    matrix->add_flag("--coprime", params.coprime, "rum: draw multipliers coprime with the modulus");
    matrix->add_option("--format", format_name)->check(CLI::IsMember({"json", "csv"}));
    matrix->add_option("-o", output, "Output file (default stdout)");
    matrix->add_option("--workers", workers, "Parallel pairs (capped by SHINGLE_SIM_WORKERS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*stats) {
            for (const auto& f : stats_files) {
                const auto doc = load_document(f, ingest);
                Json o;
                o["id"] = doc.id;
                o["rows"] = doc.row_count;
                o["letters_before"] = doc.letter_count_before;
                o["letters_after"] = doc.letter_count_after;
                std::cout << o.dump() << '\n';
            }
        } else if (*shingle_cmd) {
            const auto doc = load_document(shingle_file, ingest);
            for (const auto& s : shingle(doc.joined(), shingle_k)) std::cout << s.rank << '\t' << s.value << '\n';
        } else if (*sim) {
            const auto seq_a = shingle(load_document(file_a, ingest).joined(), k);
            const auto seq_b = shingle(load_document(file_b, ingest).joined(), k);
            Json o;
            const auto start = std::chrono::steady_clock::now();
            if (*sim_exact) {
                const auto r = engine == "matcher" ? match_similarity(seq_a, seq_b) : multiplicity_oracle(seq_a, seq_b);
                o["sim"] = round4(r.similarity);
                o["kc"] = r.kc;
                o["n_a"] = r.n_a;
                o["n_b"] = r.n_b;
            } else if (*sim_rum) {
                warn_if_empty(seq_a, file_a);
                warn_if_empty(seq_b, file_b);
                const auto r = rum_repeated(seq_a, seq_b, hash_count, rum_reps, seed, rum_options);
                o["mean"] = round4(r.mean);
                o["std"] = round4(r.std_dev);
                o["per_rep"] = per_rep_json(r.per_rep);
                o["distinct_jaccard"] = round4(distinct_value_jaccard(seq_a, seq_b));
            } else {
                const auto r = gc_estimate(seq_a, seq_b, {ng, gc_reps, seed});
                o["mean"] = round4(r.mean);
                o["std"] = round4(r.std_dev);
                o["per_rep"] = per_rep_json(r.per_rep);
            }
            o["elapsed_ms"] = round4(elapsed_ms(start));
            std::cout << o.dump() << '\n';
        } else if (*baseline) {
            const auto law = overlap_pmf(universe, size_k, size_m);
            Json o;
            if (mc_trials > 0) {
                const auto mc = monte_carlo_expected_similarity(universe, size_k, size_m, mc_trials, seed);
                o["expected_sim"] = mc.estimate;
                o["method"] = "monte-carlo";
                o["standard_error"] = mc.standard_error;
                o["trials"] = mc.trials;
            } else {
                o["expected_sim"] = expected_similarity(law);
                o["method"] = universe <= kExactBaselineLimit ? "exact-rational" : "log-gamma";
            }
            auto head = Json::array();
            std::size_t first = law.support_min();
            while (first < law.support_max() && law.pmf[first] == 0.0) ++first;
            for (std::size_t j = first; j <= law.support_max() && head.size() < 10; ++j) {
                head.push_back({{"j", j}, {"p", law.pmf[j]}});
            }
            o["pmf_head"] = std::move(head);
            std::cout << o.dump() << '\n';
        } else if (*matrix) {
            const auto reports = pairwise_matrix(corpus_dir, parse_method(method_name), params, workers, ingest);
            const auto format = parse_format(format_name);
            if (output.empty()) {
                emit(reports, format, std::cout);
            } else {
                emit(reports, format, std::filesystem::path(output));
            }
        }
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IngestError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const OutputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const EncodingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}
