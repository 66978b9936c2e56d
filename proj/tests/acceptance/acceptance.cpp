// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "shinglesim/shinglesim.hpp"
#include "shinglesim/utf8.hpp"
#include "support/synthetic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace shinglesim;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using testing::Rng;
using testing::below;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& what) {
    if (o.pass) o.detail = what;
    o.pass = false;
}

std::vector<std::string> random_split(Rng& rng, const std::string& text) {
    // Cuts only at code point starts.
    const auto cuts = utf8::boundaries(text);
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t i = 1; i + 1 < cuts.size(); ++i) {
        if (below(rng, 6) == 0) {
            lines.push_back(text.substr(start, cuts[i] - start));
            start = cuts[i];
        }
    }
    lines.push_back(text.substr(start));
    return lines;
}

// 1
Outcome oracle_equivalence() {
    Outcome o;
    Rng rng(101);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t alphabet = 2 + below(rng, 19);
        const auto a = testing::random_sequence(rng, alphabet, below(rng, 201));
        const auto b = testing::random_sequence(rng, alphabet, below(rng, 201));
        const auto matched = match_similarity(a, b);
        const auto oracle = multiplicity_oracle(a, b);
        std::map<std::string, std::size_t> count_a;
        std::map<std::string, std::size_t> count_b;
        for (const auto& s : a) ++count_a[s.value];
        for (const auto& s : b) ++count_b[s.value];
        std::size_t kc = 0;
        for (const auto& [v, c] : count_a) {
            if (auto it = count_b.find(v); it != count_b.end()) kc += std::min(c, it->second);
        }
        if (!(matched == oracle) || matched.kc != kc) {
            fail(o, "pair " + std::to_string(t) + " differs");
        }
    }
    o.detail = o.pass ? "1000 pairs, matcher == oracle, kc == sum of min counts" : o.detail;
    return o;
}

// 2
Outcome streaming_equivalence() {
    Outcome o;
    Rng rng(202);
    std::vector<EditedDocument> docs;
    const std::string alphabet = "abcdefgh ijkl éèà ";
    for (int d = 0; d < 200; ++d) {
        const auto text = testing::random_text(rng, alphabet, 50 + below(rng, 400));
        const auto lines = random_split(rng, text);
        for (std::size_t k : {1u, 3u, 7u}) {
            if (!(stream_shingle(lines, k) == shingle(text, k))) fail(o, "document " + std::to_string(d));
        }
        EditedDocument doc;
        doc.id = "doc" + std::to_string(1000 + d);
        doc.lines = lines;
        doc.row_count = lines.size();
        docs.push_back(std::move(doc));
    }
    const auto batch = pairwise_matrix(docs, Method::exact, {.k = 3});
    const auto stream = pairwise_matrix(docs, Method::exact_stream, {.k = 3});
    for (std::size_t i = 0; i < batch.size(); ++i) {
        if (batch[i].value != stream[i].value || batch[i].kc != stream[i].kc) fail(o, "matrix entry differs");
    }
    if (o.pass) o.detail = "200 documents x k in {1,3,7}; 19900-pair exact-stream matrix == exact matrix";
    return o;
}

// 3
bool metric_holds(const std::set<int>& a, const std::set<int>& b, const std::set<int>& c) {
    const double ab = jaccard_distance(a, b);
    const double ba = jaccard_distance(b, a);
    const double bc = jaccard_distance(b, c);
    const double ac = jaccard_distance(a, c);
    if (ab < 0.0) return false;
    if ((ab == 0.0) != (a == b)) return false;
    if (ab != ba) return false;
    return ac <= ab + bc + 1e-12;
}

std::set<int> from_mask(unsigned mask, int size) {
    std::set<int> s;
    for (int i = 0; i < size; ++i) {
        if (mask >> i & 1u) s.insert(i);
    }
    return s;
}

Outcome metric_axioms() {
    Outcome o;
    std::vector<std::set<int>> subsets;
    for (unsigned mask = 0; mask < 64; ++mask) subsets.push_back(from_mask(mask, 6));
    std::size_t triples = 0;
    for (const auto& a : subsets) {
        for (const auto& b : subsets) {
            for (const auto& c : subsets) {
                ++triples;
                if (!metric_holds(a, b, c)) fail(o, "axiom violated on |U| = 6");
            }
        }
    }
    Rng rng(303);
    for (int t = 0; t < 200000; ++t) {
        const auto a = from_mask(static_cast<unsigned>(below(rng, 4096)), 12);
        const auto b = from_mask(static_cast<unsigned>(below(rng, 4096)), 12);
        const auto c = from_mask(static_cast<unsigned>(below(rng, 4096)), 12);
        if (!metric_holds(a, b, c)) fail(o, "axiom violated on |U| = 12");
    }
    if (o.pass) o.detail = std::to_string(triples) + " exhaustive triples (|U|=6) + 200000 random (|U|=12)";
    return o;
}

// 4
Outcome baseline_correctness() {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    Outcome o;
    for (std::size_t n = 0; n <= 8; ++n) {
        std::vector<std::vector<unsigned>> by_size(n + 1);
        for (unsigned mask = 0; mask < (1u << n); ++mask) by_size[__builtin_popcount(mask)].push_back(mask);
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t m = 0; m <= n; ++m) {
                std::vector<std::uint64_t> counts(std::min(k, m) + 1, 0);
                for (auto x : by_size[k]) {
                    for (auto y : by_size[m]) ++counts[__builtin_popcount(x & y)];
                }
                const std::uint64_t pairs = by_size[k].size() * by_size[m].size();
                const auto exact = overlap_pmf_exact(n, k, m);
                for (std::size_t j = 0; j < counts.size(); ++j) {
                    if (cpp_int(exact[j].num) * pairs != cpp_int(counts[j]) * exact[j].den) {
                        fail(o, "pmf mismatch at n=" + std::to_string(n));
                    }
                }
            }
        }
    }

    const auto law = overlap_pmf_exact(4, 2, 2);
    cpp_rational expectation = 0;
    for (std::size_t j = 0; j < law.size(); ++j) {
        expectation += cpp_rational(law[j].num, law[j].den) * cpp_rational(j, 4 - j);
    }
    if (expectation != cpp_rational(7, 18)) fail(o, "rational E(4,2,2) != 7/18");
    if (std::abs(expected_similarity(4, 2, 2) - 7.0 / 18.0) > 1e-15) fail(o, "expected_similarity(4,2,2) != 7/18");

    Rng rng(404);
    double worst_mass = 0.0;
    for (std::size_t n : {31u, 100u, 1000u, 10000u, 50000u, 100000u, 200000u}) {
        for (int t = 0; t < 20; ++t) {
            const std::size_t k = below(rng, n + 1);
            const std::size_t m = below(rng, n + 1);
            worst_mass = std::max(worst_mass, std::abs(overlap_pmf(n, k, m).total() - 1.0));
        }
        worst_mass = std::max(worst_mass, std::abs(overlap_pmf(n, n / 2, n / 2).total() - 1.0));
    }
    if (worst_mass > 1e-12) fail(o, "pmf mass off by " + std::to_string(worst_mass));

    const auto mc = monte_carlo_expected_similarity(200, 100, 100, 20000, 4);
    const double analytic = expected_similarity(200, 100, 100);
    const double z = std::abs(mc.estimate - analytic) / mc.standard_error;
    if (z > 3.0) fail(o, "monte carlo off by " + std::to_string(z) + " standard errors");

    std::ostringstream ps;
    for (std::size_t big_n : {100u, 1000u, 100000u}) {
        const double p = expected_similarity(2 * big_n, big_n, big_n);
        ps << " N=" << big_n << ":" << p;
        if (p < 0.31 || p > 0.35) fail(o, "E(2N,N,N) outside [0.31,0.35] at N=" + std::to_string(big_n));
    }
    if (o.pass) {
        std::ostringstream d;
        d << "n<=8 exhaustive, 7/18, max |mass-1|=" << worst_mass << ", MC z=" << z << "," << ps.str();
        o.detail = d.str();
    }
    return o;
}

// 5
Outcome signature_conformance() {
    Outcome o;
    std::size_t instances = 0;
    for (Eigen::Index n = 2; n <= 5; ++n) {
        const unsigned cells = static_cast<unsigned>(2 * n);
        for (unsigned mask = 0; mask < (1u << cells); ++mask) {
            RepresentationMatrix matrix(n, 2);
            for (Eigen::Index i = 0; i < n; ++i) {
                matrix.set(i, 0, mask >> i & 1u);
                matrix.set(i, 1, mask >> (i + n) & 1u);
            }
            // Every coefficient pair for the modulus n.
            std::vector<HashFamily::Coefficients> all;
            for (std::uint64_t a = 1; a < static_cast<std::uint64_t>(n); ++a) {
                for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(n); ++b) all.push_back({a, b});
            }
            const HashFamily family(static_cast<std::uint64_t>(n), all);
            ++instances;
            if (!(signature_fill(matrix, family) == signature_min(matrix, family))) fail(o, "exhaustive mismatch");
        }
    }
    Rng rng(505);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        RepresentationMatrix matrix(64, 4);
        for (Eigen::Index i = 0; i < 64; ++i) {
            for (Eigen::Index j = 0; j < 4; ++j) matrix.set(i, j, below(rng, 3) == 0);
        }
        const auto family = HashFamily::sample(16, 64, seed);
        if (!(signature_fill(matrix, family) == signature_min(matrix, family))) fail(o, "random mismatch");
    }
    if (o.pass) {
        o.detail = std::to_string(instances) + " exhaustive matrices (n<=5, m=2, all hash coefficients) + 500 random";
    }
    return o;
}

// 6
Outcome minhash_quality() {
    Outcome o;
    Rng rng(606);
    constexpr std::uint64_t universe = 2003;  // prime: every multiplier gives a permutation
    constexpr std::size_t p = 512;
    int inside = 0;
    for (int t = 0; t < 50; ++t) {
        const double target = 0.1 + 0.8 * t / 49.0;
        const std::size_t union_size = 200 + below(rng, 400);
        const auto shared = static_cast<std::size_t>(std::lround(target * union_size));
        std::vector<int> elements(universe);
        for (std::size_t i = 0; i < universe; ++i) elements[i] = static_cast<int>(i);
        std::shuffle(elements.begin(), elements.end(), rng);
        std::set<int> a(elements.begin(), elements.begin() + static_cast<long>(shared));
        std::set<int> b = a;
        for (std::size_t i = shared; i < union_size; ++i) (i % 2 == 0 ? a : b).insert(elements[i]);
        const double j = set_jaccard(a, b);

        RepresentationMatrix matrix(static_cast<Eigen::Index>(universe), 2);
        for (int e : a) matrix.set(e, 0, true);
        for (int e : b) matrix.set(e, 1, true);
        const auto sig = signature_min(matrix, HashFamily::sample(p, universe, 9000 + t));
        const double estimate = signature_similarity(sig, 0, 1);
        if (std::abs(estimate - j) <= 3.0 * std::sqrt(j * (1.0 - j) / p)) ++inside;
    }
    o.pass = inside >= 48;  // 95% of 50, rounded up
    o.detail = std::to_string(inside) + "/50 pairs within 3 sigma (need 48)";
    return o;
}

// 7
Outcome rum_quality() {
    Outcome o;
    Rng rng(707);

    const auto base = testing::random_sequence(rng, 25, 800);
    std::vector<std::string> values;
    for (const auto& s : base) values.push_back(s.value);
    std::shuffle(values.begin(), values.end(), rng);
    const auto shuffled = testing::sequence_from_values(values, 2);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        if (rum_estimate(base, shuffled, 20, seed) != 1.0) fail(o, "identical multisets not 1.0");
    }

    // Value-disjoint pairs whose codes stay injective after reduction mod
    // n_a + n_b (the hash only sees the residue). Drawn by rejection, one per seed.
    auto injective = [](const testing::SequencePair& pair) {
        const std::uint64_t modulus = pair.a.size() + pair.b.size();
        std::set<std::string> values;
        for (const auto& s : pair.a) values.insert(s.value);
        for (const auto& s : pair.b) values.insert(s.value);
        std::set<std::uint64_t> residues;
        for (const auto& v : values) residues.insert(canonical_encode(v) % modulus);
        return residues.size() == values.size();
    };
    int low = 0;
    int draws = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        testing::SequencePair disjoint;
        do {
            disjoint = testing::value_set_pair(rng, 0, 40, 60);
            ++draws;
        } while (!injective(disjoint));
        low += rum_estimate(disjoint.a, disjoint.b, 20, seed) <= 0.2;
    }
    if (low < 990) fail(o, "disjoint: only " + std::to_string(low) + "/1000 seeds <= 0.2");

    // Informational: nearly all values distinct, so residues crowd [0, n).
    const auto sparse = testing::value_set_pair(rng, 0, 1500, 1);
    int sparse_low = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) sparse_low += rum_estimate(sparse.a, sparse.b, 20, seed) <= 0.2;

    const auto pair = testing::value_set_pair(rng, 200, 100, 40);
    const double j = distinct_value_jaccard(pair.a, pair.b);
    if (std::abs(j - 0.5) > 0.01) fail(o, "test input: distinct Jaccard " + std::to_string(j));
    const auto fine = rum_repeated(pair.a, pair.b, 20, 50, 77);
    const auto coarse = rum_repeated(pair.a, pair.b, 5, 50, 77);
    if (std::abs(fine.mean - j) > 0.10) fail(o, "mean " + std::to_string(fine.mean) + " vs J " + std::to_string(j));
    if (!(fine.std_dev < coarse.std_dev)) fail(o, "std(p=20) not below std(p=5)");
    if (o.pass) {
        std::ostringstream d;
        d << "identical=1.0, disjoint " << low << "/1000 <= 0.2 (" << draws
          << " draws for 1000 injective inputs; informational, all-distinct input: " << sparse_low << "/1000 <= 0.2), J=" << j << " mean(p=20)=" << fine.mean
          << " std(20)=" << fine.std_dev << " < std(5)=" << coarse.std_dev;
        o.detail = d.str();
    }
    return o;
}

// 8
Outcome gc_accuracy() {
    Outcome o;
    Rng rng(808);
    const auto pair = testing::multiset_pair(rng, 60000, 40000, 27);
    const double exact = multiplicity_oracle(pair.a, pair.b).similarity;
    if (std::abs(exact - 0.5) > 0.02) fail(o, "test input: exact similarity " + std::to_string(exact));
    const auto est = gc_estimate(pair.a, pair.b, {.ng = 10000, .reps = 10, .seed = 1});
    const double relative = std::abs(est.mean - exact) / exact;
    if (relative > 0.10) fail(o, "relative error " + std::to_string(relative));

    std::vector<double> rmse;
    for (std::size_t ng : {500u, 2000u, 8000u}) {
        double squared = 0.0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const double v = gc_estimate(pair.a, pair.b, {.ng = ng, .reps = 1, .seed = 100 + seed}).mean;
            squared += (v - exact) * (v - exact);
        }
        rmse.push_back(std::sqrt(squared / 50.0));
    }
    if (rmse[1] > rmse[0] || rmse[2] > rmse[1]) fail(o, "RMSE increases with ng");
    if (o.pass) {
        std::ostringstream d;
        d << "exact=" << exact << " gc mean=" << est.mean << " (rel " << relative << "), RMSE " << rmse[0] << " >= "
          << rmse[1] << " >= " << rmse[2];
        o.detail = d.str();
    }
    return o;
}

// 9
Outcome end_to_end() {
    Outcome o;
    const fs::path corpus = fs::path(SHINGLESIM_TEST_DATA) / "corpus";
    auto seconds_since = [](Clock::time_point t) {
        return std::chrono::duration<double>(Clock::now() - t).count();
    };

    auto t0 = Clock::now();
    const auto rum = pairwise_matrix(corpus, Method::rum, {.k = 3, .p = 20, .reps = 50, .seed = 2024});
    const double rum_s = seconds_since(t0);
    if (rum.size() != 6) fail(o, "rum: expected 6 pairs");
    for (const auto& r : rum) {
        if (!(r.baseline > 0.0 && r.baseline < 1.0)) fail(o, "rum: missing baseline");
        if (r.significant != (r.value > r.baseline)) fail(o, "rum: significance flag inconsistent");
    }
    if (rum_s >= 60.0) fail(o, "rum matrix took " + std::to_string(rum_s) + " s");

    t0 = Clock::now();
    const auto exact = pairwise_matrix(corpus, Method::exact, {.k = 3});
    const double exact_s = seconds_since(t0);
    if (exact.size() != 6) fail(o, "exact: expected 6 pairs");
    if (exact_s >= 30.0) fail(o, "exact matrix took " + std::to_string(exact_s) + " s");

    // Faithful quadratic matcher on the same pairs, for comparison only.
    const auto documents = load_corpus(corpus);
    std::vector<ShingleSequence> sequences;
    for (const auto& d : documents) sequences.push_back(shingle(d.joined(), 3));
    t0 = Clock::now();
    std::size_t pair_index = 0;
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        for (std::size_t j = i + 1; j < sequences.size(); ++j, ++pair_index) {
            const auto m = match_similarity(sequences[i], sequences[j]);
            if (m.kc != *exact[pair_index].kc) fail(o, "quadratic matcher disagrees with the matrix");
        }
    }
    const double quadratic_s = seconds_since(t0);

    std::printf("  %-8s %-8s %8s %8s %8s %8s %s\n", "doc_a", "doc_b", "exact", "rum", "rum_std", "baseline",
                "significant");
    for (std::size_t i = 0; i < rum.size(); ++i) {
        std::printf("  %-8s %-8s %8.4f %8.4f %8.4f %8.4f %s\n", rum[i].doc_a.c_str(), rum[i].doc_b.c_str(),
                    exact[i].value, rum[i].value, rum[i].std_dev, rum[i].baseline,
                    rum[i].significant ? "yes" : "no");
    }
    if (o.pass) {
        std::ostringstream d;
        d.precision(3);
        d << std::fixed << "rum " << rum_s << " s, exact (oracle) " << exact_s << " s, quadratic matcher "
          << quadratic_s << " s";
        o.detail = d.str();
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence", oracle_equivalence},   {"streaming equivalence", streaming_equivalence},
        {"metric axioms", metric_axioms},             {"baseline correctness", baseline_correctness},
        {"signature conformance", signature_conformance}, {"minhash quality", minhash_quality},
        {"rum endpoints and quality", rum_quality},   {"gc accuracy", gc_accuracy},
        {"end-to-end matrix", end_to_end},
    };
    const std::vector<double> budgets{10, 10, 30, 60, 30, 60, 120, 120, 1e9};

    // Optional arguments select criteria by number; default runs all.
    std::set<std::size_t> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::stoul(argv[i]));

    int failures = 0;
    std::size_t run = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!selected.empty() && !selected.contains(i + 1)) continue;
        ++run;
        const auto t0 = Clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        if (elapsed >= budgets[i]) {
            outcome.pass = false;
            outcome.detail += " [over time budget]";
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("%s criterion %zu (%s): %s [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str(), elapsed);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(run) - failures, run);
    return failures == 0 ? 0 : 1;
}
