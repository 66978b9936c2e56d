#pragma once

#include "shinglesim/shingling.hpp"

#include <algorithm>
#include <cstddef>
#include <iterator>

namespace shinglesim {

/// Outcome of comparing two shingle sequences: kc matched shingles out of
/// n_a and n_b, similarity = kc / (n_a + n_b - kc). Two empty sequences are
/// identical documents and score 1.
struct MatchResult {
    std::size_t kc = 0;
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    double similarity = 1.0;

    friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

MatchResult make_match_result(std::size_t kc, std::size_t n_a, std::size_t n_b);

/// Monogamous matching: every shingle of `a` marries at most one unmarried
/// shingle of `b` with the same value, scanning `b` in rank order. Quadratic;
/// kept as the reference algorithm. Throws ParameterError if k differs.
MatchResult match_similarity(const ShingleSequence& a, const ShingleSequence& b);

/// Same result as match_similarity through per-value multiplicity tables:
/// kc = sum over values of min(count_a, count_b). Linear expected time.
MatchResult multiplicity_oracle(const ShingleSequence& a, const ShingleSequence& b);

/// Jaccard index of the distinct shingle values of a and b.
double distinct_value_jaccard(const ShingleSequence& a, const ShingleSequence& b);

/// |a ∩ b| / |a ∪ b| for sorted, duplicate-free ranges (std::set and friends).
/// Two empty sets score 1.
template <class SortedSet>
double set_jaccard(const SortedSet& a, const SortedSet& b) {
    std::size_t common = 0;
    auto ia = std::begin(a);
    auto ib = std::begin(b);
    while (ia != std::end(a) && ib != std::end(b)) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++common;
            ++ia;
            ++ib;
        }
    }
    const auto size_a = static_cast<std::size_t>(std::distance(std::begin(a), std::end(a)));
    const auto size_b = static_cast<std::size_t>(std::distance(std::begin(b), std::end(b)));
    const std::size_t united = size_a + size_b - common;
    return united == 0 ? 1.0 : static_cast<double>(common) / static_cast<double>(united);
}

/// 1 - set_jaccard; a metric on finite sets.
template <class SortedSet>
double jaccard_distance(const SortedSet& a, const SortedSet& b) {
    return 1.0 - set_jaccard(a, b);
}

}  // namespace shinglesim
