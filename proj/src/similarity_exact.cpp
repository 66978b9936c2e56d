#include "shinglesim/similarity_exact.hpp"

#include "shinglesim/error.hpp"

#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace shinglesim {

namespace {

void require_same_k(const ShingleSequence& a, const ShingleSequence& b) {
    if (a.k() != b.k()) {
        throw ParameterError("shingle sequences built with different k (" + std::to_string(a.k()) +
                             " vs " + std::to_string(b.k()) + ")");
    }
}

}  // namespace

MatchResult make_match_result(std::size_t kc, std::size_t n_a, std::size_t n_b) {
    MatchResult r{kc, n_a, n_b, 1.0};
    if (n_a + n_b > 0) {
        r.similarity = static_cast<double>(kc) / static_cast<double>(n_a + n_b - kc);
    }
    return r;
}

MatchResult match_similarity(const ShingleSequence& a, const ShingleSequence& b) {
    require_same_k(a, b);
    // test_a is implicit: each husband is visited once and leaves married or not.
    std::vector<char> married_b(b.size(), 0);
    std::size_t kc = 0;
    for (const auto& husband : a) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (married_b[j]) continue;
            if (husband.value == b[j].value) {
                married_b[j] = 1;
                ++kc;
                break;
            }
        }
    }
    return make_match_result(kc, a.size(), b.size());
}

MatchResult multiplicity_oracle(const ShingleSequence& a, const ShingleSequence& b) {
    require_same_k(a, b);
    std::unordered_map<std::string_view, std::size_t> count_a;
    count_a.reserve(a.size());
    for (const auto& s : a) ++count_a[s.value];
    std::unordered_map<std::string_view, std::size_t> count_b;
    count_b.reserve(b.size());
    for (const auto& s : b) ++count_b[s.value];

    std::size_t kc = 0;
    for (const auto& [value, na] : count_a) {
        if (auto it = count_b.find(value); it != count_b.end()) kc += std::min(na, it->second);
    }
    return make_match_result(kc, a.size(), b.size());
}

double distinct_value_jaccard(const ShingleSequence& a, const ShingleSequence& b) {
    require_same_k(a, b);
    std::unordered_set<std::string_view> values_a;
    for (const auto& s : a) values_a.insert(s.value);
    std::unordered_set<std::string_view> values_b;
    for (const auto& s : b) values_b.insert(s.value);

    std::size_t common = 0;
    for (const auto& v : values_a) common += values_b.count(v);
    const std::size_t united = values_a.size() + values_b.size() - common;
    return united == 0 ? 1.0 : static_cast<double>(common) / static_cast<double>(united);
}

}  // namespace shinglesim
