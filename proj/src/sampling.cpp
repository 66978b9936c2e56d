#include "shinglesim/sampling.hpp"

#include "shinglesim/error.hpp"
#include "shinglesim/seeding.hpp"
#include "shinglesim/similarity_exact.hpp"

#include <algorithm>
#include <iterator>
#include <random>

namespace shinglesim {

ShingleSequence subsample(const ShingleSequence& seq, std::size_t size, std::uint64_t seed) {
    if (size == 0) throw ParameterError("subsample size must be at least 1");
    if (size >= seq.size()) return seq;

    std::vector<Shingle> picked;
    picked.reserve(size);
    std::mt19937_64 rng(seed);
    // Selection sampling over a forward range keeps the original order.
    std::sample(seq.begin(), seq.end(), std::back_inserter(picked), size, rng);
    return ShingleSequence(seq.k(), std::move(picked));
}

RepeatedEstimate gc_estimate(const ShingleSequence& a, const ShingleSequence& b, const SubsampleSpec& spec) {
    if (a.k() != b.k()) throw ParameterError("shingle sequences built with different k");
    if (spec.ng == 0) throw ParameterError("subsample size ng must be at least 1");
    if (spec.reps == 0) throw ParameterError("repetition count must be at least 1");

    std::vector<double> values;
    values.reserve(spec.reps);
    for (std::size_t r = 0; r < spec.reps; ++r) {
        const auto sa = subsample(a, spec.ng, derive_seed(spec.seed, seed_tag::kSubsampleA, r));
        const auto sb = subsample(b, spec.ng, derive_seed(spec.seed, seed_tag::kSubsampleB, r));
        values.push_back(multiplicity_oracle(sa, sb).similarity);
    }
    return summarize(std::move(values));
}

}  // namespace shinglesim
