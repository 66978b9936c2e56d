#pragma once

#include "shinglesim/repeated_estimate.hpp"
#include "shinglesim/shingling.hpp"

#include <cstddef>
#include <cstdint>

namespace shinglesim {

struct SubsampleSpec {
    std::size_t ng = 10000;
    std::size_t reps = 10;
    std::uint64_t seed = 0;
};

/// Uniform selection of min(size, |seq|) entries without replacement. Ranks
/// and relative order are kept. Throws ParameterError when size == 0.
ShingleSequence subsample(const ShingleSequence& seq, std::size_t size, std::uint64_t seed);

/// Exact multiset similarity of independent subsamples of a and b, repeated
/// spec.reps times. Subsamples of a and b use different derived seeds.
RepeatedEstimate gc_estimate(const ShingleSequence& a, const ShingleSequence& b, const SubsampleSpec& spec);

}  // namespace shinglesim
