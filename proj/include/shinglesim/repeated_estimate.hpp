#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace shinglesim {

/// Mean and sample standard deviation over repeated randomized estimates.
/// With a single repetition the deviation is undefined; it is reported as 0
/// and `std_defined` is false.
struct RepeatedEstimate {
    double mean = 0.0;
    double std_dev = 0.0;
    bool std_defined = false;
    std::vector<double> per_rep;
};

inline RepeatedEstimate summarize(std::vector<double> values) {
    RepeatedEstimate r;
    r.per_rep = std::move(values);
    const auto n = r.per_rep.size();
    if (n == 0) return r;
    r.mean = std::accumulate(r.per_rep.begin(), r.per_rep.end(), 0.0) / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : r.per_rep) ss += (v - r.mean) * (v - r.mean);
        r.std_dev = std::sqrt(ss / static_cast<double>(n - 1));
        r.std_defined = true;
    }
    return r;
}

}  // namespace shinglesim
