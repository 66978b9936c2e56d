#include "shinglesim/random_baseline.hpp"

#include "shinglesim/error.hpp"
#include "shinglesim/seeding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace shinglesim {

namespace {

void require_sizes(std::size_t n, std::size_t k, std::size_t m) {
    if (k > n || m > n) {
        throw ParameterError("subset sizes must not exceed the universe (n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
    }
}

long double log_binomial(std::size_t n, std::size_t r) {
    return std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(r) + 1) -
           std::lgamma(static_cast<long double>(n - r) + 1);
}

double similarity_at(std::size_t j, std::size_t k, std::size_t m) {
    return static_cast<double>(j) / static_cast<double>(k + m - j);
}

}  // namespace

double OverlapDistribution::total() const noexcept {
    return std::accumulate(pmf.begin(), pmf.end(), 0.0);
}

std::vector<Rational> overlap_pmf_exact(std::size_t n, std::size_t k, std::size_t m) {
    require_sizes(n, k, m);
    if (n > kExactBaselineMax) {
        throw ParameterError("exact overlap law limited to n <= " + std::to_string(kExactBaselineMax));
    }
    // Pascal's triangle; C(66, 33) < 2^63.
    std::vector<std::vector<std::uint64_t>> binom(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i].assign(i + 1, 1);
        for (std::size_t r = 1; r < i; ++r) binom[i][r] = binom[i - 1][r - 1] + binom[i - 1][r];
    }
    const auto choose = [&](std::size_t a, std::size_t b) -> std::uint64_t { return b > a ? 0 : binom[a][b]; };

    const std::uint64_t den = choose(n, m);
    std::vector<Rational> pmf(std::min(k, m) + 1);
    for (std::size_t j = 0; j < pmf.size(); ++j) {
        // Vandermonde bounds the product by C(n, m), so it cannot overflow.
        const std::uint64_t num = m - j <= n - k ? choose(k, j) * choose(n - k, m - j) : 0;
        const std::uint64_t g = std::gcd(num, den);
        pmf[j] = num == 0 ? Rational{0, 1} : Rational{num / g, den / g};
    }
    return pmf;
}

OverlapDistribution overlap_pmf_log_space(std::size_t n, std::size_t k, std::size_t m) {
    require_sizes(n, k, m);
    OverlapDistribution law{n, k, m, std::vector<double>(std::min(k, m) + 1, 0.0)};
    const std::size_t lo = law.support_min();
    const std::size_t hi = law.support_max();

    const auto mode_estimate = static_cast<std::size_t>(
        (static_cast<long double>(k) + 1) * (static_cast<long double>(m) + 1) / (static_cast<long double>(n) + 2));
    const std::size_t mode = std::clamp(mode_estimate, lo, hi);

    std::vector<long double> w(law.pmf.size(), 0.0L);
    w[mode] = std::exp(log_binomial(k, mode) + log_binomial(n - k, m - mode) - log_binomial(n, m));
    for (std::size_t j = mode; j < hi; ++j) {
        const long double up = static_cast<long double>(k - j) * static_cast<long double>(m - j);
        const long double down = static_cast<long double>(j + 1) * static_cast<long double>(n + j + 1 - k - m);
        w[j + 1] = w[j] * up / down;
    }
    for (std::size_t j = mode; j > lo; --j) {
        const long double up = static_cast<long double>(j) * static_cast<long double>(n + j - k - m);
        const long double down = static_cast<long double>(k - j + 1) * static_cast<long double>(m - j + 1);
        w[j - 1] = w[j] * up / down;
    }

    // Every weight carries the same anchor rounding error; dividing by the
    // total removes it.
    const long double mass = std::accumulate(w.begin(), w.end(), 0.0L);
    for (std::size_t j = lo; j <= hi; ++j) law.pmf[j] = static_cast<double>(w[j] / mass);
    return law;
}

OverlapDistribution overlap_pmf(std::size_t n, std::size_t k, std::size_t m) {
    require_sizes(n, k, m);
    if (n > kExactBaselineLimit) return overlap_pmf_log_space(n, k, m);

    OverlapDistribution law{n, k, m, {}};
    for (const auto& r : overlap_pmf_exact(n, k, m)) law.pmf.push_back(r.value());
    return law;
}

double expected_similarity(const OverlapDistribution& law) {
    if (law.k == 0 && law.m == 0) return 1.0;
    double e = 0.0;
    for (std::size_t j = 0; j < law.pmf.size(); ++j) e += similarity_at(j, law.k, law.m) * law.pmf[j];
    return e;
}

double expected_similarity(std::size_t n, std::size_t k, std::size_t m) {
    return expected_similarity(overlap_pmf(n, k, m));
}

double text_baseline(std::size_t n_a, std::size_t n_b) {
    return expected_similarity(n_a + n_b, n_a, n_b);
}

MonteCarloEstimate monte_carlo_expected_similarity(std::size_t n, std::size_t k, std::size_t m,
                                                   std::size_t trials, std::uint64_t seed) {
    require_sizes(n, k, m);
    if (trials == 0) throw ParameterError("trials must be at least 1");

    std::mt19937_64 rng(derive_seed(seed, seed_tag::kMonteCarlo, 0));
    // Stamps avoid clearing the membership arrays between trials.
    std::vector<std::size_t> in_x(n, 0);
    std::vector<std::size_t> in_y(n, 0);

    // Floyd's algorithm: a uniform `size`-subset in O(size) draws.
    const auto draw = [&](std::size_t size, std::vector<std::size_t>& stamp, std::size_t trial, auto&& on_pick) {
        for (std::size_t top = n - size; top < n; ++top) {
            std::uniform_int_distribution<std::size_t> pick(0, top);
            std::size_t t = pick(rng);
            if (stamp[t] == trial) t = top;
            stamp[t] = trial;
            on_pick(t);
        }
    };

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t trial = 1; trial <= trials; ++trial) {
        draw(k, in_x, trial, [](std::size_t) {});
        std::size_t overlap = 0;
        draw(m, in_y, trial, [&](std::size_t t) { overlap += in_x[t] == trial ? 1 : 0; });
        const double s = (k == 0 && m == 0) ? 1.0 : similarity_at(overlap, k, m);
        sum += s;
        sum_sq += s * s;
    }

    MonteCarloEstimate est;
    est.trials = trials;
    est.estimate = sum / static_cast<double>(trials);
    if (trials > 1) {
        const double var = std::max(0.0, (sum_sq - sum * est.estimate) / static_cast<double>(trials - 1));
        est.standard_error = std::sqrt(var / static_cast<double>(trials));
    }
    return est;
}

}  // namespace shinglesim
