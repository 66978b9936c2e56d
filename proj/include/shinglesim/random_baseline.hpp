#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace shinglesim {

/// Non-negative fraction in lowest terms.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Law of |X ∩ Y| for X, Y drawn independently and uniformly among the
/// subsets of sizes k and m of an n-element universe (hypergeometric).
/// pmf[j] for j = 0..min(k, m).
struct OverlapDistribution {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::vector<double> pmf;

    std::size_t support_min() const noexcept { return k + m > n ? k + m - n : 0; }
    std::size_t support_max() const noexcept { return k < m ? k : m; }
    double total() const noexcept;
};

/// Universes up to this size are evaluated with exact integer arithmetic.
inline constexpr std::size_t kExactBaselineLimit = 30;
/// Largest n for which overlap_pmf_exact fits 64-bit binomials.
inline constexpr std::size_t kExactBaselineMax = 66;

/// C(k,j) C(n-k,m-j) / C(n,m) as reduced fractions. Requires n <= kExactBaselineMax.
std::vector<Rational> overlap_pmf_exact(std::size_t n, std::size_t k, std::size_t m);

/// Log-gamma anchored at the mode, ratio recurrence outward. Entries far in
/// the tails underflow to 0 for large n.
OverlapDistribution overlap_pmf_log_space(std::size_t n, std::size_t k, std::size_t m);

/// Exact path for n <= kExactBaselineLimit, log-space path above.
/// Throws ParameterError if k > n or m > n.
OverlapDistribution overlap_pmf(std::size_t n, std::size_t k, std::size_t m);

/// E[j / (k + m - j)] under `law`; 1 when k = m = 0.
double expected_similarity(const OverlapDistribution& law);
double expected_similarity(std::size_t n, std::size_t k, std::size_t m);

/// Random-writing similarity floor for two texts with n_a and n_b shingles:
/// universe n_a + n_b, subset sizes n_a and n_b.
double text_baseline(std::size_t n_a, std::size_t n_b);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::size_t trials = 0;
};

/// Simulates `trials` independent subset pairs; deterministic in `seed`.
MonteCarloEstimate monte_carlo_expected_similarity(std::size_t n, std::size_t k, std::size_t m,
                                                   std::size_t trials, std::uint64_t seed);

}  // namespace shinglesim
