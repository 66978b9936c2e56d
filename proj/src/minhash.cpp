#include "shinglesim/minhash.hpp"

#include "shinglesim/error.hpp"
#include "shinglesim/seeding.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <string>

namespace shinglesim {

namespace {

using SignatureColumn = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, 1>;

void require_compatible(const RepresentationMatrix& matrix, const HashFamily& family) {
    if (static_cast<std::uint64_t>(matrix.n()) != family.n()) {
        throw ParameterError("hash modulus " + std::to_string(family.n()) + " does not match " +
                             std::to_string(matrix.n()) + " matrix rows");
    }
}

std::vector<std::uint64_t> distinct_codes(const ShingleSequence& seq) {
    std::vector<std::uint64_t> codes;
    codes.reserve(seq.size());
    for (const auto& s : seq) codes.push_back(canonical_encode(s.value));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

// Duplicated values hash identically, so only distinct codes can move a minimum.
SignatureColumn min_signature(std::span<const std::uint64_t> codes, const HashFamily& family) {
    SignatureColumn col = SignatureColumn::Constant(static_cast<Eigen::Index>(family.p()), SignatureMatrix::kSentinel);
    for (const auto x : codes) {
        for (std::size_t r = 0; r < family.p(); ++r) {
            col(static_cast<Eigen::Index>(r)) = std::min(col(static_cast<Eigen::Index>(r)), family(r, x));
        }
    }
    return col;
}

double rum_from_codes(std::span<const std::uint64_t> codes_a, std::span<const std::uint64_t> codes_b,
                      std::uint64_t modulus, std::size_t p, std::uint64_t seed, const RumOptions& options) {
    const auto family = HashFamily::sample(p, modulus, seed, options.coprime_multipliers);
    const SignatureColumn col_a = min_signature(codes_a, family);
    const SignatureColumn col_b = min_signature(codes_b, family);
    assert((col_a.array() != SignatureMatrix::kSentinel).all());
    return static_cast<double>((col_a.array() == col_b.array()).count()) / static_cast<double>(p);
}

}  // namespace

RepresentationMatrix::RepresentationMatrix(Cells cells) : cells_(std::move(cells)) {
    if ((cells_.array() > 1).any()) throw ParameterError("representation cells must be 0 or 1");
}

std::vector<Eigen::Index> RepresentationMatrix::support(Eigen::Index col) const {
    if (col < 0 || col >= m()) throw ParameterError("column index out of range");
    std::vector<Eigen::Index> rows;
    for (Eigen::Index i = 0; i < n(); ++i) {
        if (cells_(i, col) != 0) rows.push_back(i);
    }
    return rows;
}

HashFamily HashFamily::sample(std::size_t p, std::uint64_t n, std::uint64_t seed, bool coprime_multipliers) {
    if (p == 0) throw ParameterError("hash family needs at least one function");
    if (n < 2) throw ParameterError("hash modulus must be at least 2");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick_a(1, n - 1);
    std::uniform_int_distribution<std::uint64_t> pick_b(0, n - 1);
    std::vector<Coefficients> coefficients;
    coefficients.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
        std::uint64_t a = pick_a(rng);
        while (coprime_multipliers && std::gcd(a, n) != 1) a = pick_a(rng);
        coefficients.push_back({a, pick_b(rng)});
    }
    return HashFamily(n, std::move(coefficients), seed);
}

HashFamily::HashFamily(std::uint64_t n, std::vector<Coefficients> coefficients, std::uint64_t seed)
    : n_(n), coefficients_(std::move(coefficients)), seed_(seed) {
    if (n_ < 2) throw ParameterError("hash modulus must be at least 2");
    if (coefficients_.empty()) throw ParameterError("hash family needs at least one function");
    for (const auto& c : coefficients_) {
        if (c.a < 1 || c.a > n_ - 1 || c.b > n_ - 1) {
            throw ParameterError("hash coefficients out of range for modulus " + std::to_string(n_));
        }
    }
}

std::uint64_t HashFamily::eval(std::size_t i, std::uint64_t x) const {
    if (i >= p()) throw ParameterError("hash function index " + std::to_string(i) + " out of range");
    return (*this)(i, x);
}

SignatureMatrix signature_fill(const RepresentationMatrix& matrix, const HashFamily& family) {
    require_compatible(matrix, family);
    const auto p = static_cast<Eigen::Index>(family.p());
    SignatureMatrix sig(p, matrix.m());
    std::vector<std::uint64_t> h(family.p());
    for (Eigen::Index j = 0; j < matrix.m(); ++j) {
        for (Eigen::Index i = 0; i < matrix.n(); ++i) {
            const auto element = static_cast<std::uint64_t>(i + 1);
            for (std::size_t r = 0; r < family.p(); ++r) h[r] = family(r, element);
            if (!matrix.contains(i, j)) continue;
            for (Eigen::Index r = 0; r < p; ++r) {
                auto& c = sig.entries()(r, j);
                if (h[static_cast<std::size_t>(r)] < c) c = h[static_cast<std::size_t>(r)];
            }
        }
    }
    return sig;
}

SignatureMatrix signature_min(const RepresentationMatrix& matrix, const HashFamily& family) {
    require_compatible(matrix, family);
    const auto p = static_cast<Eigen::Index>(family.p());

    // Row i of `hashes` is (h_1(i+1), ..., h_p(i+1)).
    SignatureMatrix::Entries hashes(matrix.n(), p);
    for (Eigen::Index i = 0; i < matrix.n(); ++i) {
        for (Eigen::Index r = 0; r < p; ++r) {
            hashes(i, r) = family(static_cast<std::size_t>(r), static_cast<std::uint64_t>(i + 1));
        }
    }

    SignatureMatrix sig(p, matrix.m());
    for (Eigen::Index j = 0; j < matrix.m(); ++j) {
        for (const auto i : matrix.support(j)) {
            sig.entries().col(j) = sig.entries().col(j).cwiseMin(hashes.row(i).transpose());
        }
    }
    return sig;
}

double signature_similarity(const SignatureMatrix& sig, Eigen::Index j1, Eigen::Index j2) {
    if (sig.p() < 1) throw ParameterError("signature has no rows");
    if (j1 < 0 || j2 < 0 || j1 >= sig.m() || j2 >= sig.m()) throw ParameterError("signature column out of range");
    const auto agree = (sig.entries().col(j1).array() == sig.entries().col(j2).array()).count();
    return static_cast<double>(agree) / static_cast<double>(sig.p());
}

double rum_estimate(const ShingleSequence& a, const ShingleSequence& b, std::size_t p, std::uint64_t seed,
                    const RumOptions& options) {
    if (a.k() != b.k()) throw ParameterError("shingle sequences built with different k");
    if (p == 0) throw ParameterError("hash count p must be at least 1");
    if (a.empty() || b.empty()) return a.empty() && b.empty() ? 1.0 : 0.0;
    return rum_from_codes(distinct_codes(a), distinct_codes(b), a.size() + b.size(), p, seed, options);
}

RepeatedEstimate rum_repeated(const ShingleSequence& a, const ShingleSequence& b, std::size_t p, std::size_t reps,
                              std::uint64_t seed, const RumOptions& options) {
    if (a.k() != b.k()) throw ParameterError("shingle sequences built with different k");
    if (p == 0) throw ParameterError("hash count p must be at least 1");
    if (reps == 0) throw ParameterError("repetition count must be at least 1");

    std::vector<double> values(reps, a.empty() && b.empty() ? 1.0 : 0.0);
    if (!a.empty() && !b.empty()) {
        const auto codes_a = distinct_codes(a);
        const auto codes_b = distinct_codes(b);
        for (std::size_t r = 0; r < reps; ++r) {
            values[r] = rum_from_codes(codes_a, codes_b, a.size() + b.size(), p,
                                       derive_seed(seed, seed_tag::kRum, r), options);
        }
    }
    return summarize(std::move(values));
}

}  // namespace shinglesim
