#pragma once

#include "shinglesim/repeated_estimate.hpp"
#include "shinglesim/shingling.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace shinglesim {

namespace detail {
__extension__ using uint128 = unsigned __int128;
}  // namespace detail

/// Element-by-set membership grid: row i stands for universe element i + 1,
/// column j for set S_j.
class RepresentationMatrix {
public:
    using Cells = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

    RepresentationMatrix(Eigen::Index rows, Eigen::Index cols) : cells_(Cells::Zero(rows, cols)) {}
    explicit RepresentationMatrix(Cells cells);

    Eigen::Index n() const noexcept { return cells_.rows(); }
    Eigen::Index m() const noexcept { return cells_.cols(); }

    bool contains(Eigen::Index row, Eigen::Index col) const { return cells_(row, col) != 0; }
    void set(Eigen::Index row, Eigen::Index col, bool member) { cells_(row, col) = member ? 1 : 0; }

    /// Row indices (0-based) with a 1 in column `col`.
    std::vector<Eigen::Index> support(Eigen::Index col) const;

    const Cells& cells() const noexcept { return cells_; }

private:
    Cells cells_;
};

/// p congruential hash functions h_i(x) = (a_i x + b_i) mod n, with a zero
/// remainder mapped to n so every output lies in [1, n].
class HashFamily {
public:
    struct Coefficients {
        std::uint64_t a;
        std::uint64_t b;
    };

    /// Draws a_i uniformly from [1, n-1] and b_i from [0, n-1]. With
    /// `coprime_multipliers`, a_i is redrawn until gcd(a_i, n) = 1.
    /// Requires p >= 1 and n >= 2.
    static HashFamily sample(std::size_t p, std::uint64_t n, std::uint64_t seed, bool coprime_multipliers = false);

    /// Explicit coefficients, validated against the ranges above.
    HashFamily(std::uint64_t n, std::vector<Coefficients> coefficients, std::uint64_t seed = 0);

    std::size_t p() const noexcept { return coefficients_.size(); }
    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const std::vector<Coefficients>& coefficients() const noexcept { return coefficients_; }

    /// h_i(x) for 0-based function index i. Throws ParameterError if i >= p.
    std::uint64_t eval(std::size_t i, std::uint64_t x) const;

    /// Unchecked; i < p.
    std::uint64_t operator()(std::size_t i, std::uint64_t x) const noexcept {
        const auto& c = coefficients_[i];
        const auto r = static_cast<std::uint64_t>(
            (static_cast<detail::uint128>(c.a) * (x % n_) + c.b) % n_);
        return r == 0 ? n_ : r;
    }

private:
    std::uint64_t n_;
    std::vector<Coefficients> coefficients_;
    std::uint64_t seed_;
};

/// p x m table of per-function column minima. Columns of empty sets keep
/// the sentinel in every row and are reported as degenerate.
class SignatureMatrix {
public:
    using Entries = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic>;
    static constexpr std::uint64_t kSentinel = std::numeric_limits<std::uint64_t>::max();

    SignatureMatrix(Eigen::Index p, Eigen::Index m) : entries_(Entries::Constant(p, m, kSentinel)) {}

    Eigen::Index p() const noexcept { return entries_.rows(); }
    Eigen::Index m() const noexcept { return entries_.cols(); }

    std::uint64_t operator()(Eigen::Index r, Eigen::Index j) const { return entries_(r, j); }
    Entries& entries() noexcept { return entries_; }
    const Entries& entries() const noexcept { return entries_; }

    bool degenerate(Eigen::Index col) const { return (entries_.col(col).array() == kSentinel).all(); }

    friend bool operator==(const SignatureMatrix& a, const SignatureMatrix& b) {
        return a.entries_.rows() == b.entries_.rows() && a.entries_.cols() == b.entries_.cols() &&
               a.entries_ == b.entries_;
    }

private:
    Entries entries_;
};

/// Column-filling procedure: start from the sentinel, walk the elements in
/// order, and for each member lower every row to min(c_rj, h_r(i)).
SignatureMatrix signature_fill(const RepresentationMatrix& matrix, const HashFamily& family);

/// Each column is the coordinate-wise minimum of the hash rows
/// (h_1(i), ..., h_p(i)) over the members i of the set. Equal to signature_fill.
SignatureMatrix signature_min(const RepresentationMatrix& matrix, const HashFamily& family);

/// Fraction of hash rows on which columns j1 and j2 agree.
double signature_similarity(const SignatureMatrix& sig, Eigen::Index j1, Eigen::Index j2);

/// 64-bit FNV-1a over the UTF-8 bytes of `value`.
constexpr std::uint64_t canonical_encode(std::string_view value) noexcept {
    std::uint64_t state = 14695981039346656037ULL;
    for (const char c : value) {
        state ^= static_cast<std::uint8_t>(c);
        state *= 1099511628211ULL;
    }
    return state;
}

struct RumOptions {
    bool coprime_multipliers = false;
};

/// Min-hash estimate over the combined collection of a's and b's shingles.
/// The hash modulus is n_a + n_b (duplicates counted); each shingle is hashed
/// through canonical_encode of its value. Both empty gives 1, one empty gives 0.
double rum_estimate(const ShingleSequence& a, const ShingleSequence& b, std::size_t p, std::uint64_t seed,
                    const RumOptions& options = {});

/// rum_estimate repeated with derived seeds; mean, sample deviation, and the
/// individual values.
RepeatedEstimate rum_repeated(const ShingleSequence& a, const ShingleSequence& b, std::size_t p, std::size_t reps,
                              std::uint64_t seed, const RumOptions& options = {});

}  // namespace shinglesim
