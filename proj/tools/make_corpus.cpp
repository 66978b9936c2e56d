// Writes a small synthetic corpus of related documents. Every document mixes
// passages drawn from a shared pool (lightly reworded per document) with
// passages of its own, so pairs land well above the random-writing baseline
// without being near-duplicates.
//
//   make_corpus <out_dir> [bytes_per_doc] [seed]

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using Rng = std::mt19937_64;

std::size_t below(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

const std::vector<std::string> kOnsets = {"b", "c", "d", "f", "g", "h", "l", "m", "n", "p",
                                          "r", "s", "t", "v", "th", "st", "gr", "pl", "sh", "w"};
const std::vector<std::string> kLocalOnsets = {"k", "z", "x", "j", "q", "y", "kr", "zw", "dj", "ch", "sk", "ph"};

std::vector<std::string> make_vocabulary(Rng& rng, std::size_t count, const std::vector<std::string>& onsets) {
    static const std::vector<std::string> vowels = {"a", "e", "i", "o", "u", "ea", "ou", "ai"};
    static const std::vector<std::string> codas = {"", "", "n", "r", "s", "th", "ld", "m", "nd", "st"};
    static const std::vector<std::string> particles = {"a", "I", "of", "to", "in", "is", "it", "be", "he", "we"};

    std::vector<std::string> words(particles);
    while (words.size() < count) {
        std::string w;
        const std::size_t syllables = 1 + below(rng, 3);
        for (std::size_t s = 0; s < syllables; ++s) {
            w += onsets[below(rng, onsets.size())] + vowels[below(rng, vowels.size())];
        }
        w += codas[below(rng, codas.size())];
        words.push_back(std::move(w));
    }
    return words;
}

// Zipf-like word choice: low indices (particles, common words) dominate.
std::string sentence(Rng& rng, const std::vector<std::string>& vocab) {
    const std::size_t len = 6 + below(rng, 12);
    std::string out;
    for (std::size_t i = 0; i < len; ++i) {
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const auto idx = static_cast<std::size_t>(std::pow(u, 2.2) * static_cast<double>(vocab.size()));
        std::string w = vocab[std::min(idx, vocab.size() - 1)];
        if (i == 0) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
        if (!out.empty()) out += ' ';
        out += w;
    }
    out += below(rng, 4) == 0 ? ";" : ".";
    return out;
}

std::string reword(Rng& rng, const std::string& s, const std::vector<std::string>& vocab, double rate) {
    std::string out, word;
    const auto flush = [&] {
        if (word.empty()) return;
        if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < rate) word = vocab[below(rng, vocab.size())];
        out += word;
        word.clear();
    };
    for (const char c : s) {
        if (c == ' ' || c == '.' || c == ';') {
            flush();
            out += c;
        } else {
            word += c;
        }
    }
    flush();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: make_corpus <out_dir> [bytes_per_doc] [seed]\n";
        return 2;
    }
    const std::filesystem::path out_dir = argv[1];
    const std::size_t target = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 100000;
    const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 2024;

    Rng rng(seed);
    const auto vocab = make_vocabulary(rng, 1500, kOnsets);
    std::vector<std::string> shared;
    for (std::size_t i = 0; i < 1500; ++i) shared.push_back(sentence(rng, vocab));

    const std::vector<std::string> names = {"alpha", "beta", "gamma", "delta"};
    const std::vector<double> shared_share = {0.65, 0.55, 0.7, 0.35};
    std::filesystem::create_directories(out_dir);
    for (std::size_t d = 0; d < names.size(); ++d) {
        std::ofstream out(out_dir / (names[d] + ".txt"), std::ios::binary);
        if (!out) {
            std::cerr << "cannot write into " << out_dir << '\n';
            return 1;
        }
        // Passages of a document's own mix in onsets the shared pool never uses.
        auto onsets = kOnsets;
        for (std::size_t i = 0; i < 4; ++i) onsets.push_back(kLocalOnsets[3 * d + i % 3]);
        const auto own_vocab = make_vocabulary(rng, 1500, onsets);
        std::size_t written = 0;
        std::string line;
        while (written < target) {
            const bool from_pool = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < shared_share[d];
            const std::string s = from_pool ? reword(rng, shared[below(rng, shared.size())], vocab, 0.15)
                                            : sentence(rng, own_vocab);
            if (!line.empty() && line.size() + s.size() + 1 > 72) {
                out << line << '\n';
                written += line.size() + 1;
                line.clear();
            }
            if (!line.empty()) line += ' ';
            line += s;
        }
        if (!line.empty()) out << line << '\n';
    }
    return 0;
}
