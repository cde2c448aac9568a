#pragma once

#include <algorithm>
#include <cstdlib>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "signphon/errors.hpp"
#include "signphon/segment.hpp"

namespace signphon {

/// Distance between two phonological symbols. Orientation uses the circular
/// distance on 8 sectors (range 0..4); location uses the absolute level
/// difference (range 0..2). The combined cost averages the two normalized
/// parameter distances, so it sits in [0, 1] in steps of 1/16 — exact in
/// double arithmetic.
struct SymbolCost {
    int orientation_distance = 0;
    int location_distance = 0;
    double combined = 0.0;
};

inline SymbolCost symbol_distance(PhonoSymbol a, PhonoSymbol b) {
    const int ds = std::abs(a.sector - b.sector);
    SymbolCost c;
    c.orientation_distance = std::min(ds, kSectorCount - ds);
    c.location_distance = std::abs(level_index(a.level) - level_index(b.level));
    c.combined = (c.orientation_distance / 4.0 + c.location_distance / 2.0) / 2.0;
    return c;
}

inline double substitution_cost(PhonoSymbol a, PhonoSymbol b) {
    return symbol_distance(a, b).combined;
}

/// T is the similarity threshold; deletion_cost prices insertions and deletions
/// alike. deletion_cost must be >= 1 so the normalized distance stays in [0, 1]
/// (substitution never costs more than 1).
struct SimilarityConfig {
    double threshold = 0.5;
    double deletion_cost = 1.0;

    void validate() const {
        if (threshold < 0.0 || threshold > 1.0) {
            throw ConfigError("threshold must be in [0, 1], got " + std::to_string(threshold));
        }
        if (deletion_cost < 1.0) {
            throw ConfigError("deletion_cost must be >= 1, got " + std::to_string(deletion_cost));
        }
    }
};

/// Weighted Levenshtein distance between symbol sequences, normalized by
/// max(|a|, |b|) * deletion_cost. Substitution costs the combined symbol
/// distance; insertion and deletion both cost deletion_cost. Symmetric,
/// zero iff the sequences are identical, and bounded by 1.
inline double phoneme_distance(std::span<const PhonoSymbol> a,
                               std::span<const PhonoSymbol> b,
                               const SimilarityConfig& cfg = {}) {
    cfg.validate();
    if (a.empty() || b.empty()) {
        throw EmptyPhoneme("phoneme_distance requires non-empty symbol sequences");
    }
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    const double del = cfg.deletion_cost;

    std::vector<double> prev(n + 1), curr(n + 1);
    for (std::size_t j = 0; j <= n; ++j) prev[j] = j * del;
    for (std::size_t i = 1; i <= m; ++i) {
        curr[0] = i * del;
        for (std::size_t j = 1; j <= n; ++j) {
            const double sub = prev[j - 1] + substitution_cost(a[i - 1], b[j - 1]);
            const double gap = std::min(prev[j], curr[j - 1]) + del;
            curr[j] = std::min(sub, gap);
        }
        std::swap(prev, curr);
    }
    return prev[n] / (static_cast<double>(std::max(m, n)) * del);
}

inline double phoneme_distance(const Phoneme& p, const Phoneme& q,
                               const SimilarityConfig& cfg = {}) {
    return phoneme_distance(std::span<const PhonoSymbol>(p.symbols),
                            std::span<const PhonoSymbol>(q.symbols), cfg);
}

/// Two phonemes are similar when their similarity 1 - d reaches the threshold.
/// The distance is symmetric, so one check covers both directions.
inline bool similar(const Phoneme& p, const Phoneme& q, const SimilarityConfig& cfg = {}) {
    return 1.0 - phoneme_distance(p, q, cfg) >= cfg.threshold;
}

/// Symmetric pairwise phoneme distances in [0, 1] with a zero diagonal.
class AffinityMatrix {
public:
    AffinityMatrix() = default;
    explicit AffinityMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        d_[i * n_ + j] = v;
        d_[j * n_ + i] = v;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

/// Pairwise distances over one hand's phonemes. Rows are striped across
/// n_threads workers; every cell is computed exactly once, so the result is
/// bit-identical for any thread count.
inline AffinityMatrix affinity_matrix(const std::vector<Phoneme>& phonemes,
                                      const SimilarityConfig& cfg = {},
                                      unsigned n_threads = 1) {
    cfg.validate();
    if (phonemes.empty()) {
        throw EmptyPhoneme("affinity_matrix requires at least one phoneme");
    }
    const std::size_t n = phonemes.size();
    AffinityMatrix m(n);

    auto fill_rows = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < n; i += stride) {
            for (std::size_t j = i + 1; j < n; ++j) {
                m.set(i, j, phoneme_distance(phonemes[i], phonemes[j], cfg));
            }
        }
    };

    if (n_threads <= 1) {
        fill_rows(0, 1);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(n_threads);
        for (unsigned k = 0; k < n_threads; ++k) {
            workers.emplace_back(fill_rows, k, n_threads);
        }
        for (std::thread& w : workers) w.join();
    }
    return m;
}

}  // namespace signphon
