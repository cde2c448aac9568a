#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "signphon/metric.hpp"

namespace signphon {

/// Chain of consecutive phonemes [first, last) with its frame extent.
struct PhonemeSpan {
    int first = 0;  // phoneme index, inclusive
    int last = 0;   // phoneme index, exclusive
    int start_frame = 0;
    int end_frame = 0;

    int length() const { return last - first; }

    friend bool operator==(const PhonemeSpan& a, const PhonemeSpan& b) {
        return a.first == b.first && a.last == b.last;
    }
};

/// Two non-overlapping spans whose concatenated symbol sequences are similar.
struct SpanMatch {
    PhonemeSpan a;
    PhonemeSpan b;
    double similarity = 0.0;
};

namespace detail {

inline PhonemeSpan make_span(const std::vector<Phoneme>& phonemes, int first, int last) {
    return {first, last, phonemes[first].start_frame, phonemes[last - 1].end_frame};
}

inline std::vector<PhonoSymbol> concat_symbols(const std::vector<Phoneme>& phonemes,
                                               const PhonemeSpan& s) {
    std::vector<PhonoSymbol> out;
    for (int i = s.first; i < s.last; ++i) {
        out.insert(out.end(), phonemes[i].symbols.begin(), phonemes[i].symbols.end());
    }
    return out;
}

}  // namespace detail

/// Finds repeated spans of consecutive phonemes by iterated combination.
/// Round r compares all candidate spans of r phonemes; a pair matches when the
/// spans do not overlap and the similarity of their concatenated symbol
/// sequences reaches cfg.threshold. Spans that matched seed round r+1 extended
/// by one phoneme on either side. Stops when a round finds nothing or r hits
/// max_len; reports matches not contained (both sides) in a longer match,
/// ordered by (a.start, b.start).
inline std::vector<SpanMatch> match_spans(const std::vector<Phoneme>& phonemes,
                                          const SimilarityConfig& cfg = {},
                                          int max_len = 16) {
    cfg.validate();
    if (max_len < 1) throw ConfigError("max_len must be >= 1");
    const int n = static_cast<int>(phonemes.size());

    std::vector<SpanMatch> all;
    std::vector<int> starts;  // candidate span start indices for the current round
    starts.reserve(n);
    for (int i = 0; i < n; ++i) starts.push_back(i);

    for (int r = 1; r <= max_len && !starts.empty(); ++r) {
        std::vector<PhonemeSpan> spans;
        std::vector<std::vector<PhonoSymbol>> symbols;
        spans.reserve(starts.size());
        for (int s : starts) {
            if (s + r > n) continue;
            spans.push_back(detail::make_span(phonemes, s, s + r));
            symbols.push_back(detail::concat_symbols(phonemes, spans.back()));
        }

        std::vector<char> survived(spans.size(), 0);
        std::size_t found = 0;
        for (std::size_t i = 0; i < spans.size(); ++i) {
            for (std::size_t j = i + 1; j < spans.size(); ++j) {
                if (spans[j].first < spans[i].last) continue;  // overlap in phonemes/frames
                const double d = phoneme_distance(std::span<const PhonoSymbol>(symbols[i]),
                                                  std::span<const PhonoSymbol>(symbols[j]), cfg);
                if (1.0 - d >= cfg.threshold) {
                    all.push_back({spans[i], spans[j], 1.0 - d});
                    survived[i] = survived[j] = 1;
                    ++found;
                }
            }
        }
        if (found == 0) break;

        std::set<int> next;
        for (std::size_t i = 0; i < spans.size(); ++i) {
            if (!survived[i]) continue;
            if (spans[i].first > 0) next.insert(spans[i].first - 1);
            if (spans[i].first + r < n) next.insert(spans[i].first);
        }
        starts.assign(next.begin(), next.end());
    }

    // Keep only matches not contained in a longer reported match. Processing
    // lengths in descending order, a match of length r can only be covered by
    // an already-kept match of length L > r whose start offsets sit within
    // L - r on both sides, so a hash probe over those offsets finds covers
    // without scanning the kept set.
    std::stable_sort(all.begin(), all.end(), [](const SpanMatch& x, const SpanMatch& y) {
        return x.a.length() > y.a.length();
    });
    const auto key = [](int a_first, int b_first, int len) {
        return (static_cast<std::uint64_t>(a_first) << 40) |
               (static_cast<std::uint64_t>(b_first) << 16) | static_cast<std::uint64_t>(len);
    };
    std::unordered_set<std::uint64_t> kept_keys;
    std::set<int> kept_lengths;
    std::vector<SpanMatch> kept;
    for (const SpanMatch& m : all) {
        const int r = m.a.length();
        bool covered = false;
        for (auto it = kept_lengths.rbegin(); it != kept_lengths.rend() && !covered; ++it) {
            const int gap = *it - r;
            if (gap <= 0) break;
            for (int da = 0; da <= gap && da <= m.a.first && !covered; ++da) {
                for (int db = 0; db <= gap && db <= m.b.first && !covered; ++db) {
                    covered = kept_keys.count(key(m.a.first - da, m.b.first - db, *it)) > 0;
                }
            }
        }
        if (!covered) {
            kept.push_back(m);
            kept_keys.insert(key(m.a.first, m.b.first, r));
            kept_lengths.insert(r);
        }
    }
    std::sort(kept.begin(), kept.end(), [](const SpanMatch& x, const SpanMatch& y) {
        return std::tuple(x.a.start_frame, x.b.start_frame, x.a.end_frame, x.b.end_frame) <
               std::tuple(y.a.start_frame, y.b.start_frame, y.a.end_frame, y.b.end_frame);
    });
    return kept;
}

/// Plain-text table of matches: frame ranges, their wall-clock positions, and
/// the similarity. fps converts frame indices to seconds.
inline std::string span_report(const std::vector<SpanMatch>& matches, double fps) {
    std::string out = "frames_a\tframes_b\tseconds_a\tseconds_b\tsimilarity\n";
    char line[160];
    for (const SpanMatch& m : matches) {
        std::snprintf(line, sizeof(line), "%d-%d\t%d-%d\t%.1fs-%.1fs\t%.1fs-%.1fs\t%.3f\n",
                      m.a.start_frame, m.a.end_frame, m.b.start_frame, m.b.end_frame,
                      m.a.start_frame / fps, m.a.end_frame / fps, m.b.start_frame / fps,
                      m.b.end_frame / fps, m.similarity);
        out += line;
    }
    return out;
}

}  // namespace signphon
