#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "signphon/errors.hpp"
#include "signphon/phonology.hpp"

namespace signphon {

/// Per-frame centroid speed of one hand, in canonical units per frame.
/// values[t] is the speed between frames t and t+1; size() == frames - 1.
/// An entry is invalid when either endpoint centroid is absent.
struct SpeedSeries {
    std::vector<double> values;
    std::vector<char> valid;

    std::size_t size() const { return values.size(); }
};

inline SpeedSeries speed_series(const std::vector<PhonoFrame>& frames, Side hand) {
    if (frames.size() < 2) {
        throw TooShort("speed series needs at least 2 frames, got " +
                       std::to_string(frames.size()));
    }
    SpeedSeries s;
    s.values.resize(frames.size() - 1, 0.0);
    s.valid.resize(frames.size() - 1, 0);
    for (std::size_t t = 0; t + 1 < frames.size(); ++t) {
        const auto& a = frames[t].hand(hand).centroid;
        const auto& b = frames[t + 1].hand(hand).centroid;
        if (a && b) {
            s.values[t] = distance(*a, *b);
            s.valid[t] = 1;
        }
    }
    return s;
}

/// Centered 3-tap moving average over valid neighbors; validity is unchanged.
inline SpeedSeries smooth_speed(const SpeedSeries& s) {
    SpeedSeries out = s;
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (!s.valid[t]) continue;
        double sum = s.values[t];
        int n = 1;
        if (t > 0 && s.valid[t - 1]) {
            sum += s.values[t - 1];
            ++n;
        }
        if (t + 1 < s.size() && s.valid[t + 1]) {
            sum += s.values[t + 1];
            ++n;
        }
        out.values[t] = sum / n;
    }
    return out;
}

inline int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

/// Split frames where the hand slows down or accelerates: with f'(t) = f(t+1) - f(t),
/// a boundary lands at frame t+1 whenever sign(f'(t-1)) != sign(f'(t)); a plateau
/// carries sign 0 and any 0<->nonzero flip counts. Edges of invalid stretches force
/// boundaries so valid runs never merge with gaps.
inline std::vector<int> segment_boundaries(const SpeedSeries& f) {
    std::vector<int> boundaries;
    const std::size_t n = f.size();
    for (std::size_t t = 1; t < n; ++t) {
        if (f.valid[t - 1] != f.valid[t]) {
            boundaries.push_back(f.valid[t] ? static_cast<int>(t) : static_cast<int>(t) + 1);
        }
    }
    for (std::size_t t = 1; t + 1 < n; ++t) {
        if (!f.valid[t - 1] || !f.valid[t] || !f.valid[t + 1]) continue;
        const int s0 = sign_of(f.values[t] - f.values[t - 1]);
        const int s1 = sign_of(f.values[t + 1] - f.values[t]);
        if (s0 != s1) boundaries.push_back(static_cast<int>(t) + 1);
    }
    std::sort(boundaries.begin(), boundaries.end());
    boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());
    return boundaries;
}

/// Contiguous frame range of one hand with its per-frame symbol sequence.
struct Phoneme {
    Side hand = Side::Right;
    int start_frame = 0;  // inclusive
    int end_frame = 0;    // exclusive
    std::vector<PhonoSymbol> symbols;

    int length() const { return end_frame - start_frame; }
};

inline constexpr int kDefaultMinPhonemeLen = 3;

/// Cuts [0, frames.size()) at the boundaries; keeps segments of at least min_len
/// frames whose every frame carries a complete symbol for the hand.
inline std::vector<Phoneme> phonemes_from_boundaries(const std::vector<PhonoFrame>& frames,
                                                     const std::vector<int>& boundaries,
                                                     Side hand,
                                                     int min_len = kDefaultMinPhonemeLen) {
    std::vector<int> cuts;
    cuts.push_back(0);
    for (int b : boundaries) {
        if (b > 0 && b < static_cast<int>(frames.size())) cuts.push_back(b);
    }
    cuts.push_back(static_cast<int>(frames.size()));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Phoneme> out;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const int a = cuts[k];
        const int b = cuts[k + 1];
        if (b - a < min_len) continue;
        bool usable = true;
        for (int t = a; t < b && usable; ++t) usable = frames[t].hand(hand).complete();
        if (!usable) continue;
        Phoneme p;
        p.hand = hand;
        p.start_frame = frames[a].frame_index;
        p.end_frame = frames[a].frame_index + (b - a);
        p.symbols.reserve(b - a);
        for (int t = a; t < b; ++t) p.symbols.push_back(frames[t].hand(hand).symbol());
        out.push_back(std::move(p));
    }
    return out;
}

/// Phoneme-length counts (frames -> how many phonemes have that length).
inline std::map<int, int> length_histogram(const std::vector<Phoneme>& phonemes) {
    std::map<int, int> hist;
    for (const Phoneme& p : phonemes) ++hist[p.length()];
    return hist;
}

}  // namespace signphon
