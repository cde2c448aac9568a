#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "signphon/errors.hpp"
#include "signphon/phonology.hpp"
#include "signphon/types.hpp"

namespace signphon {

/// One scripted move of the right hand: travel to the target over
/// travel_frames with a triangular speed profile, then hold for hold_frames.
struct ScriptSegment {
    Vec2 target{0.0, 0.0};
    int sector = 0;
    int hold_frames = 1;
    int travel_frames = 1;
};

/// Segments [first, last) played count times in a row.
struct RepeatGroup {
    int first = 0;
    int last = 0;
    int count = 1;
};

struct Script {
    Vec2 start{0.3, 0.5};
    std::vector<ScriptSegment> segments;
    std::vector<RepeatGroup> repeats;
    double noise_sigma = 0.0;
    std::uint32_t seed = 0;
    double fps = 25.0;
};

struct GroundTruth {
    std::vector<int> true_boundaries;  // right-hand segmentation targets
    // verse_spans[g][k] = frame range [start, end) of instance k of repeat group g
    std::vector<std::vector<std::pair<int, int>>> verse_spans;
    std::vector<std::optional<PhonoSymbol>> symbols_per_frame;  // right hand, intended
};

// Canonical body landmark positions emitted by the generator
// (shoulder distance 1, mid-shoulders at the origin, y down).
inline constexpr std::array<std::pair<int, Vec2>, 7> kSynthBodyLandmarks{{
    {body_idx::kRightShoulder, Vec2{-0.5, 0.0}},
    {body_idx::kLeftShoulder, Vec2{0.5, 0.0}},
    {body_idx::kMidHip, Vec2{0.0, 1.0}},
    {body_idx::kRightHip, Vec2{-0.35, 1.0}},
    {body_idx::kLeftHip, Vec2{0.35, 1.0}},
    {body_idx::kRightEye, Vec2{-0.15, -0.4}},
    {body_idx::kLeftEye, Vec2{0.15, -0.4}},
}};

namespace detail {

/// Box-Muller over explicit mt19937 draws. std::normal_distribution is
/// implementation-defined, which would break seed reproducibility across
/// standard libraries; bit-exactness still tracks libm's log/cos rounding.
inline double gaussian(std::mt19937& gen) {
    const double u1 = (static_cast<double>(gen()) + 1.0) / 4294967296.0;  // (0, 1]
    const double u2 = static_cast<double>(gen()) / 4294967296.0;          // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

/// Triangular per-step speed weight for step k of an m-step travel.
inline int travel_weight(int k, int m) { return std::min(k + 1, m - k); }

inline void validate_script(const Script& s) {
    if (s.segments.empty()) throw InvalidScript("script has no segments");
    if (s.noise_sigma < 0.0) throw InvalidScript("noise_sigma must be >= 0");
    if (s.fps <= 0.0) throw InvalidScript("fps must be > 0");
    for (const ScriptSegment& seg : s.segments) {
        if (seg.hold_frames < 1 || seg.travel_frames < 1) {
            throw InvalidScript("hold_frames and travel_frames must be >= 1");
        }
        if (seg.sector < 0 || seg.sector >= kSectorCount) {
            throw InvalidScript("sector must be in [0, 7]");
        }
    }
    int prev_end = 0;
    for (const RepeatGroup& g : s.repeats) {
        if (g.first < prev_end || g.first >= g.last ||
            g.last > static_cast<int>(s.segments.size()) || g.count < 1) {
            throw InvalidScript("repeat groups must be ordered, disjoint, in range, count >= 1");
        }
        prev_end = g.last;
    }
}

struct ExecItem {
    const ScriptSegment* seg;
    int group = -1;     // repeat group index, -1 when not repeated
    int instance = -1;  // repetition number within the group
};

inline std::vector<ExecItem> unroll(const Script& s) {
    std::vector<ExecItem> exec;
    int i = 0;
    for (std::size_t g = 0; g < s.repeats.size(); ++g) {
        const RepeatGroup& rg = s.repeats[g];
        for (; i < rg.first; ++i) exec.push_back({&s.segments[i]});
        for (int k = 0; k < rg.count; ++k) {
            for (int j = rg.first; j < rg.last; ++j) {
                exec.push_back({&s.segments[j], static_cast<int>(g), k});
            }
        }
        i = rg.last;
    }
    for (; i < static_cast<int>(s.segments.size()); ++i) exec.push_back({&s.segments[i]});
    return exec;
}

inline KeypointFrame synth_frame(int frame_index, Vec2 hand_pos, int sector, double sigma,
                                 std::mt19937& gen) {
    KeypointFrame f = KeypointFrame::zeros(frame_index);
    for (const auto& [idx, pos] : kSynthBodyLandmarks) {
        f.body[idx] = {pos.x, pos.y, 1.0};
    }
    // Wrist and middle metacarpal straddle the centroid along the palm axis;
    // the remaining points sit on the centroid, so the 21-point mean is exact.
    const double angle = sector * (kPi / 4.0);
    const Vec2 u{std::cos(angle), std::sin(angle)};
    constexpr double kHalfPalm = 0.1;
    for (int k = 0; k < kHandPointCount; ++k) {
        Vec2 p = hand_pos;
        if (k == hand_idx::kWrist) p = hand_pos - u * kHalfPalm;
        if (k == hand_idx::kMiddleMetacarpalHead) p = hand_pos + u * kHalfPalm;
        if (sigma > 0.0) {
            p.x += sigma * gaussian(gen);
            p.y += sigma * gaussian(gen);
        }
        f.right_hand[k] = {p.x, p.y, 1.0};
    }
    return f;
}

/// Intended location level of a hand position: nearest canonical landmark,
/// ties toward the higher level.
inline LocationLevel intended_level(Vec2 pos) {
    LocationLevel best = LocationLevel::Eye;
    double best_dist = 0.0;
    bool first = true;
    for (const LocationLandmark& lm : kLocationLandmarks) {
        Vec2 lp{};
        for (const auto& [idx, p] : kSynthBodyLandmarks) {
            if (idx == lm.body_index) lp = p;
        }
        const double d = distance(lp, pos);
        if (first || d < best_dist ||
            (d == best_dist && level_index(lm.level) > level_index(best))) {
            best = lm.level;
            best_dist = d;
            first = false;
        }
    }
    return best;
}

/// The segmentation rule evaluated on exact integer speed classes. Classes
/// from different travels are never adjacent (every segment ends in a hold),
/// so integer comparisons are sound.
inline std::vector<int> boundaries_from_classes(const std::vector<int>& cls) {
    std::vector<int> out;
    for (std::size_t t = 1; t + 1 < cls.size(); ++t) {
        const int s0 = cls[t] > cls[t - 1] ? 1 : (cls[t] < cls[t - 1] ? -1 : 0);
        const int s1 = cls[t + 1] > cls[t] ? 1 : (cls[t + 1] < cls[t] ? -1 : 0);
        if (s0 != s1) out.push_back(static_cast<int>(t) + 1);
    }
    return out;
}

}  // namespace detail

/// Renders a script into a pose sequence plus its ground truth. The right hand
/// follows the script; the left hand is emitted undetected. Deterministic per
/// seed. Travel distances must be 0 or at least 1e-6 canonical units so the
/// measured speed signs cannot be perturbed by rounding.
inline std::pair<PoseSequence, GroundTruth> generate(const Script& script) {
    detail::validate_script(script);
    const std::vector<detail::ExecItem> exec = detail::unroll(script);

    std::mt19937 gen(script.seed);
    PoseSequence seq;
    seq.fps = script.fps;
    seq.source_id = "synth:" + std::to_string(script.seed);
    GroundTruth truth;
    truth.verse_spans.resize(script.repeats.size());

    std::vector<int> speed_classes;  // one entry per frame step
    Vec2 current = script.start;

    seq.frames.push_back(
        detail::synth_frame(0, current, exec.front().seg->sector, script.noise_sigma, gen));
    truth.symbols_per_frame.push_back(
        PhonoSymbol{exec.front().seg->sector, detail::intended_level(current)});

    int cursor = 1;
    for (const detail::ExecItem& item : exec) {
        const ScriptSegment& seg = *item.seg;
        if (item.group >= 0 &&
            static_cast<int>(truth.verse_spans[item.group].size()) == item.instance) {
            truth.verse_spans[item.group].push_back({cursor, cursor});
        }

        const Vec2 from = current;
        const bool moving = !(from == seg.target);
        const double dist = distance(from, seg.target);
        if (moving && dist < 1e-6) {
            throw InvalidScript("travel distance must be 0 or >= 1e-6 canonical units");
        }
        const int m = seg.travel_frames;
        int total_weight = 0;
        for (int k = 0; k < m; ++k) total_weight += detail::travel_weight(k, m);

        int cum = 0;
        for (int k = 0; k < m; ++k) {
            speed_classes.push_back(moving ? detail::travel_weight(k, m) : 0);
            cum += detail::travel_weight(k, m);
            const double f = static_cast<double>(cum) / total_weight;
            current = from + (seg.target - from) * f;
            seq.frames.push_back(
                detail::synth_frame(cursor, current, seg.sector, script.noise_sigma, gen));
            truth.symbols_per_frame.push_back(
                PhonoSymbol{seg.sector, detail::intended_level(current)});
            ++cursor;
        }
        for (int k = 0; k < seg.hold_frames; ++k) {
            speed_classes.push_back(0);
            seq.frames.push_back(
                detail::synth_frame(cursor, current, seg.sector, script.noise_sigma, gen));
            truth.symbols_per_frame.push_back(
                PhonoSymbol{seg.sector, detail::intended_level(current)});
            ++cursor;
        }

        if (item.group >= 0) truth.verse_spans[item.group][item.instance].second = cursor;
    }

    truth.true_boundaries = detail::boundaries_from_classes(speed_classes);
    return {std::move(seq), std::move(truth)};
}

}  // namespace signphon
