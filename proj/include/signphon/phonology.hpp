#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "signphon/errors.hpp"
#include "signphon/types.hpp"

namespace signphon {

inline constexpr int kSectorCount = 8;

/// Hand location relative to the body, coarsened to three vertical levels.
enum class LocationLevel : int { Eye = 0, Shoulder = 1, Abdomen = 2 };

inline constexpr int level_index(LocationLevel l) { return static_cast<int>(l); }

/// Per-frame categorical descriptor of one hand: orientation sector + location level.
struct PhonoSymbol {
    int sector = 0;  // 0..7
    LocationLevel level = LocationLevel::Eye;

    friend bool operator==(PhonoSymbol a, PhonoSymbol b) {
        return a.sector == b.sector && a.level == b.level;
    }
};

/// Arithmetic mean of the detected hand keypoints; nullopt when none is detected.
inline std::optional<Vec2> hand_centroid(const std::vector<Keypoint>& hand) {
    double sx = 0.0, sy = 0.0;
    int n = 0;
    for (const Keypoint& kp : hand) {
        if (!kp.detected()) continue;
        sx += kp.x;
        sy += kp.y;
        ++n;
    }
    if (n == 0) return std::nullopt;
    return Vec2{sx / n, sy / n};
}

/// Sector k covers the angle interval of width pi/4 centered at k*pi/4,
/// angles measured in image coordinates (y down).
inline int sector_of(Vec2 dir) {
    const double theta = std::atan2(dir.y, dir.x);
    double m = std::fmod(theta + kPi / 8.0, 2.0 * kPi);
    if (m < 0.0) m += 2.0 * kPi;
    const int s = static_cast<int>(m / (kPi / 4.0));
    return s & 7;  // guards the m -> 2*pi rounding edge
}

/// Palm-axis orientation from wrist to middle-finger metacarpal head.
/// nullopt when either point is undetected or the two coincide.
inline std::optional<int> orientation_of(const std::vector<Keypoint>& hand) {
    const Keypoint& p = hand[hand_idx::kWrist];
    const Keypoint& q = hand[hand_idx::kMiddleMetacarpalHead];
    if (!p.detected() || !q.detected()) return std::nullopt;
    if (p.pos() == q.pos()) return std::nullopt;
    return sector_of(q.pos() - p.pos());
}

struct LocationLandmark {
    int body_index;
    LocationLevel level;
};

// Landmark groups realizing the three levels: eyes, shoulders, hips.
inline constexpr std::array<LocationLandmark, 7> kLocationLandmarks{{
    {body_idx::kRightEye, LocationLevel::Eye},
    {body_idx::kLeftEye, LocationLevel::Eye},
    {body_idx::kRightShoulder, LocationLevel::Shoulder},
    {body_idx::kLeftShoulder, LocationLevel::Shoulder},
    {body_idx::kMidHip, LocationLevel::Abdomen},
    {body_idx::kRightHip, LocationLevel::Abdomen},
    {body_idx::kLeftHip, LocationLevel::Abdomen},
}};

/// Landmark-to-centroid distance grid; columns are right (0) and left (1) hand.
struct LocationMatrix {
    struct Entry {
        double dist = 0.0;
        bool valid = false;
    };
    std::array<std::array<Entry, 2>, kLocationLandmarks.size()> entries{};
};

inline int hand_column(Side s) { return s == Side::Right ? 0 : 1; }

inline LocationMatrix location_matrix(const KeypointFrame& frame,
                                      const std::optional<Vec2>& right_centroid,
                                      const std::optional<Vec2>& left_centroid) {
    if (!right_centroid && !left_centroid) {
        throw EmptyFrame("frame " + std::to_string(frame.frame_index) + ": no hand centroid");
    }
    LocationMatrix m;
    for (std::size_t i = 0; i < kLocationLandmarks.size(); ++i) {
        const Keypoint& lm = frame.body[kLocationLandmarks[i].body_index];
        const std::array<const std::optional<Vec2>*, 2> centroids{&right_centroid, &left_centroid};
        for (int col = 0; col < 2; ++col) {
            if (!lm.detected() || !centroids[col]->has_value()) continue;
            m.entries[i][col] = {distance(lm.pos(), *(*centroids[col])), true};
        }
    }
    return m;
}

/// Level of the landmark group holding the minimum-distance valid entry;
/// exact ties break toward the higher level index (Abdomen > Shoulder > Eye).
inline std::optional<LocationLevel> location_level(const LocationMatrix& m, Side hand) {
    const int col = hand_column(hand);
    std::optional<LocationLevel> best;
    double best_dist = 0.0;
    for (std::size_t i = 0; i < kLocationLandmarks.size(); ++i) {
        const LocationMatrix::Entry& e = m.entries[i][col];
        if (!e.valid) continue;
        const LocationLevel level = kLocationLandmarks[i].level;
        if (!best || e.dist < best_dist ||
            (e.dist == best_dist && level_index(level) > level_index(*best))) {
            best = level;
            best_dist = e.dist;
        }
    }
    return best;
}

struct HandState {
    std::optional<Vec2> centroid;
    std::optional<int> orientation;  // sector 0..7
    std::optional<LocationLevel> location;

    bool present() const { return centroid.has_value(); }
    /// Both categorical parameters available, i.e. this frame contributes a symbol.
    bool complete() const { return orientation.has_value() && location.has_value(); }
    PhonoSymbol symbol() const { return {*orientation, *location}; }
};

struct PhonoFrame {
    int frame_index = 0;
    HandState right;
    HandState left;

    const HandState& hand(Side s) const { return s == Side::Right ? right : left; }
};

/// Pure per-frame extraction; a frame's descriptor depends on that frame only.
inline PhonoFrame extract_phono_frame(const KeypointFrame& frame) {
    PhonoFrame out;
    out.frame_index = frame.frame_index;
    out.right.centroid = hand_centroid(frame.right_hand);
    out.left.centroid = hand_centroid(frame.left_hand);
    if (out.right.centroid || out.left.centroid) {
        const LocationMatrix m = location_matrix(frame, out.right.centroid, out.left.centroid);
        if (out.right.centroid) {
            out.right.orientation = orientation_of(frame.right_hand);
            out.right.location = location_level(m, Side::Right);
        }
        if (out.left.centroid) {
            out.left.orientation = orientation_of(frame.left_hand);
            out.left.location = location_level(m, Side::Left);
        }
    }
    return out;
}

inline std::vector<PhonoFrame> extract_phonology(const PoseSequence& seq) {
    std::vector<PhonoFrame> out;
    out.reserve(seq.frames.size());
    for (const KeypointFrame& f : seq.frames) out.push_back(extract_phono_frame(f));
    return out;
}

}  // namespace signphon
