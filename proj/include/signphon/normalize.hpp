#pragma once

#include <optional>
#include <string>

#include "signphon/errors.hpp"
#include "signphon/types.hpp"

namespace signphon {

/// Scale-then-translate map taking raw pixel coordinates to the canonical frame
/// (shoulder distance = target, mid-shoulder point at the target center).
struct NormalizationParams {
    double r_x = 1.0;
    double r_y = 1.0;
    double t_x = 0.0;
    double t_y = 0.0;
    double target_shoulder_distance = 1.0;
    Vec2 target_center{0.0, 0.0};

    Vec2 apply(Vec2 p) const { return {p.x * r_x + t_x, p.y * r_y + t_y}; }
};

struct NormalizeTargets {
    double shoulder_distance = 1.0;  // canonical unit
    Vec2 center{0.0, 0.0};
};

inline bool has_valid_shoulders(const KeypointFrame& f) {
    const Keypoint& r = f.body[body_idx::kRightShoulder];
    const Keypoint& l = f.body[body_idx::kLeftShoulder];
    return r.detected() && l.detected() && !(r.pos() == l.pos());
}

/// Anchors normalization on one frame's shoulder pair. Uniform scale r_x == r_y.
inline NormalizationParams compute_normalization(const KeypointFrame& frame,
                                                 const NormalizeTargets& targets = {}) {
    if (!has_valid_shoulders(frame)) {
        throw DegenerateShoulders("frame " + std::to_string(frame.frame_index) +
                                  ": shoulders undetected or coincident");
    }
    const Vec2 r = frame.body[body_idx::kRightShoulder].pos();
    const Vec2 l = frame.body[body_idx::kLeftShoulder].pos();
    const double measured = distance(r, l);
    const double scale = targets.shoulder_distance / measured;
    const Vec2 mid = (r + l) * 0.5;

    NormalizationParams p;
    p.r_x = scale;
    p.r_y = scale;
    p.t_x = targets.center.x - mid.x * scale;
    p.t_y = targets.center.y - mid.y * scale;
    p.target_shoulder_distance = targets.shoulder_distance;
    p.target_center = targets.center;
    return p;
}

/// Transforms every detected keypoint; undetected points stay (0,0,0).
inline KeypointFrame normalize_frame(const KeypointFrame& frame, const NormalizationParams& params) {
    KeypointFrame out = frame;
    auto transform = [&](std::vector<Keypoint>& pts) {
        for (Keypoint& kp : pts) {
            if (!kp.detected()) continue;
            const Vec2 q = params.apply(kp.pos());
            kp.x = q.x;
            kp.y = q.y;
        }
    };
    transform(out.body);
    transform(out.left_hand);
    transform(out.right_hand);
    return out;
}

/// Per-frame normalization. Frames whose shoulders cannot anchor the map reuse
/// the most recent valid frame's params; frames before the first valid one
/// reuse the first valid frame's params.
inline PoseSequence normalize_sequence(const PoseSequence& seq, const NormalizeTargets& targets = {}) {
    std::optional<NormalizationParams> first_valid;
    for (const KeypointFrame& f : seq.frames) {
        if (has_valid_shoulders(f)) {
            first_valid = compute_normalization(f, targets);
            break;
        }
    }
    if (!first_valid) {
        throw NoValidFrame("no frame has detected, distinct shoulders to anchor normalization");
    }

    PoseSequence out;
    out.fps = seq.fps;
    out.source_id = seq.source_id;
    out.frames.reserve(seq.frames.size());

    NormalizationParams current = *first_valid;
    for (const KeypointFrame& f : seq.frames) {
        if (has_valid_shoulders(f)) {
            current = compute_normalization(f, targets);
        }
        out.frames.push_back(normalize_frame(f, current));
    }
    return out;
}

}  // namespace signphon
