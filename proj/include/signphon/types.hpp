#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace signphon {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// One detected point in image coordinates (y grows downward).
/// An undetected point is encoded as (0, 0, 0).
struct Keypoint {
    double x = 0.0;
    double y = 0.0;
    double confidence = 0.0;

    bool detected() const { return confidence > 0.0; }
    Vec2 pos() const { return {x, y}; }
};

inline constexpr int kBodyPointCount = 25;
inline constexpr int kHandPointCount = 21;

// BODY_25 landmark indices this library relies on.
namespace body_idx {
inline constexpr int kRightShoulder = 2;
inline constexpr int kLeftShoulder = 5;
inline constexpr int kMidHip = 8;
inline constexpr int kRightHip = 9;
inline constexpr int kLeftHip = 12;
inline constexpr int kRightEye = 15;
inline constexpr int kLeftEye = 16;
}  // namespace body_idx

// 21-point hand layout: wrist and the middle-finger metacarpal head span the palm axis.
namespace hand_idx {
inline constexpr int kWrist = 0;
inline constexpr int kMiddleMetacarpalHead = 9;
}  // namespace hand_idx

enum class Side { Right, Left };

inline const char* to_string(Side s) { return s == Side::Right ? "right" : "left"; }

struct KeypointFrame {
    int frame_index = 0;
    std::vector<Keypoint> body;        // exactly kBodyPointCount entries
    std::vector<Keypoint> left_hand;   // exactly kHandPointCount entries
    std::vector<Keypoint> right_hand;  // exactly kHandPointCount entries

    static KeypointFrame zeros(int frame_index) {
        KeypointFrame f;
        f.frame_index = frame_index;
        f.body.resize(kBodyPointCount);
        f.left_hand.resize(kHandPointCount);
        f.right_hand.resize(kHandPointCount);
        return f;
    }

    const std::vector<Keypoint>& hand(Side s) const {
        return s == Side::Right ? right_hand : left_hand;
    }
    std::vector<Keypoint>& hand(Side s) {
        return s == Side::Right ? right_hand : left_hand;
    }
};

struct PoseSequence {
    std::vector<KeypointFrame> frames;
    double fps = 25.0;
    std::string source_id;
};

}  // namespace signphon
