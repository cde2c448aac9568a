#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "signphon/phonology.hpp"

using namespace signphon;

namespace {

std::vector<Keypoint> hand_at(Vec2 c, double confidence = 1.0) {
    return std::vector<Keypoint>(kHandPointCount, {c.x, c.y, confidence});
}

// Hand whose wrist->metacarpal axis points along dir, centroid at c.
std::vector<Keypoint> oriented_hand(Vec2 c, Vec2 dir) {
    std::vector<Keypoint> hand(kHandPointCount, {c.x, c.y, 1.0});
    hand[hand_idx::kWrist] = {c.x - dir.x, c.y - dir.y, 1.0};
    hand[hand_idx::kMiddleMetacarpalHead] = {c.x + dir.x, c.y + dir.y, 1.0};
    return hand;
}

KeypointFrame body_fixture() {
    KeypointFrame f = KeypointFrame::zeros(0);
    f.body[body_idx::kRightEye] = {-0.15, -0.4, 1.0};
    f.body[body_idx::kLeftEye] = {0.15, -0.4, 1.0};
    f.body[body_idx::kRightShoulder] = {-0.5, 0.0, 1.0};
    f.body[body_idx::kLeftShoulder] = {0.5, 0.0, 1.0};
    f.body[body_idx::kMidHip] = {0.0, 1.0, 1.0};
    f.body[body_idx::kRightHip] = {-0.35, 1.0, 1.0};
    f.body[body_idx::kLeftHip] = {0.35, 1.0, 1.0};
    return f;
}

}  // namespace

TEST_CASE("hand_centroid") {
    CHECK(*hand_centroid(hand_at({1, 1})) == Vec2{1, 1});

    std::vector<Keypoint> two = hand_at({9, 9}, 0.0);  // all undetected
    two[0] = {0, 0, 1.0};
    two[1] = {2, 2, 1.0};
    CHECK(*hand_centroid(two) == Vec2{1, 1});

    CHECK(!hand_centroid(hand_at({3, 3}, 0.0)).has_value());
}

TEST_CASE("orientation_of sectors") {
    CHECK(*orientation_of(oriented_hand({0, 0}, {1, 0})) == 0);
    // Up in image coordinates is theta = -pi/2.
    CHECK(*orientation_of(oriented_hand({0, 0}, {0, -1})) == 6);
    CHECK(*orientation_of(oriented_hand({0, 0}, {0, 1})) == 2);
    CHECK(*orientation_of(oriented_hand({0, 0}, {-1, 0})) == 4);
    CHECK(*orientation_of(oriented_hand({0, 0}, {1, 1})) == 1);
}

TEST_CASE("orientation_of missing data") {
    std::vector<Keypoint> hand = oriented_hand({0, 0}, {1, 0});
    hand[hand_idx::kMiddleMetacarpalHead].confidence = 0.0;
    CHECK(!orientation_of(hand).has_value());
    CHECK(!orientation_of(hand_at({2, 2})).has_value());  // wrist == metacarpal
}

TEST_CASE("sectors partition the circle and rotate by one") {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double c = std::cos(kPi / 4.0), s = std::sin(kPi / 4.0);
    int checked = 0;
    while (checked < 10000) {
        const Vec2 d{unit(gen), unit(gen)};
        if (norm(d) < 1e-3) continue;
        ++checked;
        const int sec = sector_of(d);
        REQUIRE(sec >= 0);
        REQUIRE(sec <= 7);
        const Vec2 rot{c * d.x - s * d.y, s * d.x + c * d.y};
        REQUIRE(sector_of(rot) == (sec + 1) % 8);
    }
}

TEST_CASE("location_matrix distances") {
    const KeypointFrame f = body_fixture();

    // Centroid on the right eye: that entry is exactly zero.
    const auto m1 = location_matrix(f, Vec2{-0.15, -0.4}, std::nullopt);
    CHECK(m1.entries[0][0].valid);
    CHECK(m1.entries[0][0].dist == 0.0);
    CHECK(!m1.entries[0][1].valid);  // absent left centroid

    // 3-4-5 triangle against a landmark moved to (3,4).
    KeypointFrame g = body_fixture();
    g.body[body_idx::kMidHip] = {3.0, 4.0, 1.0};
    const auto m2 = location_matrix(g, Vec2{0.0, 0.0}, std::nullopt);
    CHECK(m2.entries[4][0].dist == 5.0);

    // Undetected landmark is marked invalid.
    KeypointFrame h = body_fixture();
    h.body[body_idx::kRightEye].confidence = 0.0;
    const auto m3 = location_matrix(h, Vec2{0.0, 0.0}, std::nullopt);
    CHECK(!m3.entries[0][0].valid);

    CHECK_THROWS_AS(location_matrix(f, std::nullopt, std::nullopt), EmptyFrame);
}

TEST_CASE("location_level picks the nearest group, ties go higher") {
    const KeypointFrame f = body_fixture();

    const auto near_shoulder = location_matrix(f, Vec2{0.45, 0.05}, std::nullopt);
    CHECK(*location_level(near_shoulder, Side::Right) == LocationLevel::Shoulder);

    const auto near_hip = location_matrix(f, Vec2{0.3, 0.9}, std::nullopt);
    CHECK(*location_level(near_hip, Side::Right) == LocationLevel::Abdomen);

    // Exact tie between an eye and a shoulder landmark: rig the distances.
    LocationMatrix tie;
    tie.entries[0][0] = {1.0, true};  // eye
    tie.entries[2][0] = {1.0, true};  // shoulder
    CHECK(*location_level(tie, Side::Right) == LocationLevel::Shoulder);

    LocationMatrix empty;
    CHECK(!location_level(empty, Side::Right).has_value());
}

TEST_CASE("location_level is translation invariant") {
    std::mt19937 gen(5);
    // Grid-aligned positions and integer shifts keep the arithmetic exact.
    std::uniform_int_distribution<int> grid(-8, 8);
    std::uniform_int_distribution<int> shift(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const Vec2 centroid{grid(gen) * 0.25, grid(gen) * 0.25};
        const Vec2 d{static_cast<double>(shift(gen)), static_cast<double>(shift(gen))};

        KeypointFrame f = body_fixture();
        KeypointFrame g = body_fixture();
        for (int k = 0; k < kBodyPointCount; ++k) {
            if (!g.body[k].detected()) continue;
            g.body[k].x += d.x;
            g.body[k].y += d.y;
        }
        const auto la = location_level(location_matrix(f, centroid, std::nullopt), Side::Right);
        const auto lb =
            location_level(location_matrix(g, centroid + d, std::nullopt), Side::Right);
        REQUIRE(la == lb);
    }
}

TEST_CASE("extract_phonology composes per-frame states") {
    PoseSequence seq;
    KeypointFrame f = body_fixture();
    f.right_hand = oriented_hand({0.15, -0.4}, {0.05, 0.0});  // at left eye, pointing +x
    seq.frames.push_back(f);

    const auto phono = extract_phonology(seq);
    REQUIRE(phono.size() == 1);
    CHECK(phono[0].right.present());
    CHECK(*phono[0].right.orientation == 0);
    CHECK(*phono[0].right.location == LocationLevel::Eye);
    CHECK(!phono[0].left.present());
}

TEST_CASE("extract_phonology on all-zero frames yields absent hands") {
    PoseSequence seq;
    seq.frames.push_back(KeypointFrame::zeros(0));
    seq.frames.push_back(KeypointFrame::zeros(1));
    const auto phono = extract_phonology(seq);
    REQUIRE(phono.size() == seq.frames.size());
    for (const PhonoFrame& p : phono) {
        CHECK(!p.right.present());
        CHECK(!p.left.present());
    }
}

TEST_CASE("per-frame extraction is pure") {
    KeypointFrame f = body_fixture();
    f.right_hand = oriented_hand({0.2, 0.5}, {0.0, 0.1});
    const PhonoFrame a = extract_phono_frame(f);
    const PhonoFrame b = extract_phono_frame(f);
    CHECK(a.right.orientation == b.right.orientation);
    CHECK(a.right.location == b.right.location);
    CHECK(a.right.centroid == b.right.centroid);
}
