#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "signphon/io.hpp"
#include "signphon/normalize.hpp"

using namespace signphon;

namespace {

std::string openpose_doc(std::vector<double> body75, std::vector<double> left63 = {},
                         std::vector<double> right63 = {}) {
    nlohmann::json person;
    person["pose_keypoints_2d"] = body75;
    if (!left63.empty()) person["hand_left_keypoints_2d"] = left63;
    if (!right63.empty()) person["hand_right_keypoints_2d"] = right63;
    nlohmann::json doc;
    doc["people"] = nlohmann::json::array({person});
    return doc.dump();
}

KeypointFrame frame_with_shoulders(Vec2 r, Vec2 l, int index = 0) {
    KeypointFrame f = KeypointFrame::zeros(index);
    f.body[body_idx::kRightShoulder] = {r.x, r.y, 1.0};
    f.body[body_idx::kLeftShoulder] = {l.x, l.y, 1.0};
    return f;
}

}  // namespace

TEST_CASE("parse_keypoint_file maps OpenPose triples") {
    std::vector<double> body(75, 0.0);
    body[0] = 10.0;
    body[1] = 20.0;
    body[2] = 0.9;
    const KeypointFrame f = io::parse_keypoint_file(openpose_doc(body));
    CHECK(f.body[0].x == 10.0);
    CHECK(f.body[0].y == 20.0);
    CHECK(f.body[0].confidence == 0.9);
    for (int i = 1; i < kBodyPointCount; ++i) {
        CHECK(f.body[i].x == 0.0);
        CHECK(f.body[i].confidence == 0.0);
    }
}

TEST_CASE("parse_keypoint_file zero document yields all-zero keypoints") {
    const KeypointFrame f = io::parse_keypoint_file(openpose_doc(std::vector<double>(75, 0.0)));
    for (const Keypoint& kp : f.body) {
        CHECK(kp.x == 0.0);
        CHECK(kp.y == 0.0);
        CHECK(kp.confidence == 0.0);
    }
    // Hand arrays were missing entirely: same all-zero encoding.
    REQUIRE(f.left_hand.size() == kHandPointCount);
    REQUIRE(f.right_hand.size() == kHandPointCount);
    for (const Keypoint& kp : f.left_hand) CHECK(!kp.detected());
}

TEST_CASE("parse_keypoint_file error cases") {
    CHECK_THROWS_AS(io::parse_keypoint_file(R"({"people": []})"), NoPersonDetected);
    CHECK_THROWS_AS(io::parse_keypoint_file("{not json"), MalformedJson);
    CHECK_THROWS_AS(io::parse_keypoint_file(R"({"version": 1.3})"), MalformedJson);
    CHECK_THROWS_AS(
        io::parse_keypoint_file(R"({"people": [{"pose_keypoints_2d": [1, 2]}]})"),
        MalformedJson);
}

TEST_CASE("compute_normalization identity case") {
    const auto p = compute_normalization(frame_with_shoulders({100, 100}, {200, 100}),
                                         {100.0, {150.0, 100.0}});
    CHECK(p.r_x == 1.0);
    CHECK(p.r_y == 1.0);
    CHECK(p.t_x == 0.0);
    CHECK(p.t_y == 0.0);
}

TEST_CASE("compute_normalization scales and recenters") {
    const auto p = compute_normalization(frame_with_shoulders({0, 0}, {50, 0}),
                                         {100.0, {0.0, 0.0}});
    CHECK(p.r_x == 2.0);
    CHECK(p.r_y == 2.0);
    CHECK(p.t_x == -50.0);
    CHECK(p.t_y == 0.0);

    // Applying the params must land the shoulders at the target geometry.
    const Vec2 r = p.apply({0, 0});
    const Vec2 l = p.apply({50, 0});
    CHECK(distance(r, l) == Catch::Approx(100.0).margin(1e-9));
    CHECK(((r + l) * 0.5 == Vec2{0.0, 0.0}));
}

TEST_CASE("compute_normalization rejects degenerate shoulders") {
    CHECK_THROWS_AS(compute_normalization(KeypointFrame::zeros(0)), DegenerateShoulders);
    CHECK_THROWS_AS(compute_normalization(frame_with_shoulders({5, 5}, {5, 5})),
                    DegenerateShoulders);
}

TEST_CASE("normalize_sequence fixes shoulder distance and is idempotent") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> coord(-300.0, 300.0);
    PoseSequence seq;
    for (int i = 0; i < 20; ++i) {
        KeypointFrame f = frame_with_shoulders({coord(gen), coord(gen)},
                                               {coord(gen), coord(gen)}, i);
        for (int k = 0; k < kHandPointCount; ++k) {
            f.right_hand[k] = {coord(gen), coord(gen), 1.0};
        }
        f.body[body_idx::kMidHip] = {coord(gen), coord(gen), 1.0};
        seq.frames.push_back(f);
    }

    const PoseSequence once = normalize_sequence(seq);
    for (const KeypointFrame& f : once.frames) {
        const Vec2 r = f.body[body_idx::kRightShoulder].pos();
        const Vec2 l = f.body[body_idx::kLeftShoulder].pos();
        CHECK(distance(r, l) == Catch::Approx(1.0).margin(1e-9));
        CHECK(norm((r + l) * 0.5) < 1e-9);
    }

    const PoseSequence twice = normalize_sequence(once);
    for (std::size_t i = 0; i < once.frames.size(); ++i) {
        for (int k = 0; k < kBodyPointCount; ++k) {
            CHECK(std::abs(once.frames[i].body[k].x - twice.frames[i].body[k].x) < 1e-9);
            CHECK(std::abs(once.frames[i].body[k].y - twice.frames[i].body[k].y) < 1e-9);
        }
        for (int k = 0; k < kHandPointCount; ++k) {
            CHECK(std::abs(once.frames[i].right_hand[k].x - twice.frames[i].right_hand[k].x) <
                  1e-9);
        }
    }
}

TEST_CASE("normalize_sequence carries params over invalid frames") {
    PoseSequence seq;
    seq.frames.push_back(frame_with_shoulders({0, 0}, {2, 0}, 0));  // scale 0.5
    KeypointFrame blind = KeypointFrame::zeros(1);
    blind.body[body_idx::kMidHip] = {4.0, 0.0, 1.0};
    seq.frames.push_back(blind);

    const PoseSequence out = normalize_sequence(seq);
    // Frame 1 reuses frame 0's params: x' = 4 * 0.5 + (0 - 1 * 0.5) = 1.5.
    CHECK(out.frames[1].body[body_idx::kMidHip].x == Catch::Approx(1.5).margin(1e-12));
    CHECK(out.frames[1].body[body_idx::kMidHip].y == 0.0);
}

TEST_CASE("normalize_sequence backfills frames before the first anchor") {
    PoseSequence seq;
    KeypointFrame blind = KeypointFrame::zeros(0);
    blind.body[body_idx::kMidHip] = {4.0, 0.0, 1.0};
    seq.frames.push_back(blind);
    seq.frames.push_back(frame_with_shoulders({0, 0}, {2, 0}, 1));

    const PoseSequence out = normalize_sequence(seq);
    CHECK(out.frames[0].body[body_idx::kMidHip].x == Catch::Approx(1.5).margin(1e-12));
}

TEST_CASE("normalize_sequence requires one anchor frame") {
    PoseSequence seq;
    seq.frames.push_back(KeypointFrame::zeros(0));
    CHECK_THROWS_AS(normalize_sequence(seq), NoValidFrame);
}

TEST_CASE("undetected keypoints stay (0,0,0) through normalization") {
    PoseSequence seq;
    seq.frames.push_back(frame_with_shoulders({10, 10}, {20, 10}, 0));
    const PoseSequence out = normalize_sequence(seq);
    for (const Keypoint& kp : out.frames[0].left_hand) {
        CHECK(kp.x == 0.0);
        CHECK(kp.y == 0.0);
        CHECK(kp.confidence == 0.0);
    }
}

TEST_CASE("frame JSON round trip is exact") {
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    KeypointFrame f = KeypointFrame::zeros(42);
    for (Keypoint& kp : f.body) kp = {coord(gen), coord(gen), 0.5};
    for (Keypoint& kp : f.right_hand) kp = {coord(gen), coord(gen), 1.0};

    const KeypointFrame back = io::frame_from_json(io::frame_to_json(f));
    REQUIRE(back.frame_index == 42);
    for (int k = 0; k < kBodyPointCount; ++k) {
        CHECK(back.body[k].x == f.body[k].x);
        CHECK(back.body[k].y == f.body[k].y);
        CHECK(back.body[k].confidence == f.body[k].confidence);
    }
}

TEST_CASE("load_pose_dir orders per-frame files by name") {
    const auto dir = std::filesystem::temp_directory_path() / "signphon_ingest_dir";
    std::filesystem::create_directories(dir);
    for (int i = 0; i < 3; ++i) {
        char name[64];
        std::snprintf(name, sizeof(name), "clip_%012d_keypoints.json", i);
        std::vector<double> body(75, 0.0);
        body[0] = i;  // nose x encodes the frame number
        body[2] = 1.0;
        std::ofstream(dir / name) << openpose_doc(body);
    }
    const PoseSequence seq = io::load_pose_dir(dir, 25.0);
    REQUIRE(seq.frames.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(seq.frames[i].frame_index == i);
        CHECK(seq.frames[i].body[0].x == i);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("load_pose_jsonl accepts OpenPose lines and substitutes missing people") {
    const auto path = std::filesystem::temp_directory_path() / "signphon_ingest.jsonl";
    {
        std::ofstream out(path);
        std::vector<double> body(75, 0.0);
        body[0] = 7.0;
        body[2] = 1.0;
        out << openpose_doc(body) << "\n";
        out << R"({"people": []})" << "\n";
    }
    const PoseSequence seq = io::load_pose_jsonl(path, 25.0);
    REQUIRE(seq.frames.size() == 2);
    CHECK(seq.frames[0].body[0].x == 7.0);
    CHECK(seq.frames[1].frame_index == 1);
    for (const Keypoint& kp : seq.frames[1].body) CHECK(!kp.detected());
    std::filesystem::remove(path);
}
