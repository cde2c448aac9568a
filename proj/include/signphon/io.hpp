#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "signphon/cluster.hpp"
#include "signphon/errors.hpp"
#include "signphon/metric.hpp"
#include "signphon/phonology.hpp"
#include "signphon/segment.hpp"
#include "signphon/seqmatch.hpp"
#include "signphon/synth.hpp"
#include "signphon/types.hpp"

namespace signphon {

namespace io {

using nlohmann::json;

inline std::string fmt_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

inline std::string fmt_f9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

// ---------------------------------------------------------------------------
// Keypoint frames
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Keypoint> keypoints_from_flat(const json& arr, int expected,
                                                 const std::string& what) {
    std::vector<Keypoint> out(expected);
    if (arr.is_null()) return out;  // missing array: all-zero keypoints
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(expected) * 3) {
        throw MalformedJson(what + ": expected a flat array of " +
                            std::to_string(expected * 3) + " numbers");
    }
    for (int i = 0; i < expected; ++i) {
        out[i] = {arr[3 * i].get<double>(), arr[3 * i + 1].get<double>(),
                  arr[3 * i + 2].get<double>()};
    }
    return out;
}

inline json keypoints_to_flat(const std::vector<Keypoint>& pts) {
    json arr = json::array();
    for (const Keypoint& kp : pts) {
        arr.push_back(kp.x);
        arr.push_back(kp.y);
        arr.push_back(kp.confidence);
    }
    return arr;
}

inline json keypoints_to_triples(const std::vector<Keypoint>& pts) {
    json arr = json::array();
    for (const Keypoint& kp : pts) arr.push_back(json::array({kp.x, kp.y, kp.confidence}));
    return arr;
}

inline std::vector<Keypoint> keypoints_from_triples(const json& arr, int expected,
                                                    const std::string& what) {
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(expected)) {
        throw MalformedJson(what + ": expected " + std::to_string(expected) + " [x,y,c] triples");
    }
    std::vector<Keypoint> out(expected);
    for (int i = 0; i < expected; ++i) {
        const json& t = arr[i];
        if (!t.is_array() || t.size() != 3) throw MalformedJson(what + ": bad [x,y,c] triple");
        out[i] = {t[0].get<double>(), t[1].get<double>(), t[2].get<double>()};
    }
    return out;
}

}  // namespace detail

/// Parses one OpenPose per-frame JSON document. Keypoints come from the first
/// detected person; missing keypoint arrays yield all-zero points.
inline KeypointFrame parse_keypoint_file(std::string_view text, int frame_index = 0) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedJson(e.what());
    }
    if (!doc.is_object() || !doc.contains("people") || !doc["people"].is_array()) {
        throw MalformedJson("document has no 'people' array");
    }
    if (doc["people"].empty()) throw NoPersonDetected("'people' is empty");

    const json& person = doc["people"][0];
    KeypointFrame f;
    f.frame_index = frame_index;
    try {
        f.body = detail::keypoints_from_flat(person.value("pose_keypoints_2d", json()),
                                             kBodyPointCount, "pose_keypoints_2d");
        f.left_hand = detail::keypoints_from_flat(person.value("hand_left_keypoints_2d", json()),
                                                  kHandPointCount, "hand_left_keypoints_2d");
        f.right_hand = detail::keypoints_from_flat(person.value("hand_right_keypoints_2d", json()),
                                                   kHandPointCount, "hand_right_keypoints_2d");
    } catch (const json::exception& e) {
        throw MalformedJson(e.what());
    }
    return f;
}

inline json frame_to_openpose_json(const KeypointFrame& f) {
    json person;
    person["pose_keypoints_2d"] = detail::keypoints_to_flat(f.body);
    person["hand_left_keypoints_2d"] = detail::keypoints_to_flat(f.left_hand);
    person["hand_right_keypoints_2d"] = detail::keypoints_to_flat(f.right_hand);
    json doc;
    doc["people"] = json::array({person});
    return doc;
}

inline json frame_to_json(const KeypointFrame& f) {
    json doc;
    doc["frame_index"] = f.frame_index;
    doc["body"] = detail::keypoints_to_triples(f.body);
    doc["left_hand"] = detail::keypoints_to_triples(f.left_hand);
    doc["right_hand"] = detail::keypoints_to_triples(f.right_hand);
    return doc;
}

inline KeypointFrame frame_from_json(const json& doc) {
    KeypointFrame f;
    f.frame_index = doc.at("frame_index").get<int>();
    f.body = detail::keypoints_from_triples(doc.at("body"), kBodyPointCount, "body");
    f.left_hand = detail::keypoints_from_triples(doc.at("left_hand"), kHandPointCount, "left_hand");
    f.right_hand =
        detail::keypoints_from_triples(doc.at("right_hand"), kHandPointCount, "right_hand");
    return f;
}

/// Loads a JSON-lines keypoint file. Each line may be an OpenPose per-frame
/// document (detected by its "people" key) or this library's frame object.
/// Lines with no detected person become all-zero frames so indexing stays
/// aligned with the source video.
inline PoseSequence load_pose_jsonl(const std::filesystem::path& path, double fps = 25.0) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    PoseSequence seq;
    seq.fps = fps;
    seq.source_id = path.filename().string();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            ++line_no;
            continue;
        }
        try {
            const json doc = json::parse(line);
            if (doc.is_object() && doc.contains("people")) {
                try {
                    seq.frames.push_back(parse_keypoint_file(line, line_no));
                } catch (const NoPersonDetected&) {
                    seq.frames.push_back(KeypointFrame::zeros(line_no));
                }
            } else {
                KeypointFrame f = frame_from_json(doc);
                seq.frames.push_back(std::move(f));
            }
        } catch (const Error& e) {
            throw MalformedJson(path.string() + ":" + std::to_string(line_no + 1) + ": " +
                                e.what());
        } catch (const json::exception& e) {
            throw MalformedJson(path.string() + ":" + std::to_string(line_no + 1) + ": " +
                                e.what());
        }
        ++line_no;
    }
    if (seq.frames.empty()) throw IoError(path.string() + ": no frames");
    return seq;
}

/// Loads a directory of OpenPose per-frame exports (*_keypoints.json), ordered
/// by filename; frame indices follow that order.
inline PoseSequence load_pose_dir(const std::filesystem::path& dir, double fps = 25.0) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name.size() > 15 && name.ends_with("_keypoints.json")) files.push_back(entry.path());
    }
    if (files.empty()) throw IoError(dir.string() + ": no *_keypoints.json files");
    std::sort(files.begin(), files.end());

    PoseSequence seq;
    seq.fps = fps;
    seq.source_id = dir.filename().string();
    for (std::size_t i = 0; i < files.size(); ++i) {
        try {
            seq.frames.push_back(parse_keypoint_file(read_file(files[i]), static_cast<int>(i)));
        } catch (const NoPersonDetected&) {
            seq.frames.push_back(KeypointFrame::zeros(static_cast<int>(i)));
        } catch (const MalformedJson& e) {
            throw MalformedJson(files[i].string() + ": " + e.what());
        }
    }
    return seq;
}

inline void write_pose_jsonl(const std::filesystem::path& path, const PoseSequence& seq) {
    std::ofstream out = open_out(path);
    for (const KeypointFrame& f : seq.frames) out << frame_to_json(f).dump() << '\n';
}

inline void write_openpose_jsonl(const std::filesystem::path& path, const PoseSequence& seq) {
    std::ofstream out = open_out(path);
    for (const KeypointFrame& f : seq.frames) out << frame_to_openpose_json(f).dump() << '\n';
}

// ---------------------------------------------------------------------------
// Phonology stream
// ---------------------------------------------------------------------------

namespace detail {

inline json hand_state_to_json(const HandState& h) {
    json doc;
    doc["present"] = h.present();
    doc["sector"] = h.orientation ? json(*h.orientation) : json(nullptr);
    doc["level"] = h.location ? json(level_index(*h.location)) : json(nullptr);
    if (h.centroid) doc["centroid"] = json::array({h.centroid->x, h.centroid->y});
    return doc;
}

inline HandState hand_state_from_json(const json& doc) {
    HandState h;
    if (doc.contains("centroid") && doc["centroid"].is_array()) {
        h.centroid = Vec2{doc["centroid"][0].get<double>(), doc["centroid"][1].get<double>()};
    }
    if (doc.contains("sector") && !doc["sector"].is_null()) h.orientation = doc["sector"].get<int>();
    if (doc.contains("level") && !doc["level"].is_null()) {
        h.location = static_cast<LocationLevel>(doc["level"].get<int>());
    }
    return h;
}

}  // namespace detail

inline void write_phonology_jsonl(const std::filesystem::path& path,
                                  const std::vector<PhonoFrame>& frames) {
    std::ofstream out = open_out(path);
    for (const PhonoFrame& f : frames) {
        json doc;
        doc["frame"] = f.frame_index;
        doc["right"] = detail::hand_state_to_json(f.right);
        doc["left"] = detail::hand_state_to_json(f.left);
        out << doc.dump() << '\n';
    }
}

inline std::vector<PhonoFrame> load_phonology_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<PhonoFrame> frames;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            const json doc = json::parse(line);
            PhonoFrame f;
            f.frame_index = doc.at("frame").get<int>();
            f.right = detail::hand_state_from_json(doc.at("right"));
            f.left = detail::hand_state_from_json(doc.at("left"));
            frames.push_back(std::move(f));
        } catch (const json::exception& e) {
            throw MalformedJson(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (frames.empty()) throw IoError(path.string() + ": no frames");
    return frames;
}

// ---------------------------------------------------------------------------
// Phonemes
// ---------------------------------------------------------------------------

inline json phoneme_to_json(const Phoneme& p) {
    json symbols = json::array();
    for (const PhonoSymbol& s : p.symbols) {
        symbols.push_back(json::array({s.sector, level_index(s.level)}));
    }
    json doc;
    doc["hand"] = to_string(p.hand);
    doc["start"] = p.start_frame;
    doc["end"] = p.end_frame;
    doc["symbols"] = std::move(symbols);
    return doc;
}

inline void write_phonemes_json(const std::filesystem::path& path,
                                const std::vector<Phoneme>& phonemes) {
    json arr = json::array();
    for (const Phoneme& p : phonemes) arr.push_back(phoneme_to_json(p));
    open_out(path) << arr.dump(1) << '\n';
}

inline std::vector<Phoneme> load_phonemes_json(const std::filesystem::path& path) {
    json arr;
    try {
        arr = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw MalformedJson(path.string() + ": " + e.what());
    }
    if (!arr.is_array()) throw MalformedJson(path.string() + ": expected a JSON array");
    std::vector<Phoneme> out;
    for (const json& doc : arr) {
        Phoneme p;
        const std::string hand = doc.at("hand").get<std::string>();
        if (hand != "right" && hand != "left") {
            throw MalformedJson(path.string() + ": hand must be 'right' or 'left'");
        }
        p.hand = hand == "right" ? Side::Right : Side::Left;
        p.start_frame = doc.at("start").get<int>();
        p.end_frame = doc.at("end").get<int>();
        for (const json& s : doc.at("symbols")) {
            const int sector = s.at(0).get<int>();
            const int level = s.at(1).get<int>();
            if (sector < 0 || sector >= kSectorCount || level < 0 || level > 2) {
                throw MalformedJson(path.string() + ": symbol out of range [" +
                                    std::to_string(sector) + "," + std::to_string(level) + "]");
            }
            p.symbols.push_back({sector, static_cast<LocationLevel>(level)});
        }
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV exports
// ---------------------------------------------------------------------------

inline void write_histogram_csv(const std::filesystem::path& path,
                                const std::map<int, int>& hist) {
    std::ofstream out = open_out(path);
    out << "length_frames,count\n";
    for (const auto& [len, count] : hist) out << len << ',' << count << '\n';
}

/// n x n matrix at fixed 9 decimals under a header row of phoneme ids.
inline void write_affinity_csv(const std::filesystem::path& path, const AffinityMatrix& m) {
    std::ofstream out = open_out(path);
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? "," : "") << j;
    out << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            out << (j ? "," : "") << fmt_f9(m.at(i, j));
        }
        out << '\n';
    }
}

inline void write_clustering_csv(const std::filesystem::path& path,
                                 const std::vector<Phoneme>& phonemes, const Clustering& c) {
    std::ofstream out = open_out(path);
    out << "phoneme_id,start,end,label\n";
    for (std::size_t i = 0; i < phonemes.size(); ++i) {
        out << i << ',' << phonemes[i].start_frame << ',' << phonemes[i].end_frame << ','
            << c.labels[i] << '\n';
    }
}

/// Reads labels back from a clustering CSV; rows may appear in any order but
/// must cover phoneme ids 0..n-1 exactly once.
inline std::vector<int> load_labels_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || !line.starts_with("phoneme_id,")) {
        throw MalformedJson(path.string() + ":1: expected 'phoneme_id,start,end,label' header");
    }
    std::map<int, int> by_id;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        int id = 0, start = 0, end = 0, label = 0;
        if (std::sscanf(line.c_str(), "%d,%d,%d,%d", &id, &start, &end, &label) != 4 ||
            by_id.count(id)) {
            throw MalformedJson(path.string() + ":" + std::to_string(line_no) + ": bad row");
        }
        by_id[id] = label;
    }
    std::vector<int> labels(by_id.size());
    for (const auto& [id, label] : by_id) {
        if (id < 0 || id >= static_cast<int>(labels.size())) {
            throw MalformedJson(path.string() + ": phoneme ids must cover 0..n-1");
        }
        labels[id] = label;
    }
    return labels;
}

inline void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
    std::ofstream out = open_out(path);
    out << "param,n_clusters,mean_size,silhouette\n";
    for (const SweepRow& r : rows) {
        out << fmt_g9(r.param) << ',' << r.n_clusters << ',' << fmt_g9(r.mean_size) << ','
            << (r.silhouette ? fmt_g9(*r.silhouette) : "nan") << '\n';
    }
}

inline void write_projection_csv(const std::filesystem::path& path, const Projection2D& proj,
                                 const std::vector<int>& labels) {
    std::ofstream out = open_out(path);
    out << "phoneme_id,x,y,label\n";
    for (std::size_t i = 0; i < proj.coords.size(); ++i) {
        out << i << ',' << fmt_g9(proj.coords[i].x) << ',' << fmt_g9(proj.coords[i].y) << ','
            << labels[i] << '\n';
    }
}

// ---------------------------------------------------------------------------
// Span matches
// ---------------------------------------------------------------------------

inline void write_matches_json(const std::filesystem::path& path,
                               const std::vector<SpanMatch>& matches) {
    auto span_json = [](const PhonemeSpan& s) {
        json doc;
        doc["phonemes"] = json::array({s.first, s.last});
        doc["frames"] = json::array({s.start_frame, s.end_frame});
        return doc;
    };
    json arr = json::array();
    for (const SpanMatch& m : matches) {
        json doc;
        doc["a"] = span_json(m.a);
        doc["b"] = span_json(m.b);
        doc["similarity"] = m.similarity;
        arr.push_back(std::move(doc));
    }
    open_out(path) << arr.dump(1) << '\n';
}

// ---------------------------------------------------------------------------
// Synth scripts and ground truth
// ---------------------------------------------------------------------------

inline Script load_script_json(const std::filesystem::path& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw MalformedJson(path.string() + ": " + e.what());
    }
    Script s;
    try {
        if (doc.contains("start")) s.start = {doc["start"][0].get<double>(), doc["start"][1].get<double>()};
        s.fps = doc.value("fps", 25.0);
        s.seed = doc.value("seed", 0u);
        s.noise_sigma = doc.value("noise_sigma", 0.0);
        for (const json& seg : doc.at("segments")) {
            ScriptSegment out;
            out.target = {seg.at("target")[0].get<double>(), seg.at("target")[1].get<double>()};
            out.sector = seg.at("sector").get<int>();
            out.hold_frames = seg.at("hold_frames").get<int>();
            out.travel_frames = seg.at("travel_frames").get<int>();
            s.segments.push_back(out);
        }
        for (const json& rep : doc.value("repeats", json::array())) {
            s.repeats.push_back(
                {rep.at("first").get<int>(), rep.at("last").get<int>(), rep.at("count").get<int>()});
        }
    } catch (const json::exception& e) {
        throw MalformedJson(path.string() + ": " + e.what());
    }
    return s;
}

inline void write_ground_truth_json(const std::filesystem::path& path, const GroundTruth& truth) {
    json doc;
    doc["true_boundaries"] = truth.true_boundaries;
    json groups = json::array();
    for (const auto& group : truth.verse_spans) {
        json spans = json::array();
        for (const auto& [s, e] : group) spans.push_back(json::array({s, e}));
        groups.push_back(std::move(spans));
    }
    doc["verse_spans"] = std::move(groups);
    json symbols = json::array();
    for (const auto& sym : truth.symbols_per_frame) {
        symbols.push_back(sym ? json::array({sym->sector, level_index(sym->level)})
                              : json(nullptr));
    }
    doc["symbols_per_frame"] = std::move(symbols);
    open_out(path) << doc.dump(1) << '\n';
}

inline GroundTruth load_ground_truth_json(const std::filesystem::path& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw MalformedJson(path.string() + ": " + e.what());
    }
    GroundTruth truth;
    for (const json& b : doc.at("true_boundaries")) truth.true_boundaries.push_back(b.get<int>());
    for (const json& group : doc.at("verse_spans")) {
        std::vector<std::pair<int, int>> spans;
        for (const json& s : group) spans.push_back({s[0].get<int>(), s[1].get<int>()});
        truth.verse_spans.push_back(std::move(spans));
    }
    for (const json& sym : doc.at("symbols_per_frame")) {
        if (sym.is_null()) {
            truth.symbols_per_frame.push_back(std::nullopt);
        } else {
            truth.symbols_per_frame.push_back(
                PhonoSymbol{sym[0].get<int>(), static_cast<LocationLevel>(sym[1].get<int>())});
        }
    }
    return truth;
}

}  // namespace io
}  // namespace signphon
