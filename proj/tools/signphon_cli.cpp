// Command-line front end for the signphon pipeline. Every stage reads the
// previous stage's serialized artifact, so any step can be re-run or swapped
// in isolation. Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "signphon/signphon.hpp"

namespace fs = std::filesystem;
using namespace signphon;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PipelineConfig {
    double fps = 25.0;
    int min_phoneme_len = kDefaultMinPhonemeLen;
    bool smoothing = false;
    double threshold = 0.5;
    double deletion_cost = 1.0;
    double eps = 0.5;
    int min_samples = 1;
    int max_span_len = 16;
    double target_shoulder_distance = 1.0;
    std::vector<double> target_center{0.0, 0.0};

    SimilarityConfig similarity() const { return {threshold, deletion_cost}; }
    NormalizeTargets targets() const {
        return {target_shoulder_distance, {target_center[0], target_center[1]}};
    }

    void validate() const {
        if (fps <= 0.0) throw UsageError("fps must be > 0");
        if (min_phoneme_len < 1) throw UsageError("min-phoneme-len must be >= 1");
        if (threshold < 0.0 || threshold > 1.0) throw UsageError("threshold must be in [0, 1]");
        if (deletion_cost < 1.0) throw UsageError("deletion-cost must be >= 1");
        if (eps <= 0.0) throw UsageError("eps must be > 0");
        if (min_samples < 1) throw UsageError("min-samples must be >= 1");
        if (max_span_len < 1) throw UsageError("max-span-len must be >= 1");
        if (target_shoulder_distance <= 0.0) throw UsageError("target-shoulder must be > 0");
        if (target_center.size() != 2) throw UsageError("target-center needs two values");
    }
};

void apply_config_file(PipelineConfig& cfg, const fs::path& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(io::read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError(path.string() + ": config must be a flat JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "fps") cfg.fps = value.get<double>();
        else if (key == "min_phoneme_len") cfg.min_phoneme_len = value.get<int>();
        else if (key == "smoothing") cfg.smoothing = value.get<bool>();
        else if (key == "threshold") cfg.threshold = value.get<double>();
        else if (key == "deletion_cost") cfg.deletion_cost = value.get<double>();
        else if (key == "eps") cfg.eps = value.get<double>();
        else if (key == "min_samples") cfg.min_samples = value.get<int>();
        else if (key == "max_span_len") cfg.max_span_len = value.get<int>();
        else if (key == "target_shoulder_distance") cfg.target_shoulder_distance = value.get<double>();
        else if (key == "target_center") cfg.target_center = value.get<std::vector<double>>();
        else throw ConfigError(path.string() + ": unknown config key '" + key + "'");
    }
}

PoseSequence load_pose_input(const fs::path& input, double fps) {
    if (fs::is_directory(input)) return io::load_pose_dir(input, fps);
    return io::load_pose_jsonl(input, fps);
}

Side parse_side(const std::string& name) {
    if (name == "right") return Side::Right;
    if (name == "left") return Side::Left;
    throw UsageError("hand must be 'right' or 'left', got '" + name + "'");
}

/// Loads a phoneme file and narrows it to one hand. "auto" accepts a
/// single-hand file as-is and refuses mixed files, since phonemes of
/// different hands are never compared.
std::vector<Phoneme> load_hand_phonemes(const fs::path& path, const std::string& hand_flag) {
    std::vector<Phoneme> all = io::load_phonemes_json(path);
    if (hand_flag == "auto") {
        const bool has_right = std::any_of(all.begin(), all.end(),
                                           [](const Phoneme& p) { return p.hand == Side::Right; });
        const bool has_left = std::any_of(all.begin(), all.end(),
                                          [](const Phoneme& p) { return p.hand == Side::Left; });
        if (has_right && has_left) {
            throw Error(path.string() + " holds phonemes of both hands; pass --hand right|left");
        }
        return all;
    }
    const Side side = parse_side(hand_flag);
    std::vector<Phoneme> out;
    for (Phoneme& p : all) {
        if (p.hand == side) out.push_back(std::move(p));
    }
    return out;
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? io::fmt_g9(*v) : "undefined";
}

// --------------------------------------------------------------------------
// Subcommand bodies
// --------------------------------------------------------------------------

void run_ingest(const PipelineConfig& cfg, const fs::path& input, const fs::path& output) {
    PoseSequence seq = load_pose_input(input, cfg.fps);
    int anchored = 0;
    for (const KeypointFrame& f : seq.frames) anchored += has_valid_shoulders(f) ? 1 : 0;
    PoseSequence normalized = normalize_sequence(seq, cfg.targets());
    io::write_pose_jsonl(output, normalized);
    std::cout << "ingest: frames=" << normalized.frames.size() << " anchored=" << anchored
              << " -> " << output.string() << "\n";
}

void run_extract(const fs::path& input, const fs::path& output, double fps) {
    PoseSequence seq = io::load_pose_jsonl(input, fps);
    std::vector<PhonoFrame> phono = extract_phonology(seq);
    io::write_phonology_jsonl(output, phono);
    std::cout << "extract: frames=" << phono.size() << " -> " << output.string() << "\n";
}

struct SegmentResult {
    std::vector<Phoneme> phonemes;
    std::vector<int> boundaries;
};

SegmentResult segment_hand(const std::vector<PhonoFrame>& phono, Side hand,
                           const PipelineConfig& cfg) {
    SpeedSeries speeds = speed_series(phono, hand);
    if (cfg.smoothing) speeds = smooth_speed(speeds);
    SegmentResult r;
    r.boundaries = segment_boundaries(speeds);
    r.phonemes = phonemes_from_boundaries(phono, r.boundaries, hand, cfg.min_phoneme_len);
    return r;
}

void run_segment(const PipelineConfig& cfg, const fs::path& input, const fs::path& output,
                 const std::string& hand_flag, const fs::path& histogram_out,
                 const fs::path& boundaries_out) {
    std::vector<PhonoFrame> phono = io::load_phonology_jsonl(input);
    std::vector<Side> hands;
    if (hand_flag == "both") {
        hands = {Side::Right, Side::Left};
    } else {
        hands = {parse_side(hand_flag)};
    }

    std::vector<Phoneme> all;
    nlohmann::json bounds_doc;
    std::string counts;
    for (Side hand : hands) {
        SegmentResult r = segment_hand(phono, hand, cfg);
        counts += std::string(counts.empty() ? "" : " ") + to_string(hand) + "=" +
                  std::to_string(r.phonemes.size());
        bounds_doc[to_string(hand)] = r.boundaries;
        all.insert(all.end(), r.phonemes.begin(), r.phonemes.end());
    }
    io::write_phonemes_json(output, all);
    if (!boundaries_out.empty()) io::open_out(boundaries_out) << bounds_doc.dump(1) << '\n';
    if (!histogram_out.empty()) io::write_histogram_csv(histogram_out, length_histogram(all));
    std::cout << "segment: " << counts << " -> " << output.string() << "\n";
}

void run_cluster(const PipelineConfig& cfg, const fs::path& input, const fs::path& output,
                 const std::string& method, const std::string& hand_flag,
                 const fs::path& affinity_out, unsigned threads) {
    std::vector<Phoneme> phonemes = load_hand_phonemes(input, hand_flag);
    if (phonemes.empty()) throw Error(input.string() + ": no phonemes for the requested hand");
    AffinityMatrix m = affinity_matrix(phonemes, cfg.similarity(), threads);
    if (!affinity_out.empty()) io::write_affinity_csv(affinity_out, m);

    Clustering c = method == "grouping" ? grouping_cluster(m, cfg.threshold)
                                        : dbscan_cluster(m, {cfg.eps, cfg.min_samples});
    c.silhouette = silhouette_score(m, c);
    io::write_clustering_csv(output, phonemes, c);
    std::cout << "cluster: method=" << method
              << (method == "grouping"
                      ? " threshold=" + io::fmt_g9(cfg.threshold)
                      : " eps=" + io::fmt_g9(cfg.eps) +
                            " min_samples=" + std::to_string(cfg.min_samples))
              << " phonemes=" << phonemes.size() << " clusters=" << c.n_clusters
              << " noise=" << c.noise_count() << " silhouette=" << fmt_opt(c.silhouette) << " -> "
              << output.string() << "\n";
}

void run_sweep(const PipelineConfig& cfg, const fs::path& input, const fs::path& output,
               const std::string& method, const std::string& hand_flag,
               std::vector<double> thresholds, std::vector<int> min_samples_grid,
               unsigned threads) {
    std::vector<Phoneme> phonemes = load_hand_phonemes(input, hand_flag);
    if (phonemes.empty()) throw Error(input.string() + ": no phonemes for the requested hand");
    AffinityMatrix m = affinity_matrix(phonemes, cfg.similarity(), threads);
    std::vector<SweepRow> rows = method == "grouping"
                                     ? sweep_grouping(m, thresholds)
                                     : sweep_dbscan(m, cfg.eps, min_samples_grid);
    io::write_sweep_csv(output, rows);
    std::cout << "sweep: method=" << method << " rows=" << rows.size() << " -> "
              << output.string() << "\n";
}

void run_silhouette(const PipelineConfig& cfg, const fs::path& input, const fs::path& labels_path,
                    const std::string& hand_flag, const fs::path& output) {
    std::vector<Phoneme> phonemes = load_hand_phonemes(input, hand_flag);
    std::vector<int> labels = io::load_labels_csv(labels_path);
    if (labels.size() != phonemes.size()) {
        throw Error(labels_path.string() + ": label count does not match phoneme count");
    }
    AffinityMatrix m = affinity_matrix(phonemes, cfg.similarity());
    Clustering c;
    c.labels = labels;
    c.n_clusters = detail::canonicalize_labels(c.labels);
    const std::optional<double> score = silhouette_score(m, c);
    if (!output.empty()) io::open_out(output) << fmt_opt(score) << '\n';
    std::cout << "silhouette: value=" << fmt_opt(score) << " clusters=" << c.n_clusters
              << " noise=" << c.noise_count() << "\n";
}

void run_project(const PipelineConfig& cfg, const fs::path& input, const fs::path& output,
                 const std::string& hand_flag, const fs::path& labels_path) {
    std::vector<Phoneme> phonemes = load_hand_phonemes(input, hand_flag);
    AffinityMatrix m = affinity_matrix(phonemes, cfg.similarity());
    std::vector<int> labels;
    if (!labels_path.empty()) {
        labels = io::load_labels_csv(labels_path);
        if (labels.size() != phonemes.size()) {
            throw Error(labels_path.string() + ": label count does not match phoneme count");
        }
    } else {
        labels = grouping_cluster(m, cfg.threshold).labels;
    }
    Projection2D proj = project_2d(m);
    io::write_projection_csv(output, proj, labels);
    std::cout << "project: phonemes=" << phonemes.size() << " explained="
              << io::fmt_g9(proj.explained[0]) << "," << io::fmt_g9(proj.explained[1]) << " -> "
              << output.string() << "\n";
}

void run_match(const PipelineConfig& cfg, const fs::path& input, const fs::path& output,
               const std::string& hand_flag) {
    std::vector<Phoneme> phonemes = load_hand_phonemes(input, hand_flag);
    std::vector<SpanMatch> matches = match_spans(phonemes, cfg.similarity(), cfg.max_span_len);
    if (!output.empty()) io::write_matches_json(output, matches);
    std::cout << span_report(matches, cfg.fps);
    std::cout << "match: matches=" << matches.size()
              << (output.empty() ? "" : " -> " + output.string()) << "\n";
}

void run_synth(const fs::path& script_path, const fs::path& output, const fs::path& truth_out) {
    Script script = io::load_script_json(script_path);
    auto [seq, truth] = generate(script);
    io::write_openpose_jsonl(output, seq);
    if (!truth_out.empty()) io::write_ground_truth_json(truth_out, truth);
    std::cout << "synth: frames=" << seq.frames.size()
              << " boundaries=" << truth.true_boundaries.size() << " -> " << output.string()
              << "\n";
}

void run_pipeline(const PipelineConfig& cfg, const fs::path& input, const fs::path& outdir,
                  const std::string& method, unsigned threads) {
    fs::create_directories(outdir);

    PoseSequence raw = load_pose_input(input, cfg.fps);
    PoseSequence normalized = normalize_sequence(raw, cfg.targets());
    io::write_pose_jsonl(outdir / "normalized.jsonl", normalized);
    std::cout << "pipeline/ingest: frames=" << normalized.frames.size() << "\n";

    std::vector<PhonoFrame> phono = extract_phonology(normalized);
    io::write_phonology_jsonl(outdir / "phonology.jsonl", phono);
    std::cout << "pipeline/extract: frames=" << phono.size() << "\n";

    nlohmann::json bounds_doc;
    for (Side hand : {Side::Right, Side::Left}) {
        const std::string name = to_string(hand);
        SegmentResult seg = segment_hand(phono, hand, cfg);
        bounds_doc[name] = seg.boundaries;
        io::write_phonemes_json(outdir / ("phonemes_" + name + ".json"), seg.phonemes);
        io::write_histogram_csv(outdir / ("lengths_" + name + ".csv"),
                                length_histogram(seg.phonemes));
        std::cout << "pipeline/segment: hand=" << name << " phonemes=" << seg.phonemes.size()
                  << "\n";
        if (seg.phonemes.empty()) continue;

        AffinityMatrix m = affinity_matrix(seg.phonemes, cfg.similarity(), threads);
        Clustering c = method == "grouping" ? grouping_cluster(m, cfg.threshold)
                                            : dbscan_cluster(m, {cfg.eps, cfg.min_samples});
        c.silhouette = silhouette_score(m, c);
        io::write_clustering_csv(outdir / ("clustering_" + name + ".csv"), seg.phonemes, c);
        std::cout << "pipeline/cluster: hand=" << name << " clusters=" << c.n_clusters
                  << " noise=" << c.noise_count() << " silhouette=" << fmt_opt(c.silhouette)
                  << "\n";

        std::vector<double> grid;
        for (int k = 0; k <= 10; ++k) grid.push_back(k * 0.1);
        io::write_sweep_csv(outdir / ("sweep_grouping_" + name + ".csv"), sweep_grouping(m, grid));
        io::write_sweep_csv(outdir / ("sweep_dbscan_" + name + ".csv"),
                            sweep_dbscan(m, cfg.eps, {1, 2, 3, 4, 5}));

        if (m.size() >= 3) {
            io::write_projection_csv(outdir / ("projection_" + name + ".csv"), project_2d(m),
                                     c.labels);
        }
        std::vector<SpanMatch> matches = match_spans(seg.phonemes, cfg.similarity(),
                                                     cfg.max_span_len);
        io::write_matches_json(outdir / ("matches_" + name + ".json"), matches);
        std::cout << "pipeline/match: hand=" << name << " matches=" << matches.size() << "\n";
    }
    io::open_out(outdir / "boundaries.json") << bounds_doc.dump(1) << '\n';
    std::cout << "pipeline: done -> " << outdir.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    PipelineConfig cfg;

    // Config-file values must sit under the flags, so resolve --config before
    // CLI11 binds option defaults.
    try {
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config" && i + 1 < argc) {
                apply_config_file(cfg, argv[i + 1]);
            } else if (arg.rfind("--config=", 0) == 0) {
                apply_config_file(cfg, arg.substr(9));
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"phoneme discovery for continuous signing pose streams"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    std::string config_dummy;
    app.add_option("--config", config_dummy, "flat JSON config file (flags take precedence)");

    std::string input, output, hand = "auto", method = "grouping";
    std::string labels_path, histogram_out, boundaries_out, affinity_out, truth_out, outdir;
    std::string script_path;
    unsigned threads = 1;
    std::vector<double> thresholds{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    std::vector<int> min_samples_grid{1, 2, 3, 4, 5};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_dummy, "flat JSON config file");
        sub->add_option("--fps", cfg.fps, "frames per second")->capture_default_str();
    };

    CLI::App* c_ingest = app.add_subcommand("ingest", "parse pose JSON and normalize geometry");
    c_ingest->add_option("--input", input, "keypoint directory or JSON-lines file")->required();
    c_ingest->add_option("--output", output, "normalized JSON-lines output")->required();
    c_ingest->add_option("--target-shoulder", cfg.target_shoulder_distance,
                         "canonical shoulder distance")->capture_default_str();
    c_ingest->add_option("--target-center", cfg.target_center, "canonical mid-shoulder point")
        ->expected(2);
    add_common(c_ingest);

    CLI::App* c_extract = app.add_subcommand("extract", "phonological descriptors per frame");
    c_extract->add_option("--input", input, "normalized JSON-lines file")->required();
    c_extract->add_option("--output", output, "phonology JSON-lines output")->required();
    add_common(c_extract);

    CLI::App* c_segment = app.add_subcommand("segment", "split the stream into phonemes");
    c_segment->add_option("--input", input, "phonology JSON-lines file")->required();
    c_segment->add_option("--output", output, "phoneme JSON output")->required();
    c_segment->add_option("--hand", hand, "right, left, or both")->default_val("both");
    c_segment->add_option("--min-len", cfg.min_phoneme_len, "minimum phoneme length in frames")
        ->capture_default_str();
    c_segment->add_flag("--smooth", cfg.smoothing, "3-tap moving average before differencing");
    c_segment->add_option("--histogram", histogram_out, "phoneme length histogram CSV");
    c_segment->add_option("--boundaries-out", boundaries_out, "boundary indices JSON");
    add_common(c_segment);

    auto add_metric_opts = [&](CLI::App* sub) {
        sub->add_option("--threshold", cfg.threshold, "similarity threshold T")
            ->capture_default_str();
        sub->add_option("--deletion-cost", cfg.deletion_cost, "insertion/deletion cost")
            ->capture_default_str();
        sub->add_option("--hand", hand, "right, left, or auto")->default_val("auto");
        sub->add_option("--threads", threads, "worker threads for the affinity matrix")
            ->capture_default_str();
    };

    CLI::App* c_cluster = app.add_subcommand("cluster", "group phonemes by similarity");
    c_cluster->add_option("--input", input, "phoneme JSON file")->required();
    c_cluster->add_option("--output", output, "clustering CSV output")->required();
    c_cluster->add_option("--method", method, "grouping or dbscan")
        ->check(CLI::IsMember({"grouping", "dbscan"}))->default_val("grouping");
    c_cluster->add_option("--eps", cfg.eps, "DBSCAN neighborhood radius")->capture_default_str();
    c_cluster->add_option("--min-samples", cfg.min_samples, "DBSCAN core threshold")
        ->capture_default_str();
    c_cluster->add_option("--affinity-out", affinity_out, "affinity matrix CSV");
    add_metric_opts(c_cluster);
    add_common(c_cluster);

    CLI::App* c_sweep = app.add_subcommand("sweep", "cluster statistics across a parameter grid");
    c_sweep->add_option("--input", input, "phoneme JSON file")->required();
    c_sweep->add_option("--output", output, "sweep CSV output")->required();
    c_sweep->add_option("--method", method, "grouping or dbscan")
        ->check(CLI::IsMember({"grouping", "dbscan"}))->default_val("grouping");
    c_sweep->add_option("--thresholds", thresholds, "grouping threshold grid");
    c_sweep->add_option("--min-samples-grid", min_samples_grid, "DBSCAN min_samples grid");
    c_sweep->add_option("--eps", cfg.eps, "DBSCAN neighborhood radius")->capture_default_str();
    add_metric_opts(c_sweep);
    add_common(c_sweep);

    CLI::App* c_sil = app.add_subcommand("silhouette", "score a clustering");
    c_sil->add_option("--input", input, "phoneme JSON file")->required();
    c_sil->add_option("--labels", labels_path, "clustering CSV")->required();
    c_sil->add_option("--output", output, "optional output file for the score");
    add_metric_opts(c_sil);
    add_common(c_sil);

    CLI::App* c_project = app.add_subcommand("project", "2-D embedding of the affinity matrix");
    c_project->add_option("--input", input, "phoneme JSON file")->required();
    c_project->add_option("--output", output, "projection CSV output")->required();
    c_project->add_option("--labels", labels_path, "clustering CSV for the label column");
    add_metric_opts(c_project);
    add_common(c_project);

    CLI::App* c_match = app.add_subcommand("match", "find repeated spans of consecutive phonemes");
    c_match->add_option("--input", input, "phoneme JSON file")->required();
    c_match->add_option("--output", output, "matches JSON output");
    c_match->add_option("--max-len", cfg.max_span_len, "maximum span length in phonemes")
        ->capture_default_str();
    add_metric_opts(c_match);
    add_common(c_match);

    CLI::App* c_synth = app.add_subcommand("synth", "generate scripted keypoints + ground truth");
    c_synth->add_option("--script", script_path, "script JSON file")->required();
    c_synth->add_option("--output", output, "keypoint JSON-lines output")->required();
    c_synth->add_option("--truth", truth_out, "ground truth JSON output");
    add_common(c_synth);

    CLI::App* c_pipeline = app.add_subcommand("pipeline", "run every stage into a directory");
    c_pipeline->add_option("--input", input, "keypoint directory or JSON-lines file")->required();
    c_pipeline->add_option("--outdir", outdir, "artifact directory")->required();
    c_pipeline->add_option("--method", method, "grouping or dbscan")
        ->check(CLI::IsMember({"grouping", "dbscan"}))->default_val("grouping");
    c_pipeline->add_option("--threshold", cfg.threshold, "similarity threshold T")
        ->capture_default_str();
    c_pipeline->add_option("--deletion-cost", cfg.deletion_cost, "insertion/deletion cost")
        ->capture_default_str();
    c_pipeline->add_option("--eps", cfg.eps, "DBSCAN neighborhood radius")->capture_default_str();
    c_pipeline->add_option("--min-samples", cfg.min_samples, "DBSCAN core threshold")
        ->capture_default_str();
    c_pipeline->add_option("--min-len", cfg.min_phoneme_len, "minimum phoneme length in frames")
        ->capture_default_str();
    c_pipeline->add_flag("--smooth", cfg.smoothing, "3-tap moving average before differencing");
    c_pipeline->add_option("--max-len", cfg.max_span_len, "maximum span length in phonemes")
        ->capture_default_str();
    c_pipeline->add_option("--threads", threads, "worker threads for the affinity matrix")
        ->capture_default_str();
    add_common(c_pipeline);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        cfg.validate();
        if (threads < 1) throw UsageError("threads must be >= 1");

        if (c_ingest->parsed()) run_ingest(cfg, input, output);
        else if (c_extract->parsed()) run_extract(input, output, cfg.fps);
        else if (c_segment->parsed()) run_segment(cfg, input, output, hand, histogram_out,
                                                  boundaries_out);
        else if (c_cluster->parsed()) run_cluster(cfg, input, output, method, hand, affinity_out,
                                                  threads);
        else if (c_sweep->parsed()) run_sweep(cfg, input, output, method, hand, thresholds,
                                              min_samples_grid, threads);
        else if (c_sil->parsed()) run_silhouette(cfg, input, labels_path, hand, output);
        else if (c_project->parsed()) run_project(cfg, input, output, hand, labels_path);
        else if (c_match->parsed()) run_match(cfg, input, output, hand);
        else if (c_synth->parsed()) run_synth(script_path, output, truth_out);
        else if (c_pipeline->parsed()) run_pipeline(cfg, input, outdir, method, threads);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
