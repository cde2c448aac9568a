// End-to-end walkthrough on synthetic data: script a short "song" whose verse
// repeats three times, run the pipeline in-process, and print the cluster
// sweep and the repeated spans it finds.

#include <iostream>

#include "signphon/signphon.hpp"

using namespace signphon;

int main() {
    Script script;
    script.seed = 7;
    script.start = {0.3, 0.5};
    script.segments = {
        {{0.45, 0.05}, 0, 4, 9},   // intro
        {{-0.30, -0.35}, 2, 4, 9}, // verse: eye level, palm down-left
        {{0.40, 0.90}, 6, 4, 9},   //        abdomen level, palm up
        {{-0.15, 0.10}, 4, 4, 9},  //        shoulder level, palm left
        {{0.50, 0.60}, 1, 4, 9},   // outro
    };
    script.repeats = {{1, 4, 3}};  // the verse plays three times

    auto [sequence, truth] = generate(script);
    PoseSequence normalized = normalize_sequence(sequence);
    std::vector<PhonoFrame> phonology = extract_phonology(normalized);

    SpeedSeries speeds = speed_series(phonology, Side::Right);
    std::vector<int> boundaries = segment_boundaries(speeds);
    std::vector<Phoneme> phonemes = phonemes_from_boundaries(phonology, boundaries, Side::Right);
    std::cout << "frames: " << sequence.frames.size() << ", phonemes: " << phonemes.size()
              << "\n\n";

    AffinityMatrix affinity = affinity_matrix(phonemes);
    std::cout << "grouping sweep (threshold -> clusters, mean size, silhouette):\n";
    for (const SweepRow& row : sweep_grouping(affinity, {0.0, 0.25, 0.5, 0.75, 1.0})) {
        std::cout << "  T=" << row.param << " -> " << row.n_clusters << " clusters, mean size "
                  << row.mean_size << ", silhouette "
                  << (row.silhouette ? std::to_string(*row.silhouette) : "undefined") << "\n";
    }

    // A strict threshold and a span cap of one verse keep the report focused
    // on real repetitions; the verse is 3 segments of 3 phonemes each.
    std::vector<SpanMatch> matches = match_spans(phonemes, {0.85, 1.0}, 9);
    std::cout << "\nrepeated spans at T=0.85 (top by similarity):\n";
    std::sort(matches.begin(), matches.end(),
              [](const SpanMatch& x, const SpanMatch& y) { return x.similarity > y.similarity; });
    int shown = 0;
    for (const SpanMatch& m : matches) {
        if (m.a.length() < 9) continue;
        std::cout << "  frames " << m.a.start_frame << "-" << m.a.end_frame << "  vs  "
                  << m.b.start_frame << "-" << m.b.end_frame << "  similarity " << m.similarity
                  << "\n";
        if (++shown == 4) break;
    }

    std::cout << "\nintended verse instances:\n";
    for (const auto& [start, end] : truth.verse_spans[0]) {
        std::cout << "  frames " << start << "-" << end << "\n";
    }
    return 0;
}
