#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "signphon/metric.hpp"

using namespace signphon;
using oracles::make_phoneme;

TEST_CASE("symbol_distance ranges") {
    const PhonoSymbol a{0, LocationLevel::Eye};
    SECTION("identity") {
        const SymbolCost c = symbol_distance(a, a);
        CHECK(c.orientation_distance == 0);
        CHECK(c.location_distance == 0);
        CHECK(c.combined == 0.0);
    }
    SECTION("maximal: opposite sector, eye vs abdomen") {
        const SymbolCost c = symbol_distance(a, {4, LocationLevel::Abdomen});
        CHECK(c.orientation_distance == 4);
        CHECK(c.location_distance == 2);
        CHECK(c.combined == 1.0);
    }
    SECTION("circular wrap") {
        CHECK(symbol_distance(a, {7, LocationLevel::Eye}).orientation_distance == 1);
        CHECK(symbol_distance({1, LocationLevel::Eye}, {6, LocationLevel::Eye})
                  .orientation_distance == 3);
    }
}

TEST_CASE("phoneme_distance basics") {
    const Phoneme p = make_phoneme({{0, LocationLevel::Eye}, {1, LocationLevel::Shoulder}});
    CHECK(phoneme_distance(p, p) == 0.0);

    const Phoneme a = make_phoneme({{0, LocationLevel::Eye}});
    const Phoneme b = make_phoneme({{4, LocationLevel::Abdomen}});
    CHECK(phoneme_distance(a, b) == 1.0);

    const Phoneme empty = make_phoneme({});
    CHECK_THROWS_AS(phoneme_distance(empty, p), EmptyPhoneme);
    CHECK_THROWS_AS(phoneme_distance(p, empty), EmptyPhoneme);
}

TEST_CASE("phoneme_distance rejects deletion cost below 1") {
    const Phoneme p = make_phoneme({{0, LocationLevel::Eye}});
    CHECK_THROWS_AS(phoneme_distance(p, p, {0.5, 0.5}), ConfigError);
}

TEST_CASE("phoneme_distance equals the exhaustive edit-script oracle") {
    std::mt19937 gen(321);
    std::uniform_int_distribution<int> len(1, 5);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<PhonoSymbol> a, b;
        for (int i = len(gen); i > 0; --i) a.push_back(oracles::random_symbol(gen));
        for (int i = len(gen); i > 0; --i) b.push_back(oracles::random_symbol(gen));
        const double dp = phoneme_distance(std::span<const PhonoSymbol>(a),
                                           std::span<const PhonoSymbol>(b));
        const double ref = oracles::oracle_phoneme_distance(a, b);
        REQUIRE(dp == ref);  // costs are dyadic rationals, so equality is exact
    }
}

TEST_CASE("phoneme_distance is symmetric and depends only on symbols") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto ps = oracles::random_phonemes(gen, 2, 1, 6);
        REQUIRE(phoneme_distance(ps[0], ps[1]) == phoneme_distance(ps[1], ps[0]));

        Phoneme moved = ps[0];
        moved.start_frame += 1000;
        moved.end_frame += 1000;
        REQUIRE(phoneme_distance(moved, ps[1]) == phoneme_distance(ps[0], ps[1]));
    }
}

TEST_CASE("similar thresholds") {
    std::mt19937 gen(13);
    const auto ps = oracles::random_phonemes(gen, 30, 1, 5);

    SECTION("T=0 accepts every pair") {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            for (std::size_t j = 0; j < ps.size(); ++j) {
                CHECK(similar(ps[i], ps[j], {0.0, 1.0}));
            }
        }
    }
    SECTION("T=1 accepts only identical symbol sequences") {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            for (std::size_t j = 0; j < ps.size(); ++j) {
                CHECK(similar(ps[i], ps[j], {1.0, 1.0}) == (ps[i].symbols == ps[j].symbols));
            }
        }
    }
    SECTION("threshold arithmetic at T=0.5") {
        // Two 5-symbol phonemes differing in 2 maximal symbols: d = 0.4.
        std::vector<PhonoSymbol> a(5, {0, LocationLevel::Eye});
        std::vector<PhonoSymbol> b = a;
        b[0] = {4, LocationLevel::Abdomen};
        b[1] = {4, LocationLevel::Abdomen};
        CHECK(phoneme_distance(make_phoneme(a), make_phoneme(b)) == 0.4);
        CHECK(similar(make_phoneme(a), make_phoneme(b), {0.5, 1.0}));

        // Three maximal substitutions: d = 0.6, no longer similar.
        b[2] = {4, LocationLevel::Abdomen};
        CHECK(phoneme_distance(make_phoneme(a), make_phoneme(b)) == 0.6);
        CHECK(!similar(make_phoneme(a), make_phoneme(b), {0.5, 1.0}));
    }
}

TEST_CASE("raising T never turns a dissimilar pair similar") {
    std::mt19937 gen(17);
    const auto ps = oracles::random_phonemes(gen, 20, 1, 5);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            bool prev = true;
            for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const bool now = similar(ps[i], ps[j], {t, 1.0});
                REQUIRE((prev || !now));
                prev = now;
            }
        }
    }
}

TEST_CASE("affinity_matrix structure") {
    std::mt19937 gen(29);
    auto ps = oracles::random_phonemes(gen, 12, 1, 5);
    ps.push_back(ps[3]);  // duplicate phoneme

    const AffinityMatrix m = affinity_matrix(ps);
    REQUIRE(m.size() == ps.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(m.at(i, i) == 0.0);
        for (std::size_t j = 0; j < m.size(); ++j) {
            CHECK(m.at(i, j) == m.at(j, i));
            CHECK(m.at(i, j) >= 0.0);
            CHECK(m.at(i, j) <= 1.0);
        }
    }
    CHECK(m.at(3, ps.size() - 1) == 0.0);

    const AffinityMatrix single = affinity_matrix({ps[0]});
    CHECK(single.size() == 1);
    CHECK(single.at(0, 0) == 0.0);

    CHECK_THROWS_AS(affinity_matrix({}), EmptyPhoneme);
}

TEST_CASE("parallel affinity matrix is bit-identical to sequential") {
    std::mt19937 gen(43);
    const auto ps = oracles::random_phonemes(gen, 60, 1, 6);
    const AffinityMatrix seq = affinity_matrix(ps, {}, 1);
    for (unsigned threads : {2u, 3u, 8u}) {
        const AffinityMatrix par = affinity_matrix(ps, {}, threads);
        REQUIRE(par.size() == seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i) {
            for (std::size_t j = 0; j < seq.size(); ++j) {
                REQUIRE(par.at(i, j) == seq.at(i, j));
            }
        }
    }
}
