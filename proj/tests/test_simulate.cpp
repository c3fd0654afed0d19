#include <doctest.h>

#include <set>

#include "emofuse/simulate.hpp"
#include "emofuse/timeline.hpp"

using namespace emofuse;

TEST_CASE("archetype names parse and print") {
    CHECK(parse_archetype("fight") == Archetype::fight);
    CHECK(parse_archetype("racing") == Archetype::racing);
    CHECK(parse_archetype("logic") == Archetype::logic);
    CHECK_THROWS_AS(parse_archetype("chess"), Error);
    for (Archetype a : {Archetype::fight, Archetype::racing, Archetype::logic}) {
        CHECK(parse_archetype(to_string(a)) == a);
    }
}

TEST_CASE("archetype parameters satisfy their structural constraints") {
    for (Archetype a : {Archetype::fight, Archetype::racing, Archetype::logic}) {
        const auto params = archetype_params(a);
        for (double w : params.base_weights) CHECK(w >= 0.0);
        CHECK(params.switch_probability >= 0.0);
        CHECK(params.switch_probability <= 1.0);
    }
    // The fight palette spans at least four emotions with frequent switching.
    const auto fight = archetype_params(Archetype::fight);
    int nonzero = 0;
    for (double w : fight.base_weights) {
        if (w > 0.0) ++nonzero;
    }
    CHECK(nonzero >= 4);
    CHECK(fight.switch_probability >= 0.3);
}

TEST_CASE("simulated sessions parse cleanly with zero diagnostics") {
    for (Archetype a : {Archetype::fight, Archetype::racing, Archetype::logic}) {
        for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
            const auto session = simulate(a, 30, seed);
            Diagnostics diag;
            const auto audio = parse_audio_labels(session.audio_csv, &diag);
            const auto video = parse_video_csv(session.video_csv, &diag);
            CHECK(diag.empty());
            CHECK(audio.size() == 30);
            CHECK(video.size() == 30);
            CHECK_NOTHROW(align(audio, video));
        }
    }
}

TEST_CASE("simulation is deterministic per (archetype, duration, seed)") {
    for (Archetype a : {Archetype::fight, Archetype::logic}) {
        const auto first = simulate(a, 60, 7);
        const auto second = simulate(a, 60, 7);
        CHECK(first.audio_csv == second.audio_csv);
        CHECK(first.video_csv == second.video_csv);
    }
    const auto seed_a = simulate(Archetype::fight, 60, 7);
    const auto seed_b = simulate(Archetype::fight, 60, 8);
    CHECK(seed_a.audio_csv != seed_b.audio_csv);
}

TEST_CASE("logic sessions are neutral-dominant in at least 70% of seconds") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (int duration : {10, 61}) {
            const auto session = simulate(Archetype::logic, duration, seed);
            const auto audio = parse_audio_labels(session.audio_csv);
            const auto video = parse_video_csv(session.video_csv);
            int neutral_audio = 0;
            int neutral_video = 0;
            for (const auto& p : audio) {
                if (dominant(p.v) == Emotion::neutral) ++neutral_audio;
            }
            for (const auto& p : video) {
                if (dominant(p.v) == Emotion::neutral) ++neutral_video;
            }
            CHECK(neutral_audio * 10 >= duration * 7);
            CHECK(neutral_video * 10 >= duration * 7);
        }
    }
}

TEST_CASE("fight sessions draw dominants from a wide palette") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto session = simulate(Archetype::fight, 600, seed);
        const auto audio = parse_audio_labels(session.audio_csv);
        std::set<Emotion> seen;
        for (const auto& p : audio) seen.insert(dominant(p.v));
        CHECK(seen.size() >= 4);
    }
}

TEST_CASE("video vectors keep the current dominant on top") {
    const auto session = simulate(Archetype::racing, 120, 3);
    const auto audio = parse_audio_labels(session.audio_csv);
    const auto video = parse_video_csv(session.video_csv);
    REQUIRE(audio.size() == video.size());
    for (std::size_t i = 0; i < audio.size(); ++i) {
        CHECK(dominant(video[i].v) == dominant(audio[i].v));
    }
}

TEST_CASE("simulation rejects too-short durations") {
    CHECK_THROWS_AS(simulate(Archetype::fight, 1, 0), Error);
    CHECK_THROWS_AS(simulate(Archetype::fight, 0, 0), Error);
    CHECK_NOTHROW(simulate(Archetype::fight, 2, 0));
}
