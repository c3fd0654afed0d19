#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "emofuse/emotion.hpp"

using namespace emofuse;

namespace {

EmotionVector make_vector(std::initializer_list<std::pair<Emotion, double>> entries) {
    std::array<double, kEmotionCount> scores{};
    for (const auto& [e, s] : entries) scores[static_cast<std::size_t>(e)] = s;
    return EmotionVector(scores);
}

} // namespace

TEST_CASE("emotion names round-trip through parsing") {
    for (Emotion e : kAllEmotions) {
        CHECK(parse_emotion(to_string(e)) == e);
    }
    CHECK(parse_emotion("HAPPY") == Emotion::happy);
    CHECK(parse_emotion("Fear") == Emotion::fear);
    CHECK(parse_emotion("fearful") == Emotion::fear);
    CHECK(parse_emotion("FEARFUL") == Emotion::fear);
    CHECK_THROWS_AS(parse_emotion("joyful"), ParseError);
    CHECK_THROWS_AS(parse_emotion(""), ParseError);
}

TEST_CASE("quadrant mapping is total and matches the plane placement") {
    CHECK(quadrant(Emotion::neutral) == QuadrantTag{Valence::neutral, ArousalLevel::neutral});
    CHECK(quadrant(Emotion::happy) == QuadrantTag{Valence::positive, ArousalLevel::high});
    CHECK(quadrant(Emotion::surprise) == QuadrantTag{Valence::positive, ArousalLevel::high});
    CHECK(quadrant(Emotion::angry) == QuadrantTag{Valence::negative, ArousalLevel::high});
    CHECK(quadrant(Emotion::fear) == QuadrantTag{Valence::negative, ArousalLevel::high});
    CHECK(quadrant(Emotion::sad) == QuadrantTag{Valence::negative, ArousalLevel::low});
    CHECK(quadrant(Emotion::disgust) == QuadrantTag{Valence::negative, ArousalLevel::low});
}

TEST_CASE("perception groups pair the early-confusable emotions") {
    CHECK(perception_group(Emotion::angry) == perception_group(Emotion::disgust));
    CHECK(perception_group(Emotion::fear) == perception_group(Emotion::surprise));
    CHECK(perception_group(Emotion::happy) != perception_group(Emotion::sad));
}

TEST_CASE("dominant picks the maximal score with canonical tie-break") {
    // First published frame: neutral 0.87 leads.
    const auto f1 = make_vector({{Emotion::angry, 0.01},
                                 {Emotion::fear, 0.03},
                                 {Emotion::happy, 0.04},
                                 {Emotion::neutral, 0.87},
                                 {Emotion::sad, 0.05}});
    CHECK(dominant(f1) == Emotion::neutral);

    // Third published frame: happy 0.84 leads.
    const auto f3 = make_vector({{Emotion::angry, 0.01},
                                 {Emotion::fear, 0.01},
                                 {Emotion::happy, 0.84},
                                 {Emotion::neutral, 0.14}});
    CHECK(dominant(f3) == Emotion::happy);

    std::array<double, kEmotionCount> equal{};
    equal.fill(0.3);
    CHECK(dominant(EmotionVector(equal)) == Emotion::angry);
}

TEST_CASE("dominant is stable under field permutation") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> score(0.0, 1.0);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<std::pair<Emotion, double>> entries;
        for (Emotion e : kAllEmotions) entries.emplace_back(e, score(rng));
        std::array<double, kEmotionCount> scores{};
        for (const auto& [e, s] : entries) scores[static_cast<std::size_t>(e)] = s;
        const Emotion expected = dominant(EmotionVector(scores));
        std::shuffle(entries.begin(), entries.end(), rng);
        std::array<double, kEmotionCount> shuffled{};
        for (const auto& [e, s] : entries) shuffled[static_cast<std::size_t>(e)] = s;
        CHECK(dominant(EmotionVector(shuffled)) == expected);
    }
}

TEST_CASE("from_label builds scaled one-hot vectors") {
    const auto sad = from_label("sad", 1.0);
    CHECK(sad[Emotion::sad] == doctest::Approx(1.0));
    for (Emotion e : kAllEmotions) {
        if (e != Emotion::sad) CHECK(sad[e] == doctest::Approx(0.0));
    }

    const auto fearful = from_label("fearful", 1.0);
    CHECK(fearful[Emotion::fear] == doctest::Approx(1.0));

    CHECK(from_label("happy", 0.6)[Emotion::happy] == doctest::Approx(0.6));
    CHECK(from_label("happy", 1.7)[Emotion::happy] == doctest::Approx(1.0)); // weight clamped
    CHECK_THROWS_AS(from_label("joyful", 1.0), ParseError);

    for (Emotion e : kAllEmotions) {
        CHECK(dominant(from_label(to_string(e))) == e);
    }
}

TEST_CASE("emotion vectors clamp scores and reject non-finite values") {
    std::array<double, kEmotionCount> scores{};
    scores[static_cast<std::size_t>(Emotion::happy)] = 1.2;
    scores[static_cast<std::size_t>(Emotion::sad)] = -0.4;
    const EmotionVector v(scores);
    CHECK(v[Emotion::happy] == doctest::Approx(1.0));
    CHECK(v[Emotion::sad] == doctest::Approx(0.0));

    scores[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(EmotionVector{scores}, ParseError);
    scores[0] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(EmotionVector{scores}, ParseError);
}
