#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "emofuse/errors.hpp"

namespace emofuse {

// The seven recognized emotion categories. The enumerator order is the
// canonical (alphabetical) order used everywhere for iteration, tie-breaking
// and file column layout.
enum class Emotion : std::size_t {
    angry = 0,
    disgust,
    fear,
    happy,
    neutral,
    sad,
    surprise,
};

inline constexpr std::size_t kEmotionCount = 7;

inline constexpr std::array<Emotion, kEmotionCount> kAllEmotions = {
    Emotion::angry, Emotion::disgust, Emotion::fear,    Emotion::happy,
    Emotion::neutral, Emotion::sad,   Emotion::surprise,
};

// Lowercase ASCII token, the only spelling ever emitted.
std::string_view to_string(Emotion e);

// Case-insensitive parse. Accepts "fearful" as an alias for fear (speech
// classifiers emit it); throws ParseError for anything else.
Emotion parse_emotion(std::string_view label);

enum class Valence { negative, neutral, positive };
enum class ArousalLevel { low, neutral, high };

// Position of an emotion on the arousal-valence plane, quadrant granularity.
struct QuadrantTag {
    Valence valence;
    ArousalLevel arousal;

    bool operator==(const QuadrantTag&) const = default;
};

QuadrantTag quadrant(Emotion e);

// Early-perception grouping (anger/disgust and fear/surprise read identically
// at first glance). Metadata only; fusion never consults it.
enum class PerceptionGroup { anger_disgust, fear_surprise, happy, sad, neutral };

PerceptionGroup perception_group(Emotion e);

// One score in [0,1] per emotion. Scores are independent per category, no
// sum-to-one constraint. Construction clamps into [0,1] and rejects
// non-finite values.
class EmotionVector {
public:
    EmotionVector() : scores_{} {}
    explicit EmotionVector(const std::array<double, kEmotionCount>& scores);

    double operator[](Emotion e) const { return scores_[static_cast<std::size_t>(e)]; }
    const std::array<double, kEmotionCount>& scores() const { return scores_; }

    bool operator==(const EmotionVector&) const = default;

private:
    std::array<double, kEmotionCount> scores_;
};

// Emotion with the maximal score; ties go to the earliest canonical emotion.
Emotion dominant(const EmotionVector& v);

// One-hot vector for `label` scaled by `weight` (clamped to [0,1]).
EmotionVector from_label(std::string_view label, double weight = 1.0);

} // namespace emofuse
