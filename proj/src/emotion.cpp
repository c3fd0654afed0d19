#include "emofuse/emotion.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace emofuse {

std::string_view to_string(Emotion e) {
    switch (e) {
        case Emotion::angry: return "angry";
        case Emotion::disgust: return "disgust";
        case Emotion::fear: return "fear";
        case Emotion::happy: return "happy";
        case Emotion::neutral: return "neutral";
        case Emotion::sad: return "sad";
        case Emotion::surprise: return "surprise";
    }
    return "neutral";
}

Emotion parse_emotion(std::string_view label) {
    std::string lower(label);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "fearful") return Emotion::fear;
    for (Emotion e : kAllEmotions) {
        if (lower == to_string(e)) return e;
    }
    throw ParseError("emotion_model", "unknown emotion label '" + std::string(label) + "'");
}

QuadrantTag quadrant(Emotion e) {
    switch (e) {
        case Emotion::happy: return {Valence::positive, ArousalLevel::high};
        case Emotion::surprise: return {Valence::positive, ArousalLevel::high};
        case Emotion::angry: return {Valence::negative, ArousalLevel::high};
        case Emotion::fear: return {Valence::negative, ArousalLevel::high};
        case Emotion::sad: return {Valence::negative, ArousalLevel::low};
        case Emotion::disgust: return {Valence::negative, ArousalLevel::low};
        case Emotion::neutral: return {Valence::neutral, ArousalLevel::neutral};
    }
    return {Valence::neutral, ArousalLevel::neutral};
}

PerceptionGroup perception_group(Emotion e) {
    switch (e) {
        case Emotion::angry:
        case Emotion::disgust: return PerceptionGroup::anger_disgust;
        case Emotion::fear:
        case Emotion::surprise: return PerceptionGroup::fear_surprise;
        case Emotion::happy: return PerceptionGroup::happy;
        case Emotion::sad: return PerceptionGroup::sad;
        case Emotion::neutral: return PerceptionGroup::neutral;
    }
    return PerceptionGroup::neutral;
}

EmotionVector::EmotionVector(const std::array<double, kEmotionCount>& scores) : scores_(scores) {
    for (double& s : scores_) {
        if (!std::isfinite(s)) {
            throw ParseError("emotion_model", "non-finite emotion score");
        }
        s = std::clamp(s, 0.0, 1.0);
    }
}

Emotion dominant(const EmotionVector& v) {
    Emotion best = Emotion::angry;
    double best_score = v[best];
    for (Emotion e : kAllEmotions) {
        if (v[e] > best_score) {
            best = e;
            best_score = v[e];
        }
    }
    return best;
}

EmotionVector from_label(std::string_view label, double weight) {
    Emotion e = parse_emotion(label);
    std::array<double, kEmotionCount> scores{};
    scores[static_cast<std::size_t>(e)] = std::clamp(weight, 0.0, 1.0);
    return EmotionVector(scores);
}

} // namespace emofuse
