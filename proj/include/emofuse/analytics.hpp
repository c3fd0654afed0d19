#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "emofuse/fusion.hpp"

namespace emofuse {

struct SeriesStats {
    double mean = 0.0;
    double median = 0.0;
    double variance = 0.0; // population variance (divide by N)
    double sd = 0.0;

    bool operator==(const SeriesStats&) const = default;
};

// One SeriesStats per emotion, in canonical order. Units follow the source
// series: [0,1] for raw video scores, percent for fused intensities.
using EmotionStats = std::array<SeriesStats, kEmotionCount>;

struct SessionReport {
    Emotion prevailing_audio = Emotion::neutral;
    Emotion prevailing_video = Emotion::neutral;
    Emotion prevailing_fused = Emotion::neutral;
    EmotionStats stats_video{};
    EmotionStats stats_fused{};
    double stability = 0.0; // [0,1]
    int diversity = 0;      // [0,7]
    SessionMeta meta;
    std::string system_fingerprint;

    bool operator==(const SessionReport&) const = default;
};

SeriesStats series_stats(std::span<const double> values);

EmotionStats emotion_stats(const std::vector<TimelinePoint>& points);
EmotionStats emotion_stats(const std::vector<FusedPoint>& points);

// Modal dominant emotion over the timeline; ties go to the earliest emotion
// in canonical order.
Emotion prevailing_emotion(const std::vector<TimelinePoint>& points);
Emotion prevailing_emotion(const std::vector<FusedPoint>& points);

// 1 minus the mean per-emotion standard deviation of the fused series scaled
// by 50 pp (the largest SD a [0,100] series can have), clamped to [0,1].
// Needs at least two points.
double stability(const FusedTimeline& fused);

enum class DiversityMode { mean, peak };

// Number of emotions whose session-level fused intensity lands above the
// lowest linguistic label of the input intensity variable (Medium or High
// under the default partition). The session-level value is the mean of the
// emotion's fused series, or its peak in DiversityMode::peak. Fuzzification
// argmax ties resolve toward the higher label.
int diversity(const FusedTimeline& fused, const InferenceSystem& system,
              DiversityMode mode = DiversityMode::mean);

SessionReport build_report(const SessionTimeline& session, const FusedTimeline& fused,
                           const InferenceSystem& system,
                           DiversityMode mode = DiversityMode::mean);

std::string report_to_json(const SessionReport& report);
SessionReport report_from_json(const std::string& text);

} // namespace emofuse
