#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "emofuse/emotion.hpp"
#include "emofuse/fuzzy.hpp"

namespace emofuse {

// One observation on a 1 Hz stream.
struct TimelinePoint {
    std::int64_t t = 0; // seconds from session start
    EmotionVector v;

    bool operator==(const TimelinePoint&) const = default;
};

struct SessionMeta {
    std::string game;
    std::string participant;

    bool operator==(const SessionMeta&) const = default;
};

// Audio and video streams after alignment: equal length, identical ascending
// timestamps, one point per second.
struct SessionTimeline {
    std::vector<TimelinePoint> audio;
    std::vector<TimelinePoint> video;
    SessionMeta meta;
};

// Video stream CSV: header `t,angry,disgust,fear,happy,neutral,sad,surprise`,
// integer t, one score column per emotion. Scores outside [0,1] are clamped
// with a diagnostic; duplicate t, missing or non-numeric cells are parse
// errors carrying the offending row number.
std::vector<TimelinePoint> parse_video_csv(std::string_view text, Diagnostics* diag = nullptr);

// Audio label CSV: header `t,label` or `t,label,confidence`. Each row becomes
// a one-hot vector scaled by the confidence (1 when absent).
std::vector<TimelinePoint> parse_audio_labels(std::string_view text, Diagnostics* diag = nullptr);

std::string write_video_csv(const std::vector<TimelinePoint>& points);
std::string write_audio_labels(const std::vector<TimelinePoint>& points);

// File variants of the parsers; unreadable paths raise ParseError.
std::vector<TimelinePoint> load_video_csv(const std::string& path, Diagnostics* diag = nullptr);
std::vector<TimelinePoint> load_audio_labels(const std::string& path, Diagnostics* diag = nullptr);

// Bring both streams onto the common per-second window
// [max(min t), min(max t)]. Points sharing a second are averaged
// component-wise, gaps carry the last observed vector forward. Throws
// AlignmentError when the streams do not overlap.
SessionTimeline align(const std::vector<TimelinePoint>& audio,
                      const std::vector<TimelinePoint>& video, SessionMeta meta = {});

} // namespace emofuse
