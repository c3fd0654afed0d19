#include "emofuse/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

namespace emofuse {

SeriesStats series_stats(std::span<const double> values) {
    if (values.empty()) throw Error("analytics", "series is empty");
    SeriesStats stats;
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / n;
    double sq = 0.0;
    for (double v : values) sq += (v - stats.mean) * (v - stats.mean);
    stats.variance = sq / n;
    stats.sd = std::sqrt(stats.variance);
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    stats.median = sorted.size() % 2 == 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
    return stats;
}

namespace {

template <typename Point, typename GetScore>
EmotionStats stats_over(const std::vector<Point>& points, GetScore score) {
    EmotionStats stats{};
    std::vector<double> series(points.size());
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
        for (std::size_t i = 0; i < points.size(); ++i) series[i] = score(points[i], e);
        stats[e] = series_stats(series);
    }
    return stats;
}

template <typename Point, typename GetScore>
Emotion prevailing_over(const std::vector<Point>& points, GetScore score) {
    if (points.empty()) throw Error("analytics", "timeline is empty");
    std::array<int, kEmotionCount> counts{};
    for (const auto& p : points) {
        std::size_t best = 0;
        for (std::size_t e = 1; e < kEmotionCount; ++e) {
            if (score(p, e) > score(p, best)) best = e;
        }
        ++counts[best];
    }
    std::size_t mode = 0;
    for (std::size_t e = 1; e < kEmotionCount; ++e) {
        if (counts[e] > counts[mode]) mode = e;
    }
    return kAllEmotions[mode];
}

} // namespace

EmotionStats emotion_stats(const std::vector<TimelinePoint>& points) {
    if (points.empty()) throw Error("analytics", "timeline is empty");
    return stats_over(points, [](const TimelinePoint& p, std::size_t e) {
        return p.v.scores()[e];
    });
}

EmotionStats emotion_stats(const std::vector<FusedPoint>& points) {
    if (points.empty()) throw Error("analytics", "timeline is empty");
    return stats_over(points, [](const FusedPoint& p, std::size_t e) { return p.intensity[e]; });
}

Emotion prevailing_emotion(const std::vector<TimelinePoint>& points) {
    return prevailing_over(points, [](const TimelinePoint& p, std::size_t e) {
        return p.v.scores()[e];
    });
}

Emotion prevailing_emotion(const std::vector<FusedPoint>& points) {
    return prevailing_over(points, [](const FusedPoint& p, std::size_t e) {
        return p.intensity[e];
    });
}

double stability(const FusedTimeline& fused) {
    if (fused.points.size() < 2) {
        throw Error("analytics", "stability needs at least 2 points, got " +
                                     std::to_string(fused.points.size()));
    }
    const EmotionStats stats = emotion_stats(fused.points);
    double instability = 0.0;
    for (const auto& s : stats) instability += s.sd;
    instability /= kEmotionCount;
    return std::clamp(1.0 - instability / 50.0, 0.0, 1.0);
}

int diversity(const FusedTimeline& fused, const InferenceSystem& system, DiversityMode mode) {
    if (fused.points.empty()) throw Error("analytics", "timeline is empty");
    const FuzzyVariable& intensity_var = system.inputs().front();
    int count = 0;
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
        double level = 0.0;
        if (mode == DiversityMode::mean) {
            for (const auto& p : fused.points) level += p.intensity[e];
            level /= static_cast<double>(fused.points.size());
        } else {
            for (const auto& p : fused.points) level = std::max(level, p.intensity[e]);
        }
        // Argmax over the variable's sets, ties toward the higher label.
        std::size_t best = 0;
        double best_degree = intensity_var.sets()[0].mf(level);
        for (std::size_t s = 1; s < intensity_var.sets().size(); ++s) {
            const double degree = intensity_var.sets()[s].mf(level);
            if (degree >= best_degree) {
                best = s;
                best_degree = degree;
            }
        }
        if (best >= 1) ++count;
    }
    return count;
}

SessionReport build_report(const SessionTimeline& session, const FusedTimeline& fused,
                           const InferenceSystem& system, DiversityMode mode) {
    if (session.audio.size() != fused.points.size()) {
        throw Error("analytics", "session and fused timeline lengths differ");
    }
    for (std::size_t i = 0; i < fused.points.size(); ++i) {
        if (session.audio[i].t != fused.points[i].t) {
            throw Error("analytics",
                        "session and fused timestamps diverge at t=" +
                            std::to_string(session.audio[i].t));
        }
    }
    SessionReport report;
    report.prevailing_audio = prevailing_emotion(session.audio);
    report.prevailing_video = prevailing_emotion(session.video);
    report.prevailing_fused = prevailing_emotion(fused.points);
    report.stats_video = emotion_stats(session.video);
    report.stats_fused = emotion_stats(fused.points);
    report.stability = stability(fused);
    report.diversity = diversity(fused, system, mode);
    report.meta = session.meta;
    report.system_fingerprint = fused.system_fingerprint;
    return report;
}

namespace {

using nlohmann::json;

json stats_to_json(const EmotionStats& stats) {
    json out = json::object();
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
        out[std::string(to_string(kAllEmotions[e]))] = {
            {"mean", stats[e].mean},
            {"median", stats[e].median},
            {"variance", stats[e].variance},
            {"sd", stats[e].sd},
        };
    }
    return out;
}

EmotionStats stats_from_json(const json& j) {
    EmotionStats stats{};
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
        const auto& s = j.at(std::string(to_string(kAllEmotions[e])));
        stats[e] = {s.at("mean").get<double>(), s.at("median").get<double>(),
                    s.at("variance").get<double>(), s.at("sd").get<double>()};
    }
    return stats;
}

} // namespace

std::string report_to_json(const SessionReport& report) {
    json doc{
        {"game", report.meta.game},
        {"prevailing",
         {
             {"audio", std::string(to_string(report.prevailing_audio))},
             {"video", std::string(to_string(report.prevailing_video))},
             {"fused", std::string(to_string(report.prevailing_fused))},
         }},
        {"stats_video", stats_to_json(report.stats_video)},
        {"stats_fused", stats_to_json(report.stats_fused)},
        {"stability", report.stability},
        {"diversity", report.diversity},
        {"system_fingerprint", report.system_fingerprint},
    };
    if (!report.meta.participant.empty()) doc["participant"] = report.meta.participant;
    return doc.dump(2) + "\n";
}

SessionReport report_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError("analytics", std::string("report is not valid JSON: ") + e.what());
    }
    try {
        SessionReport report;
        report.meta.game = doc.at("game").get<std::string>();
        report.meta.participant = doc.value("participant", "");
        report.prevailing_audio = parse_emotion(doc.at("prevailing").at("audio").get<std::string>());
        report.prevailing_video = parse_emotion(doc.at("prevailing").at("video").get<std::string>());
        report.prevailing_fused = parse_emotion(doc.at("prevailing").at("fused").get<std::string>());
        report.stats_video = stats_from_json(doc.at("stats_video"));
        report.stats_fused = stats_from_json(doc.at("stats_fused"));
        report.stability = doc.at("stability").get<double>();
        report.diversity = doc.at("diversity").get<int>();
        report.system_fingerprint = doc.at("system_fingerprint").get<std::string>();
        return report;
    } catch (const json::exception& e) {
        throw ParseError("analytics", std::string("report is malformed: ") + e.what());
    }
}

} // namespace emofuse
