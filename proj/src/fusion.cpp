#include "emofuse/fusion.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace emofuse {

std::array<double, kEmotionCount> fuse_timestep(const InferenceSystem& system,
                                                const EmotionVector& audio,
                                                const EmotionVector& video, Diagnostics* diag) {
    std::array<double, kEmotionCount> out{};
    for (std::size_t i = 0; i < kEmotionCount; ++i) {
        out[i] = system.fuse_intensity(100.0 * audio.scores()[i], 100.0 * video.scores()[i], diag);
    }
    return out;
}

FusedTimeline fuse_session(const InferenceSystem& system, const SessionTimeline& session,
                           Diagnostics* diag) {
    if (session.audio.empty() || session.video.empty()) {
        throw AlignmentError("session is empty");
    }
    if (session.audio.size() != session.video.size()) {
        throw AlignmentError("session streams have different lengths");
    }
    FusedTimeline fused;
    fused.system_fingerprint = system.fingerprint();
    fused.points.reserve(session.audio.size());
    for (std::size_t i = 0; i < session.audio.size(); ++i) {
        if (session.audio[i].t != session.video[i].t) {
            throw AlignmentError("session timestamps diverge at index " + std::to_string(i));
        }
        FusedPoint p;
        p.t = session.audio[i].t;
        try {
            p.intensity = fuse_timestep(system, session.audio[i].v, session.video[i].v, diag);
        } catch (const InferenceError& e) {
            throw InferenceError(std::string(e.what()) + " (at t=" +
                                 std::to_string(session.audio[i].t) + ")");
        }
        fused.points.push_back(p);
    }
    return fused;
}

std::string write_fused_csv(const FusedTimeline& timeline) {
    std::string out = "t,angry,disgust,fear,happy,neutral,sad,surprise\n";
    char buf[32];
    for (const auto& p : timeline.points) {
        out += std::to_string(p.t);
        for (double v : p.intensity) {
            std::snprintf(buf, sizeof(buf), ",%.2f", v);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

FusedTimeline parse_fused_csv(std::string_view text) {
    FusedTimeline timeline;
    // Reuse the video parser's grammar: identical header, percent instead of
    // unit scores, so bypass EmotionVector clamping and read cells directly.
    std::size_t pos = 0;
    std::size_t row = 0;
    bool header_seen = false;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos ? text.substr(pos)
                                                              : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++row;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "t,angry,disgust,fear,happy,neutral,sad,surprise") {
                throw ParseError("fusion_pipeline", "bad fused CSV header", row);
            }
            header_seen = true;
            continue;
        }
        FusedPoint p;
        std::size_t field = 0;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            std::string_view cell = comma == std::string_view::npos
                                        ? line.substr(start)
                                        : line.substr(start, comma - start);
            start = comma == std::string_view::npos ? line.size() + 1 : comma + 1;
            if (field > kEmotionCount) {
                throw ParseError("fusion_pipeline", "too many columns", row);
            }
            if (field == 0) {
                auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), p.t);
                if (ec != std::errc() || ptr != cell.data() + cell.size()) {
                    throw ParseError("fusion_pipeline", "bad timestamp", row);
                }
            } else {
                double v = 0.0;
                auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
                if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
                    throw ParseError("fusion_pipeline", "bad intensity cell", row);
                }
                p.intensity[field - 1] = v;
            }
            ++field;
        }
        if (field != 1 + kEmotionCount) {
            throw ParseError("fusion_pipeline", "expected 8 columns", row);
        }
        timeline.points.push_back(p);
    }
    if (timeline.points.empty()) throw ParseError("fusion_pipeline", "no data rows");
    return timeline;
}

} // namespace emofuse
