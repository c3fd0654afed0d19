#include "emofuse/timeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace emofuse {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

double parse_score(std::string_view cell, std::size_t row) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ParseError("timeline_io", "non-numeric cell '" + std::string(cell) + "'", row);
    }
    return value;
}

std::int64_t parse_timestamp(std::string_view cell, std::size_t row) {
    std::int64_t t = 0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto [ptr, ec] = std::from_chars(begin, end, t);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("timeline_io", "timestamp '" + std::string(cell) + "' is not an integer",
                         row);
    }
    if (t < 0) throw ParseError("timeline_io", "negative timestamp", row);
    return t;
}

// Splits into lines (tolerating CRLF), hands each non-blank data row to
// `consume(row_number, cells)`. Returns the number of data rows seen.
template <typename RowFn>
std::size_t for_each_row(std::string_view text, std::string_view expected_header, RowFn consume) {
    std::size_t row = 0;
    std::size_t data_rows = 0;
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos ? text.substr(pos)
                                                              : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++row;
        if (trim(line).empty()) continue;
        if (!header_seen) {
            std::string normalized;
            for (auto cell : split_cells(line)) {
                if (!normalized.empty()) normalized += ',';
                normalized += std::string(cell);
            }
            if (normalized != expected_header) {
                throw ParseError("timeline_io",
                                 "bad header '" + normalized + "', expected '" +
                                     std::string(expected_header) + "'",
                                 row);
            }
            header_seen = true;
            continue;
        }
        consume(row, split_cells(line));
        ++data_rows;
    }
    if (data_rows == 0) throw ParseError("timeline_io", "no data rows");
    return data_rows;
}

void sort_and_check_unique(std::vector<TimelinePoint>& points,
                           const std::vector<std::size_t>& rows_by_index) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[a].t < points[b].t; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (points[order[i]].t == points[order[i - 1]].t) {
            throw ParseError("timeline_io",
                             "duplicate timestamp " + std::to_string(points[order[i]].t),
                             rows_by_index[order[i]]);
        }
    }
    std::vector<TimelinePoint> sorted;
    sorted.reserve(points.size());
    for (std::size_t i : order) sorted.push_back(points[i]);
    points = std::move(sorted);
}

void format_double(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

} // namespace

std::vector<TimelinePoint> parse_video_csv(std::string_view text, Diagnostics* diag) {
    static constexpr std::string_view kHeader = "t,angry,disgust,fear,happy,neutral,sad,surprise";
    std::vector<TimelinePoint> points;
    std::vector<std::size_t> rows;
    for_each_row(text, kHeader, [&](std::size_t row, const std::vector<std::string_view>& cells) {
        if (cells.size() != 1 + kEmotionCount) {
            throw ParseError("timeline_io",
                             "expected " + std::to_string(1 + kEmotionCount) + " columns, got " +
                                 std::to_string(cells.size()),
                             row);
        }
        TimelinePoint p;
        p.t = parse_timestamp(cells[0], row);
        std::array<double, kEmotionCount> scores{};
        for (std::size_t i = 0; i < kEmotionCount; ++i) {
            const double raw = parse_score(cells[i + 1], row);
            if ((raw < 0.0 || raw > 1.0) && diag) {
                std::ostringstream msg;
                msg << "row " << row << ": " << to_string(kAllEmotions[i]) << " score " << raw
                    << " clamped to [0,1]";
                diag->warn(msg.str());
            }
            scores[i] = raw;
        }
        p.v = EmotionVector(scores); // clamps
        points.push_back(std::move(p));
        rows.push_back(row);
    });
    sort_and_check_unique(points, rows);
    return points;
}

std::vector<TimelinePoint> parse_audio_labels(std::string_view text, Diagnostics* diag) {
    std::vector<TimelinePoint> points;
    std::vector<std::size_t> rows;
    bool with_confidence = false;
    // Header may or may not announce the confidence column; peek at the first
    // non-blank line to find out.
    std::string normalized;
    for (std::size_t pos = 0; pos <= text.size();) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos ? text.substr(pos)
                                                              : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (trim(line).empty()) continue;
        for (auto cell : split_cells(line)) {
            if (!normalized.empty()) normalized += ',';
            normalized += std::string(cell);
        }
        break;
    }
    if (normalized == "t,label,confidence") {
        with_confidence = true;
    } else if (normalized != "t,label") {
        throw ParseError("timeline_io",
                         "bad header '" + normalized + "', expected 't,label[,confidence]'", 1);
    }
    const std::string_view expected = with_confidence ? "t,label,confidence" : "t,label";
    for_each_row(text, expected, [&](std::size_t row, const std::vector<std::string_view>& cells) {
        const std::size_t want = with_confidence ? 3u : 2u;
        if (cells.size() != want) {
            throw ParseError("timeline_io",
                             "expected " + std::to_string(want) + " columns, got " +
                                 std::to_string(cells.size()),
                             row);
        }
        TimelinePoint p;
        p.t = parse_timestamp(cells[0], row);
        double confidence = 1.0;
        if (with_confidence) {
            confidence = parse_score(cells[2], row);
            if ((confidence < 0.0 || confidence > 1.0) && diag) {
                std::ostringstream msg;
                msg << "row " << row << ": confidence " << confidence << " clamped to [0,1]";
                diag->warn(msg.str());
            }
        }
        try {
            p.v = from_label(cells[1], confidence);
        } catch (const ParseError& e) {
            throw ParseError("timeline_io", e.what(), row);
        }
        points.push_back(std::move(p));
        rows.push_back(row);
    });
    sort_and_check_unique(points, rows);
    return points;
}

std::string write_video_csv(const std::vector<TimelinePoint>& points) {
    std::string out = "t,angry,disgust,fear,happy,neutral,sad,surprise\n";
    for (const auto& p : points) {
        out += std::to_string(p.t);
        for (Emotion e : kAllEmotions) {
            out += ',';
            format_double(out, p.v[e]);
        }
        out += '\n';
    }
    return out;
}

std::string write_audio_labels(const std::vector<TimelinePoint>& points) {
    std::string out = "t,label,confidence\n";
    for (const auto& p : points) {
        const Emotion e = dominant(p.v);
        out += std::to_string(p.t);
        out += ',';
        out += to_string(e);
        out += ',';
        format_double(out, p.v[e]);
        out += '\n';
    }
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("timeline_io", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::vector<TimelinePoint> load_video_csv(const std::string& path, Diagnostics* diag) {
    return parse_video_csv(read_file(path), diag);
}

std::vector<TimelinePoint> load_audio_labels(const std::string& path, Diagnostics* diag) {
    return parse_audio_labels(read_file(path), diag);
}

namespace {

// Average duplicate-t points component-wise and key by second.
std::map<std::int64_t, EmotionVector> collapse(const std::vector<TimelinePoint>& points) {
    std::map<std::int64_t, std::pair<std::array<double, kEmotionCount>, int>> sums;
    for (const auto& p : points) {
        auto& [sum, n] = sums[p.t];
        for (std::size_t i = 0; i < kEmotionCount; ++i) sum[i] += p.v.scores()[i];
        ++n;
    }
    std::map<std::int64_t, EmotionVector> result;
    for (auto& [t, entry] : sums) {
        auto& [sum, n] = entry;
        for (double& s : sum) s /= n;
        result.emplace(t, EmotionVector(sum));
    }
    return result;
}

std::vector<TimelinePoint> resample(const std::map<std::int64_t, EmotionVector>& stream,
                                    std::int64_t start, std::int64_t end) {
    std::vector<TimelinePoint> out;
    out.reserve(static_cast<std::size_t>(end - start + 1));
    auto it = stream.begin();
    EmotionVector last = it->second;
    for (std::int64_t t = start; t <= end; ++t) {
        while (it != stream.end() && it->first <= t) {
            last = it->second;
            ++it;
        }
        out.push_back({t, last});
    }
    return out;
}

} // namespace

SessionTimeline align(const std::vector<TimelinePoint>& audio,
                      const std::vector<TimelinePoint>& video, SessionMeta meta) {
    if (audio.empty()) throw AlignmentError("audio stream is empty");
    if (video.empty()) throw AlignmentError("video stream is empty");
    const auto audio_by_t = collapse(audio);
    const auto video_by_t = collapse(video);
    const std::int64_t start = std::max(audio_by_t.begin()->first, video_by_t.begin()->first);
    const std::int64_t end = std::min(audio_by_t.rbegin()->first, video_by_t.rbegin()->first);
    if (start > end) {
        throw AlignmentError("streams do not overlap (audio [" +
                             std::to_string(audio_by_t.begin()->first) + "," +
                             std::to_string(audio_by_t.rbegin()->first) + "], video [" +
                             std::to_string(video_by_t.begin()->first) + "," +
                             std::to_string(video_by_t.rbegin()->first) + "])");
    }
    SessionTimeline session;
    session.audio = resample(audio_by_t, start, end);
    session.video = resample(video_by_t, start, end);
    session.meta = std::move(meta);
    return session;
}

} // namespace emofuse
