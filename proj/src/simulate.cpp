#include "emofuse/simulate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <vector>

#include "emofuse/errors.hpp"

namespace emofuse {

Archetype parse_archetype(std::string_view name) {
    if (name == "fight") return Archetype::fight;
    if (name == "racing") return Archetype::racing;
    if (name == "logic") return Archetype::logic;
    throw Error("session_sim", "unknown archetype '" + std::string(name) +
                                   "', expected fight|racing|logic");
}

std::string_view to_string(Archetype a) {
    switch (a) {
        case Archetype::fight: return "fight";
        case Archetype::racing: return "racing";
        case Archetype::logic: return "logic";
    }
    return "logic";
}

ArchetypeParams archetype_params(Archetype a) {
    // Weight order: angry, disgust, fear, happy, neutral, sad, surprise.
    switch (a) {
        case Archetype::fight:
            return {{0.05, 0.17, 0.09, 0.09, 0.07, 0.48, 0.05}, 0.50, 0.12, 0.0};
        case Archetype::racing:
            return {{0.03, 0.10, 0.18, 0.10, 0.21, 0.36, 0.02}, 0.30, 0.08, 0.0};
        case Archetype::logic:
            return {{0.04, 0.04, 0.00, 0.05, 0.82, 0.05, 0.00}, 0.15, 0.05, 0.70};
    }
    throw Error("session_sim", "unknown archetype");
}

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

} // namespace

SimulatedSession simulate(Archetype archetype, int duration_s, std::uint64_t seed) {
    if (duration_s < 2) {
        throw Error("session_sim",
                    "duration must be at least 2 seconds, got " + std::to_string(duration_s));
    }
    const ArchetypeParams params = archetype_params(archetype);
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> pick(params.base_weights.begin(),
                                                 params.base_weights.end());
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Dominant-emotion state sequence first, then the neutral floor, then the
    // noisy video pass, so the repair step cannot disturb determinism.
    std::vector<std::size_t> dominant_seq(static_cast<std::size_t>(duration_s));
    std::size_t current = pick(rng);
    for (int t = 0; t < duration_s; ++t) {
        if (t > 0 && unit(rng) < params.switch_probability) current = pick(rng);
        dominant_seq[static_cast<std::size_t>(t)] = current;
    }
    if (params.min_neutral_share > 0.0) {
        const std::size_t neutral_idx = static_cast<std::size_t>(Emotion::neutral);
        const auto need = static_cast<std::size_t>(
            std::ceil(params.min_neutral_share * duration_s - 1e-9));
        auto have = static_cast<std::size_t>(
            std::count(dominant_seq.begin(), dominant_seq.end(), neutral_idx));
        for (auto it = dominant_seq.rbegin(); have < need && it != dominant_seq.rend(); ++it) {
            if (*it != neutral_idx) {
                *it = neutral_idx;
                ++have;
            }
        }
    }

    SimulatedSession out;
    out.audio_csv = "t,label\n";
    out.video_csv = "t,angry,disgust,fear,happy,neutral,sad,surprise\n";
    std::uniform_real_distribution<double> noise(-params.noise_amplitude,
                                                 params.noise_amplitude);
    for (int t = 0; t < duration_s; ++t) {
        const std::size_t dom = dominant_seq[static_cast<std::size_t>(t)];
        out.audio_csv += std::to_string(t);
        out.audio_csv += ',';
        out.audio_csv += to_string(kAllEmotions[dom]);
        out.audio_csv += '\n';

        out.video_csv += std::to_string(t);
        for (std::size_t e = 0; e < kEmotionCount; ++e) {
            const double base = e == dom ? 0.80 : 0.06;
            const double v = std::clamp(base + noise(rng), 0.0, 1.0);
            out.video_csv += ',';
            append_double(out.video_csv, v);
        }
        out.video_csv += '\n';
    }
    return out;
}

} // namespace emofuse
