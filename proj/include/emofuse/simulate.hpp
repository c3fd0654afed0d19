#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "emofuse/emotion.hpp"

namespace emofuse {

// The three game profiles the generator imitates. Logic sessions sit on a
// neutral baseline, fight sessions hop between several emotions, racing sits
// in between.
enum class Archetype { fight, racing, logic };

Archetype parse_archetype(std::string_view name);
std::string_view to_string(Archetype a);

struct ArchetypeParams {
    std::array<double, kEmotionCount> base_weights{}; // categorical draw weights
    double switch_probability = 0.0;                  // per second
    double noise_amplitude = 0.0;                     // video score jitter
    double min_neutral_share = 0.0;                   // enforced floor on neutral seconds
};

ArchetypeParams archetype_params(Archetype a);

struct SimulatedSession {
    std::string audio_csv; // t,label
    std::string video_csv; // t,angry,...,surprise
};

// Deterministic synthetic session: per-second audio labels plus matching
// video vectors (softened one-hot of the current dominant with bounded
// noise). duration_s must be at least 2.
SimulatedSession simulate(Archetype archetype, int duration_s, std::uint64_t seed);

} // namespace emofuse
