#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "emofuse/fuzzy.hpp"
#include "emofuse/timeline.hpp"

namespace emofuse {

// Fused overall intensity per emotion at one second, in percent.
struct FusedPoint {
    std::int64_t t = 0;
    std::array<double, kEmotionCount> intensity{}; // percent, [0,100]

    double operator[](Emotion e) const { return intensity[static_cast<std::size_t>(e)]; }
};

struct FusedTimeline {
    std::vector<FusedPoint> points;
    std::string system_fingerprint;
};

// Run the inference system once per emotion: audio/video scores are lifted to
// percent (x100) and fused independently with the shared rule base.
std::array<double, kEmotionCount> fuse_timestep(const InferenceSystem& system,
                                                const EmotionVector& audio,
                                                const EmotionVector& video,
                                                Diagnostics* diag = nullptr);

// Pointwise fusion over an aligned session. The output carries the system
// fingerprint so results can be traced back to the exact definition used.
FusedTimeline fuse_session(const InferenceSystem& system, const SessionTimeline& session,
                           Diagnostics* diag = nullptr);

// CSV with header `t,angry,...,surprise` and two-decimal percent values.
std::string write_fused_csv(const FusedTimeline& timeline);
FusedTimeline parse_fused_csv(std::string_view text);

} // namespace emofuse
