#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "emofuse/analytics.hpp"
#include "emofuse/fusion.hpp"
#include "emofuse/fuzzy.hpp"
#include "emofuse/simulate.hpp"
#include "emofuse/timeline.hpp"

namespace py = pybind11;

namespace {

using namespace emofuse;

RulesMode rules_mode_from(const std::string& rules) {
    if (rules == "verbatim") return RulesMode::verbatim;
    if (rules == "completed") return RulesMode::completed;
    throw py::value_error("rules must be 'completed' or 'verbatim'");
}

DiversityMode diversity_mode_from(const std::string& mode) {
    if (mode == "peak") return DiversityMode::peak;
    if (mode == "mean") return DiversityMode::mean;
    throw py::value_error("diversity_mode must be 'mean' or 'peak'");
}

std::string fuse_streams(const std::string& audio_csv, const std::string& video_csv,
                         const InferenceSystem& system, const std::string& game) {
    auto session = align(parse_audio_labels(audio_csv), parse_video_csv(video_csv),
                         SessionMeta{game, ""});
    return write_fused_csv(fuse_session(system, session));
}

std::string report_streams(const std::string& audio_csv, const std::string& video_csv,
                           const InferenceSystem& system, const std::string& game,
                           const std::string& diversity_mode) {
    auto session = align(parse_audio_labels(audio_csv), parse_video_csv(video_csv),
                         SessionMeta{game, ""});
    auto fused = fuse_session(system, session);
    return report_to_json(build_report(session, fused, system,
                                       diversity_mode_from(diversity_mode)));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fuzzy fusion of audio/video emotion intensity streams";

    py::register_exception<Error>(m, "EmofuseError", PyExc_RuntimeError);

    py::class_<InferenceSystem>(m, "InferenceSystem")
        .def_static(
            "default",
            [](const std::string& rules, int grid) {
                return default_system(rules_mode_from(rules), grid);
            },
            py::arg("rules") = "completed",
            py::arg("grid") = InferenceSystem::kDefaultGridResolution)
        .def_static("from_json", &InferenceSystem::from_json, py::arg("text"))
        .def("to_json", &InferenceSystem::to_json)
        .def("fingerprint", &InferenceSystem::fingerprint)
        .def_property_readonly("grid_resolution", &InferenceSystem::grid_resolution)
        .def(
            "fuse",
            [](const InferenceSystem& self, double audio_pct, double video_pct) {
                return self.fuse_intensity(audio_pct, video_pct);
            },
            py::arg("audio_pct"), py::arg("video_pct"),
            "Fused overall intensity percent for one audio/video pair")
        .def(
            "infer",
            [](const InferenceSystem& self, double audio_pct, double video_pct) {
                return self.infer(audio_pct, video_pct).values;
            },
            py::arg("audio_pct"), py::arg("video_pct"),
            "Aggregated output membership curve sampled over [0,100]");

    m.def(
        "fuse_intensity",
        [](double audio_pct, double video_pct, const std::string& rules, int grid) {
            return default_system(rules_mode_from(rules), grid)
                .fuse_intensity(audio_pct, video_pct);
        },
        py::arg("audio_pct"), py::arg("video_pct"), py::arg("rules") = "completed",
        py::arg("grid") = InferenceSystem::kDefaultGridResolution,
        "One-shot fusion with the default system");

    m.def(
        "simulate",
        [](const std::string& archetype, int duration, std::uint64_t seed) {
            auto session = simulate(parse_archetype(archetype), duration, seed);
            return py::make_tuple(session.audio_csv, session.video_csv);
        },
        py::arg("archetype"), py::arg("duration"), py::arg("seed"),
        "Synthetic (audio_csv, video_csv) session for a game archetype");

    m.def("fuse_streams", &fuse_streams, py::arg("audio_csv"), py::arg("video_csv"),
          py::arg("system"), py::arg("game") = "",
          "Align and fuse two stream CSV texts; returns the fused CSV text");

    m.def("report_streams", &report_streams, py::arg("audio_csv"), py::arg("video_csv"),
          py::arg("system"), py::arg("game") = "", py::arg("diversity_mode") = "mean",
          "Align, fuse and analyze two stream CSV texts; returns the report JSON text");

#ifdef EMOFUSE_VERSION
    m.attr("__version__") = EMOFUSE_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
