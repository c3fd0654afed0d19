#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "emofuse/analytics.hpp"
#include "emofuse/fusion.hpp"
#include "emofuse/fuzzy.hpp"
#include "emofuse/simulate.hpp"
#include "emofuse/timeline.hpp"

namespace {

using namespace emofuse;

std::string read_text_file(const std::string& path, const std::string& module) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(module, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cli", "cannot write '" + path + "'");
    out << content;
    if (!out) throw Error("cli", "failed writing '" + path + "'");
}

struct SystemOptions {
    std::string system_path;
    std::string rules_mode = "completed";
    int grid = InferenceSystem::kDefaultGridResolution;
    bool grid_set = false;
};

void add_system_options(CLI::App* cmd, SystemOptions& opts) {
    auto* system = cmd->add_option("--system", opts.system_path,
                                   "Inference system definition JSON (overrides the default)");
    auto* rules = cmd->add_option("--rules", opts.rules_mode,
                                  "Rule table reading: completed or verbatim")
                      ->check(CLI::IsMember({"completed", "verbatim"}));
    auto* grid = cmd->add_option("--grid", opts.grid, "Output sampling resolution")
                     ->check(CLI::PositiveNumber);
    system->excludes(rules);
    grid->each([&opts](const std::string&) { opts.grid_set = true; });
}

InferenceSystem make_system(const SystemOptions& opts) {
    if (!opts.system_path.empty()) {
        std::string text;
        try {
            text = read_text_file(opts.system_path, "fuzzy_core");
        } catch (const Error& e) {
            throw InferenceError(e.what());
        }
        auto system = InferenceSystem::from_json(text);
        if (opts.grid_set && opts.grid != system.grid_resolution()) {
            return InferenceSystem(system.inputs(), system.output(), system.rules(), opts.grid);
        }
        return system;
    }
    const RulesMode mode =
        opts.rules_mode == "verbatim" ? RulesMode::verbatim : RulesMode::completed;
    return default_system(mode, opts.grid);
}

void report_warnings(const Diagnostics& diag) {
    for (const auto& w : diag.warnings) std::cerr << "warning: " << w << "\n";
}

struct FuseArgs {
    std::string audio_path, video_path, out_path, game, participant;
    SystemOptions system;
};

struct ReportArgs : FuseArgs {
    std::string diversity_mode = "mean";
};

struct EvalArgs {
    double audio_pct = 0.0, video_pct = 0.0;
    SystemOptions system;
};

struct SimulateArgs {
    std::string archetype;
    int duration = 0;
    std::uint64_t seed = 0;
    std::string out_audio, out_video;
};

SessionTimeline load_session(const FuseArgs& args) {
    Diagnostics diag;
    auto audio = load_audio_labels(args.audio_path, &diag);
    auto video = load_video_csv(args.video_path, &diag);
    report_warnings(diag);
    return align(audio, video, SessionMeta{args.game, args.participant});
}

int run_fuse(const FuseArgs& args) {
    const auto system = make_system(args.system);
    const auto session = load_session(args);
    const auto fused = fuse_session(system, session);
    write_text_file(args.out_path, write_fused_csv(fused));
    return 0;
}

int run_report(const ReportArgs& args) {
    const auto system = make_system(args.system);
    const auto session = load_session(args);
    const auto fused = fuse_session(system, session);
    const DiversityMode mode =
        args.diversity_mode == "peak" ? DiversityMode::peak : DiversityMode::mean;
    const auto report = build_report(session, fused, system, mode);
    write_text_file(args.out_path, report_to_json(report));
    return 0;
}

int run_eval(const EvalArgs& args) {
    const auto system = make_system(args.system);
    Diagnostics diag;
    const double fused = system.fuse_intensity(args.audio_pct, args.video_pct, &diag);
    report_warnings(diag);
    std::printf("%.2f\n", fused);
    return 0;
}

int run_simulate(const SimulateArgs& args) {
    const auto session = simulate(parse_archetype(args.archetype), args.duration, args.seed);
    write_text_file(args.out_audio, session.audio_csv);
    write_text_file(args.out_video, session.video_csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy fusion of audio/video emotion intensity streams with session analytics"};
    app.require_subcommand(1);

    FuseArgs fuse_args;
    auto* fuse_cmd = app.add_subcommand("fuse", "Fuse two streams into a per-second intensity CSV");
    fuse_cmd->add_option("--audio", fuse_args.audio_path, "Audio label CSV")->required();
    fuse_cmd->add_option("--video", fuse_args.video_path, "Video score CSV")->required();
    fuse_cmd->add_option("--out", fuse_args.out_path, "Output fused CSV")->required();
    fuse_cmd->add_option("--game", fuse_args.game, "Game name recorded in outputs");
    fuse_cmd->add_option("--participant", fuse_args.participant, "Participant tag");
    add_system_options(fuse_cmd, fuse_args.system);

    ReportArgs report_args;
    auto* report_cmd = app.add_subcommand("report", "Produce the session analytics report JSON");
    report_cmd->add_option("--audio", report_args.audio_path, "Audio label CSV")->required();
    report_cmd->add_option("--video", report_args.video_path, "Video score CSV")->required();
    report_cmd->add_option("--out", report_args.out_path, "Output report JSON")->required();
    report_cmd->add_option("--game", report_args.game, "Game name recorded in the report");
    report_cmd->add_option("--participant", report_args.participant, "Participant tag");
    report_cmd
        ->add_option("--diversity-mode", report_args.diversity_mode,
                     "Session-level intensity for diversity: mean or peak")
        ->check(CLI::IsMember({"mean", "peak"}));
    add_system_options(report_cmd, report_args.system);

    EvalArgs eval_args;
    auto* eval_cmd = app.add_subcommand("eval", "Fuse one pair of intensity percentages");
    eval_cmd->add_option("--audio-pct", eval_args.audio_pct, "Audio intensity percent")
        ->required();
    eval_cmd->add_option("--video-pct", eval_args.video_pct, "Video intensity percent")
        ->required();
    add_system_options(eval_cmd, eval_args.system);

    SimulateArgs sim_args;
    auto* sim_cmd = app.add_subcommand("simulate", "Generate a synthetic session");
    sim_cmd->add_option("--archetype", sim_args.archetype, "fight, racing or logic")->required();
    sim_cmd->add_option("--duration", sim_args.duration, "Session length in seconds")->required();
    sim_cmd->add_option("--seed", sim_args.seed, "Generator seed")->required();
    sim_cmd->add_option("--out-audio", sim_args.out_audio, "Output audio label CSV")->required();
    sim_cmd->add_option("--out-video", sim_args.out_video, "Output video score CSV")->required();

    SystemOptions inspect_opts;
    auto* inspect_cmd =
        app.add_subcommand("inspect-rules", "Print the inference system definition JSON");
    add_system_options(inspect_cmd, inspect_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: cli: " << e.what() << "\n";
        return 2;
    }

    try {
        if (fuse_cmd->parsed()) return run_fuse(fuse_args);
        if (report_cmd->parsed()) return run_report(report_args);
        if (eval_cmd->parsed()) return run_eval(eval_args);
        if (sim_cmd->parsed()) return run_simulate(sim_args);
        if (inspect_cmd->parsed()) {
            std::cout << make_system(inspect_opts).to_json();
            return 0;
        }
    } catch (const emofuse::ParseError& e) {
        std::cerr << "error: " << e.module_name() << ": " << e.what() << "\n";
        return 3;
    } catch (const emofuse::AlignmentError& e) {
        std::cerr << "error: " << e.module_name() << ": " << e.what() << "\n";
        return 4;
    } catch (const emofuse::InferenceError& e) {
        std::cerr << "error: " << e.module_name() << ": " << e.what() << "\n";
        return 5;
    } catch (const emofuse::Error& e) {
        std::cerr << "error: " << e.module_name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
