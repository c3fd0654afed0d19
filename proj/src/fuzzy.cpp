#include "emofuse/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include <json.hpp>

namespace emofuse {

namespace {

void validate_breakpoints(const std::vector<double>& p) {
    for (double v : p) {
        if (!std::isfinite(v)) throw InferenceError("membership breakpoint is not finite");
        if (v < FuzzyVariable::kDomainMin || v > FuzzyVariable::kDomainMax) {
            throw InferenceError("membership breakpoint " + std::to_string(v) +
                                 " outside domain [0,100]");
        }
    }
    if (!std::is_sorted(p.begin(), p.end())) {
        throw InferenceError("membership breakpoints must be non-decreasing");
    }
}

} // namespace

MembershipFunction::MembershipFunction(Kind kind, std::vector<double> breakpoints)
    : kind_(kind), breakpoints_(std::move(breakpoints)) {
    validate_breakpoints(breakpoints_);
}

MembershipFunction MembershipFunction::triangular(double a, double b, double c) {
    return MembershipFunction(Kind::triangular, {a, b, c});
}

MembershipFunction MembershipFunction::trapezoidal(double a, double b, double c, double d) {
    return MembershipFunction(Kind::trapezoidal, {a, b, c, d});
}

double MembershipFunction::operator()(double x) const {
    if (!std::isfinite(x)) throw InferenceError("membership input is not finite");
    const auto& p = breakpoints_;
    x = std::clamp(x, p.front(), p.back());
    if (kind_ == Kind::triangular) {
        const double a = p[0], b = p[1], c = p[2];
        if (x < b) return (x - a) / (b - a);
        if (x > b) return (c - x) / (c - b);
        return 1.0;
    }
    const double a = p[0], b = p[1], c = p[2], d = p[3];
    if (x < b) return (x - a) / (b - a);
    if (x > c) return (d - x) / (d - c);
    return 1.0;
}

double MembershipFunction::peak() const { return breakpoints_[1]; }

FuzzyVariable::FuzzyVariable(std::string name, std::vector<Set> sets)
    : name_(std::move(name)), sets_(std::move(sets)) {
    if (sets_.empty()) throw InferenceError("variable '" + name_ + "' has no sets");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        for (std::size_t j = i + 1; j < sets_.size(); ++j) {
            if (sets_[i].label == sets_[j].label) {
                throw InferenceError("variable '" + name_ + "' has duplicate set label '" +
                                     sets_[i].label + "'");
            }
        }
        if (i > 0 && sets_[i].mf.peak() < sets_[i - 1].mf.peak()) {
            throw InferenceError("variable '" + name_ + "' sets are not in peak order");
        }
    }
    // Coverage: every domain point must belong to at least one set.
    constexpr int kProbes = 1001;
    for (int i = 0; i < kProbes; ++i) {
        const double x = kDomainMax * static_cast<double>(i) / (kProbes - 1);
        double best = 0.0;
        for (const auto& s : sets_) best = std::max(best, s.mf(x));
        if (best <= 0.0) {
            throw InferenceError("variable '" + name_ + "' does not cover x=" +
                                 std::to_string(x));
        }
    }
}

const FuzzyVariable::Set& FuzzyVariable::set(std::string_view label) const {
    for (const auto& s : sets_) {
        if (s.label == label) return s;
    }
    throw InferenceError("variable '" + name_ + "' has no set '" + std::string(label) + "'");
}

bool FuzzyVariable::has_set(std::string_view label) const {
    return std::any_of(sets_.begin(), sets_.end(),
                       [&](const Set& s) { return s.label == label; });
}

std::map<std::string, double> fuzzify(const FuzzyVariable& var, double x, Diagnostics* diag) {
    if (!std::isfinite(x)) throw InferenceError("fuzzify input is not finite");
    const double clamped = std::clamp(x, FuzzyVariable::kDomainMin, FuzzyVariable::kDomainMax);
    if (clamped != x && diag) {
        std::ostringstream msg;
        msg << var.name() << ": input " << x << " clamped to " << clamped;
        diag->warn(msg.str());
    }
    std::map<std::string, double> degrees;
    for (const auto& s : var.sets()) degrees[s.label] = s.mf(clamped);
    return degrees;
}

double defuzzify_centroid(const AggregatedOutput& agg) {
    if (agg.values.size() < 2) throw InferenceError("aggregate has too few samples");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < agg.values.size(); ++i) {
        num += agg.x_at(i) * agg.values[i];
        den += agg.values[i];
    }
    if (den <= 0.0) throw InferenceError("empty aggregate: no rule fired");
    return num / den;
}

InferenceSystem::InferenceSystem(std::vector<FuzzyVariable> inputs, FuzzyVariable output,
                                 std::vector<FuzzyRule> rules, int grid_resolution)
    : inputs_(std::move(inputs)),
      output_(std::move(output)),
      rules_(std::move(rules)),
      grid_resolution_(grid_resolution) {
    if (inputs_.size() != 2) {
        throw InferenceError("expected exactly two input variables, got " +
                             std::to_string(inputs_.size()));
    }
    if (grid_resolution_ < 2) throw InferenceError("grid resolution must be at least 2");
    if (rules_.empty()) throw InferenceError("rule base is empty");
    for (const auto& rule : rules_) {
        if (rule.antecedents.size() != inputs_.size()) {
            throw InferenceError("rule has " + std::to_string(rule.antecedents.size()) +
                                 " antecedents, expected " + std::to_string(inputs_.size()));
        }
        for (std::size_t i = 0; i < inputs_.size(); ++i) {
            if (!inputs_[i].has_set(rule.antecedents[i])) {
                throw InferenceError("rule references unknown set '" + rule.antecedents[i] +
                                     "' of variable '" + inputs_[i].name() + "'");
            }
        }
        if (!output_.has_set(rule.consequent)) {
            throw InferenceError("rule references unknown output set '" + rule.consequent + "'");
        }
    }
    // Sample every output set once; inference then only clips and maxes.
    output_samples_.reserve(output_.sets().size());
    for (const auto& s : output_.sets()) {
        std::vector<double> row(static_cast<std::size_t>(grid_resolution_));
        for (int i = 0; i < grid_resolution_; ++i) {
            const double x = FuzzyVariable::kDomainMax * static_cast<double>(i) /
                             (grid_resolution_ - 1);
            row[static_cast<std::size_t>(i)] = s.mf(x);
        }
        output_samples_.push_back(std::move(row));
    }
}

double InferenceSystem::evaluate_rule(
    const FuzzyRule& rule, const std::vector<std::map<std::string, double>>& fuzzified) const {
    if (rule.antecedents.size() != fuzzified.size()) {
        throw InferenceError("rule antecedent count does not match fuzzified input count");
    }
    double degree = 1.0;
    for (std::size_t i = 0; i < rule.antecedents.size(); ++i) {
        auto it = fuzzified[i].find(rule.antecedents[i]);
        if (it == fuzzified[i].end()) {
            throw InferenceError("unknown set label '" + rule.antecedents[i] + "'");
        }
        degree = std::min(degree, it->second);
    }
    return degree;
}

AggregatedOutput InferenceSystem::infer(double audio_pct, double video_pct,
                                        Diagnostics* diag) const {
    std::vector<std::map<std::string, double>> fuzzified;
    fuzzified.push_back(fuzzify(inputs_[0], audio_pct, diag));
    fuzzified.push_back(fuzzify(inputs_[1], video_pct, diag));

    // One clipping level per output set: max over the rules that share it.
    std::vector<double> clip(output_.sets().size(), 0.0);
    for (const auto& rule : rules_) {
        const double activation = evaluate_rule(rule, fuzzified);
        for (std::size_t s = 0; s < output_.sets().size(); ++s) {
            if (output_.sets()[s].label == rule.consequent) {
                clip[s] = std::max(clip[s], activation);
                break;
            }
        }
    }

    AggregatedOutput agg;
    agg.values.assign(static_cast<std::size_t>(grid_resolution_), 0.0);
    bool any_fired = false;
    for (std::size_t s = 0; s < clip.size(); ++s) {
        if (clip[s] <= 0.0) continue;
        any_fired = true;
        const auto& samples = output_samples_[s];
        for (std::size_t i = 0; i < agg.values.size(); ++i) {
            agg.values[i] = std::max(agg.values[i], std::min(clip[s], samples[i]));
        }
    }
    if (!any_fired && diag) diag->warn("no rule fired for the given inputs");
    return agg;
}

double InferenceSystem::fuse_intensity(double audio_pct, double video_pct,
                                       Diagnostics* diag) const {
    return defuzzify_centroid(infer(audio_pct, video_pct, diag));
}

namespace {

using nlohmann::json;

json variable_to_json(const FuzzyVariable& var) {
    json sets = json::array();
    for (const auto& s : var.sets()) {
        sets.push_back({
            {"label", s.label},
            {"kind", s.mf.kind() == MembershipFunction::Kind::triangular ? "triangular"
                                                                         : "trapezoidal"},
            {"breakpoints", s.mf.breakpoints()},
        });
    }
    return json{{"name", var.name()}, {"sets", sets}};
}

FuzzyVariable variable_from_json(const json& j) {
    if (!j.is_object() || !j.contains("name") || !j.contains("sets")) {
        throw InferenceError("system definition: variable needs 'name' and 'sets'");
    }
    std::vector<FuzzyVariable::Set> sets;
    for (const auto& s : j.at("sets")) {
        const std::string label = s.at("label").get<std::string>();
        const std::string kind = s.at("kind").get<std::string>();
        const std::vector<double> bp = s.at("breakpoints").get<std::vector<double>>();
        if (kind == "triangular") {
            if (bp.size() != 3) {
                throw InferenceError("set '" + label + "': triangular needs 3 breakpoints");
            }
            sets.push_back({label, MembershipFunction::triangular(bp[0], bp[1], bp[2])});
        } else if (kind == "trapezoidal") {
            if (bp.size() != 4) {
                throw InferenceError("set '" + label + "': trapezoidal needs 4 breakpoints");
            }
            sets.push_back({label, MembershipFunction::trapezoidal(bp[0], bp[1], bp[2], bp[3])});
        } else {
            throw InferenceError("set '" + label + "': unknown kind '" + kind + "'");
        }
    }
    return FuzzyVariable(j.at("name").get<std::string>(), std::move(sets));
}

} // namespace

std::string InferenceSystem::to_json() const {
    json rules = json::array();
    for (const auto& r : rules_) {
        rules.push_back({
            {"audio", r.antecedents[0]},
            {"video", r.antecedents[1]},
            {"output", r.consequent},
        });
    }
    json doc{
        {"grid_resolution", grid_resolution_},
        {"inputs", json::array({variable_to_json(inputs_[0]), variable_to_json(inputs_[1])})},
        {"output", variable_to_json(output_)},
        {"rules", rules},
    };
    return doc.dump(2) + "\n";
}

InferenceSystem InferenceSystem::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InferenceError(std::string("system definition is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.contains("inputs") || !doc.contains("output") || !doc.contains("rules")) {
            throw InferenceError("system definition needs 'inputs', 'output' and 'rules'");
        }
        const auto& jinputs = doc.at("inputs");
        if (!jinputs.is_array() || jinputs.size() != 2) {
            throw InferenceError("system definition needs exactly two input variables");
        }
        std::vector<FuzzyVariable> inputs;
        inputs.push_back(variable_from_json(jinputs[0]));
        inputs.push_back(variable_from_json(jinputs[1]));
        FuzzyVariable output = variable_from_json(doc.at("output"));
        std::vector<FuzzyRule> rules;
        for (const auto& r : doc.at("rules")) {
            rules.push_back(FuzzyRule{
                {r.at("audio").get<std::string>(), r.at("video").get<std::string>()},
                r.at("output").get<std::string>()});
        }
        const int resolution = doc.value("grid_resolution", kDefaultGridResolution);
        return InferenceSystem(std::move(inputs), std::move(output), std::move(rules),
                               resolution);
    } catch (const json::exception& e) {
        throw InferenceError(std::string("system definition is malformed: ") + e.what());
    }
}

std::string InferenceSystem::fingerprint() const {
    // FNV-1a 64 over the canonical serialization.
    const std::string text = to_json();
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

InferenceSystem default_system(RulesMode mode, int grid_resolution) {
    auto intensity_sets = [] {
        return std::vector<FuzzyVariable::Set>{
            {"Low", MembershipFunction::trapezoidal(0, 0, 20, 50)},
            {"Medium", MembershipFunction::triangular(20, 50, 80)},
            {"High", MembershipFunction::trapezoidal(50, 80, 100, 100)},
        };
    };
    FuzzyVariable audio("Audio Emotion Intensity", intensity_sets());
    FuzzyVariable video("Video Emotion Intensity", intensity_sets());
    FuzzyVariable output("Overall Emotion Intensity",
                         {
                             {"Little Bit", MembershipFunction::triangular(0, 0, 25)},
                             {"Sometimes", MembershipFunction::triangular(0, 25, 50)},
                             {"High", MembershipFunction::triangular(25, 50, 75)},
                             {"Very High", MembershipFunction::triangular(50, 75, 100)},
                             {"Extremely High", MembershipFunction::triangular(75, 100, 100)},
                         });

    std::vector<FuzzyRule> rules{
        {{"Low", "Low"}, "Little Bit"},
        {{"Low", "Medium"}, "Sometimes"},
        {{"Low", "High"}, "High"},
        {{"Medium", "Low"}, "Sometimes"},
        {{"Medium", "Medium"}, "High"},
        {{"Medium", "High"}, "Very High"},
        {{"High", "Low"}, "Sometimes"},
        // The published table repeats (Medium, Medium) here; the completed
        // reading takes it as (High, Medium) so every label pair is covered.
        mode == RulesMode::completed ? FuzzyRule{{"High", "Medium"}, "Very High"}
                                     : FuzzyRule{{"Medium", "Medium"}, "Very High"},
        {{"High", "High"}, "Extremely High"},
    };

    return InferenceSystem({std::move(audio), std::move(video)}, std::move(output),
                           std::move(rules), grid_resolution);
}

} // namespace emofuse
