#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "emofuse/errors.hpp"

namespace emofuse {

// Warnings accumulated while processing slightly-off inputs (out-of-range
// values that were clamped rather than rejected). Passing nullptr wherever a
// Diagnostics* is accepted silently drops the messages.
struct Diagnostics {
    std::vector<std::string> warnings;

    void warn(std::string msg) { warnings.push_back(std::move(msg)); }
    bool empty() const { return warnings.empty(); }
};

// Piecewise-linear membership function over the percent domain [0,100].
// Triangular shapes take breakpoints (a,b,c) with the peak at b; trapezoidal
// shapes take (a,b,c,d) with the plateau on [b,c]. Breakpoints must be
// non-decreasing; coincident breakpoints give vertical edges (e.g. (0,0,25)
// peaks at the left domain edge).
class MembershipFunction {
public:
    enum class Kind { triangular, trapezoidal };

    static MembershipFunction triangular(double a, double b, double c);
    static MembershipFunction trapezoidal(double a, double b, double c, double d);

    Kind kind() const { return kind_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    // Degree in [0,1]. Outside [first, last] the boundary value applies, so a
    // plateau touching the domain edge stays at 1 beyond it.
    double operator()(double x) const;

    // Abscissa of the (start of the) peak, used to check set ordering.
    double peak() const;

    bool operator==(const MembershipFunction&) const = default;

private:
    MembershipFunction(Kind kind, std::vector<double> breakpoints);

    Kind kind_;
    std::vector<double> breakpoints_;
};

// A named linguistic variable over [0,100] partitioned into labeled sets.
// Validated on construction: labels unique, every x in the domain covered by
// at least one set, peaks in non-decreasing order.
class FuzzyVariable {
public:
    static constexpr double kDomainMin = 0.0;
    static constexpr double kDomainMax = 100.0;

    struct Set {
        std::string label;
        MembershipFunction mf;

        bool operator==(const Set&) const = default;
    };

    FuzzyVariable(std::string name, std::vector<Set> sets);

    const std::string& name() const { return name_; }
    const std::vector<Set>& sets() const { return sets_; }
    const Set& set(std::string_view label) const;
    bool has_set(std::string_view label) const;

    bool operator==(const FuzzyVariable&) const = default;

private:
    std::string name_;
    std::vector<Set> sets_;
};

// Membership degree per set label for one crisp input. Values outside the
// domain are clamped first (recorded in diagnostics when given).
std::map<std::string, double> fuzzify(const FuzzyVariable& var, double x,
                                      Diagnostics* diag = nullptr);

// IF audio IS <antecedent[0]> AND video IS <antecedent[1]> THEN output IS
// <consequent>. Antecedent order follows the system's input variable order.
struct FuzzyRule {
    std::vector<std::string> antecedents;
    std::string consequent;

    bool operator==(const FuzzyRule&) const = default;
};

// Aggregated output membership curve sampled uniformly over [0,100]
// (inclusive endpoints).
struct AggregatedOutput {
    std::vector<double> values;

    double x_at(std::size_t i) const {
        return FuzzyVariable::kDomainMax * static_cast<double>(i) /
               static_cast<double>(values.size() - 1);
    }
};

// Crisp centroid of the sampled curve. Throws InferenceError when the curve
// has zero area (no rule fired).
double defuzzify_centroid(const AggregatedOutput& agg);

// Immutable Mamdani inference system: min AND, clipping implication, max
// aggregation, centroid defuzzification. All evaluation is const and safe to
// call concurrently.
class InferenceSystem {
public:
    static constexpr int kDefaultGridResolution = 1001;

    InferenceSystem(std::vector<FuzzyVariable> inputs, FuzzyVariable output,
                    std::vector<FuzzyRule> rules, int grid_resolution = kDefaultGridResolution);

    const std::vector<FuzzyVariable>& inputs() const { return inputs_; }
    const FuzzyVariable& output() const { return output_; }
    const std::vector<FuzzyRule>& rules() const { return rules_; }
    int grid_resolution() const { return grid_resolution_; }

    // Activation degree of one rule against already-fuzzified inputs
    // (min over antecedent degrees).
    double evaluate_rule(const FuzzyRule& rule,
                         const std::vector<std::map<std::string, double>>& fuzzified) const;

    // Clip each fired consequent at its activation and combine pointwise
    // with max over the sample grid.
    AggregatedOutput infer(double audio_pct, double video_pct, Diagnostics* diag = nullptr) const;

    // infer followed by centroid defuzzification; the scalar fusion output.
    double fuse_intensity(double audio_pct, double video_pct, Diagnostics* diag = nullptr) const;

    // Stable hash of the serialized definition, for reproducibility stamps.
    std::string fingerprint() const;

    // Canonical JSON serialization; parse accepts the same schema.
    std::string to_json() const;
    static InferenceSystem from_json(const std::string& text);

private:
    std::vector<FuzzyVariable> inputs_;
    FuzzyVariable output_;
    std::vector<FuzzyRule> rules_;
    int grid_resolution_;
    // Output set memberships pre-sampled on the grid, one row per set.
    std::vector<std::vector<double>> output_samples_;
};

// How to interpret the published rule table. `completed` reads the duplicated
// (Medium, Medium) row as (High, Medium) so that the 3x3 antecedent grid is
// total; `verbatim` keeps both rows as written and leaves (High, Medium)
// uncovered by any single rule.
enum class RulesMode { completed, verbatim };

// The default nine-rule audio/video intensity system.
InferenceSystem default_system(RulesMode mode = RulesMode::completed,
                               int grid_resolution = InferenceSystem::kDefaultGridResolution);

} // namespace emofuse
