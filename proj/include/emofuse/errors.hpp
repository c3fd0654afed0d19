#pragma once

#include <stdexcept>
#include <string>

namespace emofuse {

// Base for all library errors. `module_name` identifies the subsystem that
// raised the error so callers (the CLI in particular) can map it to a stable
// exit code and print `error: <module>: <detail>`.
class Error : public std::runtime_error {
public:
    Error(std::string module_name, const std::string& detail)
        : std::runtime_error(detail), module_(std::move(module_name)) {}

    const std::string& module_name() const noexcept { return module_; }

private:
    std::string module_;
};

// Malformed input data (CSV streams, unknown emotion labels). Carries the
// 1-based row number when the failure is tied to a specific row, 0 otherwise.
class ParseError : public Error {
public:
    ParseError(std::string module_name, const std::string& detail, std::size_t row = 0)
        : Error(std::move(module_name),
                row > 0 ? detail + " (row " + std::to_string(row) + ")" : detail),
          row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

// Streams that cannot be brought onto a common timeline (empty overlap window,
// empty stream).
class AlignmentError : public Error {
public:
    explicit AlignmentError(const std::string& detail) : Error("timeline_io", detail) {}
};

// Fuzzy-system definition or evaluation failures (bad breakpoints, unknown
// labels in rules, empty aggregate).
class InferenceError : public Error {
public:
    explicit InferenceError(const std::string& detail) : Error("fuzzy_core", detail) {}
};

} // namespace emofuse
