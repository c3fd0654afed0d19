// Minimal popen-based command runner for exercising the CLI from tests.
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace subprocess {

struct Result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Result run(const std::string& command) {
    static int counter = 0;
    const auto err_path = std::filesystem::temp_directory_path() /
                          ("emofuse_test_stderr_" + std::to_string(getpid()) + "_" +
                           std::to_string(++counter) + ".txt");
    Result result;
    FILE* pipe = popen((command + " 2>" + err_path.string()).c_str(), "r");
    if (pipe == nullptr) return result;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.err = slurp_file(err_path);
    std::filesystem::remove(err_path);
    return result;
}

} // namespace subprocess
