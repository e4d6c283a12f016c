#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// Helpers for exercising the built CLI binary from tests. The binary path
// arrives in the WINDFIT_CLI environment variable (set by ctest).

namespace testutil {

namespace fs = std::filesystem;

inline std::string cli_path() {
    const char* path = std::getenv("WINDFIT_CLI");
    return path ? path : "";
}

/// Temporary working directory, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& hint) {
        static std::mt19937_64 rng(std::random_device{}());
        path_ = fs::temp_directory_path() /
                ("windfit_" + hint + "_" + std::to_string(rng() & 0xffffff));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path file(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

/// Runs the CLI with the given argument string; returns the exit code and
/// captures combined stdout/stderr.
inline int run_cli(const std::string& args, const TempDir& dir, std::string* output = nullptr,
                   const std::string& env_prefix = "") {
    const fs::path capture = dir.file("cli_output.log");
    const std::string cmd =
        env_prefix + "\"" + cli_path() + "\" " + args + " > \"" + capture.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(capture);
        std::stringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

inline std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

/// Writes a telemetry CSV in the eight-column layout, one speed series per
/// anemometer column (nacelle gets `speeds`, the masts get shifted copies).
inline void write_telemetry_csv(const fs::path& path, const std::vector<double>& speeds) {
    std::ofstream out(path, std::ios::binary);
    out << "T;power;ws_nacelle;wd_nacelle;ws_10m;wd_10m;ws_50m;wd_50m\n";
    char buf[160];
    int minutes = 0;
    for (std::size_t i = 0; i < speeds.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%02d:%02d;-1.5;%.6f;270;%.6f;265;%.6f;268\n",
                      minutes / 60, minutes % 60, speeds[i], speeds[i] * 0.9 + 0.05,
                      speeds[i] * 1.1 + 0.02);
        out << buf;
        minutes = (minutes + 10) % 1440;
    }
}

}  // namespace testutil
