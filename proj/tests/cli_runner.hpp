#pragma once

// Runs the CLI binary (path from the DIRACFAC_CLI environment variable) and
// captures exit code and stdout.  Test-only helper.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

struct CliResult {
    int exit_code = -1;
    std::string output;
};

inline std::string cli_binary_path() {
    const char* path = std::getenv("DIRACFAC_CLI");
    if (!path) throw std::runtime_error("DIRACFAC_CLI environment variable not set");
    return path;
}

inline CliResult run_cli(const std::string& args) {
    const std::string cmd = cli_binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    CliResult result;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string read_file(const std::string& path) {
    FILE* f = fopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open " + path);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    fclose(f);
    return out;
}
