#pragma once

// Small helper for driving the installed CLI binary from tests. The binary
// path arrives via the FLOORSUM_CLI environment variable (set by ctest).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace testutil {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline const char* cli_path() { return std::getenv("FLOORSUM_CLI"); }

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

// Runs `cli <args>` through the shell with stdout/stderr captured in temp
// files. `args` must already be shell-quoted where needed.
inline CliResult run_cli(const std::string& args) {
    const char* cli = cli_path();
    if (!cli) return {};
    const auto dir = std::filesystem::temp_directory_path();
    const std::string tag = std::to_string(::getpid()) + "_" + std::to_string(rand());
    const auto out_path = dir / ("floorsum_out_" + tag);
    const auto err_path = dir / ("floorsum_err_" + tag);
    const std::string cmd = std::string(cli) + " " + args + " >" + out_path.string() + " 2>" +
                            err_path.string();
    const int rc = std::system(cmd.c_str());
    CliResult res;
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return res;
}

}  // namespace testutil
