#pragma once

#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace qfade_test {

struct ProcResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

inline ProcResult run_command(const std::string& command) {
    ProcResult result;
    FILE* pipe = ::popen((command + " 2>&1").c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = ::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, n);
    }
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

}  // namespace qfade_test
