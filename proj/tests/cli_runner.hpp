#pragma once

// Runs the built command-line tool through the shell and captures stdout.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace support {

struct CliResult {
    int status = -1;
    std::string out;
};

inline CliResult run_cli(const std::string& args, bool merge_stderr = false)
{
    const std::string cmd =
        std::string("\"") + PLUMBLINE_CLI_PATH + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

inline std::string quoted(const std::string& s)
{
    return "\"" + s + "\"";
}

} // namespace support
