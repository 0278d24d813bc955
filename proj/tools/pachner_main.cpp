#include "pachner/report.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pachner::CliResult result = pachner::run_cli(args);
    if (!result.report.empty())
        std::fputs(result.report.c_str(), stdout);
    if (!result.error.empty())
        std::fputs(result.error.c_str(), stderr);
    return result.exit_code;
}
