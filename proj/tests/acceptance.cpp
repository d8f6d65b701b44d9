#include <cstdio>
#include <cstdlib>
#include <string>

#include "sodd/acceptance.hpp"

int main(int argc, char** argv) {
    sodd::AcceptanceOptions opt;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--only" && i + 1 < argc) only = argv[++i];
        else if (a == "--g3-budget" && i + 1 < argc) opt.gk3_budget_seconds = std::atof(argv[++i]);
        else if (a == "--threads" && i + 1 < argc) opt.threads = std::atoi(argv[++i]);
    }
    int failed = 0, ran = 0;
    for (const auto& c : sodd::acceptance_criteria()) {
        if (!only.empty() && c.id != only) continue;
        const auto r = sodd::run_criterion(c, opt);
        ++ran;
        failed += !r.pass;
        std::printf("%s %-20s %7.1fs  %s | %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.seconds,
                    r.title.c_str(), r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}
