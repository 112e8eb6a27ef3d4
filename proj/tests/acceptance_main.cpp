// Acceptance gate: one pass/fail line per criterion. With no arguments the
// whole suite gates the exit code; with a numeric argument only that
// criterion is reported and gated (the others still execute, since later
// criteria reference earlier measurements). --fast selects the reduced suite.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "delchoice/verify.hpp"

int main(int argc, char** argv) {
    auto suite = delchoice::verify::Suite::Full;
    int only = -1;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--fast"))
            suite = delchoice::verify::Suite::Fast;
        else
            only = std::atoi(argv[i]);
    }
    bool ok = true;
    delchoice::verify::run_acceptance(suite, [&](const auto& r) {
        if (only > 0 && r.id != only) return;
        std::printf("%s %02d %s (%.1fs) %s\n", r.passed ? "[PASS]" : "[FAIL]", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ok = false;
    });
    return ok ? 0 : 1;
}
