// One line per acceptance criterion; exit status 0 only if all pass.
#include "a1mod/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv)
{
    unsigned seed = 1;
    bool verbose = false;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "-v")
            verbose = true;
        else if (a.rfind("--seed=", 0) == 0)
            seed = unsigned(std::strtoul(a.c_str() + 7, nullptr, 10));
        else if (a.rfind("--only=", 0) == 0)
            only = std::atoi(a.c_str() + 7);
    }
    int failed = 0;
    for (int n = 1; n <= a1mod::kNumCriteria; ++n) {
        if (only && n != only)
            continue;
        a1mod::CheckResult r = a1mod::run_criterion(n, seed);
        bool ok = r.status == a1mod::CheckStatus::Pass;
        failed += !ok;
        std::printf("%s %2d %s (%.1fs)\n", ok ? "PASS" : "FAIL", n, r.statement.c_str(), r.seconds);
        if (verbose || !ok)
            std::printf("     %s\n", r.details.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
