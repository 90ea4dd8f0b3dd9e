#pragma once

#include <string>
#include <vector>

namespace a1mod {

enum class CheckStatus { Pass, Fail, Skipped };
std::string status_name(CheckStatus s);

struct CheckResult
{
    std::string id;         // "c1" .. "c14", or a sub-check id
    std::string statement;  // the mathematical statement being checked
    CheckStatus status = CheckStatus::Skipped;
    std::string details;
    double seconds = 0;
};

struct VerifyReport
{
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string to_text() const;
    std::string to_json() const;
};

constexpr int kNumCriteria = 14;

/* one-line title of acceptance criterion n (1-based) */
std::string criterion_title(int n);
/* runs criterion n; never throws, exceptions become failures */
CheckResult run_criterion(int n, unsigned seed = 1);

/* axioms, periodicity, localization, picard, idempotents, appendix-a, hilbert, laurent, all */
const std::vector<std::string>& suite_names();
std::vector<int> suite_criteria(const std::string& suite);
/* throws std::invalid_argument on an unknown suite */
VerifyReport run_suite(const std::string& suite, unsigned seed = 1);

}  // namespace a1mod
