#pragma once

#include <string>
#include <vector>

namespace schur {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // parameters or witness description
};

struct VerificationReport {
    std::string suite;
    int n = 0;
    int d = 0;
    std::string ring;
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::size_t failure_count() const {
        std::size_t k = 0;
        for (const auto& c : checks)
            if (!c.pass) ++k;
        return k;
    }
};

}  // namespace schur
