#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sodd/io.hpp"

namespace sodd {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    Json data;
};

struct AcceptanceOptions {
    double gk3_budget_seconds = 1800;
    int threads = 1;
};

struct Criterion {
    std::string id, title;
    std::function<CriterionResult(const AcceptanceOptions&)> run;
};

const std::vector<Criterion>& acceptance_criteria();
CriterionResult run_criterion(const Criterion& c, const AcceptanceOptions& opt);

}  // namespace sodd
