#pragma once

#include <string>
#include <vector>

namespace firefighter::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

std::vector<int> criterion_ids();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

}  // namespace firefighter::acceptance
