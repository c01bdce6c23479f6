#pragma once

// Built-in consistency suites: special-function identities and agreement of
// the matching-equation solver with direct integration.

#include <string>
#include <vector>

namespace dyonwell {

struct SelfCheck {
    std::string suite;
    std::string name;
    double residual = 0.0;  ///< worst case over the samples
    double tolerance = 0.0;
    bool passed = false;
};

std::vector<SelfCheck> identity_checks();
std::vector<SelfCheck> oracle_checks();
std::vector<SelfCheck> run_selftest();

}  // namespace dyonwell
