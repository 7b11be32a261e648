#pragma once

#include <string>
#include <vector>

// Built-in invariant suites, the engine behind `vacpol validate`.
namespace vacpol::validation {

struct Check {
    std::string suite;
    std::string name;
    double measured = 0.0;   // worst deviation seen
    double tolerance = 0.0;  // already multiplied by the caller's scale
    bool pass = false;
    std::string note;
};

/// specialfns, heatkernel, reflecting, semitransparent
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all"); every tolerance is multiplied by tol_scale.
/// Throws ParameterError for an unknown suite or a non-positive scale.
std::vector<Check> run(const std::string& suite, double tol_scale = 1.0);

}  // namespace vacpol::validation
