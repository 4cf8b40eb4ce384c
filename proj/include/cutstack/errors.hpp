#pragma once

#include <stdexcept>
#include <string>

namespace cutstack {

// Error taxonomy used across the library. Each maps to one failure mode of a
// documented operation precondition or budget.
struct invalid_distribution_error : std::runtime_error {
    explicit invalid_distribution_error(const std::string& m) : std::runtime_error(m) {}
};
struct incompatible_columns_error : std::runtime_error {
    explicit incompatible_columns_error(const std::string& m) : std::runtime_error(m) {}
};
struct incompatible_gadgets_error : std::runtime_error {
    explicit incompatible_gadgets_error(const std::string& m) : std::runtime_error(m) {}
};
struct cannot_evaluate_error : std::runtime_error {
    explicit cannot_evaluate_error(const std::string& m) : std::runtime_error(m) {}
};
struct invalid_parameter_error : std::runtime_error {
    explicit invalid_parameter_error(const std::string& m) : std::runtime_error(m) {}
};
struct schedule_infeasible_error : std::runtime_error {
    explicit schedule_infeasible_error(const std::string& m) : std::runtime_error(m) {}
};
struct construction_budget_error : std::runtime_error {
    explicit construction_budget_error(const std::string& m) : std::runtime_error(m) {}
};
struct outside_support_error : std::runtime_error {
    explicit outside_support_error(const std::string& m) : std::runtime_error(m) {}
};
struct trajectory_too_short_error : std::runtime_error {
    explicit trajectory_too_short_error(const std::string& m) : std::runtime_error(m) {}
};
struct invalid_selection_error : std::runtime_error {
    explicit invalid_selection_error(const std::string& m) : std::runtime_error(m) {}
};
struct undefined_deficiency_error : std::runtime_error {
    explicit undefined_deficiency_error(const std::string& m) : std::runtime_error(m) {}
};
struct certificate_violation_error : std::runtime_error {
    explicit certificate_violation_error(const std::string& m) : std::runtime_error(m) {}
};
struct adversary_budget_error : std::runtime_error {
    explicit adversary_budget_error(const std::string& m) : std::runtime_error(m) {}
};

} // namespace cutstack
