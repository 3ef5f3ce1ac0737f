#pragma once

#include "vic/types.hpp"

namespace vic {

// Force watchdog configuration. The hard threshold is the termination
// criterion; the soft threshold is where stiffness scaling begins.
struct SafetyConfig {
    double hard_threshold = 30.0;   // N
    double soft_threshold = 15.0;   // N
    int consecutive_limit = 3;
    double alpha_min = 0.2;
    bool use_norm = false;          // violation metric: per-axis max (default) or norm

    bool valid() const {
        return soft_threshold > 0.0 && soft_threshold <= hard_threshold &&
               consecutive_limit >= 1 && alpha_min > 0.0 && alpha_min <= 1.0;
    }
};

enum class SafetyState { Ok, Warning, Terminated };

std::string_view to_string(SafetyState s);

struct SafetyStatus {
    SafetyState state = SafetyState::Ok;
    int consecutive_violations = 0;
    double peak_force = 0.0;        // N, largest observed violation metric
    int violation_total = 0;
};

// Force metric used for scaling and violation checks.
double safety_force_metric(const Wrench& w, const SafetyConfig& cfg);

// Stiffness scale factor: 1 below the soft threshold, alpha_min at or
// above the hard threshold, linear in between.
double compute_alpha(const Wrench& w, const SafetyConfig& cfg);

// One watchdog tick. Counts consecutive samples whose metric strictly
// exceeds the hard threshold; reaching consecutive_limit terminates.
// Terminated is absorbing: updating a terminated status throws.
SafetyStatus safety_update(const SafetyStatus& status, const Wrench& w, const SafetyConfig& cfg);

SafetyStatus safety_reset(const SafetyConfig& cfg);

}  // namespace vic
