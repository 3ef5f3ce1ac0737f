#include "vic/safety.hpp"

#include <algorithm>
#include <stdexcept>

namespace vic {

std::string_view to_string(SafetyState s) {
    switch (s) {
        case SafetyState::Ok:         return "ok";
        case SafetyState::Warning:    return "warning";
        case SafetyState::Terminated: return "terminated";
    }
    return "ok";
}

double safety_force_metric(const Wrench& w, const SafetyConfig& cfg) {
    return cfg.use_norm ? wrench_force_magnitude(w) : wrench_force_max_abs(w);
}

double compute_alpha(const Wrench& w, const SafetyConfig& cfg) {
    const double f = safety_force_metric(w, cfg);
    if (f <= cfg.soft_threshold) return 1.0;
    if (f >= cfg.hard_threshold) return cfg.alpha_min;
    const double span = cfg.hard_threshold - cfg.soft_threshold;
    return 1.0 + (cfg.alpha_min - 1.0) * (f - cfg.soft_threshold) / span;
}

SafetyStatus safety_update(const SafetyStatus& status, const Wrench& w, const SafetyConfig& cfg) {
    if (status.state == SafetyState::Terminated)
        throw std::logic_error("safety_update: status already terminated");

    const double f = safety_force_metric(w, cfg);
    SafetyStatus next = status;
    next.peak_force = std::max(status.peak_force, f);

    if (f > cfg.hard_threshold) {
        next.consecutive_violations = status.consecutive_violations + 1;
        next.violation_total = status.violation_total + 1;
        next.state = next.consecutive_violations >= cfg.consecutive_limit
                         ? SafetyState::Terminated
                         : SafetyState::Warning;
    } else {
        next.consecutive_violations = 0;
        next.state = f > cfg.soft_threshold ? SafetyState::Warning : SafetyState::Ok;
    }
    return next;
}

SafetyStatus safety_reset(const SafetyConfig&) { return SafetyStatus{}; }

}  // namespace vic
