#pragma once

#include <optional>

#include "vic/types.hpp"

namespace vic {

// Thresholds of the force/kinematic phase state machine. contact_on and
// contact_off form a hysteresis band; debounce filters spikes.
struct PhaseConfig {
    double contact_on = 2.0;         // N, enter Contact at/above this
    double contact_off = 0.5;        // N, leave Contact below this
    double approach_distance = 0.05; // m, Approaching band around the target
    int debounce = 5;                // samples of sustained force to latch Contact

    bool valid() const {
        return contact_off < contact_on && contact_off >= 0.0 && debounce >= 1 &&
               approach_distance > 0.0;
    }
};

// Contact-phase state machine. Deterministic per observation stream:
// Contact latches after `debounce` samples at/above contact_on and holds
// until the force drops below contact_off; Retreat follows Contact while
// the end-effector moves along the sensed reaction direction; otherwise
// the phase is Approaching inside the target band and FreeMotion outside.
class PhaseDetector {
  public:
    PhaseDetector(const PhaseConfig& cfg, const Vec3& contact_target)
        : cfg_(cfg), target_(contact_target) {}

    ContactPhase update(const ObservationFrame& obs);

    ContactPhase phase() const { return phase_; }
    void reset();

  private:
    PhaseConfig cfg_;
    Vec3 target_;
    ContactPhase phase_ = ContactPhase::FreeMotion;
    int above_count_ = 0;
    Vec3 reaction_dir_;      // unit direction of the sensed force while in Contact
    bool have_reaction_ = false;
};

// Combine an advisor-suggested phase with the force-derived one. A
// sensed Contact always wins; otherwise the semantic phase wins when
// present.
ContactPhase fuse_phase(std::optional<ContactPhase> semantic, ContactPhase sensed);

}  // namespace vic
