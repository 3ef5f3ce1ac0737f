#include "vic/phase.hpp"

namespace vic {

ContactPhase PhaseDetector::update(const ObservationFrame& obs) {
    const double f = wrench_force_magnitude(obs.wrench);

    if (f >= cfg_.contact_on) {
        ++above_count_;
        if (f > 1e-9) {
            reaction_dir_ = obs.wrench.force * (1.0 / f);
            have_reaction_ = true;
        }
    } else {
        above_count_ = 0;
    }

    const double dist = (target_ - obs.pose.position).norm();
    const ContactPhase off_contact =
        dist <= cfg_.approach_distance ? ContactPhase::Approaching : ContactPhase::FreeMotion;

    switch (phase_) {
        case ContactPhase::Contact:
            if (f >= cfg_.contact_off) break;  // hysteresis hold
            if (have_reaction_ && obs.twist.linear.dot(reaction_dir_) > 1e-6) {
                phase_ = ContactPhase::Retreat;
            } else {
                phase_ = off_contact;
            }
            break;
        case ContactPhase::Retreat:
            if (above_count_ >= cfg_.debounce) {
                phase_ = ContactPhase::Contact;
            } else if (!(have_reaction_ && obs.twist.linear.dot(reaction_dir_) > 1e-6)) {
                phase_ = off_contact;
            }
            break;
        case ContactPhase::FreeMotion:
        case ContactPhase::Approaching:
            phase_ = above_count_ >= cfg_.debounce ? ContactPhase::Contact : off_contact;
            break;
    }
    return phase_;
}

void PhaseDetector::reset() {
    phase_ = ContactPhase::FreeMotion;
    above_count_ = 0;
    have_reaction_ = false;
}

ContactPhase fuse_phase(std::optional<ContactPhase> semantic, ContactPhase sensed) {
    if (sensed == ContactPhase::Contact) return ContactPhase::Contact;
    if (semantic.has_value()) return *semantic;
    return sensed;
}

}  // namespace vic
