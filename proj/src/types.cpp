#include "vic/types.hpp"

#include <algorithm>
#include <cctype>

namespace vic {

Quat quat_from_axis_angle(const Vec3& rot) {
    const double angle = rot.norm();
    if (angle < 1e-12) {
        // first-order expansion, renormalized by the constructor
        return Quat(1.0, 0.5 * rot.x, 0.5 * rot.y, 0.5 * rot.z);
    }
    const double s = std::sin(0.5 * angle) / angle;
    return Quat(std::cos(0.5 * angle), rot.x * s, rot.y * s, rot.z * s);
}

Vec3 quat_to_axis_angle(const Quat& q_in) {
    Quat q = q_in;
    if (q.w < 0.0) { q.w = -q.w; q.x = -q.x; q.y = -q.y; q.z = -q.z; }
    const double sin_half = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (sin_half < 1e-12) return {2.0 * q.x, 2.0 * q.y, 2.0 * q.z};
    const double angle = 2.0 * std::atan2(sin_half, q.w);
    const double s = angle / sin_half;
    return {q.x * s, q.y * s, q.z * s};
}

Quat quat_slerp(const Quat& a, const Quat& b_in, double t) {
    Quat b = b_in;
    double cos_theta = a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
    if (cos_theta < 0.0) {
        b.w = -b.w; b.x = -b.x; b.y = -b.y; b.z = -b.z;
        cos_theta = -cos_theta;
    }
    if (cos_theta > 1.0 - 1e-10) {
        return Quat(a.w + t * (b.w - a.w), a.x + t * (b.x - a.x),
                    a.y + t * (b.y - a.y), a.z + t * (b.z - a.z));
    }
    const double theta = std::acos(cos_theta);
    const double sin_theta = std::sin(theta);
    const double wa = std::sin((1.0 - t) * theta) / sin_theta;
    const double wb = std::sin(t * theta) / sin_theta;
    return Quat(wa * a.w + wb * b.w, wa * a.x + wb * b.x,
                wa * a.y + wb * b.y, wa * a.z + wb * b.z);
}

std::string_view to_string(ContactPhase p) {
    switch (p) {
        case ContactPhase::FreeMotion:  return "Free_motion";
        case ContactPhase::Approaching: return "Approaching";
        case ContactPhase::Contact:     return "Contact";
        case ContactPhase::Retreat:     return "Retreat";
    }
    return "Free_motion";
}

namespace {
std::string canon(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '_' || c == '-' || c == ' ') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}
}  // namespace

std::optional<ContactPhase> phase_from_string(std::string_view s) {
    const std::string c = canon(s);
    if (c == "freemotion")  return ContactPhase::FreeMotion;
    if (c == "approaching") return ContactPhase::Approaching;
    if (c == "contact")     return ContactPhase::Contact;
    if (c == "retreat")     return ContactPhase::Retreat;
    return std::nullopt;
}

std::string_view to_string(Axis a) {
    switch (a) {
        case Axis::X: return "X";
        case Axis::Y: return "Y";
        case Axis::Z: return "Z";
    }
    return "X";
}

std::optional<Axis> axis_from_string(std::string_view s) {
    const std::string c = canon(s);
    if (c == "x") return Axis::X;
    if (c == "y") return Axis::Y;
    if (c == "z") return Axis::Z;
    return std::nullopt;
}

bool validate_impedance(const ImpedanceParams& p, const ImpedanceRange& range) {
    const auto in_band = [&](double v) { return v >= range.k_min && v <= range.k_max; };
    for (int i = 0; i < 3; ++i) {
        if (!in_band(p.k[i])) return false;
        const double lo = range.damping_fraction_min * p.k[i];
        const double hi = range.damping_fraction_max * p.k[i];
        if (p.d[i] < lo || p.d[i] > hi) return false;
    }
    return true;
}

double wrench_force_magnitude(const Wrench& w) { return w.force.norm(); }

double wrench_force_max_abs(const Wrench& w) { return w.force.max_abs(); }

}  // namespace vic
