#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vic {

// 3-vector used for positions (m), velocities (m/s), forces (N),
// stiffness (N/m) and damping (N·s/m) depending on context.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    // element-wise product
    Vec3 cwise(const Vec3& o) const { return {x * o.x, y * o.y, z * o.z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    double max_abs() const { return std::max({std::fabs(x), std::fabs(y), std::fabs(z)}); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
    bool all_ge(double v) const { return x >= v && y >= v && z >= v; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Unit quaternion (w,x,y,z); renormalized on construction.
struct Quat {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Quat() = default;
    Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {
        const double n = std::sqrt(w * w + x * x + y * y + z * z);
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("Quat: zero or non-finite quaternion");
        w /= n; x /= n; y /= n; z /= n;
    }

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    Quat conjugate() const { Quat q; q.w = w; q.x = -x; q.y = -y; q.z = -z; return q; }

    Quat operator*(const Quat& o) const {
        Quat q;
        q.w = w * o.w - x * o.x - y * o.y - z * o.z;
        q.x = w * o.x + x * o.w + y * o.z - z * o.y;
        q.y = w * o.y - x * o.z + y * o.w + z * o.x;
        q.z = w * o.z + x * o.y - y * o.x + z * o.w;
        return q;
    }
};

Quat quat_from_axis_angle(const Vec3& rot);   // rot = axis * angle (rad)
Vec3 quat_to_axis_angle(const Quat& q);       // log map, minimal representation
Quat quat_slerp(const Quat& a, const Quat& b, double t);

struct Pose {
    Vec3 position;       // m
    Quat orientation;    // unit quaternion
};

struct Twist {
    Vec3 linear;         // m/s
    Vec3 angular;        // rad/s
};

// 6D force/torque at the end-effector.
struct Wrench {
    Vec3 force;          // N
    Vec3 torque;         // N·m
};

// Controller gains: translational stiffness/damping plus derived
// orientation gains.
struct ImpedanceParams {
    Vec3 k;              // N/m
    Vec3 d;              // N·s/m
    Vec3 k_o;            // N·m/rad
    Vec3 d_o;            // N·m·s/rad
};

enum class ContactPhase { FreeMotion, Approaching, Contact, Retreat };

std::string_view to_string(ContactPhase p);
std::optional<ContactPhase> phase_from_string(std::string_view s);

enum class Axis { X = 0, Y = 1, Z = 2 };

std::string_view to_string(Axis a);
std::optional<Axis> axis_from_string(std::string_view s);

struct TaskSpec {
    std::string id;
    std::string instruction;
    Axis primary_motion_axis = Axis::X;
    double force_threshold = 30.0;   // N
    double time_limit = 30.0;        // s
};

struct ObservationFrame {
    double timestamp = 0.0;          // s
    Pose pose;
    Twist twist;
    Wrench wrench;
    double gripper = 1.0;            // [0,1], 1 = open
};

// One end-effector displacement command from a policy.
struct ActionCommand {
    Vec3 delta_position;             // m
    Vec3 delta_orientation;          // rad, axis-angle small rotation
    double gripper = 1.0;            // [0,1]
};

struct ActionChunk {
    std::int64_t seq = 0;
    std::vector<ActionCommand> actions;
};

// Allowed stiffness interval plus the damping-fraction band d/k.
struct ImpedanceRange {
    double k_min = 50.0;             // N/m
    double k_max = 5000.0;           // N/m
    double damping_fraction_min = 0.10;
    double damping_fraction_max = 0.20;

    bool valid() const {
        return k_min > 0.0 && k_min <= k_max &&
               damping_fraction_min > 0.0 && damping_fraction_min <= damping_fraction_max &&
               damping_fraction_max < 1.0;
    }
};

// True iff every stiffness/damping component lies inside [min, max]
// (inclusive on both ends).
bool validate_impedance(const ImpedanceParams& p, const ImpedanceRange& range);

// Euclidean norm of the force part.
double wrench_force_magnitude(const Wrench& w);

// Largest per-axis force component max(|Fx|,|Fy|,|Fz|); the violation
// metric used by the safety monitor.
double wrench_force_max_abs(const Wrench& w);

}  // namespace vic
