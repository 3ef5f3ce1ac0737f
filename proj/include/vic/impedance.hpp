#pragma once

#include <utility>

#include "vic/types.hpp"

namespace vic {

// Fixed constants of the gain laws.
struct GainConstants {
    double epsilon = 0.15;            // orientation stiffness fraction
    double zeta_orientation = 0.707;  // orientation damping ratio
    double zeta_damping = 0.7;        // translational damping ratio
    Vec3 m_eff{1.0, 1.0, 1.0};        // effective mass per axis, kg
};

// Orientation gains derived from translational stiffness:
// k_o_i = epsilon * k_i, d_o_i = 2 * zeta * sqrt(k_o_i).
std::pair<Vec3, Vec3> orientation_gains(const Vec3& k, const GainConstants& c = {});

// Force-regulated stiffness: element-wise k * alpha, alpha in [0.2, 1].
Vec3 apply_force_scaling(const Vec3& k_advised, double alpha);

// Critically damped translational damping: d_i = 2 * zeta * sqrt(k_i * m_eff_i).
Vec3 critical_damping(const Vec3& k_final, const GainConstants& c = {});

// Full gain set from a stiffness vector (damping critical, orientation
// gains derived).
ImpedanceParams make_params(const Vec3& k, const GainConstants& c = {});

// Spring-damper control wrench:
//   force  = k   (.) pos_err    + d   (.) linvel_err
//   torque = k_o (.) orient_err + d_o (.) angvel_err
Wrench control_wrench(const ImpedanceParams& p,
                      const Vec3& pos_err, const Vec3& orient_err,
                      const Vec3& linvel_err, const Vec3& angvel_err);

}  // namespace vic
