#include "vic/impedance.hpp"

#include <cmath>
#include <stdexcept>

namespace vic {

std::pair<Vec3, Vec3> orientation_gains(const Vec3& k, const GainConstants& c) {
    if (!k.all_ge(0.0)) throw std::domain_error("orientation_gains: negative stiffness");
    Vec3 k_o, d_o;
    for (int i = 0; i < 3; ++i) {
        k_o[i] = c.epsilon * k[i];
        d_o[i] = 2.0 * c.zeta_orientation * std::sqrt(k_o[i]);
    }
    return {k_o, d_o};
}

Vec3 apply_force_scaling(const Vec3& k_advised, double alpha) {
    if (!(alpha >= 0.2 && alpha <= 1.0))
        throw std::invalid_argument("apply_force_scaling: alpha outside [0.2, 1]");
    return k_advised * alpha;
}

Vec3 critical_damping(const Vec3& k_final, const GainConstants& c) {
    if (!k_final.all_ge(0.0)) throw std::domain_error("critical_damping: negative stiffness");
    if (!c.m_eff.all_ge(0.0) || c.m_eff.x == 0.0 || c.m_eff.y == 0.0 || c.m_eff.z == 0.0)
        throw std::domain_error("critical_damping: m_eff must be positive");
    Vec3 d;
    for (int i = 0; i < 3; ++i)
        d[i] = 2.0 * c.zeta_damping * std::sqrt(k_final[i] * c.m_eff[i]);
    return d;
}

ImpedanceParams make_params(const Vec3& k, const GainConstants& c) {
    ImpedanceParams p;
    p.k = k;
    p.d = critical_damping(k, c);
    auto [k_o, d_o] = orientation_gains(k, c);
    p.k_o = k_o;
    p.d_o = d_o;
    return p;
}

Wrench control_wrench(const ImpedanceParams& p,
                      const Vec3& pos_err, const Vec3& orient_err,
                      const Vec3& linvel_err, const Vec3& angvel_err) {
    Wrench w;
    w.force = p.k.cwise(pos_err) + p.d.cwise(linvel_err);
    w.torque = p.k_o.cwise(orient_err) + p.d_o.cwise(angvel_err);
    return w;
}

}  // namespace vic
