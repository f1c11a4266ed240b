#include "cutlab/fdcc.hpp"

#include <cmath>

#include "cutlab/errors.hpp"
#include "cutlab/math_util.hpp"

namespace cutlab {

ClampReport validate_gains(const ControllerGains& gains, const GainBounds& bounds) {
  ClampReport report;
  report.gains = gains;
  for (int axis = 0; axis < 2; ++axis) {
    const double v = clamp(gains.stiffness[axis], bounds.stiffness_lo, bounds.stiffness_hi);
    if (v != gains.stiffness[axis]) {
      report.clamped_fields.push_back(axis == 0 ? "stiffness_y" : "stiffness_z");
    }
    report.gains.stiffness[axis] = v;
  }
  report.gains.kp = clamp(gains.kp, bounds.kp_lo, bounds.kp_hi);
  if (report.gains.kp != gains.kp) report.clamped_fields.push_back("kp");
  report.gains.kd = clamp(gains.kd, bounds.kd_lo, bounds.kd_hi);
  if (report.gains.kd != gains.kd) report.clamped_fields.push_back("kd");
  return report;
}

FdccState make_fdcc_state(const ChainSpec& chain, const Eigen::VectorXd& q0, double inertia) {
  if (q0.size() != chain.dof()) {
    throw DimensionMismatch("fdcc state q0 dimension does not match chain dof");
  }
  if (!(inertia > 0.0)) throw ConfigError("virtual inertia must be positive");
  FdccState s;
  s.q_v = q0;
  s.qd_v = Eigen::VectorXd::Zero(chain.dof());
  s.inertia = Eigen::VectorXd::Constant(chain.dof(), inertia);
  return s;
}

Eigen::Vector2d net_force(const Eigen::Vector2d& pose, const Eigen::Vector2d& vel_v,
                          const CompliantTarget& target, const Eigen::Vector2d& f_ext,
                          const Eigen::Vector2d& stiffness) {
  Eigen::Vector2d damping;
  damping[0] = 2.0 * std::sqrt(std::max(0.0, stiffness[0]));
  damping[1] = 2.0 * std::sqrt(std::max(0.0, stiffness[1]));
  return stiffness.cwiseProduct(target.pose - pose) + (target.wrench - f_ext) -
         damping.cwiseProduct(vel_v);
}

Eigen::VectorXd fdcc_step(FdccState& state, const ChainSpec& chain,
                          const CompliantTarget& target, const Eigen::Vector2d& f_ext,
                          const ControllerGains& gains, double dt) {
  if (dt <= 0.0) throw ConfigError("fdcc_step: dt must be positive");
  if (state.q_v.size() != chain.dof()) {
    throw DimensionMismatch("fdcc state dimension does not match chain dof");
  }

  const Eigen::Vector2d pose = forward_kinematics(chain, state.q_v);
  const Eigen::Matrix2Xd jac = jacobian(chain, state.q_v);
  const Eigen::Vector2d vel_v = jac * state.qd_v;

  const Eigen::Vector2d f_net = net_force(pose, vel_v, target, f_ext, gains.stiffness);

  Eigen::Vector2d f_cmd = gains.kp * f_net;
  if (state.prev_net_force) {
    f_cmd += gains.kd * (f_net - *state.prev_net_force) / dt;
  }
  state.prev_net_force = f_net;

  const Eigen::VectorXd qdd = (jac.transpose() * f_cmd).cwiseQuotient(state.inertia);
  state.qd_v += qdd * dt;
  state.q_v += state.qd_v * dt;

  if (!state.q_v.allFinite() || !state.qd_v.allFinite()) {
    throw NonFiniteState("fdcc_step: virtual model state overflowed");
  }
  return state.q_v;
}

}  // namespace cutlab
