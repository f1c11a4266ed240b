#include "cutlab/robosim.hpp"

#include <cmath>

#include "cutlab/errors.hpp"
#include "cutlab/math_util.hpp"

namespace cutlab {

void ChainSpec::validate() const {
  if (link_lengths.empty()) throw ConfigError("chain needs at least one link");
  for (double l : link_lengths) {
    if (!(l > 0.0)) throw ConfigError("link lengths must be positive");
  }
  if (!(joint_velocity_limit > 0.0)) throw ConfigError("joint velocity limit must be positive");
  if (!(command_lag > 0.0)) throw ConfigError("command lag must be positive");
  if (!joint_limits_lo.empty() &&
      (joint_limits_lo.size() != link_lengths.size() ||
       joint_limits_hi.size() != link_lengths.size())) {
    throw DimensionMismatch("joint limit arrays must match chain dof");
  }
}

RobotState make_robot_state(const ChainSpec& chain, const Eigen::VectorXd& q0) {
  if (q0.size() != chain.dof()) {
    throw DimensionMismatch("initial q has dimension " + std::to_string(q0.size()) +
                            ", chain has " + std::to_string(chain.dof()));
  }
  RobotState s;
  s.q = q0;
  s.qd = Eigen::VectorXd::Zero(chain.dof());
  s.time = 0.0;
  return s;
}

Eigen::Vector2d forward_kinematics(const ChainSpec& chain, const Eigen::VectorXd& q) {
  if (q.size() != chain.dof()) {
    throw DimensionMismatch("q has dimension " + std::to_string(q.size()) + ", chain has " +
                            std::to_string(chain.dof()));
  }
  double angle = 0.0;
  double y = 0.0;
  double z = 0.0;
  for (int i = 0; i < chain.dof(); ++i) {
    angle += q[i];
    y += chain.link_lengths[static_cast<std::size_t>(i)] * std::cos(angle);
    z += chain.link_lengths[static_cast<std::size_t>(i)] * std::sin(angle);
  }
  return {y, z};
}

Eigen::Matrix2Xd jacobian(const ChainSpec& chain, const Eigen::VectorXd& q) {
  if (q.size() != chain.dof()) {
    throw DimensionMismatch("q has dimension " + std::to_string(q.size()) + ", chain has " +
                            std::to_string(chain.dof()));
  }
  const int n = chain.dof();
  Eigen::Matrix2Xd jac = Eigen::Matrix2Xd::Zero(2, n);
  // Suffix sums: joint j moves every link at or beyond j.
  double angle = 0.0;
  std::vector<double> sin_c(static_cast<std::size_t>(n)), cos_c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    angle += q[i];
    sin_c[static_cast<std::size_t>(i)] = std::sin(angle);
    cos_c[static_cast<std::size_t>(i)] = std::cos(angle);
  }
  double sy = 0.0, sz = 0.0;
  for (int j = n - 1; j >= 0; --j) {
    sy += chain.link_lengths[static_cast<std::size_t>(j)] * sin_c[static_cast<std::size_t>(j)];
    sz += chain.link_lengths[static_cast<std::size_t>(j)] * cos_c[static_cast<std::size_t>(j)];
    jac(0, j) = -sy;
    jac(1, j) = sz;
  }
  return jac;
}

RobotState step_robot(const RobotState& state, const ChainSpec& chain,
                      const Eigen::VectorXd& q_command, double dt) {
  if (dt <= 0.0) throw ConfigError("step_robot: dt must be positive");
  if (q_command.size() != chain.dof() || state.q.size() != chain.dof()) {
    throw DimensionMismatch("step_robot: command dimension " + std::to_string(q_command.size()) +
                            " does not match chain dof " + std::to_string(chain.dof()));
  }

  RobotState next = state;
  const double vmax = chain.joint_velocity_limit;
  for (int i = 0; i < chain.dof(); ++i) {
    const double v = clamp((q_command[i] - state.q[i]) / chain.command_lag, -vmax, vmax);
    double qi = state.q[i] + v * dt;
    if (!chain.joint_limits_lo.empty()) {
      qi = clamp(qi, chain.joint_limits_lo[static_cast<std::size_t>(i)],
                 chain.joint_limits_hi[static_cast<std::size_t>(i)]);
    }
    next.qd[i] = (qi - state.q[i]) / dt;
    next.q[i] = qi;
  }
  next.time = state.time + dt;
  return next;
}

}  // namespace cutlab
