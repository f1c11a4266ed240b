#pragma once

#include <Eigen/Core>
#include <vector>

namespace cutlab {

// Planar serial chain with first-order joint command tracking. Stands in
// for the full arm: the compliance controller supplies the dynamics, this
// module supplies kinematics and actuation limits.
struct ChainSpec {
  std::vector<double> link_lengths = {0.4, 0.4, 0.2};  // m
  std::vector<double> joint_limits_lo;                 // rad, one per joint
  std::vector<double> joint_limits_hi;
  double joint_velocity_limit = 3.0;                   // rad/s
  double command_lag = 0.01;                           // s, tracking time constant

  int dof() const { return static_cast<int>(link_lengths.size()); }
  void validate() const;
};

struct RobotState {
  Eigen::VectorXd q;
  Eigen::VectorXd qd;
  double time = 0.0;
};

RobotState make_robot_state(const ChainSpec& chain, const Eigen::VectorXd& q0);

// End-effector position (y, z) of the planar chain.
Eigen::Vector2d forward_kinematics(const ChainSpec& chain, const Eigen::VectorXd& q);

// Analytic 2xN position Jacobian; column j = d(pose)/d(q_j).
Eigen::Matrix2Xd jacobian(const ChainSpec& chain, const Eigen::VectorXd& q);

// First-order lag toward q_command with joint velocity and position limits.
// The reported velocity is the realized (q_new - q_old)/dt, so limit
// clamping never leaves a stale velocity in the state.
RobotState step_robot(const RobotState& state, const ChainSpec& chain,
                      const Eigen::VectorXd& q_command, double dt);

}  // namespace cutlab
