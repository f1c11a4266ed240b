#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "cutlab/robosim.hpp"

namespace cutlab {

// Cartesian compliance gains. The stiffness acts per axis; the PD gains
// shape how the net wrench is turned into a commanded wrench.
struct ControllerGains {
  Eigen::Vector2d stiffness = {500.0, 500.0};  // K^c, N/m
  double kp = 1.0;                             // proportional, unitless
  double kd = 0.0;                             // derivative, s
};

struct GainBounds {
  double stiffness_lo = 10.0;
  double stiffness_hi = 2000.0;
  double kp_lo = 0.0;
  double kp_hi = 5.0;
  double kd_lo = 0.0;
  double kd_hi = 0.05;
};

struct ClampReport {
  ControllerGains gains;
  std::vector<std::string> clamped_fields;
};

// Clamps gains into bounds; never rejects, so agent actions stay executable.
ClampReport validate_gains(const ControllerGains& gains, const GainBounds& bounds);

struct CompliantTarget {
  Eigen::Vector2d pose = Eigen::Vector2d::Zero();    // x^d, m
  Eigen::Vector2d wrench = Eigen::Vector2d::Zero();  // F^d, N
};

// Virtual model state: a copy of the kinematic chain driven by forward
// dynamics. Joint commands are read off this model, so no Jacobian
// inversion happens anywhere.
struct FdccState {
  Eigen::VectorXd q_v;
  Eigen::VectorXd qd_v;
  std::optional<Eigen::Vector2d> prev_net_force;  // empty before first step
  Eigen::VectorXd inertia;                        // H diagonal, > 0
};

FdccState make_fdcc_state(const ChainSpec& chain, const Eigen::VectorXd& q0,
                          double inertia = 1.0);

// F^net = K^c (x^d - x) + (F^d - F_ext) - D_v x_dot_v.
//
// F_ext follows the force/torque sensor reading convention: the wrench the
// knife applies to the environment. D_v is the critically damped virtual
// damping 2*sqrt(K^c * m_v) with m_v = 1 kg.
Eigen::Vector2d net_force(const Eigen::Vector2d& pose, const Eigen::Vector2d& vel_v,
                          const CompliantTarget& target, const Eigen::Vector2d& f_ext,
                          const Eigen::Vector2d& stiffness);

// One controller step at period dt: commanded wrench F^c = K^p F^net +
// K^d dF^net/dt, mapped through the virtual model's forward dynamics
// q_dd = H^-1 J^T F^c and integrated semi-implicitly. Returns the virtual
// joint positions as the robot's joint command.
Eigen::VectorXd fdcc_step(FdccState& state, const ChainSpec& chain,
                          const CompliantTarget& target, const Eigen::Vector2d& f_ext,
                          const ControllerGains& gains, double dt);

}  // namespace cutlab
