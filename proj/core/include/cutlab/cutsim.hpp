#pragma once

#include <Eigen/Core>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "cutlab/profile.hpp"

namespace cutlab {

inline constexpr int kNumSimParams = 6;

struct ParamRange {
  const char* name;
  double lo;
  double hi;
  bool log_scale;
};

// The six calibration parameters of the cutting model, with their admissible
// ranges. All force computations read exclusively from this struct so the
// calibration pipeline can treat the simulator as a black box over 6 knobs.
struct SimParams {
  double cut_spring_stiffness = 1500.0;     // N/m
  double cut_spring_softness = 500.0;       // N, damage-rate normalizer
  double contact_stiffness = 2000.0;        // N/m, board contact
  double contact_damping = 10.0;            // N*s/m, board contact
  double contact_friction_stiffness = 50.0; // pre-sliding tanh slope
  double contact_friction_coeff = 0.7;      // Coulomb coefficient

  static const std::array<ParamRange, kNumSimParams>& ranges();

  double get(int index) const;
  void set(int index, double value);

  // Throws ParamOutOfRange naming the offending field and bound.
  void validate() const;

  Eigen::Matrix<double, kNumSimParams, 1> as_vector() const;
  static SimParams from_vector(const Eigen::Matrix<double, kNumSimParams, 1>& v);
};

// Discretization of a food item: M cut springs stacked along the slice
// column, resting on the board.
struct FoodSpec {
  std::string name;
  double height = 0.04;             // m
  double slice_column_width = 0.005; // m
  int spring_count = 8;
  double anchor_y = 0.0;            // lateral position of the slice plane

  // Spring i sits at height (i + 0.5) * height / M.
  std::vector<double> spring_heights() const;
};

struct KnifeState {
  double y = 0.0;
  double z = 0.0;
  double vy = 0.0;
  double vz = 0.0;
  double time = 0.0;
};

struct ContactForce {
  double f_y = 0.0;  // lateral (friction)
  double f_z = 0.0;  // vertical (spring + board)
  double spring = 0.0;
  double friction = 0.0;
  double board = 0.0;

  Eigen::Vector2d vector() const { return {f_y, f_z}; }
};

// Mutable simulation state: per-spring damage in [0,1], non-decreasing.
struct CutScene {
  FoodSpec food;
  SimParams params;
  Eigen::VectorXd damage;
  double board_height = 0.0;
  double sim_time = 0.0;
  // softplus sharpness of the smoothed contact gates (1/m); configuration
  // constant, not a calibration parameter.
  double contact_smoothing = 1e3;

  bool fully_cut(double threshold = 0.99) const;
  double mean_damage() const;
};

CutScene build_scene(const FoodSpec& food, const SimParams& params,
                     double contact_smoothing = 1e3);

// Advances damage by one step and returns the contact force exerted on the
// knife by the food and board at the given knife state.
ContactForce step_cut(CutScene& scene, const KnifeState& knife, double dt);

using KnifeTrajectory = std::function<KnifeState(double)>;

// Steps the scene along the trajectory at fixed dt, collecting one force
// sample per step (times 0, dt, ..., duration - dt). dt must divide
// duration to within 1 ulp-scaled tolerance.
ForceProfile simulate_trace(CutScene scene, const KnifeTrajectory& trajectory, double dt,
                            double duration);

struct LossGradient {
  double loss = 0.0;
  Eigen::Matrix<double, kNumSimParams, 1> gradient =
      Eigen::Matrix<double, kNumSimParams, 1>::Zero();
};

// Loss and exact parameter gradient of profile_loss(sim, ref) where sim is
// the trace of `trajectory` under `params`, via forward sensitivity
// propagation through the smooth force law. The simulated duration is the
// smallest multiple of dt whose sample grid covers ref's end time. The loss
// value matches profile_loss(simulate_trace(...), ref) bit for bit.
LossGradient loss_gradient(const FoodSpec& food, const KnifeTrajectory& trajectory,
                           const ForceProfile& ref, const SimParams& params, double dt,
                           double contact_smoothing = 1e3);

}  // namespace cutlab
