#include "cutlab/cutsim.hpp"

#include <cmath>

#include "cutlab/errors.hpp"
#include "cutlab/math_util.hpp"

namespace cutlab {

namespace {

enum ParamIndex {
  kCutSpringStiffness = 0,
  kCutSpringSoftness = 1,
  kContactStiffness = 2,
  kContactDamping = 3,
  kContactFrictionStiffness = 4,
  kContactFrictionCoeff = 5,
};

const std::array<ParamRange, kNumSimParams> kRanges = {{
    {"cut_spring_stiffness", 100.0, 8000.0, true},
    {"cut_spring_softness", 10.0, 5000.0, true},
    {"contact_stiffness", 200.0, 8000.0, true},
    {"contact_damping", 0.1, 100.0, false},
    {"contact_friction_stiffness", 0.001, 8000.0, true},
    {"contact_friction_coeff", 0.45, 1.0, false},
}};

// Number of substeps implied by duration/dt, accepting float ratios within
// an ulp-scaled tolerance of an integer.
long long substep_count_or_throw(double duration, double dt, const char* what) {
  if (dt <= 0.0) throw ConfigError(std::string(what) + ": dt must be positive");
  if (duration < 0.0) throw ConfigError(std::string(what) + ": negative duration");
  const double ratio = duration / dt;
  const long long n = std::llround(ratio);
  if (std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, ratio)) {
    throw NonDivisibleTimestep(std::string(what) + ": dt " + std::to_string(dt) +
                               " does not divide duration " + std::to_string(duration));
  }
  return n;
}

}  // namespace

const std::array<ParamRange, kNumSimParams>& SimParams::ranges() { return kRanges; }

double SimParams::get(int index) const {
  switch (index) {
    case kCutSpringStiffness: return cut_spring_stiffness;
    case kCutSpringSoftness: return cut_spring_softness;
    case kContactStiffness: return contact_stiffness;
    case kContactDamping: return contact_damping;
    case kContactFrictionStiffness: return contact_friction_stiffness;
    case kContactFrictionCoeff: return contact_friction_coeff;
    default: throw DimensionMismatch("SimParams index out of range");
  }
}

void SimParams::set(int index, double value) {
  switch (index) {
    case kCutSpringStiffness: cut_spring_stiffness = value; return;
    case kCutSpringSoftness: cut_spring_softness = value; return;
    case kContactStiffness: contact_stiffness = value; return;
    case kContactDamping: contact_damping = value; return;
    case kContactFrictionStiffness: contact_friction_stiffness = value; return;
    case kContactFrictionCoeff: contact_friction_coeff = value; return;
    default: throw DimensionMismatch("SimParams index out of range");
  }
}

void SimParams::validate() const {
  for (int i = 0; i < kNumSimParams; ++i) {
    const ParamRange& r = kRanges[i];
    const double v = get(i);
    if (!(v >= r.lo)) {
      throw ParamOutOfRange(std::string(r.name) + " = " + std::to_string(v) +
                            " below lower bound " + std::to_string(r.lo));
    }
    if (!(v <= r.hi)) {
      throw ParamOutOfRange(std::string(r.name) + " = " + std::to_string(v) +
                            " above upper bound " + std::to_string(r.hi));
    }
  }
}

Eigen::Matrix<double, kNumSimParams, 1> SimParams::as_vector() const {
  Eigen::Matrix<double, kNumSimParams, 1> v;
  for (int i = 0; i < kNumSimParams; ++i) v[i] = get(i);
  return v;
}

SimParams SimParams::from_vector(const Eigen::Matrix<double, kNumSimParams, 1>& v) {
  SimParams p;
  for (int i = 0; i < kNumSimParams; ++i) p.set(i, v[i]);
  return p;
}

std::vector<double> FoodSpec::spring_heights() const {
  std::vector<double> z(static_cast<std::size_t>(spring_count));
  for (int i = 0; i < spring_count; ++i) {
    z[static_cast<std::size_t>(i)] = (i + 0.5) * height / spring_count;
  }
  return z;
}

bool CutScene::fully_cut(double threshold) const {
  for (int i = 0; i < damage.size(); ++i) {
    if (damage[i] < threshold) return false;
  }
  return true;
}

double CutScene::mean_damage() const {
  return damage.size() > 0 ? damage.mean() : 0.0;
}

CutScene build_scene(const FoodSpec& food, const SimParams& params, double contact_smoothing) {
  params.validate();
  if (food.spring_count < 1) {
    throw ParamOutOfRange("spring_count = " + std::to_string(food.spring_count) +
                          " below lower bound 1");
  }
  if (!(food.height > 0.0)) {
    throw ParamOutOfRange("food height must be positive, got " + std::to_string(food.height));
  }
  if (!(food.slice_column_width > 0.0)) {
    throw ParamOutOfRange("slice_column_width must be positive");
  }
  if (!(contact_smoothing > 0.0)) {
    throw ParamOutOfRange("contact_smoothing must be positive");
  }
  CutScene scene;
  scene.food = food;
  scene.params = params;
  scene.damage = Eigen::VectorXd::Zero(food.spring_count);
  scene.board_height = 0.0;
  scene.sim_time = 0.0;
  scene.contact_smoothing = contact_smoothing;
  return scene;
}

ContactForce step_cut(CutScene& scene, const KnifeState& knife, double dt) {
  if (dt <= 0.0) throw ConfigError("step_cut: dt must be positive");
  if (!std::isfinite(knife.y) || !std::isfinite(knife.z) || !std::isfinite(knife.vy) ||
      !std::isfinite(knife.vz)) {
    throw NonFiniteState("step_cut: knife state is not finite");
  }

  const SimParams& p = scene.params;
  const double beta = scene.contact_smoothing;
  const int m = scene.food.spring_count;
  const double dz = scene.food.height / m;

  double f_spring = 0.0;
  for (int i = 0; i < m; ++i) {
    const double zi = (i + 0.5) * dz;
    const double pen = softplus(zi - knife.z, beta);
    const double fi = p.cut_spring_stiffness * (1.0 - scene.damage[i]) * pen;
    f_spring += fi;
    scene.damage[i] = std::min(1.0, scene.damage[i] + dt * fi / p.cut_spring_softness);
  }

  const double z_rel = knife.z - scene.board_height;
  double f_board = p.contact_stiffness * softplus(-z_rel, beta);
  if (z_rel < 0.0 && knife.vz < 0.0) {
    f_board += p.contact_damping * (-knife.vz);
  }

  const double f_normal = f_spring + f_board;
  const double f_t =
      -p.contact_friction_coeff * f_normal * std::tanh(p.contact_friction_stiffness * knife.vy);

  ContactForce force;
  force.spring = f_spring;
  force.board = f_board;
  force.friction = f_t;
  force.f_y = f_t;
  force.f_z = f_spring + f_board;

  scene.sim_time += dt;

  if (!std::isfinite(force.f_y) || !std::isfinite(force.f_z)) {
    throw NonFiniteState("step_cut: contact force overflowed");
  }
  return force;
}

ForceProfile simulate_trace(CutScene scene, const KnifeTrajectory& trajectory, double dt,
                            double duration) {
  const long long n = substep_count_or_throw(duration, dt, "simulate_trace");
  ForceProfile profile;
  for (long long k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * dt;
    KnifeState knife = trajectory(t);
    const ContactForce f = step_cut(scene, knife, dt);
    ForceSample s;
    s.t = t;
    s.force = f.vector();
    s.knife_z = knife.z;
    profile.append(s);
  }
  return profile;
}

namespace {

// One simulation step carrying d(damage)/d(params) tangents. Mirrors
// step_cut exactly on the value path.
struct SensitivityStepper {
  const FoodSpec& food;
  const SimParams& p;
  double beta;
  Eigen::VectorXd damage;
  // row i = d damage_i / d params
  Eigen::MatrixXd ddamage;

  explicit SensitivityStepper(const FoodSpec& food_, const SimParams& params, double beta_)
      : food(food_),
        p(params),
        beta(beta_),
        damage(Eigen::VectorXd::Zero(food_.spring_count)),
        ddamage(Eigen::MatrixXd::Zero(food_.spring_count, kNumSimParams)) {}

  // Returns force (f_y, f_z) and the 2x6 force tangent.
  void step(const KnifeState& knife, double dt, Eigen::Vector2d& force,
            Eigen::Matrix<double, 2, kNumSimParams>& dforce) {
    const int m = food.spring_count;
    const double dz = food.height / m;

    double f_spring = 0.0;
    Eigen::Matrix<double, 1, kNumSimParams> df_spring =
        Eigen::Matrix<double, 1, kNumSimParams>::Zero();

    for (int i = 0; i < m; ++i) {
      const double zi = (i + 0.5) * dz;
      const double pen = softplus(zi - knife.z, beta);
      const double fi = p.cut_spring_stiffness * (1.0 - damage[i]) * pen;

      Eigen::Matrix<double, 1, kNumSimParams> dfi =
          -p.cut_spring_stiffness * pen * ddamage.row(i);
      dfi[kCutSpringStiffness] += (1.0 - damage[i]) * pen;

      f_spring += fi;
      df_spring += dfi;

      const double next = damage[i] + dt * fi / p.cut_spring_softness;
      if (next >= 1.0) {
        // Saturated clamp: zero gradient, matching the declared convention.
        damage[i] = 1.0;
        ddamage.row(i).setZero();
      } else {
        ddamage.row(i) += dt / p.cut_spring_softness * dfi;
        ddamage(i, kCutSpringSoftness) -= dt * fi / sq(p.cut_spring_softness);
        damage[i] = next;
      }
    }

    const double z_rel = knife.z;  // board at z = 0
    const double sp_board = softplus(-z_rel, beta);
    double f_board = p.contact_stiffness * sp_board;
    Eigen::Matrix<double, 1, kNumSimParams> df_board =
        Eigen::Matrix<double, 1, kNumSimParams>::Zero();
    df_board[kContactStiffness] = sp_board;
    if (z_rel < 0.0 && knife.vz < 0.0) {
      f_board += p.contact_damping * (-knife.vz);
      df_board[kContactDamping] = -knife.vz;
    }

    const double f_normal = f_spring + f_board;
    const Eigen::Matrix<double, 1, kNumSimParams> df_normal = df_spring + df_board;

    const double th = std::tanh(p.contact_friction_stiffness * knife.vy);
    const double f_t = -p.contact_friction_coeff * f_normal * th;
    Eigen::Matrix<double, 1, kNumSimParams> df_t = -p.contact_friction_coeff * th * df_normal;
    df_t[kContactFrictionCoeff] -= f_normal * th;
    df_t[kContactFrictionStiffness] -=
        p.contact_friction_coeff * f_normal * knife.vy * (1.0 - th * th);

    force = {f_t, f_spring + f_board};
    dforce.row(0) = df_t;
    dforce.row(1) = df_spring + df_board;
  }
};

}  // namespace

LossGradient loss_gradient(const FoodSpec& food, const KnifeTrajectory& trajectory,
                           const ForceProfile& ref, const SimParams& params, double dt,
                           double contact_smoothing) {
  params.validate();
  if (ref.empty()) throw EmptyOverlap("loss_gradient: empty reference profile");

  // Sample grid 0, dt, ..., (n-1)*dt covering the reference end time.
  const double t_end = ref.end_time();
  long long n = static_cast<long long>(std::ceil(t_end / dt - 1e-9)) + 1;
  if (n < 2) n = 2;

  SensitivityStepper stepper(food, params, contact_smoothing);

  ForceProfile sim;
  std::vector<Eigen::Vector2d> forces(static_cast<std::size_t>(n));
  std::vector<Eigen::Matrix<double, 2, kNumSimParams>> tangents(static_cast<std::size_t>(n));
  for (long long k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * dt;
    const KnifeState knife = trajectory(t);
    stepper.step(knife, dt, forces[static_cast<std::size_t>(k)],
                 tangents[static_cast<std::size_t>(k)]);
    if (!forces[static_cast<std::size_t>(k)].allFinite()) {
      throw NonFiniteState("loss_gradient: contact force overflowed");
    }
    ForceSample s;
    s.t = t;
    s.force = forces[static_cast<std::size_t>(k)];
    s.knife_z = knife.z;
    sim.append(s);
  }
  const double sim_end = static_cast<double>(n - 1) * dt;

  // The loss value goes through profile_loss so calibration sees one loss
  // definition on both the TPE and Adam paths.
  LossGradient out;
  out.loss = profile_loss(sim, ref);

  Eigen::Matrix<double, kNumSimParams, 1> dsum = Eigen::Matrix<double, kNumSimParams, 1>::Zero();
  std::size_t count = 0;
  for (const auto& s : ref.samples()) {
    if (s.t < 0.0 || s.t > sim_end) continue;
    const double pos = s.t / dt;
    std::size_t i = static_cast<std::size_t>(pos);
    if (i >= static_cast<std::size_t>(n - 1)) i = static_cast<std::size_t>(n - 2);
    const double w = (s.t - static_cast<double>(i) * dt) / dt;

    const Eigen::Vector2d f = (1.0 - w) * forces[i] + w * forces[i + 1];
    const Eigen::Matrix<double, 2, kNumSimParams> df =
        (1.0 - w) * tangents[i] + w * tangents[i + 1];

    const double mag = f.norm();
    const double err = mag - s.force.norm();
    if (mag > 1e-300) {
      dsum += 2.0 * err / mag * (df.transpose() * f);
    }
    ++count;
  }
  if (count == 0) throw EmptyOverlap("loss_gradient: reference grid outside simulated range");

  out.gradient = dsum / static_cast<double>(count);
  if (!out.gradient.allFinite()) throw NonFiniteGradient("loss_gradient: non-finite gradient");
  return out;
}

}  // namespace cutlab
