#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <vector>

#include "cutlab/baseline.hpp"
#include "cutlab/cutsim.hpp"
#include "cutlab/fdcc.hpp"
#include "cutlab/robosim.hpp"

namespace cutlab {

// Anything that can stand on the cutting side of the bridge: the damage
// spring scene or the baseline compression spring.
class CuttingModel {
 public:
  virtual ~CuttingModel() = default;
  virtual ContactForce step(const KnifeState& knife, double dt) = 0;
  virtual double time() const = 0;
  virtual void set_time(double t) = 0;
  // Fraction in [0,1] summarizing cut progress, for traces.
  virtual double progress() const = 0;
  // Whether the item counts as severed (always true for models without a
  // damage notion).
  virtual bool cut_complete(double threshold) const = 0;
  virtual std::unique_ptr<CuttingModel> clone() const = 0;
};

class SceneCuttingModel final : public CuttingModel {
 public:
  explicit SceneCuttingModel(CutScene scene) : scene_(std::move(scene)) {}
  ContactForce step(const KnifeState& knife, double dt) override {
    return step_cut(scene_, knife, dt);
  }
  double time() const override { return scene_.sim_time; }
  void set_time(double t) override { scene_.sim_time = t; }
  double progress() const override { return scene_.mean_damage(); }
  bool cut_complete(double threshold) const override { return scene_.fully_cut(threshold); }
  std::unique_ptr<CuttingModel> clone() const override {
    return std::make_unique<SceneCuttingModel>(scene_);
  }
  const CutScene& scene() const { return scene_; }

 private:
  CutScene scene_;
};

class SpringCuttingModel final : public CuttingModel {
 public:
  explicit SpringCuttingModel(SpringModel model) : model_(model) {}
  ContactForce step(const KnifeState& knife, double dt) override {
    last_compression_ = clamp(model_.rest_height - knife.z, 0.0, model_.max_compression);
    const ContactForce f = step_spring(model_, knife, dt);
    time_ += dt;
    return f;
  }
  double time() const override { return time_; }
  void set_time(double t) override { time_ = t; }
  double progress() const override { return last_compression_ / model_.max_compression; }
  bool cut_complete(double) const override { return true; }
  std::unique_ptr<CuttingModel> clone() const override {
    auto copy = std::make_unique<SpringCuttingModel>(model_);
    copy->time_ = time_;
    copy->last_compression_ = last_compression_;
    return copy;
  }

 private:
  SpringModel model_;
  double time_ = 0.0;
  double last_compression_ = 0.0;
};

enum class ForcePublishMode { kWindowMean, kLastSubstep };

struct BridgeConfig {
  double exchange_period = 2e-3;
  double dt_cut = 1e-5;
  double dt_robot = 1e-4;
  ForcePublishMode publish_mode = ForcePublishMode::kWindowMean;
};

struct SubstepCounts {
  int n_cut = 0;
  int n_robot = 0;
};

// Exact integer substep counts per exchange window; throws
// NonDivisibleTimestep naming the offending pair.
SubstepCounts substep_counts(const BridgeConfig& config);

// One record per exchange boundary.
struct TraceRecord {
  double t = 0.0;                // window-end boundary time
  Eigen::Vector2d knife_pose = Eigen::Vector2d::Zero();
  Eigen::Vector2d knife_vel = Eigen::Vector2d::Zero();
  Eigen::Vector2d f_ext = Eigen::Vector2d::Zero();  // published window force
  ContactForce force_detail;     // decomposition at publish time
  ControllerGains gains;
  Eigen::Vector2d target_pose = Eigen::Vector2d::Zero();
  double cut_progress = 0.0;
};

using EpisodeTrace = std::vector<TraceRecord>;

// Deterministic lockstep scheduler. Per window: the robot tracks FDCC
// commands using the previous window's published force, publishes the knife
// pose and velocity, then the cutting model runs against the knife motion
// linearly extrapolated from that publication and publishes the window
// force. Both clocks are pinned to the exact boundary time after every
// window.
class CosimSession {
 public:
  CosimSession(std::unique_ptr<CuttingModel> model, const ChainSpec& chain,
               const RobotState& robot, const FdccState& controller,
               const BridgeConfig& config);

  // Runs one exchange window under fixed (target, gains); returns the
  // record appended to the trace.
  const TraceRecord& run_window(const CompliantTarget& target, const ControllerGains& gains);

  const EpisodeTrace& trace() const { return trace_; }
  long long windows_run() const { return window_index_; }
  double boundary_time() const;

  Eigen::Vector2d knife_pose() const;
  Eigen::Vector2d knife_velocity() const;
  Eigen::Vector2d published_force() const { return published_force_; }
  const CuttingModel& cutting_model() const { return *model_; }
  const RobotState& robot() const { return robot_; }
  const FdccState& controller() const { return controller_; }
  const BridgeConfig& config() const { return config_; }
  const ChainSpec& chain() const { return chain_; }
  double cut_time() const { return model_->time(); }
  double robot_time() const { return robot_.time; }

 private:
  std::unique_ptr<CuttingModel> model_;
  ChainSpec chain_;
  RobotState robot_;
  FdccState controller_;
  BridgeConfig config_;
  SubstepCounts counts_;
  Eigen::Vector2d published_force_ = Eigen::Vector2d::Zero();
  long long window_index_ = 0;
  EpisodeTrace trace_;
};

// Supplies (target, gains) per window; may only change them at agent-period
// boundaries, which the RL environment enforces by construction.
using ControllerSource =
    std::function<std::pair<CompliantTarget, ControllerGains>(long long window_index)>;

// Convenience loop: runs duration / exchange_period windows.
EpisodeTrace run_cosim(CosimSession& session, const ControllerSource& source, double duration);

}  // namespace cutlab
