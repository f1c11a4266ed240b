#pragma once

#include <Eigen/Core>
#include <vector>

namespace cutlab {

// Time-stamped contact-force recording. Shared by the simulator (synthetic
// "real" data), the calibration loss, and the evaluation reports.
//
// Wrench components are (f_y, f_z) for the planar model. knife_z keeps the
// knife height alongside each sample so slicing phases (food vs board) can
// be labeled later without re-simulating.
struct ForceSample {
  double t = 0.0;
  Eigen::Vector2d force = Eigen::Vector2d::Zero();
  double knife_z = 0.0;
};

class ForceProfile {
 public:
  ForceProfile() = default;
  explicit ForceProfile(std::vector<ForceSample> samples);

  // Appends a sample; time must be strictly greater than the last sample's.
  void append(const ForceSample& s);

  bool empty() const { return samples_.empty(); }
  std::size_t size() const { return samples_.size(); }
  const ForceSample& operator[](std::size_t i) const { return samples_[i]; }
  const std::vector<ForceSample>& samples() const { return samples_; }

  double start_time() const;
  double end_time() const;

  // Linear interpolation of the wrench at time t; t must lie within
  // [start_time, end_time]. Throws OutOfRangeGrid otherwise.
  Eigen::Vector2d interpolate(double t) const;
  double interpolate_knife_z(double t) const;

  // Largest force magnitude over all samples. Throws EmptyProfile if empty.
  double peak_force() const;

 private:
  std::vector<ForceSample> samples_;
};

// Linear resampling of a profile onto an explicit time grid. Every grid
// point must lie within the profile's time range.
ForceProfile resample_profile(const ForceProfile& profile, const std::vector<double>& grid);

// Mean squared error of force magnitude between sim and ref, evaluated on
// the portion of ref's time grid covered by sim (sim is linearly
// interpolated). Throws EmptyOverlap when the time ranges do not overlap.
double profile_loss(const ForceProfile& sim, const ForceProfile& ref);

}  // namespace cutlab
