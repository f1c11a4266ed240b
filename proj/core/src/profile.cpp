#include "cutlab/profile.hpp"

#include <algorithm>
#include <cmath>

#include "cutlab/errors.hpp"
#include "cutlab/math_util.hpp"

namespace cutlab {

ForceProfile::ForceProfile(std::vector<ForceSample> samples) : samples_(std::move(samples)) {
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].t) || !samples_[i].force.allFinite()) {
      throw NonFiniteValue("force profile sample " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && samples_[i].t <= samples_[i - 1].t) {
      throw NonMonotonicTime("force profile time not strictly increasing at sample " +
                             std::to_string(i));
    }
  }
}

void ForceProfile::append(const ForceSample& s) {
  if (!std::isfinite(s.t) || !s.force.allFinite()) {
    throw NonFiniteValue("appended force sample is not finite");
  }
  if (!samples_.empty() && s.t <= samples_.back().t) {
    throw NonMonotonicTime("appended sample time does not increase");
  }
  samples_.push_back(s);
}

double ForceProfile::start_time() const {
  if (samples_.empty()) throw EmptyProfile("start_time of empty profile");
  return samples_.front().t;
}

double ForceProfile::end_time() const {
  if (samples_.empty()) throw EmptyProfile("end_time of empty profile");
  return samples_.back().t;
}

namespace {

// Index i such that samples[i].t <= t <= samples[i+1].t.
std::size_t bracket(const std::vector<ForceSample>& samples, double t) {
  auto it = std::upper_bound(samples.begin(), samples.end(), t,
                             [](double v, const ForceSample& s) { return v < s.t; });
  if (it == samples.begin() || it == samples.end()) {
    // t may equal an endpoint exactly.
    if (!samples.empty() && t == samples.back().t) return samples.size() - 2;
    throw OutOfRangeGrid("time " + std::to_string(t) + " outside profile range");
  }
  return static_cast<std::size_t>(it - samples.begin()) - 1;
}

}  // namespace

Eigen::Vector2d ForceProfile::interpolate(double t) const {
  if (samples_.empty()) throw EmptyProfile("interpolate on empty profile");
  if (t < samples_.front().t || t > samples_.back().t) {
    throw OutOfRangeGrid("time " + std::to_string(t) + " outside profile range");
  }
  if (samples_.size() == 1) return samples_.front().force;
  const std::size_t i = bracket(samples_, t);
  const ForceSample& a = samples_[i];
  const ForceSample& b = samples_[i + 1];
  const double w = (t - a.t) / (b.t - a.t);
  return (1.0 - w) * a.force + w * b.force;
}

double ForceProfile::interpolate_knife_z(double t) const {
  if (samples_.empty()) throw EmptyProfile("interpolate on empty profile");
  if (t < samples_.front().t || t > samples_.back().t) {
    throw OutOfRangeGrid("time " + std::to_string(t) + " outside profile range");
  }
  if (samples_.size() == 1) return samples_.front().knife_z;
  const std::size_t i = bracket(samples_, t);
  const ForceSample& a = samples_[i];
  const ForceSample& b = samples_[i + 1];
  const double w = (t - a.t) / (b.t - a.t);
  return (1.0 - w) * a.knife_z + w * b.knife_z;
}

double ForceProfile::peak_force() const {
  if (samples_.empty()) throw EmptyProfile("peak_force of empty profile");
  double peak = 0.0;
  for (const auto& s : samples_) peak = std::max(peak, s.force.norm());
  return peak;
}

ForceProfile resample_profile(const ForceProfile& profile, const std::vector<double>& grid) {
  ForceProfile out;
  for (double t : grid) {
    ForceSample s;
    s.t = t;
    s.force = profile.interpolate(t);
    s.knife_z = profile.interpolate_knife_z(t);
    out.append(s);
  }
  return out;
}

double profile_loss(const ForceProfile& sim, const ForceProfile& ref) {
  if (sim.empty() || ref.empty()) throw EmptyOverlap("profile_loss with empty profile");
  const double lo = sim.start_time();
  const double hi = sim.end_time();

  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& s : ref.samples()) {
    if (s.t < lo || s.t > hi) continue;
    const double mag_sim = sim.interpolate(s.t).norm();
    const double mag_ref = s.force.norm();
    sum += sq(mag_sim - mag_ref);
    ++count;
  }
  if (count == 0) throw EmptyOverlap("profiles do not overlap in time");
  return sum / static_cast<double>(count);
}

}  // namespace cutlab
