#include "cutlab/baseline.hpp"

#include <cmath>

#include "cutlab/errors.hpp"
#include "cutlab/math_util.hpp"

namespace cutlab {

StiffnessDamping stiffness_damping(double erp, double cfm, double h) {
  if (!(cfm > 0.0)) throw InvalidParam("cfm must be positive");
  if (!(h > 0.0)) throw InvalidParam("solver step h must be positive");
  if (!(erp > 0.0) || erp > 1.0) throw InvalidParam("erp must lie in (0, 1]");
  StiffnessDamping out;
  out.k = erp / (cfm * h);
  out.c = (1.0 - erp) / cfm;
  return out;
}

ErpCfm erp_cfm_from(double k, double c, double h) {
  if (!(k > 0.0)) throw InvalidParam("stiffness must be positive");
  if (c < 0.0) throw InvalidParam("damping must be non-negative");
  if (!(h > 0.0)) throw InvalidParam("solver step h must be positive");
  ErpCfm out;
  out.erp = h * k / (h * k + c);
  out.cfm = 1.0 / (h * k + c);
  return out;
}

ContactForce step_spring(const SpringModel& model, const KnifeState& knife, double dt) {
  if (dt <= 0.0) throw ConfigError("step_spring: dt must be positive");
  const double k = model.stiffness();
  const double c = model.damping();

  const double compression =
      clamp(model.rest_height - knife.z, 0.0, model.max_compression);
  double f_spring = 0.0;
  if (compression > 0.0) {
    f_spring = k * compression;
    if (knife.vz < 0.0 && compression < model.max_compression) {
      f_spring += c * (-knife.vz);
    }
  }

  double f_board = model.board_stiffness * softplus(-knife.z, model.contact_smoothing);
  if (knife.z < 0.0 && knife.vz < 0.0) {
    f_board += model.board_damping * (-knife.vz);
  }

  ContactForce force;
  force.spring = f_spring;
  force.board = f_board;
  force.friction = 0.0;
  force.f_y = 0.0;
  force.f_z = f_spring + f_board;
  return force;
}

SpringModel calibrate_baseline(const ForceProfile& ref, double rest_height,
                               double max_compression, double h) {
  if (ref.empty()) throw EmptyProfile("calibrate_baseline: empty reference profile");
  if (!(max_compression > 0.0)) throw InvalidParam("max_compression must be positive");

  const double peak = ref.peak_force();
  const double k = peak / max_compression;
  const ErpCfm ec = erp_cfm_from(k, 0.0, h);

  SpringModel model;
  model.erp = ec.erp;
  model.cfm = ec.cfm;
  model.h = h;
  model.rest_height = rest_height;
  model.max_compression = max_compression;
  return model;
}

}  // namespace cutlab
