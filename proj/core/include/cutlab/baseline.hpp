#pragma once

#include "cutlab/cutsim.hpp"
#include "cutlab/profile.hpp"

namespace cutlab {

// Comparison cutting model: a prismatic compression spring between the food
// top and the board, parameterized through constraint-solver style ERP/CFM
// values. Beyond full compression the board contact law takes over.
struct SpringModel {
  double erp = 0.1;             // in (0, 1]
  double cfm = 0.01;            // > 0
  double h = 1e-4;              // solver step used in the ERP/CFM identities
  double rest_height = 0.04;    // m, spring engages below this knife height
  double max_compression = 0.04;
  // Board contact, same law as the cutting model.
  double board_stiffness = 2000.0;
  double board_damping = 10.0;
  double contact_smoothing = 1e3;

  double stiffness() const { return erp / (cfm * h); }
  double damping() const { return (1.0 - erp) / cfm; }
};

// (k, c) from (erp, cfm, h): k = erp / (cfm h), c = (1 - erp) / cfm.
struct StiffnessDamping {
  double k = 0.0;
  double c = 0.0;
};
StiffnessDamping stiffness_damping(double erp, double cfm, double h);

// Inverse map: erp = h k / (h k + c), cfm = 1 / (h k + c).
struct ErpCfm {
  double erp = 0.0;
  double cfm = 0.0;
};
ErpCfm erp_cfm_from(double k, double c, double h);

// Force on the knife from the compression spring and, past full
// compression, the board. No lateral component.
ContactForce step_spring(const SpringModel& model, const KnifeState& knife, double dt);

// Sets the spring so that full compression reproduces the reference
// profile's peak force magnitude, with zero spring damping.
SpringModel calibrate_baseline(const ForceProfile& ref, double rest_height,
                               double max_compression, double h);

}  // namespace cutlab
