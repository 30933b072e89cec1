#pragma once

#include <functional>
#include <string>
#include <vector>

#include "smectic/assembly.hpp"
#include "smectic/diagnostics.hpp"
#include "smectic/model.hpp"
#include "smectic/sparse.hpp"

namespace smectic {

// Picard loop failed to contract within max_picard iterations.
struct PicardError : std::runtime_error {
  PicardError(const std::string& msg, std::vector<double> history)
      : std::runtime_error(msg), iterate_changes(std::move(history)) {}
  std::vector<double> iterate_changes;  // relative state change per iteration
};

// Od2 refuses time steps at or above the unique-solvability bound.
struct SolvabilityError : std::runtime_error {
  SolvabilityError(const std::string& msg, double dt_, double bound_)
      : std::runtime_error(msg), dt(dt_), bound(bound_) {}
  double dt;
  double bound;
};

// A step failure annotated with where the run was.
struct StepError : std::runtime_error {
  StepError(const std::string& msg, long long step_, double t_)
      : std::runtime_error(msg), step(step_), t(t_) {}
  long long step;
  double t;
};

struct StepResult {
  State state;
  Extrapolants extrap;  // extrapolants used in the final solve
  int picard_iters = 0;
  double lin_res = 0.0;
  int solve_count = 0;  // linear solves performed by this step
};

struct RunSinks {
  std::function<void(const EnergyReport&)> on_report;                  // every step
  std::function<void(const State&, long long step)> on_snapshot;      // cadence out_every
};

// Owns the discretization, the constant operators and the factorization
// pattern for one run configuration.
class Simulation {
 public:
  explicit Simulation(const Params& params);

  const Params& params() const { return params_; }
  const Discretization& disc() const { return disc_; }
  const StepOperators& ops() const { return ops_; }
  const BlockLayout& layout() const { return layout_; }

  // phi0 = nodal interpolation of the named field ("paper", "zero",
  // "stripe_x"), psi0 its projected Laplacian, u0 = 0, p0 = 0.
  State init_state(const std::string& initial_phi) const;

  // One Crank-Nicolson step from t=0; the midpoint extrapolants involve the
  // unknown level, so the step iterates Picard on them.
  StepResult bootstrap_step_cn(const State& state);

  // One BDF2 step. Od2: exactly one assemble+solve. Mp: Picard on the
  // potential block only.
  StepResult step_bdf2(const State& state);

  // Full run: init, CN bootstrap, BDF2 to t_end. Emits one EnergyReport per
  // step and snapshots every out_every steps (plus initial and final).
  State run(const std::string& initial_phi, bool override_solvability, const RunSinks& sinks);

 private:
  StepResult solve_step(const State& state, bool crank_nicolson);

  Params params_;
  Discretization disc_;
  StepOperators ops_;
  BlockLayout layout_;
  SparseLu lu_;
};

// Convenience wrapper: build a Simulation and run it.
State run_simulation(const Params& params, const std::string& initial_phi,
                     bool override_solvability, const RunSinks& sinks);

}  // namespace smectic
