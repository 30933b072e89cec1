#pragma once

#include <span>
#include <vector>

#include "smectic/assembly.hpp"
#include "smectic/model.hpp"

namespace smectic {

// Per-step energy bookkeeping. energy_residual is the raw defect of the
// discrete energy identity
//   d_t E_tot + visc_diss + phi_diss + (lambda/eps^2) nd_phobic = 0
// computed with the same quadrature as assembly.
struct EnergyReport {
  long long step = 0;
  double t = 0.0;
  double e_kin = 0.0;
  double e_ela = 0.0;
  double e_pen = 0.0;
  double e_tot = 0.0;
  double visc_diss = 0.0;       // (sigma_d(D(u^{n+1/2}), grad phi_tilde), D(u^{n+1/2}))
  double phi_diss = 0.0;        // (lambda/gamma) ||d_t phi + u^{n+1/2} . grad phi_tilde||^2
  double nd_phobic = 0.0;       // int fk . d_t grad phi - d_t int F
  double energy_residual = 0.0;
  double mass_phi = 0.0;        // int phi
  double div_res = 0.0;         // max_i |(div u^{n+1/2}, pbar_i)| / ||pbar_i||
  int picard_iters = 0;
  double lin_res = 0.0;

  // Largest term of the identity; the residual is judged relative to it.
  double residual_scale() const;
};

EnergyReport energy_report(const State& prev, const State& next, const Extrapolants& ex,
                           const Params& params, const Discretization& d,
                           const StepOperators& ops, int picard_iters, double lin_res);

// Self-convergence order study: runs to a fixed horizon with dt, dt/2, dt/4
// and reports the observed temporal order for phi and u in L2.
struct OrderStudy {
  double order_phi = 0.0;
  double order_u = 0.0;
  double err_phi_coarse = 0.0;  // ||phi_dt - phi_dt/4||
  double err_phi_fine = 0.0;    // ||phi_dt/2 - phi_dt/4||
  double err_u_coarse = 0.0;
  double err_u_fine = 0.0;
};

OrderStudy temporal_order_study(const Params& base_params, int n_base_steps);

struct SteadyStateSummary {
  double t_peak_kin = 0.0;
  double decay_ratio = 0.0;  // e_kin(end) / e_kin(peak); 0 if the run never moved
};

SteadyStateSummary steady_state_monitor(std::span<const EnergyReport> reports);

}  // namespace smectic
