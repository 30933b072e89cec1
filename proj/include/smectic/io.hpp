#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "smectic/diagnostics.hpp"
#include "smectic/mesh.hpp"
#include "smectic/model.hpp"

namespace smectic {

inline constexpr const char* kEnergyCsvHeader =
    "step,t,e_kin,e_ela,e_pen,e_tot,visc_diss,phi_diss,nd_phobic,energy_residual,"
    "mass_phi,div_res,picard_iters,lin_res";

// Streaming CSV writer: header on open, one row per report, 17 significant
// digits, LF line endings.
class EnergyCsvWriter {
 public:
  explicit EnergyCsvWriter(const std::string& path);
  ~EnergyCsvWriter();
  void write(const EnergyReport& report);
  void flush();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

void write_energy_csv(std::span<const EnergyReport> reports, const std::string& path);
std::vector<EnergyReport> read_energy_csv(const std::string& path);

// Legacy ASCII VTK snapshot: vertex values of phi, psi, pressure and the
// velocity (P2 field sampled at vertices, z component 0).
void write_vtk_snapshot(const State& state, const Mesh& mesh, const std::string& path);

// 17-significant-digit formatting used by the writers (round-trip exact).
std::string format_double(double v);

}  // namespace smectic
