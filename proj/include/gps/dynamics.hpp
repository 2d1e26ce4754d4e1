#ifndef GPS_DYNAMICS_HPP
#define GPS_DYNAMICS_HPP

#include <span>
#include <string>
#include <vector>

#include "gps/poisson.hpp"

namespace gps {

struct DynamicsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// xdot_j = {H_1, .., H_{2p-1}, x_j} with exact symbolic right-hand sides.
struct DynamicalSystem {
  const GeneralizedPoissonStructure* structure = nullptr;
  std::vector<PolyMultivector> hamiltonians;  // exactly 2p - 1 order-0 inputs
  std::vector<PolyMultivector> rhs;           // one polynomial per coordinate
  bool trivial = false;                       // identically zero field
};

DynamicalSystem build_system(const GeneralizedPoissonStructure& s,
                             std::span<const PolyMultivector> hamiltonians);

struct Monitor {
  std::string name;
  PolyMultivector poly;
};

/// Fixed-step RK4 trajectory with per-step monitor values. Hamiltonians are
/// always monitored; drift is measured against the initial value, relative
/// when the initial value is nonzero.
struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;          // [step][coordinate]
  std::vector<std::string> monitor_names;
  std::vector<std::vector<double>> monitor_values;  // [monitor][step]
  std::vector<double> max_abs_drift;                // per monitor
  std::vector<double> max_rel_drift;                // per monitor
  bool aborted = false;       // non-finite state encountered
  std::size_t last_valid = 0; // index of the last finite step
};

Trajectory evolve(const DynamicalSystem& sys, std::span<const double> x0, double dt,
                  std::size_t steps, std::span<const Monitor> monitors);

/// Exact symbolic test {H_1, .., H_{2p-1}, f} == 0.
CheckResult constant_of_motion_check(const DynamicalSystem& sys, const PolyMultivector& f);

/// Generalized Poisson theorem harness: when every family
/// (H_1..H_{2p-1}, f_{i_1}..f_{i_{2p-1}}) is in involution, all brackets of
/// 2p of the f's must again be constants of motion; each subset is verified
/// symbolically. A failed hypothesis is reported, not asserted around.
struct PoissonTheoremReport {
  bool hypothesis_ok = true;
  std::string hypothesis_note;
  struct Item {
    std::vector<int> subset;  // indices into fs
    bool constant = false;
  };
  std::vector<Item> items;
  bool all_pass() const;
};

PoissonTheoremReport poisson_theorem_check(const DynamicalSystem& sys,
                                           std::span<const PolyMultivector> fs);

/// Convergence data for the RK4 order check: the same horizon integrated at
/// dt and dt/2, with a dt/10 run as reference for the global error.
struct ConvergenceStudy {
  double max_drift_coarse = 0;   // max over monitors of relative drift at dt
  double max_drift_fine = 0;     // same at dt/2
  double drift_ratio = 0;
  double error_coarse = 0;       // max-norm endpoint error vs reference
  double error_fine = 0;
  double error_ratio = 0;
};

ConvergenceStudy convergence_study(const DynamicalSystem& sys, std::span<const double> x0,
                                   double dt, std::size_t steps,
                                   std::span<const Monitor> monitors);

}  // namespace gps

#endif
