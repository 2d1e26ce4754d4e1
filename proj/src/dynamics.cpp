#include "gps/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace gps {

DynamicalSystem build_system(const GeneralizedPoissonStructure& s,
                             std::span<const PolyMultivector> hamiltonians) {
  const int expected = 2 * s.p - 1;
  if (static_cast<int>(hamiltonians.size()) != expected) {
    throw DynamicsError("expected " + std::to_string(expected) + " Hamiltonians, got " +
                        std::to_string(hamiltonians.size()));
  }
  const int dim = s.cocycle.omega.dim();
  DynamicalSystem sys;
  sys.structure = &s;
  sys.hamiltonians.assign(hamiltonians.begin(), hamiltonians.end());

  std::vector<PolyMultivector> args(hamiltonians.begin(), hamiltonians.end());
  args.push_back(PolyMultivector::coordinate(dim, 0));
  sys.trivial = true;
  for (int j = 0; j < dim; ++j) {
    args.back() = PolyMultivector::coordinate(dim, j);
    sys.rhs.push_back(gpb_eval(s, args));
    if (!sys.rhs.back().is_zero()) sys.trivial = false;
  }
  return sys;
}

namespace {

// Floating-point image of an exact polynomial, flattened for the integrator.
struct CompiledPoly {
  struct Term {
    double coeff;
    std::vector<std::pair<int, unsigned>> powers;  // (variable, exponent)
  };
  std::vector<Term> terms;

  static CompiledPoly compile(const PolyMultivector& f) {
    CompiledPoly out;
    for (const auto& [key, c] : f.terms()) {
      Term t;
      t.coeff = c.to_double();
      for (std::size_t v = 0; v < key.first.size(); ++v) {
        if (key.first[v] != 0) t.powers.emplace_back(static_cast<int>(v), key.first[v]);
      }
      out.terms.push_back(std::move(t));
    }
    return out;
  }

  double eval(std::span<const double> x) const {
    double sum = 0;
    for (const auto& t : terms) {
      double prod = t.coeff;
      for (const auto& [v, e] : t.powers) {
        double base = x[static_cast<std::size_t>(v)];
        for (unsigned k = 0; k < e; ++k) prod *= base;
      }
      sum += prod;
    }
    return sum;
  }
};

bool all_finite(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

Trajectory evolve(const DynamicalSystem& sys, std::span<const double> x0, double dt,
                  std::size_t steps, std::span<const Monitor> monitors) {
  if (!(dt > 0)) throw DynamicsError("dt must be positive");
  if (steps < 1) throw DynamicsError("steps must be >= 1");
  const std::size_t dim = sys.rhs.size();
  if (x0.size() != dim) throw DynamicsError("x0 size mismatch");

  std::vector<CompiledPoly> field;
  field.reserve(dim);
  for (const auto& f : sys.rhs) field.push_back(CompiledPoly::compile(f));

  Trajectory traj;
  for (std::size_t h = 0; h < sys.hamiltonians.size(); ++h) {
    traj.monitor_names.push_back("H" + std::to_string(h + 1));
  }
  std::vector<CompiledPoly> mons;
  for (const auto& h : sys.hamiltonians) mons.push_back(CompiledPoly::compile(h));
  for (const auto& m : monitors) {
    traj.monitor_names.push_back(m.name);
    mons.push_back(CompiledPoly::compile(m.poly));
  }
  traj.monitor_values.resize(mons.size());

  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  const auto deriv = [&](std::span<const double> state, std::vector<double>& out) {
    for (std::size_t j = 0; j < dim; ++j) out[j] = field[j].eval(state);
  };
  const auto record = [&](double t) {
    traj.times.push_back(t);
    traj.states.push_back(x);
    for (std::size_t m = 0; m < mons.size(); ++m) {
      traj.monitor_values[m].push_back(mons[m].eval(x));
    }
  };

  record(0.0);
  for (std::size_t step = 1; step <= steps; ++step) {
    deriv(x, k1);
    for (std::size_t j = 0; j < dim; ++j) tmp[j] = x[j] + 0.5 * dt * k1[j];
    deriv(tmp, k2);
    for (std::size_t j = 0; j < dim; ++j) tmp[j] = x[j] + 0.5 * dt * k2[j];
    deriv(tmp, k3);
    for (std::size_t j = 0; j < dim; ++j) tmp[j] = x[j] + dt * k3[j];
    deriv(tmp, k4);
    for (std::size_t j = 0; j < dim; ++j) {
      x[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    if (!all_finite(x)) {
      traj.aborted = true;
      break;
    }
    record(dt * static_cast<double>(step));
  }
  traj.last_valid = traj.times.size() - 1;

  traj.max_abs_drift.assign(mons.size(), 0.0);
  traj.max_rel_drift.assign(mons.size(), 0.0);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    const auto& vals = traj.monitor_values[m];
    const double base = vals.empty() ? 0.0 : vals.front();
    double worst = 0;
    for (double v : vals) worst = std::max(worst, std::abs(v - base));
    traj.max_abs_drift[m] = worst;
    traj.max_rel_drift[m] = base != 0.0 ? worst / std::abs(base) : worst;
  }
  return traj;
}

CheckResult constant_of_motion_check(const DynamicalSystem& sys, const PolyMultivector& f) {
  std::vector<PolyMultivector> args = sys.hamiltonians;
  args.push_back(f);
  PolyMultivector bracket = gpb_eval(*sys.structure, args);
  CheckResult out;
  out.note = "exact symbolic evaluation of {H_1,..,H_{2p-1}, f}";
  if (!bracket.is_zero()) {
    out.ok = false;
    out.witness = CheckWitness{{}, std::move(bracket)};
  }
  return out;
}

bool PoissonTheoremReport::all_pass() const {
  return hypothesis_ok &&
         std::all_of(items.begin(), items.end(), [](const Item& i) { return i.constant; });
}

PoissonTheoremReport poisson_theorem_check(const DynamicalSystem& sys,
                                           std::span<const PolyMultivector> fs) {
  const GeneralizedPoissonStructure& s = *sys.structure;
  const int n = 2 * s.p;
  if (static_cast<int>(fs.size()) < n) {
    throw DynamicsError("poisson theorem check needs at least 2p functions");
  }
  PoissonTheoremReport report;

  // Hypothesis: every (H_1..H_{2p-1}, f_{i1}..f_{i_{2p-1}}) is in involution.
  for_each_increasing(n - 1, static_cast<int>(fs.size()), [&](std::span<const int> sel) {
    if (!report.hypothesis_ok) return;
    std::vector<PolyMultivector> family = sys.hamiltonians;
    for (int v : sel) family.push_back(fs[static_cast<std::size_t>(v)]);
    CheckResult inv = involution_check(s, family);
    if (!inv.ok) {
      report.hypothesis_ok = false;
      std::string which = "{";
      for (std::size_t k = 0; k < sel.size(); ++k) {
        which += (k ? "," : "") + std::to_string(sel[k]);
      }
      which += "}";
      report.hypothesis_note =
          "involution fails for the family with f-selection " + which;
    }
  });
  if (!report.hypothesis_ok) return report;
  report.hypothesis_note = "all (2p-1)-selections of the f's are in involution with the "
                           "Hamiltonians";

  for_each_increasing(n, static_cast<int>(fs.size()), [&](std::span<const int> subset) {
    std::vector<PolyMultivector> args;
    for (int v : subset) args.push_back(fs[static_cast<std::size_t>(v)]);
    PolyMultivector bracket = gpb_eval(s, args);
    CheckResult com = constant_of_motion_check(sys, bracket);
    report.items.push_back({std::vector<int>(subset.begin(), subset.end()), com.ok});
  });
  return report;
}

ConvergenceStudy convergence_study(const DynamicalSystem& sys, std::span<const double> x0,
                                   double dt, std::size_t steps,
                                   std::span<const Monitor> monitors) {
  Trajectory coarse = evolve(sys, x0, dt, steps, monitors);
  Trajectory fine = evolve(sys, x0, dt / 2, steps * 2, monitors);
  Trajectory reference = evolve(sys, x0, dt / 10, steps * 10, {});

  ConvergenceStudy out;
  const auto max_drift = [](const Trajectory& t) {
    double worst = 0;
    for (double d : t.max_rel_drift) worst = std::max(worst, d);
    return worst;
  };
  out.max_drift_coarse = max_drift(coarse);
  out.max_drift_fine = max_drift(fine);
  out.drift_ratio = out.max_drift_fine > 0 ? out.max_drift_coarse / out.max_drift_fine : 0;

  const auto endpoint_error = [&](const Trajectory& t) {
    double err = 0;
    const auto& a = t.states.back();
    const auto& b = reference.states.back();
    for (std::size_t j = 0; j < a.size(); ++j) err = std::max(err, std::abs(a[j] - b[j]));
    return err;
  };
  out.error_coarse = endpoint_error(coarse);
  out.error_fine = endpoint_error(fine);
  out.error_ratio = out.error_fine > 0 ? out.error_coarse / out.error_fine : 0;
  return out;
}

}  // namespace gps
