// Command-line front end: catalog loading, structure certification, bracket
// evaluation, compatibility checks, representation oracles and dynamics.
// Outputs are deterministic for a fixed configuration; timing lives in a
// separate top-level field so certificate bodies can be compared byte-wise.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gps/dynamics.hpp"
#include "gps/json_io.hpp"
#include "gps/lie_algebra.hpp"
#include "gps/poisson.hpp"

using nlohmann::json;
using namespace gps;

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "i1,i2,...,i_{2p},sigma=+delta" with 1-based indices: adds delta to the
// signed permutation orbit of the first 2p indices at fixed sigma.
struct Perturbation {
  std::vector<int> block;  // 0-based, sorted
  int sigma = 0;
  ExactScalar delta;
  std::string text;
};

Perturbation parse_perturbation(const std::string& text, int order, int dim) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw CliError("--perturb expects indices=delta");
  Perturbation p;
  p.text = text;
  for (const std::string& tok : split(text.substr(0, eq), ',')) {
    int v = std::stoi(tok);
    if (v < 1 || v > dim) throw CliError("--perturb index out of range");
    p.block.push_back(v - 1);
  }
  if (static_cast<int>(p.block.size()) != order) {
    throw CliError("--perturb expects " + std::to_string(order) + " indices");
  }
  p.sigma = p.block.back();
  p.block.pop_back();
  std::sort(p.block.begin(), p.block.end());
  for (std::size_t k = 0; k + 1 < p.block.size(); ++k) {
    if (p.block[k] == p.block[k + 1]) throw CliError("--perturb block indices must be distinct");
  }
  std::string d = text.substr(eq + 1);
  if (!d.empty() && d[0] == '+') d = d.substr(1);
  p.delta = ExactScalar::parse(d);
  return p;
}

void apply_perturbation(ExactTensor& omega, const Perturbation& p) {
  std::vector<int> block = p.block;
  std::vector<int> idx(block.size() + 1);
  do {
    int sign = permutation_sign(std::span<const int>(block.data(), block.size()));
    std::copy(block.begin(), block.end(), idx.begin());
    idx.back() = p.sigma;
    omega.at(idx) += sign > 0 ? p.delta : -p.delta;
  } while (std::next_permutation(block.begin(), block.end()));
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw CliError("cannot open output file " + out_path);
    f << doc.dump(2) << "\n";
  }
}

int resolve_m(std::optional<int> m, std::optional<int> p) {
  if (m && p && *m != *p + 1) throw CliError("--m and --p disagree (m = p + 1)");
  if (m) return *m;
  if (p) return *p + 1;
  return 2;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

int cmd_verify(const std::string& algebra, int m, const std::string& perturb,
               const std::string& scale, const std::string& out_path) {
  Timer timer;
  const LieAlgebra& g = catalog_load(algebra);
  auto inv = invariant_symmetric_tensor(g, m);
  CocycleTensor coc = build_cocycle(inv);
  if (!scale.empty()) coc = scaled(coc, ExactScalar::parse(scale));

  json cert;
  cert["algebra"] = algebra;
  cert["m"] = m;
  cert["p"] = m - 1;
  cert["dim"] = g.dim;
  cert["invariant_scale"] = inv.scale.str();
  cert["invariant_note"] = inv.scale_note;
  cert["cocycle_note"] = coc.scale_note;
  cert["cocycle_nonzero"] = coc.omega.nonzero_count();
  CocycleTensor permsum = build_cocycle_permsum(inv);
  auto permsum_ratio = proportionality_constant(permsum.omega, coc.omega);
  cert["permsum_ratio"] = permsum_ratio ? permsum_ratio->str() : "none";

  if (!perturb.empty()) {
    Perturbation pert = parse_perturbation(perturb, coc.order, g.dim);
    apply_perturbation(coc.omega, pert);
    cert["perturbation"] = pert.text;
  } else {
    cert["perturbation"] = nullptr;
  }

  bool antisymmetric = coc.omega.check_fully_antisymmetric();
  GjiResidual residual = gji_residual_of(coc.omega);
  PolyMultivector lambda = lambda_from_omega(coc.omega);
  PolyMultivector snb = schouten_nijenhuis(lambda, lambda);
  cert["antisymmetric"] = antisymmetric;
  cert["residual_nonzero_count"] = residual.nonzero_count();
  cert["term_groups"] = residual.term_groups;
  cert["snb_nonzero_terms"] = snb.term_count();
  cert["snb_residual_ratio"] = "2";
  bool verified = antisymmetric && residual.is_zero() && snb.is_zero();
  cert["verified"] = verified;

  emit(json{{"certificate", cert}, {"elapsed_ms", timer.ms()}}, out_path);
  return verified ? 0 : 1;
}

int cmd_cocycle(const std::string& algebra, int m, bool permsum, const std::string& scale,
                const std::string& out_path) {
  const LieAlgebra& g = catalog_load(algebra);
  auto inv = invariant_symmetric_tensor(g, m);
  CocycleTensor coc = permsum ? build_cocycle_permsum(inv) : build_cocycle(inv);
  if (!scale.empty()) coc = scaled(coc, ExactScalar::parse(scale));
  json doc = tensor_to_json(coc.omega);
  doc["algebra"] = algebra;
  doc["order"] = coc.order;
  doc["note"] = coc.scale_note;
  emit(doc, out_path);
  return 0;
}

int cmd_bracket(const std::string& algebra, int m, const std::vector<std::string>& args,
                const std::string& scale) {
  const LieAlgebra& g = catalog_load(algebra);
  auto inv = invariant_symmetric_tensor(g, m);
  CocycleTensor coc = build_cocycle(inv);
  if (!scale.empty()) coc = scaled(coc, ExactScalar::parse(scale));
  GeneralizedPoissonStructure s = from_cocycle(coc);
  if (static_cast<int>(args.size()) != 2 * s.p) {
    throw CliError("bracket expects " + std::to_string(2 * s.p) + " arguments");
  }
  std::vector<PolyMultivector> fs;
  fs.reserve(args.size());
  for (const auto& a : args) fs.push_back(parse_polynomial(a, g.dim));
  std::cout << gpb_eval(s, fs).str() << "\n";
  return 0;
}

int cmd_compat(const std::string& algebra, int m1, int m2, const std::string& out_path) {
  Timer timer;
  const LieAlgebra& g = catalog_load(algebra);
  GeneralizedPoissonStructure s1 = from_cocycle(build_cocycle(invariant_symmetric_tensor(g, m1)));
  GeneralizedPoissonStructure s2 = from_cocycle(build_cocycle(invariant_symmetric_tensor(g, m2)));
  PolyMultivector residual = compatibility_residual(s1, s2);
  json cert;
  cert["algebra"] = algebra;
  cert["m1"] = m1;
  cert["m2"] = m2;
  cert["snb_nonzero_terms"] = residual.term_count();
  cert["compatible"] = residual.is_zero();
  emit(json{{"certificate", cert}, {"elapsed_ms", timer.ms()}}, out_path);
  return residual.is_zero() ? 0 : 1;
}

int cmd_evolve(const std::string& algebra, std::optional<int> p_opt, const std::string& hams_text,
               const std::string& x0_text, double dt, std::size_t steps,
               const std::string& monitors_text, const std::string& scale,
               const std::string& csv_path, const std::string& summary_path, bool refine) {
  const LieAlgebra& g = catalog_load(algebra);
  std::vector<std::string> ham_tokens = split(hams_text, ',');
  const int p = p_opt ? *p_opt : static_cast<int>(ham_tokens.size() + 1) / 2;
  if (static_cast<int>(ham_tokens.size()) != 2 * p - 1) {
    throw CliError("expected " + std::to_string(2 * p - 1) + " Hamiltonians for p = " +
                   std::to_string(p));
  }
  auto inv = invariant_symmetric_tensor(g, p + 1);
  CocycleTensor coc = build_cocycle(inv);
  if (!scale.empty()) coc = scaled(coc, ExactScalar::parse(scale));
  GeneralizedPoissonStructure s = from_cocycle(coc);

  std::vector<PolyMultivector> hams;
  for (const auto& t : ham_tokens) hams.push_back(parse_polynomial(t, g.dim));
  DynamicalSystem sys = build_system(s, hams);

  std::vector<double> x0;
  for (const auto& t : split(x0_text, ',')) x0.push_back(ExactScalar::parse(t).to_double());
  if (static_cast<int>(x0.size()) != g.dim) throw CliError("--x0 needs dim components");

  std::vector<Monitor> monitors;
  if (!monitors_text.empty()) {
    int k = 0;
    for (const auto& t : split(monitors_text, ';')) {
      monitors.push_back({"m" + std::to_string(++k), parse_polynomial(t, g.dim)});
    }
  }

  Trajectory traj = evolve(sys, x0, dt, steps, monitors);

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw CliError("cannot open " + csv_path);
    csv << "t";
    for (int j = 1; j <= g.dim; ++j) csv << ",x" << j;
    for (const auto& name : traj.monitor_names) csv << "," << name << "_drift";
    csv << "\n";
    csv.precision(17);
    for (std::size_t step = 0; step < traj.times.size(); ++step) {
      csv << traj.times[step];
      for (double v : traj.states[step]) csv << "," << v;
      for (std::size_t mi = 0; mi < traj.monitor_values.size(); ++mi) {
        csv << "," << (traj.monitor_values[mi][step] - traj.monitor_values[mi][0]);
      }
      csv << "\n";
    }
  }

  json summary;
  summary["algebra"] = algebra;
  summary["p"] = p;
  summary["trivial_field"] = sys.trivial;
  summary["steps_completed"] = traj.last_valid;
  summary["aborted"] = traj.aborted;
  json drifts;
  for (std::size_t mi = 0; mi < traj.monitor_names.size(); ++mi) {
    drifts[traj.monitor_names[mi]] = traj.max_rel_drift[mi];
  }
  summary["max_rel_drift"] = drifts;
  if (refine) {
    ConvergenceStudy st = convergence_study(sys, x0, dt, steps, monitors);
    summary["convergence"] = {
        {"drift_ratio", st.drift_ratio},
        {"error_coarse", st.error_coarse},
        {"error_fine", st.error_fine},
        {"error_ratio", st.error_ratio},
    };
  }
  emit(summary, summary_path);
  return traj.aborted ? 1 : 0;
}

int cmd_oracle_fourcomm(const std::string& algebra, const std::string& indices_text,
                        const std::string& out_path) {
  MatrixRep rep = load_rep(algebra);
  std::vector<std::string> toks = split(indices_text, ',');
  if (toks.size() != 4) throw CliError("--indices expects four comma-separated values");
  std::array<int, 4> idx{};
  for (std::size_t k = 0; k < 4; ++k) {
    int v = std::stoi(toks[k]);
    if (v < 1 || v > rep.dim) throw CliError("oracle index out of range");
    idx[k] = v - 1;
  }
  FourCommutator fc = four_commutator(rep, idx);
  json doc;
  doc["algebra"] = algebra;
  doc["indices"] = json::array({idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1});
  json comps = json::array();
  for (const auto& c : fc.components) comps.push_back(c.str());
  doc["components"] = comps;
  doc["offspan_norm2"] = fc.offspan_norm2.str();
  doc["in_span"] = fc.offspan_norm2.is_zero();
  emit(doc, out_path);
  return fc.offspan_norm2.is_zero() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Poisson structures on duals of compact simple Lie algebras"};
  app.require_subcommand(1);

  int radicand_flag = 3;
  app.add_option("--radicand", radicand_flag, "square-free radicand of the working field")
      ->capture_default_str();

  std::string algebra = "su2";
  std::optional<int> m_opt, p_opt;
  std::string out_path, scale, perturb;

  auto add_common = [&](CLI::App* sub, bool with_out = true) {
    sub->add_option("--algebra", algebra, "catalog algebra (su2, su3, so3, so4, so5)")
        ->required();
    sub->add_option("--m", m_opt, "invariant tensor order (cocycle order 2m-1)");
    sub->add_option("--p", p_opt, "half-arity of the bracket (p = m - 1)");
    if (with_out) sub->add_option("--out", out_path, "write JSON here instead of stdout");
    sub->add_option("--scale", scale, "exact rational multiplier applied to the cocycle");
  };

  CLI::App* verify = app.add_subcommand("verify", "build a cocycle and certify the structure");
  add_common(verify);
  verify->add_option("--perturb", perturb,
                     "indices=delta: perturb the signed block orbit at fixed last index");

  CLI::App* cocycle = app.add_subcommand("cocycle", "dump the cocycle tensor as JSON");
  add_common(cocycle);
  bool permsum = false;
  cocycle->add_flag("--permsum", permsum, "use the permutation-sum normalization");

  CLI::App* bracket = app.add_subcommand("bracket", "evaluate the bracket on 2p polynomials");
  add_common(bracket, false);
  std::vector<std::string> bracket_args;
  bracket->add_option("--args", bracket_args, "2p polynomials in x1..xr")->required();

  CLI::App* compat = app.add_subcommand("compat", "Schouten compatibility of two structures");
  int m1 = 2, m2 = 3;
  compat->add_option("--algebra", algebra)->required();
  compat->add_option("--m1", m1, "first invariant order")->capture_default_str();
  compat->add_option("--m2", m2, "second invariant order")->capture_default_str();
  compat->add_option("--out", out_path);

  CLI::App* evolve_cmd = app.add_subcommand("evolve", "integrate the generalized dynamics");
  std::string hams_text, x0_text, monitors_text, csv_path;
  double dt = 1e-3;
  std::size_t steps = 1000;
  bool refine = false;
  evolve_cmd->add_option("--algebra", algebra)->required();
  evolve_cmd->add_option("--p", p_opt, "half-arity (default from Hamiltonian count)");
  evolve_cmd->add_option("--hamiltonians", hams_text, "comma-separated 2p-1 polynomials")
      ->required();
  evolve_cmd->add_option("--x0", x0_text, "comma-separated exact rationals")->required();
  evolve_cmd->add_option("--dt", dt)->capture_default_str();
  evolve_cmd->add_option("--steps", steps)->capture_default_str();
  evolve_cmd->add_option("--monitors", monitors_text, "semicolon-separated polynomials");
  evolve_cmd->add_option("--cocycle-scale", scale, "exact rational cocycle multiplier");
  evolve_cmd->add_option("--csv", csv_path, "trajectory CSV path");
  evolve_cmd->add_option("--summary", out_path, "summary JSON path (default stdout)");
  evolve_cmd->add_flag("--refine", refine, "add a dt/2 convergence study to the summary");

  CLI::App* oracle = app.add_subcommand("oracle", "matrix-representation oracles");
  CLI::App* fourcomm = oracle->add_subcommand("four-commutator", "24-term alternated product");
  std::string indices_text;
  fourcomm->add_option("--algebra", algebra)->required();
  fourcomm->add_option("--indices", indices_text, "four 1-based generator indices")->required();
  fourcomm->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    set_radicand(radicand_flag);
    if (verify->parsed()) {
      return cmd_verify(algebra, resolve_m(m_opt, p_opt), perturb, scale, out_path);
    }
    if (cocycle->parsed()) {
      return cmd_cocycle(algebra, resolve_m(m_opt, p_opt), permsum, scale, out_path);
    }
    if (bracket->parsed()) {
      return cmd_bracket(algebra, resolve_m(m_opt, p_opt), bracket_args, scale);
    }
    if (compat->parsed()) {
      return cmd_compat(algebra, m1, m2, out_path);
    }
    if (evolve_cmd->parsed()) {
      return cmd_evolve(algebra, p_opt, hams_text, x0_text, dt, steps, monitors_text, scale,
                        csv_path, out_path, refine);
    }
    if (oracle->parsed() && fourcomm->parsed()) {
      return cmd_oracle_fourcomm(algebra, indices_text, out_path);
    }
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GjiViolation& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
