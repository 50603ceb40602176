// Command-line harness: model generation, exact computations, naive
// mean-field solves, exact-vs-mean-field comparisons, and coupling sweeps.
//
// Exit codes: 0 success (non-converged solves included), 1 usage error,
// 2 input validation error, 3 internal numerical failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qboltz/compare.hpp"
#include "qboltz/errors.hpp"
#include "qboltz/model_io.hpp"
#include "qboltz/reports.hpp"

namespace {

using namespace qboltz;

struct SolverFlags {
  double damping = 0.5;
  double tol = 1e-10;
  int max_iter = 10000;
  int restarts = 0;
  std::uint64_t seed = 1;

  SolverConfig to_config() const {
    SolverConfig cfg;
    cfg.damping = damping;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    cfg.restarts = restarts;
    cfg.restart_seed = seed;
    return cfg;
  }
};

void add_solver_options(CLI::App* cmd, SolverFlags& flags,
                        const std::string& seed_flag = "--seed") {
  cmd->add_option("--damping", flags.damping, "Damping weight in (0, 1]")
      ->capture_default_str();
  cmd->add_option("--tol", flags.tol, "Sup-norm residual threshold")
      ->capture_default_str();
  cmd->add_option("--max-iter", flags.max_iter, "Iteration cap")
      ->capture_default_str();
  cmd->add_option("--restarts", flags.restarts,
                  "Extra seeded random restarts; the least-divergence fixed point wins")
      ->capture_default_str();
  cmd->add_option(seed_flag, flags.seed, "Restart seed")->capture_default_str();
}

ModelKind parse_kind(const std::string& name) {
  if (name == "classical") return ModelKind::Classical;
  if (name == "quantum") return ModelKind::Quantum;
  throw CLI::ValidationError("--kind", "must be 'classical' or 'quantum'");
}

// Writes to --out when given, stdout otherwise.
void deliver(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write output file '" + out_path + "'");
  }
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact and naive mean-field computations for third-order classical and "
      "quantum Boltzmann machines"};
  app.require_subcommand(1);

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "Generate a seeded random model file");
  std::string gen_kind = "classical";
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  double gen_scale_h = 1.0, gen_scale_w = 1.0, gen_scale_v = 1.0;
  std::string gen_out;
  gen->add_option("--kind", gen_kind, "classical or quantum")->required();
  gen->add_option("--n", gen_n, "Site count")->required();
  gen->add_option("--seed", gen_seed, "Generator seed")->required();
  gen->add_option("--scale-h", gen_scale_h, "Std dev of thresholds")
      ->capture_default_str();
  gen->add_option("--scale-w", gen_scale_w, "Std dev of pair couplings")
      ->capture_default_str();
  gen->add_option("--scale-v", gen_scale_v, "Std dev of triple couplings")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // --- exact ---
  auto* exact = app.add_subcommand(
      "exact", "Exact psi, entropy and expectation coordinates");
  std::string exact_model, exact_format = "csv", exact_out;
  exact->add_option("--model", exact_model, "Model file")->required();
  exact->add_option("--format", exact_format, "csv or doc")->capture_default_str();
  exact->add_option("--out", exact_out, "Output path (default stdout)");

  // --- meanfield ---
  auto* meanfield = app.add_subcommand(
      "meanfield", "Naive mean-field solution (e-projection onto products)");
  std::string mf_model, mf_format = "csv", mf_out;
  SolverFlags mf_flags;
  meanfield->add_option("--model", mf_model, "Model file")->required();
  add_solver_options(meanfield, mf_flags);
  meanfield->add_option("--format", mf_format, "csv or doc")->capture_default_str();
  meanfield->add_option("--out", mf_out, "Output path (default stdout)");

  // --- compare ---
  auto* compare = app.add_subcommand(
      "compare", "Exact moments vs both projections, with divergences");
  std::string cmp_model, cmp_format = "csv", cmp_out;
  SolverFlags cmp_flags;
  compare->add_option("--model", cmp_model, "Model file")->required();
  add_solver_options(compare, cmp_flags);
  compare->add_option("--format", cmp_format, "csv or doc")->capture_default_str();
  compare->add_option("--out", cmp_out, "Output path (default stdout)");

  // --- sweep ---
  auto* sweep = app.add_subcommand(
      "sweep", "Comparison reports over a coupling-scale grid");
  std::string sw_model, sw_kind = "classical", sw_format = "csv", sw_out;
  int sw_n = 0;
  std::uint64_t sw_seed = 0;
  double sw_scale_h = 1.0;
  std::vector<double> sw_grid;
  SolverFlags sw_flags;
  sweep->add_option("--model", sw_model,
                    "Template model file (couplings rescaled per grid value)");
  sweep->add_option("--kind", sw_kind, "Template kind when generating")
      ->capture_default_str();
  sweep->add_option("--n", sw_n, "Template site count when generating");
  sweep->add_option("--seed", sw_seed, "Template generator seed");
  sweep->add_option("--scale-h", sw_scale_h, "Template threshold std dev")
      ->capture_default_str();
  sweep->add_option("--grid", sw_grid, "Ascending coupling scales")
      ->required()
      ->delimiter(',');
  add_solver_options(sweep, sw_flags, "--restart-seed");
  sweep->add_option("--format", sw_format, "csv or doc")->capture_default_str();
  sweep->add_option("--out", sw_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);

    if (gen->parsed()) {
      const ModelFile model = gen_random_model(parse_kind(gen_kind), gen_n,
                                               gen_scale_h, gen_scale_w,
                                               gen_scale_v, gen_seed);
      deliver(gen_out, emit_model_string(model));
    } else if (exact->parsed()) {
      const ModelFile model = load_model(exact_model);
      const ExactReport report = make_exact_report(model);
      std::ostringstream payload;
      write_exact(report, parse_report_format(exact_format), payload);
      deliver(exact_out, payload.str());
    } else if (meanfield->parsed()) {
      const ModelFile model = load_model(mf_model);
      const MeanfieldReport report =
          make_meanfield_report(model, mf_flags.to_config());
      std::ostringstream payload;
      write_meanfield(report, parse_report_format(mf_format), payload);
      deliver(mf_out, payload.str());
      if (!report.solver.converged) {
        std::cerr << "warning: solver did not converge (residual "
                  << format_g17(report.solver.residual) << ")\n";
      }
    } else if (compare->parsed()) {
      const ModelFile model = load_model(cmp_model);
      const ComparisonReport report = run_compare(model, cmp_flags.to_config());
      std::ostringstream payload;
      write_comparison(report, parse_report_format(cmp_format), payload);
      deliver(cmp_out, payload.str());
      std::cerr << "compare finished in " << report.wall_seconds * 1e3
                << " ms\n";
      if (!report.solver.converged) {
        std::cerr << "warning: solver did not converge (residual "
                  << format_g17(report.solver.residual) << ")\n";
      }
    } else if (sweep->parsed()) {
      ModelFile base;
      if (!sw_model.empty()) {
        base = load_model(sw_model);
      } else {
        if (sw_n <= 0) {
          throw CLI::ValidationError(
              "--n", "required (with --kind and --seed) when --model is absent");
        }
        // Unit coupling scales so grid values are absolute scales.
        base = gen_random_model(parse_kind(sw_kind), sw_n, sw_scale_h, 1.0, 1.0,
                                sw_seed);
      }
      const std::vector<SweepPoint> points =
          run_sweep(base, sw_grid, sw_flags.to_config());
      std::ostringstream payload;
      write_sweep(points, parse_report_format(sw_format), payload);
      deliver(sw_out, payload.str());
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ModelParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
