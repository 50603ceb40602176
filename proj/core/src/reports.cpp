#include "qboltz/reports.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qboltz/cbm_meanfield.hpp"
#include "qboltz/indexing.hpp"
#include "qboltz/qbm_meanfield.hpp"

namespace qboltz {

namespace {

void write_scalar_header(std::ostream& out, const char* name, ModelKind kind,
                         int n) {
  out << "# qboltz " << name << '\n';
  out << "# kind " << to_string(kind) << '\n';
  out << "# n " << n << '\n';
}

void write_solver_csv(std::ostream& out, const SolveReport& solver) {
  out << "# converged " << (solver.converged ? 1 : 0) << '\n';
  out << "# iterations " << solver.iterations << '\n';
  out << "# residual " << format_g17(solver.residual) << '\n';
  out << "# objective " << format_g17(solver.objective) << '\n';
}

void write_solver_doc(std::ostream& out, const SolveReport& solver) {
  out << "converged " << (solver.converged ? 1 : 0) << '\n';
  out << "iterations " << solver.iterations << '\n';
  out << "residual " << format_g17(solver.residual) << '\n';
  out << "objective " << format_g17(solver.objective) << '\n';
}

void write_indices(std::ostream& out, std::span<const int> sites, bool one_based) {
  for (std::size_t a = 0; a < sites.size(); ++a) {
    if (a > 0) out << ' ';
    out << sites[a] + (one_based ? 1 : 0);
  }
}

void write_comparison_rows_csv(std::ostream& out, const ComparisonReport& report) {
  out << "site,axis,exact,eproj,mproj,abs_error\n";
  for (const ComparisonRow& row : report.rows) {
    out << row.site + 1 << ',';
    if (row.axis > 0) out << row.axis;
    out << ',' << format_g17(row.exact) << ',' << format_g17(row.eproj) << ','
        << format_g17(row.mproj) << ',' << format_g17(row.abs_error) << '\n';
  }
}

void write_comparison_body_doc(std::ostream& out, const ComparisonReport& report) {
  write_solver_doc(out, report.solver);
  out << "divergence_eproj " << format_g17(report.divergence_eproj) << '\n';
  out << "divergence_mproj " << format_g17(report.divergence_mproj) << '\n';
  out << "rows " << report.rows.size() << '\n';
  for (const ComparisonRow& row : report.rows) {
    out << "row site " << row.site + 1;
    if (row.axis > 0) out << " axis " << row.axis;
    out << " exact " << format_g17(row.exact) << " eproj "
        << format_g17(row.eproj) << " mproj " << format_g17(row.mproj)
        << " abs_error " << format_g17(row.abs_error) << '\n';
  }
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "doc") return ReportFormat::Doc;
  throw std::invalid_argument("unknown report format '" + name + "'");
}

std::string format_g17(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

ExactReport make_exact_report(const ModelFile& model) {
  ExactReport report;
  report.kind = model.kind;
  report.n = model.n;

  if (model.kind == ModelKind::Classical) {
    const CbmParams p = to_cbm_params(model);
    report.psi = log_partition_classical(p);
    report.neg_entropy = neg_entropy(p);
    const CbmMoments eta = exact_moments_classical(p);
    const int n = p.n();
    for (int i = 0; i < n; ++i) {
      report.rows.push_back({"m", {i}, {}, eta.m[i]});
    }
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++rank) {
        report.rows.push_back({"mu", {i, j}, {}, eta.mu[rank]});
      }
    }
    rank = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k, ++rank) {
          report.rows.push_back({"iota", {i, j, k}, {}, eta.iota[rank]});
        }
      }
    }
  } else {
    const QbmParams p = to_qbm_params(model);
    report.psi = log_partition_quantum(p);
    const DensityMatrix rho = density_matrix(p);
    report.neg_entropy = trace_product(rho.op, herm_logm(rho.op));
    const QbmMoments eta = exact_moments_quantum(p);
    const int n = p.n();
    for (int i = 0; i < n; ++i) {
      for (int s = 1; s <= 3; ++s) {
        report.rows.push_back({"m", {i}, {s}, eta.m_at(i, s)});
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int s = 1; s <= 3; ++s) {
          for (int t = 1; t <= 3; ++t) {
            report.rows.push_back({"mu", {i, j}, {s, t}, eta.mu_at(i, j, s, t)});
          }
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          for (int s = 1; s <= 3; ++s) {
            for (int t = 1; t <= 3; ++t) {
              for (int u = 1; u <= 3; ++u) {
                report.rows.push_back(
                    {"iota", {i, j, k}, {s, t, u}, eta.iota_at(i, j, k, s, t, u)});
              }
            }
          }
        }
      }
    }
  }
  return report;
}

MeanfieldReport make_meanfield_report(const ModelFile& model,
                                      const SolverConfig& cfg) {
  MeanfieldReport report;
  report.kind = model.kind;
  report.n = model.n;
  if (model.kind == ModelKind::Classical) {
    const CbmParams p = to_cbm_params(model);
    auto [coords, solve] = e_project_classical(p, cfg);
    report.solver = solve;
    for (int i = 0; i < p.n(); ++i) {
      report.rows.push_back({i, 0, coords.values[i]});
    }
  } else {
    const QbmParams p = to_qbm_params(model);
    auto [coords, solve] = e_project_quantum(p, cfg);
    report.solver = solve;
    for (int i = 0; i < p.n(); ++i) {
      for (int s = 1; s <= 3; ++s) {
        report.rows.push_back({i, s, coords.at(i, s)});
      }
    }
  }
  return report;
}

void write_exact(const ExactReport& report, ReportFormat format,
                 std::ostream& out) {
  if (format == ReportFormat::Csv) {
    write_scalar_header(out, "exact", report.kind, report.n);
    out << "# psi " << format_g17(report.psi) << '\n';
    out << "# neg_entropy " << format_g17(report.neg_entropy) << '\n';
    out << "moment,sites,spins,value\n";
    for (const ExactReport::Row& row : report.rows) {
      out << row.label << ',';
      write_indices(out, row.sites, true);
      out << ',';
      write_indices(out, row.spins, false);
      out << ',' << format_g17(row.value) << '\n';
    }
  } else {
    out << "qboltz-report exact\n";
    out << "kind " << to_string(report.kind) << '\n';
    out << "n " << report.n << '\n';
    out << "psi " << format_g17(report.psi) << '\n';
    out << "neg_entropy " << format_g17(report.neg_entropy) << '\n';
    out << "rows " << report.rows.size() << '\n';
    for (const ExactReport::Row& row : report.rows) {
      out << "row " << row.label << " sites ";
      write_indices(out, row.sites, true);
      if (!row.spins.empty()) {
        out << " spins ";
        write_indices(out, row.spins, false);
      }
      out << " value " << format_g17(row.value) << '\n';
    }
    out << "end\n";
  }
}

void write_meanfield(const MeanfieldReport& report, ReportFormat format,
                     std::ostream& out) {
  if (format == ReportFormat::Csv) {
    write_scalar_header(out, "meanfield", report.kind, report.n);
    write_solver_csv(out, report.solver);
    out << "site,axis,mbar\n";
    for (const MeanfieldReport::Row& row : report.rows) {
      out << row.site + 1 << ',';
      if (row.axis > 0) out << row.axis;
      out << ',' << format_g17(row.mbar) << '\n';
    }
  } else {
    out << "qboltz-report meanfield\n";
    out << "kind " << to_string(report.kind) << '\n';
    out << "n " << report.n << '\n';
    write_solver_doc(out, report.solver);
    out << "rows " << report.rows.size() << '\n';
    for (const MeanfieldReport::Row& row : report.rows) {
      out << "row site " << row.site + 1;
      if (row.axis > 0) out << " axis " << row.axis;
      out << " mbar " << format_g17(row.mbar) << '\n';
    }
    out << "end\n";
  }
}

void write_comparison(const ComparisonReport& report, ReportFormat format,
                      std::ostream& out) {
  if (format == ReportFormat::Csv) {
    write_scalar_header(out, "compare", report.kind, report.n);
    write_solver_csv(out, report.solver);
    out << "# divergence_eproj " << format_g17(report.divergence_eproj) << '\n';
    out << "# divergence_mproj " << format_g17(report.divergence_mproj) << '\n';
    write_comparison_rows_csv(out, report);
  } else {
    out << "qboltz-report compare\n";
    out << "kind " << to_string(report.kind) << '\n';
    out << "n " << report.n << '\n';
    write_comparison_body_doc(out, report);
    out << "end\n";
  }
}

void write_sweep(std::span<const SweepPoint> points, ReportFormat format,
                 std::ostream& out) {
  if (points.empty()) throw std::invalid_argument("sweep has no points");
  const ComparisonReport& first = points.front().report;
  if (format == ReportFormat::Csv) {
    write_scalar_header(out, "sweep", first.kind, first.n);
    out << "# points " << points.size() << '\n';
    out << "scale,site,axis,exact,eproj,mproj,abs_error,converged,iterations,"
           "residual,divergence_eproj,divergence_mproj\n";
    for (const SweepPoint& point : points) {
      for (const ComparisonRow& row : point.report.rows) {
        out << format_g17(point.scale) << ',' << row.site + 1 << ',';
        if (row.axis > 0) out << row.axis;
        out << ',' << format_g17(row.exact) << ',' << format_g17(row.eproj)
            << ',' << format_g17(row.mproj) << ',' << format_g17(row.abs_error)
            << ',' << (point.report.solver.converged ? 1 : 0) << ','
            << point.report.solver.iterations << ','
            << format_g17(point.report.solver.residual) << ','
            << format_g17(point.report.divergence_eproj) << ','
            << format_g17(point.report.divergence_mproj) << '\n';
      }
    }
  } else {
    out << "qboltz-report sweep\n";
    out << "kind " << to_string(first.kind) << '\n';
    out << "n " << first.n << '\n';
    out << "points " << points.size() << '\n';
    for (const SweepPoint& point : points) {
      out << "point scale " << format_g17(point.scale) << '\n';
      write_comparison_body_doc(out, point.report);
    }
    out << "end\n";
  }
}

}  // namespace qboltz
