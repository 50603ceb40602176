#pragma once

// Deterministic report writers. CSV is the default; `doc` is a line-oriented
// single-document format. Numbers carry 17 significant digits, booleans are
// 0/1, and nothing time-dependent is ever written, so a fixed command line
// and seed reproduce files byte for byte.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qboltz/compare.hpp"
#include "qboltz/model_io.hpp"

namespace qboltz {

enum class ReportFormat { Csv, Doc };

ReportFormat parse_report_format(const std::string& name);

std::string format_g17(double x);

// Exact quantities for one model: psi, negative entropy, and every
// expectation coordinate (m, mu, iota).
struct ExactReport {
  ModelKind kind = ModelKind::Classical;
  int n = 0;
  double psi = 0.0;
  double neg_entropy = 0.0;
  struct Row {
    std::string label;        // m | mu | iota
    std::vector<int> sites;   // 0-based in memory, printed 1-based
    std::vector<int> spins;   // empty for classical
    double value = 0.0;
  };
  std::vector<Row> rows;
};

ExactReport make_exact_report(const ModelFile& model);

// Naive mean-field solution for one model.
struct MeanfieldReport {
  ModelKind kind = ModelKind::Classical;
  int n = 0;
  SolveReport solver;
  struct Row {
    int site = 0;
    int axis = 0;  // 0 for classical
    double mbar = 0.0;
  };
  std::vector<Row> rows;
};

MeanfieldReport make_meanfield_report(const ModelFile& model,
                                      const SolverConfig& cfg);

void write_exact(const ExactReport& report, ReportFormat format, std::ostream& out);
void write_meanfield(const MeanfieldReport& report, ReportFormat format,
                     std::ostream& out);
void write_comparison(const ComparisonReport& report, ReportFormat format,
                      std::ostream& out);
void write_sweep(std::span<const SweepPoint> points, ReportFormat format,
                 std::ostream& out);

}  // namespace qboltz
