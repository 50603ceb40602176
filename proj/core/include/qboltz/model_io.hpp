#pragma once

// Line-oriented model files and seeded random model generation.
//
// Format: `#` starts a comment, blank lines are skipped. The first content
// line is the header `<kind> <n>` with kind `classical` or `quantum`.
// Optional `meta <key> <value...>` lines follow, then coefficient records:
//
//   classical:  h i value | w i j value       | v i j k value
//   quantum:    h i s value | w i j s t value | v i j k s t u value
//
// Sites are 1-based in files (0-based in memory); spin labels are 1..3.
// Records are canonicalized on parse (sites sorted, spins permuted along)
// and emitted sorted with 17 significant digits, so emit(parse(.)) is a
// fixed point.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qboltz/cbm.hpp"
#include "qboltz/qbm.hpp"

namespace qboltz {

enum class ModelKind { Classical, Quantum };

std::string to_string(ModelKind kind);

struct HEntry {
  int i = 0;
  int s = 0;  // 0 for classical
  double value = 0.0;
  bool operator==(const HEntry&) const = default;
};

struct WEntry {
  int i = 0, j = 0;
  int s = 0, t = 0;
  double value = 0.0;
  bool operator==(const WEntry&) const = default;
};

struct VEntry {
  int i = 0, j = 0, k = 0;
  int s = 0, t = 0, u = 0;
  double value = 0.0;
  bool operator==(const VEntry&) const = default;
};

struct ModelFile {
  ModelKind kind = ModelKind::Classical;
  int n = 0;
  std::vector<HEntry> h;  // canonical order
  std::vector<WEntry> w;
  std::vector<VEntry> v;
  std::map<std::string, std::string> metadata;

  bool operator==(const ModelFile&) const = default;
};

// Throws ModelParseError with the offending 1-based line number.
ModelFile parse_model(std::istream& in);
ModelFile parse_model_string(const std::string& text);
ModelFile load_model(const std::string& path);

void emit_model(const ModelFile& model, std::ostream& out);
std::string emit_model_string(const ModelFile& model);
void save_model(const ModelFile& model, const std::string& path);

// Coefficients drawn independently from zero-mean Gaussians with the given
// scales, one variate per coefficient in canonical order (h, then w, then v)
// regardless of the scales; exact zeros are omitted from the sparse lists.
// Deterministic for a fixed seed across platforms (mt19937_64 + Box-Muller).
ModelFile gen_random_model(ModelKind kind, int n, double scale_h, double scale_w,
                           double scale_v, std::uint64_t seed);

CbmParams to_cbm_params(const ModelFile& model);
QbmParams to_qbm_params(const ModelFile& model);
ModelFile from_cbm_params(const CbmParams& params);  // zeros omitted
ModelFile from_qbm_params(const QbmParams& params);

// Copy with every coupling (w and v) value multiplied by `factor`.
ModelFile scale_couplings(const ModelFile& model, double factor);

}  // namespace qboltz
