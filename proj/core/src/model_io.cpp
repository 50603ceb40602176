#include "qboltz/model_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "qboltz/errors.hpp"
#include "qboltz/indexing.hpp"
#include "qboltz/random.hpp"

namespace qboltz {

namespace {

constexpr int kClassicalGenCap = kMaxClassicalSites;
constexpr int kQuantumGenCap = kMaxQuantumSites;

std::string fmt17(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

int parse_int(const std::string& token, int line, const std::string& what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    throw ModelParseError(line, "expected integer " + what + ", got '" + token + "'");
  }
  if (pos != token.size()) {
    throw ModelParseError(line, "expected integer " + what + ", got '" + token + "'");
  }
  return value;
}

double parse_value(const std::string& token, int line) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw ModelParseError(line, "expected numeric value, got '" + token + "'");
  }
  if (pos != token.size()) {
    throw ModelParseError(line, "expected numeric value, got '" + token + "'");
  }
  if (!std::isfinite(value)) {
    throw ModelParseError(line, "value '" + token + "' is not finite");
  }
  return value;
}

int parse_site(const std::string& token, int line, int n) {
  const int site = parse_int(token, line, "site index");
  if (site < 1 || site > n) {
    throw ModelParseError(line, "site index " + token + " outside 1.." +
                                    std::to_string(n));
  }
  return site - 1;  // to 0-based
}

int parse_spin(const std::string& token, int line) {
  const int s = parse_int(token, line, "spin label");
  if (s < 1 || s > 3) {
    throw ModelParseError(line, "spin label " + token + " outside 1..3");
  }
  return s;
}

void sort_sites_with_spins(std::vector<int>& sites, std::vector<int>& spins) {
  // insertion sort keeps site/spin pairs aligned; tuples have <= 3 entries
  for (std::size_t a = 1; a < sites.size(); ++a) {
    for (std::size_t b = a; b > 0 && sites[b - 1] > sites[b]; --b) {
      std::swap(sites[b - 1], sites[b]);
      if (!spins.empty()) std::swap(spins[b - 1], spins[b]);
    }
  }
}

std::string tuple_name(const std::string& record, const std::vector<int>& sites,
                       const std::vector<int>& spins) {
  std::string out = record;
  for (int site : sites) out += " " + std::to_string(site + 1);
  for (int spin : spins) out += " " + std::to_string(spin);
  return out;
}

}  // namespace

std::string to_string(ModelKind kind) {
  return kind == ModelKind::Classical ? "classical" : "quantum";
}

ModelFile parse_model(std::istream& in) {
  ModelFile model;
  bool have_header = false;
  std::set<std::array<int, 7>> seen;
  std::string raw;
  int line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream line(raw);
    std::string head;
    if (!(line >> head)) continue;  // blank

    if (!have_header) {
      if (head == "classical") {
        model.kind = ModelKind::Classical;
      } else if (head == "quantum") {
        model.kind = ModelKind::Quantum;
      } else {
        throw ModelParseError(line_no, "expected header '<classical|quantum> <n>', got '" +
                                           head + "'");
      }
      std::string n_token;
      if (!(line >> n_token)) {
        throw ModelParseError(line_no, "header is missing the site count");
      }
      model.n = parse_int(n_token, line_no, "site count");
      if (model.n < 1) {
        throw ModelParseError(line_no, "site count must be positive");
      }
      std::string extra;
      if (line >> extra) {
        throw ModelParseError(line_no, "unexpected token '" + extra + "' after header");
      }
      have_header = true;
      continue;
    }

    if (head == "meta") {
      std::string key;
      if (!(line >> key)) {
        throw ModelParseError(line_no, "meta line is missing a key");
      }
      std::string value;
      std::getline(line, value);
      const auto start = value.find_first_not_of(" \t");
      value = start == std::string::npos ? "" : value.substr(start);
      const auto end = value.find_last_not_of(" \t\r");
      if (end != std::string::npos) value.erase(end + 1);
      if (!model.metadata.emplace(key, value).second) {
        throw ModelParseError(line_no, "duplicate metadata key '" + key + "'");
      }
      continue;
    }

    const bool quantum = model.kind == ModelKind::Quantum;
    int order = 0;
    if (head == "h") {
      order = 1;
    } else if (head == "w") {
      order = 2;
    } else if (head == "v") {
      order = 3;
    } else {
      throw ModelParseError(line_no, "unknown record '" + head + "'");
    }

    std::vector<std::string> tokens;
    for (std::string tok; line >> tok;) tokens.push_back(tok);
    const std::size_t expected = static_cast<std::size_t>(order) * (quantum ? 2 : 1) + 1;
    if (tokens.size() != expected) {
      throw ModelParseError(line_no, "record '" + head + "' needs " +
                                         std::to_string(expected) + " fields, got " +
                                         std::to_string(tokens.size()));
    }

    std::vector<int> sites(order), spins;
    for (int a = 0; a < order; ++a) {
      sites[a] = parse_site(tokens[a], line_no, model.n);
    }
    if (quantum) {
      spins.resize(order);
      for (int a = 0; a < order; ++a) {
        spins[a] = parse_spin(tokens[order + a], line_no);
      }
    }
    const double value = parse_value(tokens.back(), line_no);

    for (int a = 0; a < order; ++a) {
      for (int b = a + 1; b < order; ++b) {
        if (sites[a] == sites[b]) {
          throw ModelParseError(line_no, "repeated site index in '" +
                                             tuple_name(head, sites, spins) + "'");
        }
      }
    }
    sort_sites_with_spins(sites, spins);

    std::array<int, 7> key{order, 0, 0, 0, 0, 0, 0};
    for (int a = 0; a < order; ++a) key[1 + a] = sites[a];
    for (std::size_t a = 0; a < spins.size(); ++a) key[4 + a] = spins[a];
    if (!seen.insert(key).second) {
      throw ModelParseError(line_no, "duplicate entry '" +
                                         tuple_name(head, sites, spins) + "'");
    }

    switch (order) {
      case 1:
        model.h.push_back({sites[0], quantum ? spins[0] : 0, value});
        break;
      case 2:
        model.w.push_back({sites[0], sites[1], quantum ? spins[0] : 0,
                           quantum ? spins[1] : 0, value});
        break;
      default:
        model.v.push_back({sites[0], sites[1], sites[2], quantum ? spins[0] : 0,
                           quantum ? spins[1] : 0, quantum ? spins[2] : 0, value});
        break;
    }
  }

  if (!have_header) {
    throw ModelParseError(std::max(line_no, 1), "missing model header");
  }

  std::sort(model.h.begin(), model.h.end(), [](const HEntry& a, const HEntry& b) {
    return std::tie(a.i, a.s) < std::tie(b.i, b.s);
  });
  std::sort(model.w.begin(), model.w.end(), [](const WEntry& a, const WEntry& b) {
    return std::tie(a.i, a.j, a.s, a.t) < std::tie(b.i, b.j, b.s, b.t);
  });
  std::sort(model.v.begin(), model.v.end(), [](const VEntry& a, const VEntry& b) {
    return std::tie(a.i, a.j, a.k, a.s, a.t, a.u) <
           std::tie(b.i, b.j, b.k, b.s, b.t, b.u);
  });
  return model;
}

ModelFile parse_model_string(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in);
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
  return parse_model(in);
}

void emit_model(const ModelFile& model, std::ostream& out) {
  const bool quantum = model.kind == ModelKind::Quantum;
  out << to_string(model.kind) << ' ' << model.n << '\n';
  for (const auto& [key, value] : model.metadata) {
    out << "meta " << key;
    if (!value.empty()) out << ' ' << value;
    out << '\n';
  }
  for (const HEntry& e : model.h) {
    out << "h " << e.i + 1;
    if (quantum) out << ' ' << e.s;
    out << ' ' << fmt17(e.value) << '\n';
  }
  for (const WEntry& e : model.w) {
    out << "w " << e.i + 1 << ' ' << e.j + 1;
    if (quantum) out << ' ' << e.s << ' ' << e.t;
    out << ' ' << fmt17(e.value) << '\n';
  }
  for (const VEntry& e : model.v) {
    out << "v " << e.i + 1 << ' ' << e.j + 1 << ' ' << e.k + 1;
    if (quantum) out << ' ' << e.s << ' ' << e.t << ' ' << e.u;
    out << ' ' << fmt17(e.value) << '\n';
  }
}

std::string emit_model_string(const ModelFile& model) {
  std::ostringstream out;
  emit_model(model, out);
  return out.str();
}

void save_model(const ModelFile& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write model file '" + path + "'");
  emit_model(model, out);
}

ModelFile gen_random_model(ModelKind kind, int n, double scale_h, double scale_w,
                           double scale_v, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("site count must be positive");
  const int cap = kind == ModelKind::Classical ? kClassicalGenCap : kQuantumGenCap;
  if (n > cap) {
    throw std::domain_error("site count " + std::to_string(n) + " exceeds the " +
                            to_string(kind) + " cap of " + std::to_string(cap));
  }
  for (double scale : {scale_h, scale_w, scale_v}) {
    if (!(scale >= 0.0) || !std::isfinite(scale)) {
      throw std::invalid_argument("coupling scales must be finite and nonnegative");
    }
  }

  GaussianStream gauss(seed);
  ModelFile model;
  model.kind = kind;
  model.n = n;

  if (kind == ModelKind::Classical) {
    for (int i = 0; i < n; ++i) {
      const double value = scale_h * gauss.next();
      if (value != 0.0) model.h.push_back({i, 0, value});
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double value = scale_w * gauss.next();
        if (value != 0.0) model.w.push_back({i, j, 0, 0, value});
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          const double value = scale_v * gauss.next();
          if (value != 0.0) model.v.push_back({i, j, k, 0, 0, 0, value});
        }
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int s = 1; s <= 3; ++s) {
        const double value = scale_h * gauss.next();
        if (value != 0.0) model.h.push_back({i, s, value});
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int s = 1; s <= 3; ++s) {
          for (int t = 1; t <= 3; ++t) {
            const double value = scale_w * gauss.next();
            if (value != 0.0) model.w.push_back({i, j, s, t, value});
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
                const double value = scale_v * gauss.next();
                if (value != 0.0) model.v.push_back({i, j, k, s, t, u, value});
              }
            }
          }
        }
      }
    }
  }
  return model;
}

CbmParams to_cbm_params(const ModelFile& model) {
  if (model.kind != ModelKind::Classical) {
    throw std::invalid_argument("model is not classical");
  }
  CbmParams p(model.n);
  for (const HEntry& e : model.h) p.set_h(e.i, e.value);
  for (const WEntry& e : model.w) p.set_w(e.i, e.j, e.value);
  for (const VEntry& e : model.v) p.set_v(e.i, e.j, e.k, e.value);
  return p;
}

QbmParams to_qbm_params(const ModelFile& model) {
  if (model.kind != ModelKind::Quantum) {
    throw std::invalid_argument("model is not quantum");
  }
  QbmParams p(model.n);
  for (const HEntry& e : model.h) p.set_h(e.i, e.s, e.value);
  for (const WEntry& e : model.w) p.set_w(e.i, e.j, e.s, e.t, e.value);
  for (const VEntry& e : model.v) {
    p.set_v(e.i, e.j, e.k, e.s, e.t, e.u, e.value);
  }
  return p;
}

ModelFile from_cbm_params(const CbmParams& p) {
  ModelFile model;
  model.kind = ModelKind::Classical;
  model.n = p.n();
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    if (p.h(i) != 0.0) model.h.push_back({i, 0, p.h(i)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p.w(i, j) != 0.0) model.w.push_back({i, j, 0, 0, p.w(i, j)});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (p.v(i, j, k) != 0.0) {
          model.v.push_back({i, j, k, 0, 0, 0, p.v(i, j, k)});
        }
      }
    }
  }
  return model;
}

ModelFile from_qbm_params(const QbmParams& p) {
  ModelFile model;
  model.kind = ModelKind::Quantum;
  model.n = p.n();
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= 3; ++s) {
      if (p.h(i, s) != 0.0) model.h.push_back({i, s, p.h(i, s)});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) {
          if (p.w(i, j, s, t) != 0.0) {
            model.w.push_back({i, j, s, t, p.w(i, j, s, t)});
          }
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
              if (p.v(i, j, k, s, t, u) != 0.0) {
                model.v.push_back({i, j, k, s, t, u, p.v(i, j, k, s, t, u)});
              }
            }
          }
        }
      }
    }
  }
  return model;
}

ModelFile scale_couplings(const ModelFile& model, double factor) {
  if (!std::isfinite(factor)) {
    throw std::invalid_argument("coupling factor must be finite");
  }
  ModelFile scaled = model;
  for (WEntry& e : scaled.w) e.value *= factor;
  for (VEntry& e : scaled.v) e.value *= factor;
  return scaled;
}

}  // namespace qboltz
