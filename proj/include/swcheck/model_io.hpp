#pragma once

// JSON model and spinor-field files.
//
// Model file:
//   {
//     "chart": "heisenberg" | any name | "synthetic",
//     "eta":   [5 PolyExpr],            coefficients of dx1, dy1, dx2, dy2, dt
//     "xi":    [5 PolyExpr],
//     "frame": [4 x [5 PolyExpr]],      e_1 .. e_4 in coordinate components
//     "J":     [5 x [5 PolyExpr]],      row-major, (JV)^r = sum_c J[r][c] V^c
//     "gamma": [5 x [5 x [5 PolyExpr]]] optional, gamma[i][j][k] = coefficient of e_k in nabla_{e_i} e_j
//     "A":     [5 PolyExpr]             optional, imaginary-valued U(1) connection 1-form
//     "curvature": {                    required for "synthetic", optional otherwise
//       "ric": [5 x [5 number]], "s": number (optional), "tau": [5 x [5 number]] (optional)
//     }
//   }
// A synthetic model carries only the curvature block. PolyExpr entries may be
// strings or numbers.
//
// Spinor field file: { "psi": [4 PolyExpr] }.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "swcheck/curvature.hpp"
#include "swcheck/dirac_sw.hpp"
#include "swcheck/models.hpp"
#include "swcheck/poly_expr.hpp"

namespace swcheck {

/// Schema or content error; the message starts with the offending field path.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CurvatureBlock {
  RealMatrix5<double> ric{};
  TorsionEndomorphism<double> tau{};
};

struct ModelFile {
  ChartModel model;
  std::optional<CurvatureBlock> curvature;

  bool synthetic() const { return model.fields.chart == "synthetic"; }
  SyntheticModel<double> synthetic_model() const {
    if (!curvature) throw ModelError("curvature: missing");
    return swcheck::synthetic_model(make_curvature_data(curvature->ric), curvature->tau);
  }
};

namespace detail {

using nlohmann::json;

inline std::string index_path(const std::string& base, std::size_t k) { return base + "[" + std::to_string(k) + "]"; }

inline const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) throw ModelError(path + (path.empty() ? "" : ".") + key + ": missing field");
  return obj.at(key);
}

inline PolyExpr poly_from_json(const json& v, const std::string& path) {
  if (v.is_number()) return PolyExpr(v.get<double>());
  if (!v.is_string()) throw ModelError(path + ": expected a polynomial string or number");
  try {
    return parse_poly(v.get<std::string>());
  } catch (const PolyParseError& e) {
    throw ModelError(path + ": " + e.what());
  }
}

inline double number_from_json(const json& v, const std::string& path) {
  if (!v.is_number()) throw ModelError(path + ": expected a number");
  return v.get<double>();
}

inline void require_array(const json& v, std::size_t n, const std::string& path) {
  if (!v.is_array()) throw ModelError(path + ": expected an array");
  if (v.size() != n)
    throw ModelError(path + ": expected " + std::to_string(n) + " entries, found " + std::to_string(v.size()));
}

inline PolyVector poly_vector_from_json(const json& v, const std::string& path) {
  require_array(v, 5, path);
  PolyVector r;
  for (std::size_t k = 0; k < 5; ++k) r[k] = poly_from_json(v[k], index_path(path, k));
  return r;
}

inline RealMatrix5<double> real_matrix_from_json(const json& v, const std::string& path) {
  require_array(v, 5, path);
  RealMatrix5<double> m{};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto row = index_path(path, i);
    require_array(v[i], 5, row);
    for (std::size_t j = 0; j < 5; ++j) m[i][j] = number_from_json(v[i][j], index_path(row, j));
  }
  return m;
}

inline nlohmann::ordered_json to_json(const PolyVector& v) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& p : v) a.push_back(to_string(p));
  return a;
}

inline nlohmann::ordered_json to_json(const RealMatrix5<double>& m) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& row : m) {
    auto r = nlohmann::ordered_json::array();
    for (double x : row) r.push_back(x == 0.0 ? 0.0 : x);
    a.push_back(r);
  }
  return a;
}

inline bool is_zero(const GammaTable& g) {
  for (const auto& a : g)
    for (const auto& b : a)
      for (const auto& c : b)
        if (!c.is_zero()) return false;
  return true;
}

inline bool is_zero(const PolyVector& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

inline bool is_zero(const RealMatrix5<double>& m) {
  for (const auto& row : m)
    for (double x : row)
      if (x != 0.0) return false;
  return true;
}

}  // namespace detail

inline ModelFile model_from_json(const nlohmann::json& j) {
  using detail::index_path;
  if (!j.is_object()) throw ModelError("(root): expected an object");
  ModelFile mf;
  auto& f = mf.model.fields;
  const auto& chart = detail::require(j, "chart", "");
  if (!chart.is_string()) throw ModelError("chart: expected a string");
  f.chart = chart.get<std::string>();

  if (!mf.synthetic()) {
    f.eta = detail::poly_vector_from_json(detail::require(j, "eta", ""), "eta");
    f.xi = detail::poly_vector_from_json(detail::require(j, "xi", ""), "xi");
    const auto& frame = detail::require(j, "frame", "");
    detail::require_array(frame, 4, "frame");
    for (std::size_t i = 0; i < 4; ++i) f.frame[i] = detail::poly_vector_from_json(frame[i], index_path("frame", i));
    const auto& jm = detail::require(j, "J", "");
    detail::require_array(jm, 5, "J");
    for (std::size_t r = 0; r < 5; ++r) f.j[r] = detail::poly_vector_from_json(jm[r], index_path("J", r));
    if (j.contains("gamma")) {
      const auto& g = j.at("gamma");
      detail::require_array(g, 5, "gamma");
      for (std::size_t a = 0; a < 5; ++a) {
        const auto pa = index_path("gamma", a);
        detail::require_array(g[a], 5, pa);
        for (std::size_t b = 0; b < 5; ++b)
          mf.model.connection.gamma[a][b] = detail::poly_vector_from_json(g[a][b], index_path(pa, b));
      }
    }
    if (j.contains("A")) {
      mf.model.connection.a = detail::poly_vector_from_json(j.at("A"), "A");
      for (std::size_t k = 0; k < 5; ++k)
        for (const auto& [e, c] : mf.model.connection.a[k].terms())
          if (c.real() != 0.0) throw ModelError(index_path("A", k) + ": connection must be imaginary-valued");
    }
  }

  if (j.contains("curvature") || mf.synthetic()) {
    const auto& c = detail::require(j, "curvature", "");
    if (!c.is_object()) throw ModelError("curvature: expected an object");
    CurvatureBlock block;
    block.ric = detail::real_matrix_from_json(detail::require(c, "ric", "curvature"), "curvature.ric");
    if (auto v = ricci_violation(block.ric)) throw ModelError("curvature.ric: " + *v);
    if (c.contains("s")) {
      const double s = detail::number_from_json(c.at("s"), "curvature.s");
      if (std::abs(s - scalar_curvature(block.ric)) > 1e-12 * std::max(1.0, std::abs(s)))
        throw ModelError("curvature.s: does not match the trace of ric");
    }
    if (c.contains("tau")) {
      block.tau.tau = detail::real_matrix_from_json(c.at("tau"), "curvature.tau");
      if (auto v = torsion_violation(block.tau)) throw ModelError("curvature.tau: " + *v);
    }
    mf.curvature = block;
  }
  return mf;
}

/// Canonical JSON: fixed key order, canonical polynomial strings, optional
/// blocks only when nonzero.
inline nlohmann::ordered_json model_to_json(const ModelFile& mf) {
  using detail::to_json;
  nlohmann::ordered_json j;
  const auto& f = mf.model.fields;
  j["chart"] = f.chart;
  if (!mf.synthetic()) {
    j["eta"] = to_json(f.eta);
    j["xi"] = to_json(f.xi);
    auto frame = nlohmann::ordered_json::array();
    for (const auto& e : f.frame) frame.push_back(to_json(e));
    j["frame"] = frame;
    auto jm = nlohmann::ordered_json::array();
    for (const auto& row : f.j) jm.push_back(to_json(row));
    j["J"] = jm;
    if (!detail::is_zero(mf.model.connection.gamma)) {
      auto g = nlohmann::ordered_json::array();
      for (const auto& a : mf.model.connection.gamma) {
        auto ga = nlohmann::ordered_json::array();
        for (const auto& b : a) ga.push_back(to_json(b));
        g.push_back(ga);
      }
      j["gamma"] = g;
    }
    if (!detail::is_zero(mf.model.connection.a)) j["A"] = to_json(mf.model.connection.a);
  }
  if (mf.curvature) {
    nlohmann::ordered_json c;
    c["ric"] = to_json(mf.curvature->ric);
    c["s"] = scalar_curvature(mf.curvature->ric);
    if (!detail::is_zero(mf.curvature->tau.tau)) c["tau"] = to_json(mf.curvature->tau.tau);
    j["curvature"] = c;
  }
  return j;
}

inline std::string canonical_model_text(const ModelFile& mf) { return model_to_json(mf).dump(2) + "\n"; }

/// Parses JSON text; syntax errors become ModelError with the byte position.
inline nlohmann::json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(source + ": invalid JSON at byte " + std::to_string(e.byte));
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ModelFile load_model(const std::string& path) {
  const auto j = parse_json_text(read_text_file(path), path);
  try {
    return model_from_json(j);
  } catch (const ModelError& e) {
    throw ModelError(path + ": " + e.what());
  }
}

inline void save_model(const std::string& path, const ModelFile& mf) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ModelError(path + ": cannot write file");
  out << canonical_model_text(mf);
}

/// Built-in models: "heisenberg" and "synthetic" (Ric = -diag(1, 1, 1, 1, 0), s = -4).
inline ModelFile builtin_model(const std::string& name) {
  ModelFile mf;
  if (name == "heisenberg") {
    mf.model = heisenberg5();
  } else if (name == "synthetic") {
    mf.model.fields.chart = "synthetic";
    mf.curvature = CurvatureBlock{admissible_ricci(-1.0, -1.0, 0.0, 0.0), {}};
  } else {
    throw ModelError("unknown builtin model '" + name + "'");
  }
  return mf;
}

inline SpinorField field_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ModelError("(root): expected an object");
  const auto& psi = detail::require(j, "psi", "");
  detail::require_array(psi, 4, "psi");
  SpinorField f;
  for (std::size_t k = 0; k < 4; ++k) f[k] = detail::poly_from_json(psi[k], detail::index_path("psi", k));
  return f;
}

inline nlohmann::ordered_json field_to_json(const SpinorField& f) {
  nlohmann::ordered_json j;
  auto a = nlohmann::ordered_json::array();
  for (const auto& p : f.c) a.push_back(to_string(p));
  j["psi"] = a;
  return j;
}

inline SpinorField load_field(const std::string& path) {
  const auto j = parse_json_text(read_text_file(path), path);
  try {
    return field_from_json(j);
  } catch (const ModelError& e) {
    throw ModelError(path + ": " + e.what());
  }
}

}  // namespace swcheck
