#pragma once

// Named check suites. Each suite returns a Report whose pass flag is the
// conjunction of its residual checks. With `perturb` set, the suite runs its
// negative control instead: a deliberately broken input that must fail.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swcheck/cliff5.hpp"
#include "swcheck/curvature.hpp"
#include "swcheck/dirac_sw.hpp"
#include "swcheck/extalg.hpp"
#include "swcheck/model_io.hpp"
#include "swcheck/models.hpp"
#include "swcheck/report.hpp"

namespace swcheck {

/// Invalid suite configuration; reported as a usage error.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kExactTol = 0.0;
inline constexpr double kPointwiseTol = 1e-12;
inline constexpr double kFiniteDifferenceTol = 1e-6;
inline constexpr double kDbarIdentityTol = 1e-10;

struct SuiteConfig {
  std::optional<std::string> model;  ///< builtin name or file path
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 7;
  std::optional<double> tol;  ///< overrides every default tolerance
  double h = 1e-4;
  std::optional<double> scalar;
  std::optional<std::string> field;
  bool perturb = false;

  double tolerance(double fallback) const { return tol.value_or(fallback); }
};

inline std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// "c*deta" if f = c d eta exactly, in polynomial coefficient notation.
template <class C>
std::string deta_multiple(const KForm<C>& f) {
  const C c = f.at(mask_of({1, 2}));
  if (f != c * deta_form<C>()) return "not a multiple of deta";
  const std::string s = to_string(PolyExpr(ScalarTraits<C>::to_complex(c)));
  if (s == "0") return "0";
  if (s == "1") return "deta";
  if (s == "-1") return "-deta";
  return s + "*deta";
}

inline ModelFile resolve_model(const std::string& name) {
  if (name == "heisenberg" || name == "synthetic") return builtin_model(name);
  return load_model(name);
}

// ---------------------------------------------------------------------------

inline Report clifford_suite(const SuiteConfig& cfg) {
  Report rep("clifford", "algebra");
  rep.set_seed(cfg.seed);
  rep.set_perturbed(cfg.perturb);
  const double tol = cfg.tolerance(kExactTol);

  auto kappa = [&](int i) {
    auto k = gamma<GaussInt>(i);
    if (cfg.perturb && i == 1) k(0, 1) = -k(0, 1);
    return k;
  };
  double anti = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      const auto expected = i == j ? GaussInt(-2) * Matrix4<GaussInt>::identity() : Matrix4<GaussInt>{};
      anti = std::max(anti, max_abs(kappa(i) * kappa(j) + kappa(j) * kappa(i) - expected));
    }
  rep.add("anticommutator", anti, tol);

  const auto k = clifford_matrix(deta_form<GaussInt>());
  Matrix4<GaussInt> diag;
  diag(1, 1) = GaussInt(0, 2);
  diag(3, 3) = GaussInt(0, -2);
  rep.add("kappa_deta", max_abs(k - diag), tol);

  using Q = ExactComplex;
  const auto kq = clifford_matrix(deta_form<Q>());
  const auto pr = deta_eigenprojectors<Q>();
  const auto id = Matrix4<Q>::identity();
  const std::array<std::pair<const Matrix4<Q>*, std::pair<Q, int>>, 3> spectrum = {
      {{&pr.plus_2i, {Q(0, 2), 1}}, {&pr.zero, {Q(0), 2}}, {&pr.minus_2i, {Q(0, -2), 1}}}};
  double eig = max_abs(pr.plus_2i + pr.zero + pr.minus_2i - id);
  for (const auto& [p, lm] : spectrum) {
    eig = std::max(eig, max_abs(*p * *p - *p));
    eig = std::max(eig, max_abs(kq * *p - lm.first * *p));
    eig = std::max(eig, magnitude(p->trace() - Q(lm.second)));
  }
  rep.add("eigenspaces", eig, tol);

  const auto p0 = psi0<GaussInt>();
  rep.add("deta_psi0", max_abs(k * p0 + GaussInt(0, 2) * p0), tol);
  rep.add("sigma_psi0", max_norm(sigma_H(p0) + GaussInt(0, 1) * deta_form<GaussInt>()), tol);
  double scaled = 0;
  for (int s : {-1, -2, -4}) {
    const auto rho = Q(Rational(-s)) * outer(psi0<Q>(), psi0<Q>());
    scaled = std::max(scaled, max_norm(sigma_H_from_density(rho) - Q(0, s) * deta_form<Q>()));
  }
  rep.add("sigma_scaled", scaled, tol);
  return rep;
}

inline Report selfdual_suite(const SuiteConfig& cfg) {
  using Q = ExactComplex;
  Report rep("selfdual", "algebra");
  rep.set_seed(cfg.seed);
  rep.set_perturbed(cfg.perturb);
  const double tol = cfg.tolerance(kExactTol);
  const Orientation o = cfg.perturb ? Orientation::reversed : Orientation::standard;

  double star2 = 0;
  double split = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      const auto b = KForm<Q>::basis(mask_of({i, j}));
      star2 = std::max(star2, max_norm(contact_star(contact_star(b, o), o) - b));
      const auto sd = sd_project(b, o);
      split = std::max(split, max_norm(sd.plus + sd.minus - b));
      split = std::max(split, max_norm(contact_star(sd.plus, o) - sd.plus));
      split = std::max(split, max_norm(contact_star(sd.minus, o) + sd.minus));
    }
  rep.add("star_squared", star2, tol);
  rep.add("sd_split", split, tol);
  const auto deta = deta_form<Q>();
  rep.add("deta_self_dual", max_norm(contact_star(deta, o) - deta), tol);
  const auto e = [](int i, int j) { return KForm<Q>::basis(mask_of({i, j})); };
  const auto a1 = e(1, 4) - e(2, 3), a2 = e(1, 3) + e(2, 4);
  rep.add("e14_minus_e23_anti_self_dual", max_norm(contact_star(a1, o) + a1), tol);
  rep.add("e13_plus_e24_anti_self_dual", max_norm(contact_star(a2, o) + a2), tol);
  return rep;
}

inline Report curvature_suite(const SuiteConfig& cfg) {
  const std::uint64_t n = cfg.samples.value_or(10000);
  std::optional<ModelFile> mf;
  if (cfg.model) mf = resolve_model(*cfg.model);
  Report rep("curvature", mf ? mf->model.fields.chart : "random-admissible");
  rep.set_points(n);
  rep.set_seed(cfg.seed);
  rep.set_perturbed(cfg.perturb);
  const double tol = cfg.tolerance(kPointwiseTol);

  const auto j = frame_j<double>();
  double rho = 0, bianchi = 0, ric = 0, sym = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::uint64_t seed = cfg.seed * 1000003u + k;
    auto c = random_admissible_ricci(seed, 2.0);
    auto t = random_admissible_torsion(seed ^ 0x9e3779b97f4a7c15ull, 1.0);
    if (cfg.perturb) {
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) t.tau[a][b] += j[a][b];
      c.ric[0][1] += 1e-3;
      c.ric[1][0] += 1e-3;
      c.s = scalar_curvature(c.ric);
      c.rho_H = ricci_form_of(c.ric);
    }
    if (!cfg.perturb) rho = std::max(rho, rho_plus_residual(c));
    bianchi = std::max(bianchi, bianchi_residual(t));
    ric = std::max(ric, ric_identity_check(c, t));
    if (k < 1000 && !cfg.perturb) sym = std::max(sym, symmetry_check(curvature_tensor_from(c)).max());
  }
  if (!cfg.perturb) rep.add("rho_plus", rho, tol);
  rep.add("bianchi", bianchi, tol);
  rep.add("ric_identity", ric, tol);
  if (!cfg.perturb) rep.add("tensor_symmetries", sym, tol);

  if (mf) {
    if (!mf->curvature) throw ConfigError("curvature suite: model has no curvature block");
    const auto c = make_curvature_data(mf->curvature->ric);
    rep.add("model_rho_plus", rho_plus_residual(c), tol);
    rep.add("model_bianchi", bianchi_residual(mf->curvature->tau), tol);
    rep.add("model_ric_identity", ric_identity_check(c, mf->curvature->tau), tol);
  }
  rep.parameters()["samples"] = n;
  return rep;
}

inline Report model_suite(const SuiteConfig& cfg) {
  const std::uint64_t n = cfg.samples.value_or(1000);
  ModelFile mf = resolve_model(cfg.model.value_or("heisenberg"));
  Report rep("model", mf.model.fields.chart);
  rep.set_points(n);
  rep.set_seed(cfg.seed);
  rep.set_perturbed(cfg.perturb);
  const double tol = cfg.tolerance(kPointwiseTol);

  if (mf.synthetic()) {
    const auto m = mf.synthetic_model();
    rep.add("rho_plus", rho_plus_residual(m.curvature), tol);
    rep.add("bianchi", bianchi_residual(m.tau), tol);
    rep.add("ric_identity", ric_identity_check(m.curvature, m.tau), tol);
    if (cfg.perturb) rep.add("perturbed_bianchi", bianchi_residual(TorsionEndomorphism<double>{frame_j<double>()}), tol);
    return rep;
  }
  if (cfg.perturb) mf.model.fields.frame[1] = PolyExpr(2.0) * mf.model.fields.frame[1];
  const auto pts = sample_points(n, cfg.seed);
  const auto c = contact_check(mf.model.fields, pts);
  rep.add("eta_xi", c.eta_xi, tol);
  rep.add("eta_frame", c.eta_frame, tol);
  rep.add("reeb", c.reeb, tol);
  rep.add("contact_volume", c.contact_volume, tol);
  rep.add("metric_j", c.metric_j, tol);
  rep.add("metric_deta", c.metric_deta, tol);
  rep.add("j_squared", c.j_squared, tol);
  rep.add("orthonormality", c.orthonormality, tol);
  rep.add("frame_j", c.frame_j, tol);
  const auto t = tw_axiom_check(mf.model.fields, mf.model.connection, pts);
  rep.add("tw_a_eta", t.a_eta, tol);
  rep.add("tw_a_xi", t.a_xi, tol);
  rep.add("tw_b_metric", t.b_metric, tol);
  rep.add("tw_c_horizontal", t.c_horizontal, tol);
  rep.add("tw_c_reeb", t.c_reeb, tol);
  rep.add("tw_d_nijenhuis", t.d_nijenhuis, tol);
  const auto r = cr_check(mf.model.fields, pts);
  rep.add("cr_nijenhuis", r.nijenhuis, tol);
  rep.add("cr_levi", r.levi, tol);
  rep.parameters()["coordinate_volume_min"] = c.coordinate_volume_min;
  rep.parameters()["coordinate_volume_max"] = c.coordinate_volume_max;
  rep.parameters()["tau_norm"] = t.tau_norm;
  return rep;
}

inline bool has_flat_connection(const ChartModel& m) {
  try {
    require_flat_connection(m, "");
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

inline double max_coefficient(const SpinorField& f) {
  double m = 0;
  for (const auto& c : f.c)
    for (const auto& [e, v] : c.terms()) m = std::max(m, std::abs(v));
  return m;
}

inline Report dirac_suite(const SuiteConfig& cfg) {
  constexpr int kFdFields = 50;
  constexpr int kDbarFields = 20;
  const std::uint64_t n = cfg.samples.value_or(20);
  ModelFile mf = resolve_model(cfg.model.value_or("heisenberg"));
  if (mf.synthetic()) throw ConfigError("dirac suite: requires a chart model");
  Report rep("dirac", mf.model.fields.chart);
  rep.set_points(n);
  rep.set_seed(cfg.seed);
  rep.set_perturbed(cfg.perturb);
  const SpinConnection conn(mf.model);
  const auto pts = sample_points(n, cfg.seed);

  SpinorField psi = psi0_field();
  if (cfg.perturb) psi[0] = PolyExpr::variable(0);
  rep.add("kohn_dirac_psi0", max_coefficient(conn.kohn_dirac(psi)), cfg.tolerance(kExactTol));
  rep.add("full_dirac_psi0", max_coefficient(conn.full_dirac(psi)), cfg.tolerance(kExactTol));

  std::mt19937_64 rng(cfg.seed);
  double fd = 0;
  for (int k = 0; k < kFdFields; ++k) {
    const auto f = random_spinor_field(rng, 3);
    for (const auto& p : pts) fd = std::max(fd, max_abs(conn.full_dirac(f, p) - conn.full_dirac_fd(f, p, cfg.h)));
  }
  rep.add("finite_difference", fd, cfg.tolerance(kFiniteDifferenceTol));

  const auto phi_exact = derive_identification();
  double intertwining = 0;
  for (int i = 1; i <= 5; ++i)
    intertwining = std::max(intertwining, max_abs(phi_exact * form_clifford_matrix<ExactComplex>(i) -
                                                  gamma<ExactComplex>(i) * phi_exact));
  rep.add("identification", intertwining, cfg.tolerance(kExactTol));

  if (has_flat_connection(mf.model)) {
    auto phi = matrix_cast<Complex>(phi_exact);
    if (cfg.perturb) {
      const auto c1 = phi.column(1);
      phi.set_column(1, phi.column(2));
      phi.set_column(2, c1);
    }
    double dbar = 0;
    for (int k = 0; k < kDbarFields; ++k)
      dbar = std::max(dbar, dbar_identity_residual(conn, phi, random_spinor_field(rng, 3), pts));
    rep.add("kohn_dirac_identity", dbar, cfg.tolerance(kDbarIdentityTol));
  }

  if (cfg.field) {
    const auto f = load_field(*cfg.field);
    rep.add("field_r_dirac", sw_residual(conn, f, pts).r_dirac, cfg.tolerance(kPointwiseTol));
    rep.parameters()["field"] = *cfg.field;
  }
  rep.parameters()["h"] = cfg.h;
  rep.parameters()["fields"] = kFdFields;
  rep.parameters()["identity_fields"] = kDbarFields;
  return rep;
}

/// Scalars whose binary expansion needs a larger denominator skip the exact
/// route, keeping the 64-bit rational arithmetic far from overflow.
inline constexpr std::int64_t kMaxExactDenominator = 1 << 20;

inline Report solution_suite(const SuiteConfig& cfg) {
  std::optional<ModelFile> mf;
  if (cfg.model) {
    mf = resolve_model(*cfg.model);
    if (!mf->synthetic()) throw ConfigError("solution suite: requires a synthetic model");
  }
  Report rep("solution", mf ? "synthetic-file" : "synthetic");
  rep.set_points(1);
  rep.set_seed(cfg.seed);
  rep.set_perturbed(cfg.perturb);
  const double factor = cfg.perturb ? 2.0 : 1.0;

  auto record_chain = [&rep](const std::string& key, const auto& sigma, const auto& rho, const auto& fa) {
    auto& c = rep.chain()[key];
    c["sigma_H"] = deta_multiple(sigma);
    c["rho_plus"] = deta_multiple(rho);
    c["F_A_plus"] = deta_multiple(fa);
  };

  if (mf) {
    const auto m = mf->synthetic_model();
    const double s = m.s();
    if (!(s < 0)) throw ConfigError("solution suite: scalar curvature must be negative");
    const auto psi = Complex(factor * std::sqrt(-s)) * psi0<Complex>();
    const auto r = sw_residual(m, psi);
    rep.add("r_dirac", r.r_dirac, cfg.tolerance(kExactTol));
    rep.add("r_curv", r.r_curv, cfg.tolerance(kPointwiseTol));
    rep.parameters()["s"] = s;
    record_chain("s=" + format_number(s), sigma_H(psi), rho_plus(m.curvature), sd_project(m.f_a()).plus);
    return rep;
  }

  std::vector<double> scalars = {-1, -2, -4};
  if (cfg.scalar) scalars = {*cfg.scalar};
  auto params = Report::Json::array();
  for (std::size_t idx = 0; idx < scalars.size(); ++idx) {
    const double s = scalars[idx];
    if (!(s < 0)) throw ConfigError("solution suite: scalar curvature must be negative (got " + format_number(s) + ")");
    const std::string tag = "[s=" + format_number(s) + "]";
    params.push_back(s);

    const auto sol = canonical_solution(s);
    const auto psi = Complex(factor) * sol.psi;
    const auto r = sw_residual(sol.model, psi);
    rep.add("r_dirac" + tag, r.r_dirac, cfg.tolerance(kExactTol));
    rep.add("r_curv" + tag, r.r_curv, cfg.tolerance(kPointwiseTol));

    const auto twisted = canonical_solution(s, random_unitary_connection(cfg.seed + idx, 1.0));
    rep.add("r_dirac_unitary_frame" + tag, sw_residual(twisted.model, psi).r_dirac, cfg.tolerance(kPointwiseTol));

    std::optional<Rational> exact_s;
    try {
      exact_s = rational_from_double(s);
    } catch (const std::domain_error&) {
    }
    if (exact_s && exact_s->denominator() > kMaxExactDenominator) exact_s.reset();
    if (exact_s) {
      const auto ex = canonical_solution(*exact_s);
      const ExactComplex f2(Rational(static_cast<std::int64_t>(factor * factor)));
      const auto defect = curvature_equation_defect(ex.model.f_a(), f2 * ex.sigma_H);
      rep.add("r_curv_exact" + tag, max_norm(defect), cfg.tolerance(kPointwiseTol));
      const auto expected = ExactComplex(Rational(0), *exact_s) * deta_form<ExactComplex>();
      rep.add("sigma_H_exact" + tag, max_norm(f2 * ex.sigma_H - expected), cfg.tolerance(kExactTol));
      record_chain("s=" + format_number(s), f2 * ex.sigma_H, ex.rho_plus, ex.f_a_plus);
    } else {
      record_chain("s=" + format_number(s), sigma_H(psi), sol.rho_plus, sol.f_a_plus);
    }

    const auto doubled = sw_residual(sol.model, Complex(2.0) * sol.psi);
    const double expected_mismatch = std::abs(0.75 * s) * max_norm(deta_form<Complex>());
    rep.add("doubled_control" + tag, std::abs(doubled.r_curv - expected_mismatch), cfg.tolerance(kPointwiseTol));
    rep.parameters()["doubled_r_curv" + tag] = doubled.r_curv;
  }
  rep.parameters()["scalars"] = params;
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"clifford", "selfdual", "curvature", "model", "dirac", "solution"};
  return names;
}

inline Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "clifford") return clifford_suite(cfg);
  if (name == "selfdual") return selfdual_suite(cfg);
  if (name == "curvature") return curvature_suite(cfg);
  if (name == "model") return model_suite(cfg);
  if (name == "dirac") return dirac_suite(cfg);
  if (name == "solution") return solution_suite(cfg);
  throw ConfigError("unknown suite '" + name + "'");
}

struct SuiteOutcome {
  Report::Json report;
  bool pass = false;
};

inline SuiteOutcome timed_suite(const std::string& name, const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report rep = run_suite(name, cfg);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {rep.to_json(elapsed.count()), rep.pass()};
}

/// Every suite with its own defaults; only the model-based suites see `model`,
/// and only the solution suite sees `scalar`. `samples` and `field` are not forwarded.
inline SuiteOutcome run_all(const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report::Json suites = Report::Json::array();
  bool pass = true;
  for (const auto& name : suite_names()) {
    SuiteConfig sub;
    sub.seed = cfg.seed;
    sub.tol = cfg.tol;
    sub.h = cfg.h;
    sub.perturb = cfg.perturb;
    if (name == "model" || name == "dirac") sub.model = cfg.model;
    if (name == "solution") sub.scalar = cfg.scalar;
    auto out = timed_suite(name, sub);
    pass = pass && out.pass;
    suites.push_back(std::move(out.report));
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  Report::Json j;
  j["check"] = "all";
  j["seed"] = cfg.seed;
  j["perturbed"] = cfg.perturb;
  j["suites"] = std::move(suites);
  j["pass"] = pass;
  j["wall_time"] = elapsed.count();
  return {std::move(j), pass};
}

}  // namespace swcheck
