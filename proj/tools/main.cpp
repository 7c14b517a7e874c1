#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcinv/analysis.hpp"
#include "bcinv/mtx_io.hpp"
#include "bcinv/report_io.hpp"
#include "bcinv/special.hpp"
#include "selftest.hpp"

namespace {

using namespace bcinv;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::io_error:
      return 1;
    case Errc::invalid_input:
    case Errc::shape_mismatch:
    case Errc::invalid_weights:
      return 2;
    case Errc::rank_zero:
    case Errc::not_invertible:
    case Errc::not_one_sided:
    case Errc::not_complementary:
    case Errc::no_group_inverse:
    case Errc::subspace_mismatch:
    case Errc::singular_shift:
    case Errc::rank_drift:
      return 3;
    case Errc::verification_failed:
      return 4;
    case Errc::cross_check_failed:
      return 5;
  }
  return 1;
}

struct Options {
  std::string a, d, e, g, m, n, x, z, t, s, b;
  std::string method;
  std::string side = "right";
  std::string kind;
  std::string curve = "constant";
  std::string out;
  std::string format;
  double tol_rel = -1.0;
  double tol_abs = 0.0;
  std::uint64_t seed = 0;
  double t0 = 0.0;
  double h = 1e-5;
  std::vector<double> deltas;
  std::vector<double> eps;

  Tolerance tolerance() const {
    Tolerance tol;
    if (tol_rel >= 0.0) tol.rel = tol_rel;
    tol.abs = tol_abs;
    return tol;
  }

  std::optional<Method> parsed_method() const {
    if (method.empty()) return std::nullopt;
    const auto m = method_from_name(method);
    if (!m) throw Error(Errc::invalid_input, "unknown method '" + method + "'");
    return m;
  }
};

CMatrix load(const std::string& path, const char* what) {
  if (path.empty())
    throw Error(Errc::invalid_input,
                std::string("missing required input ") + what);
  return read_matrix(std::filesystem::path(path));
}

void emit_matrix(const Options& opt, const CMatrix& m) {
  if (opt.out.empty()) {
    write_matrix(std::cout, m);
  } else {
    write_matrix(std::filesystem::path(opt.out), m);
  }
}

void emit_text(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out);
    if (!out) throw Error(Errc::io_error, "cannot open '" + opt.out + "'");
    out << text;
  }
}

CMatrix random_square(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix z(dim, dim);
  for (Index j = 0; j < dim; ++j)
    for (Index i = 0; i < dim; ++i) z(i, j) = Complex(gauss(rng), gauss(rng));
  return z;
}

int cmd_exists(const Options& opt) {
  const auto rep = existence_report(load(opt.a, "--a"), load(opt.d, "--d"),
                                    load(opt.e, "--e"), opt.tolerance());
  emit_text(opt, to_json(rep).dump(2) + "\n");
  return rep.two_sided ? 0 : 3;
}

int cmd_compute(const Options& opt, bool along) {
  const CMatrix a = load(opt.a, "--a");
  const CMatrix d = load(opt.d, "--d");
  const CMatrix e = along ? d : load(opt.e, "--e");
  const auto result = bc_inverse(a, d, e, opt.tolerance(), opt.parsed_method());
  emit_matrix(opt, result.X);
  const std::string report = to_json(result).dump(2) + "\n";
  std::cerr << report;
  if (!opt.out.empty()) {
    std::ofstream sidecar(opt.out + ".json");
    if (sidecar) sidecar << report;
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  const CMatrix a = load(opt.a, "--a");
  const CMatrix d = load(opt.d, "--d");
  const CMatrix e = opt.e.empty() ? d : load(opt.e, "--e");
  const CMatrix x = load(opt.x, "--x");
  const auto res = verify_definition(a, d, e, x, opt.tolerance());
  emit_text(opt, to_json(res).dump(2) + "\n");
  const double bound = kResidualFactor * result_scale(a, d, e);
  return res.max() <= bound ? 0 : 4;
}

int cmd_family(const Options& opt) {
  const CMatrix a = load(opt.a, "--a");
  const CMatrix d = load(opt.d, "--d");
  const CMatrix e = load(opt.e, "--e");
  const Side side = opt.side == "left" ? Side::Left : Side::Right;
  if (opt.side != "left" && opt.side != "right")
    throw Error(Errc::invalid_input, "--side must be left or right");
  const auto fam = onesided_family(a, d, e, opt.tolerance(), side);
  const CMatrix z = opt.z.empty()
                        ? random_square(fam.parameter_dim(), opt.seed)
                        : load(opt.z, "--z");
  emit_matrix(opt, fam.member(z));
  return 0;
}

int cmd_special(const Options& opt) {
  const CMatrix a = load(opt.a, "--a");
  const Tolerance tol = opt.tolerance();
  CMatrix result;
  if (opt.kind == "mp") {
    result = moore_penrose_frf(a, tol);
  } else if (opt.kind == "group") {
    result = group_inverse(a, tol);
  } else if (opt.kind == "drazin") {
    result = drazin_inverse(a, tol);
  } else if (opt.kind == "core") {
    result = core_inverse(a, tol);
  } else if (opt.kind == "dualcore") {
    result = dual_core_inverse(a, tol);
  } else if (opt.kind == "wmp") {
    WeightPair weights{load(opt.m, "--m"), load(opt.n, "--n")};
    result = weighted_mp(a, weights, tol);
  } else {
    throw Error(Errc::invalid_input,
                "kind must be one of mp|group|drazin|core|dualcore|wmp");
  }
  emit_matrix(opt, result);
  return 0;
}

int cmd_prescribed(const Options& opt) {
  const CMatrix a = load(opt.a, "--a");
  const CMatrix t_basis = load(opt.t, "--t");
  const CMatrix s_basis = load(opt.s, "--s");
  emit_matrix(opt, prescribed_outer(a, t_basis, s_basis, opt.tolerance()));
  return 0;
}

int cmd_perturb(const Options& opt) {
  const CMatrix a = load(opt.a, "--a");
  const CMatrix d = load(opt.d, "--d");
  const CMatrix e = load(opt.e, "--e");
  std::vector<double> deltas = opt.deltas;
  if (deltas.empty()) deltas = default_epsilon_schedule();
  const auto rows = perturbation_experiment(a, d, e, deltas, opt.seed,
                                            opt.tolerance());
  if (opt.format == "json")
    emit_text(opt, to_json(rows).dump(2) + "\n");
  else
    emit_text(opt, to_csv(rows));
  return 0;
}

int cmd_limit(const Options& opt) {
  const CMatrix a = load(opt.a, "--a");
  const CMatrix d = load(opt.d, "--d");
  const CMatrix e = opt.e.empty() ? d : load(opt.e, "--e");
  const Tolerance tol = opt.tolerance();
  const CMatrix g =
      opt.g.empty() ? canonical_intermediate(d, e, tol) : load(opt.g, "--g");
  std::vector<double> eps = opt.eps;
  if (eps.empty()) eps = default_epsilon_schedule();
  const auto rows = limit_representation(a, d, e, g, eps, tol);
  if (opt.format == "json")
    emit_text(opt, to_json(rows).dump(2) + "\n");
  else
    emit_text(opt, to_csv(rows));
  return 0;
}

int cmd_diff(const Options& opt) {
  const CMatrix a = load(opt.a, "--a");
  const Tolerance tol = opt.tolerance();
  CurveSpec curve;
  curve.t0 = opt.t0;
  curve.h = opt.h;
  if (opt.curve == "mp") {
    CMatrix dir = opt.b.empty() ? random_square(std::max(a.rows(), a.cols()),
                                                opt.seed)
                                      .topLeftCorner(a.rows(), a.cols())
                                      .eval()
                                : load(opt.b, "--b");
    dir /= std::max(1.0, dir.norm());
    curve.A = [a, dir](double t) { return CMatrix(a + t * dir); };
    curve.D = [a, dir](double t) { return CMatrix((a + t * dir).adjoint()); };
    curve.E = curve.D;
  } else if (opt.curve == "linear") {
    const CMatrix d = load(opt.d, "--d");
    const CMatrix e = load(opt.e, "--e");
    CMatrix dir = opt.b.empty() ? random_square(std::max(a.rows(), a.cols()),
                                                opt.seed)
                                      .topLeftCorner(a.rows(), a.cols())
                                      .eval()
                                : load(opt.b, "--b");
    dir /= std::max(1.0, dir.norm());
    curve.A = [a, dir](double t) { return CMatrix(a + t * dir); };
    curve.D = [d](double) { return d; };
    curve.E = [e](double) { return e; };
  } else if (opt.curve == "constant") {
    const CMatrix d = load(opt.d, "--d");
    const CMatrix e = load(opt.e, "--e");
    curve.A = [a](double) { return a; };
    curve.D = [d](double) { return d; };
    curve.E = [e](double) { return e; };
  } else {
    throw Error(Errc::invalid_input, "--curve must be constant|linear|mp");
  }
  const auto check = derivative_along_curve(curve, tol);
  if (opt.format == "json") {
    Json j;
    j["curve"] = opt.curve;
    j["t0"] = curve.t0;
    j["h"] = curve.h;
    j["gap"] = check.gap;
    j["analytic_norm"] = check.analytic.norm();
    j["numeric_norm"] = check.numeric.norm();
    emit_text(opt, j.dump(2) + "\n");
  } else {
    emit_text(opt, "curve,t0,h,gap\n" + opt.curve + "," +
                       csv_double(curve.t0) + "," + csv_double(curve.h) +
                       "," + csv_double(check.gap) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generalized inverses relative to a pair of anchor matrices: existence "
      "tests, computation by several independent routes, families, classical "
      "special cases, and verification experiments."};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--a", opt.a, "matrix A (Matrix Market file)");
    sub->add_option("--d", opt.d, "anchor D");
    sub->add_option("--e", opt.e, "anchor E");
    sub->add_option("--g", opt.g, "intermediate matrix G");
    sub->add_option("--m", opt.m, "weight M");
    sub->add_option("--n", opt.n, "weight N");
    sub->add_option("--x", opt.x, "candidate inverse X");
    sub->add_option("--z", opt.z, "free parameter Z");
    sub->add_option("--method", opt.method, "mp|frf|basis|svdpq|elim");
    sub->add_option("--tol-rel", opt.tol_rel,
                    "relative rank threshold (default max(m,n)*eps)")
        ->envname("BCINV_TOL_REL");
    sub->add_option("--tol-abs", opt.tol_abs, "absolute rank threshold");
    sub->add_option("--seed", opt.seed, "random seed (default 0)");
    sub->add_option("--out", opt.out, "output path (default stdout)");
    sub->add_option("--format", opt.format, "json|csv|mtx");
    return sub;
  };

  auto* exists = add_common(app.add_subcommand(
      "exists", "existence report for the pair (D, E)"));
  auto* compute = add_common(app.add_subcommand(
      "compute", "compute the (D, E)-inverse of A"));
  auto* along = add_common(app.add_subcommand(
      "along", "compute the inverse of A along D"));
  auto* verify = add_common(app.add_subcommand(
      "verify", "check a candidate X against the defining equations"));
  auto* family = add_common(app.add_subcommand(
      "family", "emit a one-sided inverse family member"));
  family->add_option("--side", opt.side, "left|right (default right)");
  auto* special = add_common(app.add_subcommand(
      "special", "classical generalized inverses"));
  special->add_option("kind", opt.kind, "mp|group|drazin|core|dualcore|wmp")
      ->required();
  auto* prescribed = add_common(app.add_subcommand(
      "prescribed", "outer inverse with prescribed range and null space"));
  prescribed->add_option("--t", opt.t, "range basis file");
  prescribed->add_option("--s", opt.s, "null-space basis file");
  auto* perturb = add_common(app.add_subcommand(
      "perturb", "perturbation experiment (CSV table)"));
  perturb->add_option("--deltas", opt.deltas, "perturbation scales");
  auto* limit = add_common(app.add_subcommand(
      "limit", "resolvent-limit convergence table"));
  limit->add_option("--eps", opt.eps, "shift schedule");
  auto* diff = add_common(app.add_subcommand(
      "diff", "derivative check along a smooth curve"));
  diff->add_option("--curve", opt.curve, "constant|linear|mp");
  diff->add_option("--b", opt.b, "direction matrix for the linear/mp curve");
  diff->add_option("--t0", opt.t0, "evaluation point");
  diff->add_option("--step", opt.h, "finite-difference step");
  auto* selftest =
      app.add_subcommand("selftest", "run the built-in example suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 1;
  }

  try {
    if (exists->parsed()) return cmd_exists(opt);
    if (compute->parsed()) return cmd_compute(opt, false);
    if (along->parsed()) return cmd_compute(opt, true);
    if (verify->parsed()) return cmd_verify(opt);
    if (family->parsed()) return cmd_family(opt);
    if (special->parsed()) return cmd_special(opt);
    if (prescribed->parsed()) return cmd_prescribed(opt);
    if (perturb->parsed()) return cmd_perturb(opt);
    if (limit->parsed()) return cmd_limit(opt);
    if (diff->parsed()) return cmd_diff(opt);
    if (selftest->parsed()) {
      const int failures = bcinv_cli::run_selftest();
      if (failures > 0) {
        std::cerr << failures << " selftest check(s) failed\n";
        return 4;
      }
      std::cout << "selftest passed\n";
      return 0;
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code_for(err.code());
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
