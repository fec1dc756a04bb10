// fracleg: evaluate, verify, tabulate

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracleg/acceptance.hpp"
#include "fracleg/applications.hpp"
#include "fracleg/closed_forms.hpp"
#include "fracleg/curves.hpp"
#include "fracleg/transforms.hpp"

using json = nlohmann::ordered_json;
using namespace fracleg;

namespace {

constexpr int exit_ok = 0, exit_usage = 1, exit_verify = 2;
constexpr double verify_tol = 1e-9;

std::string num(double x, int digits) {
  char b[48];
  std::snprintf(b, sizeof b, "%.*g", digits, x);
  return b;
}

// json has no infinity
json jnum(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return nullptr;
  return x;
}

std::string timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char b[32];
  std::strftime(b, sizeof b, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return b;
}

json combination_json(const EllipticCombination& c) {
  auto d = [](const Dual& x) { return json::array({x.v, x.d}); };
  return {{"modulus", c.modulus}, {"comodulus", c.comodulus}, {"K", d(c.k)},   {"E", d(c.e)},
          {"Kc", d(c.kc)},        {"Ec", d(c.ec)},            {"condition", c.condition()}};
}

struct EvalArgs {
  std::string kind, nu, mu, format = "text";
  double arg = 0;
  bool closed_form = false;
};

// the four closed forms that exist, keyed by kind and exact index
std::optional<double> closed_form_value(FunctionKind k, const Rational& nu, const Rational& mu, double x,
                                        std::string& name) {
  auto is = [](const Rational& r, int p, int q) { return r.num == p && r.den == q; };
  if (k == FunctionKind::FerrersP && is(nu, -1, 6) && is(mu, -1, 4)) {
    name = "ferrers_p_m16_m14(theta), x = cos theta";
    return ferrers_p_m16_m14(std::acos(x));
  }
  if (k == FunctionKind::LegendreP && is(nu, -1, 6) && is(mu, -1, 4)) {
    name = "legendre_p_m16_m14(xi), z = cosh xi";
    return legendre_p_m16_m14(std::acosh(x));
  }
  if (k == FunctionKind::LegendreQhat && is(nu, -1, 4) && is(mu, -1, 3)) {
    name = "qhat_m14_m13(xi), z = coth xi";
    return qhat_m14_m13(0.5 * std::log1p(2.0 / (x - 1.0)));
  }
  if (k == FunctionKind::LegendreQhat && is(nu, -1, 4) && is(mu, -1, 2)) {
    name = "qhat_m14_m12(z)";
    return qhat_m14_m12(x);
  }
  return std::nullopt;
}

int run_eval(const EvalArgs& a, bool stamp) {
  auto kind = parse_kind(a.kind);
  if (!kind) throw DomainError("unknown kind '" + a.kind + "'");
  const Rational nu = Rational::parse(a.nu), mu = Rational::parse(a.mu);
  const LegendreIndex idx = LegendreIndex::exact(nu, mu);
  const Evaluation ev = evaluate(*kind, idx, a.arg);
  std::optional<double> cf;
  std::string cf_name;
  if (a.closed_form) {
    cf = closed_form_value(*kind, nu, mu, a.arg, cf_name);
    if (!cf) throw DomainError("no closed form for " + std::string(kind_name(*kind)) + " (" + nu.str() + ", " +
                               mu.str() + "); available: ferrers-p and legendre-p (-1/6, -1/4), legendre-qhat "
                               "(-1/4, -1/3) and (-1/4, -1/2)");
  }

  if (a.format == "json") {
    json j;
    if (stamp) j["timestamp"] = timestamp();
    j["kind"] = kind_name(*kind);
    j["nu"] = nu.str();
    j["mu"] = mu.str();
    j["arg"] = a.arg;
    j["value"] = ev.value;
    j["derivative"] = ev.derivative ? json(*ev.derivative) : json(nullptr);
    j["method"] = method_name(ev.method);
    j["trace"] = ev.trace;
    j["reduced_precision"] = ev.reduced_precision;
    j["combination"] = ev.combination ? combination_json(*ev.combination) : json(nullptr);
    if (cf) j["closed_form"] = {{"formula", cf_name}, {"value", *cf}};
    std::cout << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    if (stamp) std::cout << "# " << timestamp() << '\n';
    std::cout << "kind,nu,mu,arg,value,method,closed_form\n";
    std::cout << kind_name(*kind) << ',' << nu.str() << ',' << mu.str() << ',' << num(a.arg, 17) << ','
              << num(ev.value, 17) << ',' << method_name(ev.method) << ',' << (cf ? num(*cf, 17) : "") << '\n';
  } else {
    if (stamp) std::cout << "# " << timestamp() << '\n';
    std::cout << kind_name(*kind) << "_{" << nu.str() << "}^{" << mu.str() << "}(" << num(a.arg, 12)
              << ") = " << num(ev.value, 12) << '\n';
    if (ev.derivative) std::cout << "derivative (d/dxi or d/dtheta): " << num(*ev.derivative, 12) << '\n';
    std::cout << "method: " << method_name(ev.method) << (ev.reduced_precision ? " (reduced precision)" : "")
              << '\n';
    std::cout << "trace: " << ev.trace << '\n';
    if (ev.combination) std::cout << "combination: " << ev.combination->describe() << '\n';
    if (cf) std::cout << "closed form " << cf_name << ": " << num(*cf, 12) << '\n';
  }
  return exit_ok;
}

struct VerifyArgs {
  std::string identity = "all", out;
  int grid = 50;
  std::vector<double> alpha, beta;
};

int run_verify(const VerifyArgs& a) {
  std::vector<const IdentityRecord*> recs;
  if (a.identity == "all") {
    for (const auto& r : catalogue()) recs.push_back(&r);
  } else {
    const IdentityRecord* r = find_identity(a.identity);
    if (!r) throw DomainError("unknown identity '" + a.identity + "'");
    recs.push_back(r);
  }
  const auto& alphas = a.alpha.empty() ? default_alpha_grid() : a.alpha;
  const auto& betas = a.beta.empty() ? default_alpha_grid() : a.beta;
  std::vector<VerificationRow> rows;
  long skipped = 0;
  for (const IdentityRecord* rec : recs) {
    const auto ps = identity_grid(*rec, a.grid);
    for (const auto& q : parameter_grid(*rec, alphas, betas)) {
      try {
        for (double p : ps) {
          auto ev = identity_sides(*rec, q, p);
          rows.push_back({rec->label, q.alpha, q.beta, ev.p, ev.L, ev.R, ev.lhs, ev.rhs, ev.gap});
        }
      } catch (const DegenerateParameterError& e) {
        if (recs.size() == 1) throw;
        std::cerr << "skipped: " << e.what() << '\n';
        ++skipped;
      }
    }
  }
  if (a.out.empty()) {
    write_verification_csv(std::cout, rows);
  } else {
    std::ofstream f(a.out);
    if (!f) throw DomainError("cannot open '" + a.out + "' for writing");
    write_verification_csv(f, rows);
  }
  double worst = 0;
  long bad = 0;
  for (const auto& r : rows) {
    worst = std::max(worst, r.gap);
    if (!(r.gap <= verify_tol)) ++bad;
  }
  std::cerr << rows.size() << " rows, " << recs.size() << " identities, worst gap " << num(worst, 3) << ", "
            << bad << " above " << num(verify_tol, 1);
  if (skipped) std::cerr << ", " << skipped << " degenerate parameter sets skipped";
  std::cerr << '\n';
  return bad ? exit_verify : exit_ok;
}

json curve_json(CurveId id) {
  const auto f = curve_formulas(id);
  json j;
  j["curve"] = curve_name(id);
  j["L"] = f.L;
  j["R"] = f.R;
  j["A"] = f.A;
  j["implicit"] = has_implicit(id) ? json(f.implicit) : json(nullptr);
  j["basepoint"] = curve_basepoint(id);
  json sy = json::array();
  for (const auto& s : curve_symmetries(id)) sy.push_back({{"p_map", s.p_map}, {"action", s.action}});
  j["symmetries"] = sy;
  json rows = json::array();
  for (const auto& r : interval_rows(id)) {
    rows.push_back({{"row", r.row},
                    {"p", {jnum(r.p_lo), jnum(r.p_hi)}},
                    {"L", {jnum(r.L_at_lo), jnum(r.L_at_hi)}},
                    {"R", {jnum(r.R_at_lo), jnum(r.R_at_hi)}},
                    {"left_ferrers", r.left_ferrers},
                    {"right_ferrers", r.right_ferrers}});
  }
  j["intervals"] = rows;
  json bps = json::array();
  for (const auto& b : breakpoint_table(id)) {
    bps.push_back({{"p", jnum(b.p)},
                   {"L", {jnum(b.L_below), jnum(b.L_above)}},
                   {"R", {jnum(b.R_below), jnum(b.R_above)}},
                   {"L_turning", b.L_turning},
                   {"R_turning", b.R_turning}});
  }
  j["breakpoints"] = bps;
  return j;
}

int run_table(const std::string& curve, bool stamp) {
  json out;
  if (stamp) out["timestamp"] = timestamp();
  json list = json::array();
  if (curve == "all") {
    for (CurveId id : all_curves) list.push_back(curve_json(id));
  } else {
    auto id = parse_curve(curve);
    if (!id) throw DomainError("unknown curve '" + curve + "'");
    list.push_back(curve_json(*id));
  }
  out["curves"] = list;
  std::cout << out.dump(2) << '\n';
  return exit_ok;
}

struct LaplaceArgs {
  std::string s;
  int m = 0;
  double alpha = 0;
  std::string format = "text";
};

int run_laplace(const LaplaceArgs& a, bool stamp) {
  const double s = Rational::parse(a.s).value();
  const auto r = laplace_coefficient_ex(s, a.m, a.alpha);
  if (a.format == "json") {
    json j;
    if (stamp) j["timestamp"] = timestamp();
    j["convention"] = laplace_convention;
    j["s"] = a.s;
    j["m"] = a.m;
    j["alpha"] = a.alpha;
    j["value"] = r.value;
    j["method"] = method_name(r.method);
    j["trace"] = r.trace;
    std::cout << j.dump(2) << '\n';
    return exit_ok;
  }
  if (stamp) std::cout << "# " << timestamp() << '\n';
  std::cout << "# convention: " << laplace_convention << '\n';
  const int digits = a.format == "csv" ? 17 : 12;
  if (a.format == "csv") {
    std::cout << "s,m,alpha,value\n" << a.s << ',' << a.m << ',' << num(a.alpha, 17) << ',' << num(r.value, 17)
              << '\n';
  } else {
    std::cout << "b_" << a.s << "^(" << a.m << ")(" << num(a.alpha, 12) << ") = " << num(r.value, digits) << '\n';
    std::cout << "method: " << method_name(r.method) << "; " << r.trace << '\n';
  }
  return exit_ok;
}

int run_selftest() {
  bool ok = true;
  for (const auto& c : acceptance::all_criteria()) {
    CriterionResult r;
    try {
      r = c();
    } catch (const std::exception& e) {
      r.name = std::string("threw: ") + e.what();
    }
    ok = ok && r.passed;
    std::cout << acceptance::format_line(r) << '\n';
  }
  std::cout << (ok ? "selftest: all criteria pass" : "selftest: FAILED") << '\n';
  return ok ? exit_ok : exit_verify;
}

std::string error_name(const Error& e) {
#define FRACLEG_NAME(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  FRACLEG_NAME(DomainError)
  FRACLEG_NAME(PoleError)
  FRACLEG_NAME(ConvergenceError)
  FRACLEG_NAME(UnsupportedIndexError)
  FRACLEG_NAME(UnsupportedCurveError)
  FRACLEG_NAME(SingularLadderError)
  FRACLEG_NAME(StabilityError)
  FRACLEG_NAME(DegenerateParameterError)
  FRACLEG_NAME(DegenerateReflectionError)
  FRACLEG_NAME(NegativeRadicandError)
  FRACLEG_NAME(InternalError)
#undef FRACLEG_NAME
  return "Error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendre and Ferrers functions of fractional degree via complete elliptic integrals"};
  app.require_subcommand(1, 1);
  bool no_timestamp = false;
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp line");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate one function");
  eval->add_option("--kind", ea.kind, "legendre-p, legendre-qhat, ferrers-p, ferrers-q, ferrers-pbar, legendre-ptilde")
      ->required();
  eval->add_option("--nu", ea.nu, "degree, e.g. -1/6")->required();
  eval->add_option("--mu", ea.mu, "order, e.g. 0 or -1/4")->required();
  eval->add_option("--arg", ea.arg, "argument x or z")->required();
  eval->add_option("--format", ea.format)->check(CLI::IsMember({"text", "json", "csv"}));
  eval->add_flag("--closed-form", ea.closed_form, "also evaluate the radical closed form");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check identities on a p-grid");
  verify->add_option("--identity", va.identity, "label such as \"I6(i)\", or all");
  verify->add_option("--grid", va.grid)->check(CLI::Range(2, 100000));
  verify->add_option("--alpha", va.alpha, "comma-separated alpha values")->delimiter(',');
  verify->add_option("--beta", va.beta, "comma-separated beta values (W2 only)")->delimiter(',');
  verify->add_option("--out", va.out, "CSV path (default standard output)");

  std::string curve = "all";
  auto* table = app.add_subcommand("table", "dump the curve registry as JSON");
  table->add_option("--curve", curve, "C3, C3', C4, C4', C6, C6', M, W2, W4, X or all");

  LaplaceArgs la;
  auto* laplace = app.add_subcommand("laplace", "Laplace coefficient b_s^(m)(alpha)");
  laplace->add_option("--s", la.s)->required();
  laplace->add_option("--m", la.m)->required();
  laplace->add_option("--alpha", la.alpha)->required();
  laplace->add_option("--format", la.format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  const bool stamp = !no_timestamp;
  try {
    if (*eval) return run_eval(ea, stamp);
    if (*verify) return run_verify(va);
    if (*table) return run_table(curve, stamp);
    if (*laplace) return run_laplace(la, stamp);
    if (*selftest) return run_selftest();
  } catch (const Error& e) {
    std::cerr << error_name(e) << ": " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
