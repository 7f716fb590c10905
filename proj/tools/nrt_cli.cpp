// nrt: command-line front end for the ordered Hamming space library.

#include "nrt/asymptotics.hpp"
#include "nrt/bounds.hpp"
#include "nrt/delsarte_lp.hpp"
#include "nrt/io.hpp"
#include "nrt/macwilliams.hpp"
#include "nrt/ordered_space.hpp"
#include "nrt/scheme_ops.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kUsage = 2, kBudget = 3, kInternal = 4 };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CheckFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using nrt::io::Json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) std::cout << text;
  else nrt::io::write_text_file(out_path, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

nrt::SpaceParams make_params(int q, int r, int n) {
  nrt::SpaceParams p{q, r, n};
  p.validate();
  return p;
}

struct SpaceOpts {
  int q = 2;
  int r = 1;
  int n = 1;
};

void add_space(CLI::App* app, SpaceOpts& o) {
  app->add_option("--q", o.q, "alphabet size (>= 2)")->required();
  app->add_option("--r", o.r, "block depth (>= 1)")->required();
  app->add_option("--n", o.n, "number of blocks (>= 1)")->required();
}

void require_lp_scale(const nrt::SpaceParams& p) {
  if (nrt::enumerate_shapes(p.r, p.n).size() > 2000) throw nrt::BudgetExceeded("more than 2000 shapes; LP too large");
}

int run_sphere(const SpaceOpts& o, std::optional<int> d) {
  const auto p = make_params(o.q, o.r, o.n);
  if (d && (*d < 0 || *d > p.length())) throw UsageError("--d must lie in [0, rn]");
  Json shapes = Json::array();
  for (const auto& e : nrt::enumerate_shapes(p.r, p.n)) {
    if (d && e.weight() != *d) continue;
    shapes.push_back({{"shape", e.key()}, {"weight", e.weight()}, {"count", nrt::shape_count(p, e).get_str()}});
  }
  Json j = {{"params", nrt::io::params_json(p)}, {"shapes", shapes}};
  if (d) {
    j["d"] = *d;
    j["sphere_size"] = nrt::sphere_size(p, *d).get_str();
  }
  j["total"] = p.ambient_size().get_str();
  std::cout << dump(j);
  return kOk;
}

int run_bounds(const SpaceOpts& o, int d, const std::string& json_path) {
  const auto p = make_params(o.q, o.r, o.n);
  if (d < 1 || d > p.length() + 1) throw UsageError("--d must lie in [1, rn + 1]");
  const auto table = nrt::best_bounds(p, d);
  const Json j = nrt::io::bound_table_to_json(table);
  if (json_path.empty()) {
    std::cout << dump(j);
    return kOk;
  }
  nrt::io::write_text_file(json_path, dump(j));
  for (std::size_t i = 0; i < table.bounds.size(); ++i) {
    const auto& b = table.bounds[i];
    std::cout << b.name << '\t' << nrt::to_string(b.side) << '\t';
    if (!b.applicable) std::cout << "n/a";
    else if (b.exact) std::cout << nrt::io::format_rational(*b.exact);
    else std::cout << nrt::io::format_double(b.as_double());
    if (table.best_upper == i || table.best_lower == i || table.best_lower_ooa == i) std::cout << "\tbest";
    std::cout << '\n';
  }
  return kOk;
}

int run_lp(const SpaceOpts& o, std::optional<int> d, std::optional<int> t, const std::string& program,
           const std::string& cert_path) {
  const auto p = make_params(o.q, o.r, o.n);
  require_lp_scale(p);
  Json j = {{"params", nrt::io::params_json(p)}, {"program", program}};
  if (program == "I") {
    if (!d) throw UsageError("program I needs --d");
    if (*d < 1 || *d > p.length() + 1) throw UsageError("--d must lie in [1, rn + 1]");
    const auto res = nrt::solve_code_lp(p, *d);
    j["d"] = *d;
    j["value"] = nrt::io::format_rational(res.bound);
    Json dist = Json::object();
    for (const auto& [e, a] : res.distribution) dist[e.key()] = nrt::io::format_rational(a);
    j["distribution"] = dist;
    if (!cert_path.empty()) {
      nrt::io::write_text_file(cert_path, dump(nrt::io::certificate_to_json(res.certificate)));
      const auto reloaded = nrt::io::certificate_from_json(nrt::io::read_json_file(cert_path));
      const auto check = nrt::check_certificate(reloaded);
      j["certificate"] = {{"path", cert_path}, {"accepted", check.accepted},
                          {"code_bound", nrt::io::format_rational(check.code_bound)}};
      if (!check.accepted || check.code_bound != res.bound) {
        std::cout << dump(j);
        throw CheckFailure("certificate failed re-check: " + check.reason);
      }
    }
  } else if (program == "II") {
    if (!t) throw UsageError("program II needs --t");
    if (*t < 0 || *t > p.length()) throw UsageError("--t must lie in [0, rn]");
    if (!cert_path.empty()) throw UsageError("--certificate applies to program I only");
    const auto res = nrt::solve_ooa_lp(p, *t);
    j["t"] = *t;
    j["value"] = nrt::io::format_rational(res.bound);
    Json dist = Json::object();
    for (const auto& [e, a] : res.distribution) dist[e.key()] = nrt::io::format_rational(a);
    j["distribution"] = dist;
  } else {
    throw UsageError("--program must be I or II");
  }
  std::cout << dump(j);
  return kOk;
}

int run_asym(int q, int r, const std::string& curve, int grid, std::optional<double> delta_max,
             const std::string& out) {
  if (q < 2 || r < 1) throw UsageError("need q >= 2 and r >= 1");
  if (grid < 2) throw UsageError("--grid must be at least 2");
  const double dmax = delta_max ? *delta_max : (nrt::asym::is_net_curve(curve) ? 1.0 : nrt::asym::delta_crit(q, r));
  if (!(dmax > 0.0)) throw UsageError("--delta-max must be positive");
  std::vector<nrt::asym::CurvePoint> pts;
  try {
    pts = nrt::asym::curve_on_grid(curve, q, r, grid, dmax);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream csv;
  nrt::io::write_curve_csv(csv, curve, q, r, pts);
  emit(csv.str(), out);
  return kOk;
}

int run_verify_ooa(const std::string& file, bool as_json) {
  const auto table = nrt::io::read_array_file(file);
  if (table.rows.empty()) throw UsageError("array has no rows");
  if (table.params.ambient_size() > nrt::Integer(static_cast<unsigned long>(nrt::kMaxEnumeratedVectors)))
    throw nrt::BudgetExceeded("ambient space too large");
  const auto rep = nrt::ooa_strength(table);
  const std::string index = rep.index ? rep.index->get_str() : "undefined";
  if (as_json) {
    std::cout << dump({{"params", nrt::io::params_json(table.params)},
                       {"rows", table.rows.size()},
                       {"strength", rep.strength},
                       {"index", rep.index ? Json(rep.index->get_str()) : Json(nullptr)}});
  } else {
    std::cout << "strength " << rep.strength << ", index " << index << '\n';
  }
  return kOk;
}

int run_macwilliams(const std::string& gen_file, const std::string& out) {
  const auto table = nrt::io::read_array_file(gen_file);
  const auto& p = table.params;
  if (!nrt::is_prime(p.q)) throw UsageError("linear codes need prime q");
  if (p.ambient_size() > nrt::Integer(static_cast<unsigned long>(nrt::kMaxEnumeratedVectors)))
    throw nrt::BudgetExceeded("ambient space too large");
  const nrt::LinearCode code(p, table.rows);
  const auto rep = nrt::check_duality(code);
  const auto right = nrt::enumerator_of(code, nrt::Reading::Right);
  Json j = {{"params", nrt::io::params_json(p)},
            {"dimension", code.dimension()},
            {"code", nrt::io::enumerator_to_json(right)},
            {"dual", nrt::io::enumerator_to_json(rep.predicted)},
            {"dual_verified", rep.holds},
            {"self_dual_enumerator", rep.predicted.coeffs == right.coeffs}};
  emit(dump(j), out);
  if (!rep.holds) throw CheckFailure("transform disagrees with the enumerated dual code");
  return kOk;
}

int run_net(int q, int t, int m, int s) {
  const auto ooa = nrt::net_to_ooa(nrt::NetParams{t, m, s, q});
  std::cout << dump({{"net", {{"t", t}, {"m", m}, {"s", s}, {"q", q}}},
                     {"ooa",
                      {{"strength", ooa.strength},
                       {"n", ooa.space.n},
                       {"r", ooa.space.r},
                       {"q", ooa.space.q},
                       {"index", ooa.index.get_str()},
                       {"size", ooa.size.get_str()}}}});
  return kOk;
}

int run_check_cert(const std::string& file) {
  const auto cert = nrt::io::certificate_from_json(nrt::io::read_json_file(file));
  require_lp_scale(cert.params);
  const auto check = nrt::check_certificate(cert);
  Json j = {{"params", nrt::io::params_json(cert.params)}, {"d", cert.d}, {"accepted", check.accepted}};
  if (check.accepted) {
    j["code_bound"] = nrt::io::format_rational(check.code_bound);
    j["ooa_bound"] = nrt::io::format_rational(check.ooa_bound);
  } else {
    j["reason"] = check.reason;
    if (check.witness) j["witness"] = check.witness->key();
  }
  std::cout << dump(j);
  if (!check.accepted) throw CheckFailure("certificate rejected");
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered Hamming space: bounds, linear programs, curves and enumerators"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string("nrt ") + kVersion);

  SpaceOpts sphere_o;
  std::optional<int> sphere_d;
  auto* sphere = app.add_subcommand("sphere", "shape counts v_e, or one sphere S_d with --d");
  add_space(sphere, sphere_o);
  sphere->add_option("--d", sphere_d, "ordered weight of a single sphere");

  SpaceOpts bounds_o;
  int bounds_d = 1;
  std::string bounds_json;
  auto* bounds = app.add_subcommand("bounds", "table of finite-length bounds");
  add_space(bounds, bounds_o);
  bounds->add_option("--d", bounds_d, "minimum distance")->required();
  bounds->add_option("--json", bounds_json, "write the JSON table here and print a text summary");

  SpaceOpts lp_o;
  std::optional<int> lp_d;
  std::optional<int> lp_t;
  std::string lp_program = "I";
  std::string lp_cert;
  auto* lp = app.add_subcommand("lp", "exact Delsarte linear program");
  add_space(lp, lp_o);
  auto* lp_d_opt = lp->add_option("--d", lp_d, "minimum distance (program I)");
  lp->add_option("--t", lp_t, "strength (program II)")->excludes(lp_d_opt);
  lp->add_option("--program", lp_program, "I (codes) or II (OOAs)")->check(CLI::IsMember({"I", "II"}));
  lp->add_option("--certificate", lp_cert, "write the dual certificate JSON here (program I)");

  int asym_q = 2;
  int asym_r = 1;
  std::string asym_curve;
  int asym_grid = 100;
  std::optional<double> asym_dmax;
  std::string asym_out;
  auto* asym = app.add_subcommand("asym", "asymptotic rate curve as CSV");
  asym->add_option("--q", asym_q, "alphabet size")->required();
  asym->add_option("--r", asym_r, "block depth")->required();
  asym->add_option("--curve", asym_curve, "gv, hamming, plotkin, be, lp, lp2, psi or psirao")
      ->required()
      ->check(CLI::IsMember({"gv", "hamming", "plotkin", "be", "lp", "lp2", "psi", "psirao"}));
  asym->add_option("--grid", asym_grid, "number of grid points, delta from 0 to delta-max");
  asym->add_option("--delta-max", asym_dmax, "right end of the grid (default: critical distance; 1 for nets)");
  asym->add_option("--out", asym_out, "CSV output file (default stdout)");

  std::string ooa_file;
  bool ooa_json = false;
  auto* verify = app.add_subcommand("verify-ooa", "strength and index of an array file");
  verify->add_option("--file", ooa_file, "array file")->required();
  verify->add_flag("--json", ooa_json, "JSON output");

  std::string mw_gen;
  std::string mw_out;
  auto* mw = app.add_subcommand("macwilliams", "enumerators of a linear code and its dual");
  mw->add_option("--gen", mw_gen, "generator rows in array-file format")->required();
  mw->add_option("--out", mw_out, "JSON output file (default stdout)");

  int net_q = 2;
  int net_t = 0;
  int net_m = 0;
  int net_s = 1;
  auto* net = app.add_subcommand("net", "OOA parameters of a (t,m,s)-net");
  net->add_option("--q", net_q, "base")->required();
  net->add_option("--t", net_t, "quality parameter")->required();
  net->add_option("--m", net_m, "log_q of the number of points")->required();
  net->add_option("--s", net_s, "dimension")->required();

  std::string cert_file;
  auto* check = app.add_subcommand("check-cert", "re-verify a dual certificate JSON");
  check->add_option("--file", cert_file, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (sphere->parsed()) return run_sphere(sphere_o, sphere_d);
    if (bounds->parsed()) return run_bounds(bounds_o, bounds_d, bounds_json);
    if (lp->parsed()) return run_lp(lp_o, lp_d, lp_t, lp_program, lp_cert);
    if (asym->parsed()) return run_asym(asym_q, asym_r, asym_curve, asym_grid, asym_dmax, asym_out);
    if (verify->parsed()) return run_verify_ooa(ooa_file, ooa_json);
    if (mw->parsed()) return run_macwilliams(mw_gen, mw_out);
    if (net->parsed()) return run_net(net_q, net_t, net_m, net_s);
    if (check->parsed()) return run_check_cert(cert_file);
    std::cout << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nrt::io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nrt::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const nrt::SpectralNonConvergence& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
