#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "levywn/domain.hpp"
#include "levywn/errors.hpp"
#include "levywn/json_io.hpp"
#include "levywn/orlicz.hpp"
#include "levywn/processes.hpp"
#include "levywn/rr_exponents.hpp"
#include "levywn/sampler.hpp"

namespace levywn::cli {
namespace {

struct Options {
  std::string noise;
  std::string function;
  double p = 0.0;
  double q = 2.0;
  std::string xi_grid = "-3:3:61";
  std::optional<std::size_t> n;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> eps_cutoff;
  std::optional<double> tol;
  std::string out;
  std::string format;
  unsigned threads = 0;
  std::string rho;
  std::string grid;
  std::optional<double> theta;
  std::string h = "0.02,0.01,0.005";
};

// Formats each subcommand can write; the first is the default.
const std::vector<std::string>& formats_of(const std::string& sub) {
  static const std::vector<std::string> json{"json"};
  static const std::vector<std::string> json_csv{"json", "csv"};
  static const std::vector<std::string> csv_json{"csv", "json"};
  if (sub == "sample" || sub == "sheet" || sub == "ou") return csv_json;
  if (sub == "exponent" || sub == "verify-cf") return json_csv;
  return json;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

double parse_real(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) throw SchemaError(flag, "'" + s + "' is not a finite number");
  return v;
}

// "lo:hi:count".
std::vector<double> parse_range(const std::string& s, const std::string& flag) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw SchemaError(flag, "expected lo:hi:count, got '" + s + "'");
  const double lo = parse_real(parts[0], flag);
  const double hi = parse_real(parts[1], flag);
  const double count = parse_real(parts[2], flag);
  if (count < 1 || count != std::floor(count) || count > 1e7) throw SchemaError(flag, "count must be a positive integer");
  if (count > 1 && !(lo < hi)) throw SchemaError(flag, "lo must be below hi");
  if (count == 1) return {lo};
  return linear_grid(lo, hi, static_cast<std::size_t>(count));
}

std::vector<double> parse_list(const std::string& s, const std::string& flag) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_real(part, flag));
  if (out.empty()) throw SchemaError(flag, "expected a comma-separated list");
  return out;
}

PhiFunction parse_rho(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw SchemaError("--rho", "expected p0:pinf or log:pinf, got '" + s + "'");
  const double pinf = parse_real(parts[1], "--rho");
  try {
    if (parts[0] == "log") return PhiFunction::rho_log(pinf);
    return PhiFunction::rho(parse_real(parts[0], "--rho"), pinf);
  } catch (const SchemaError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw SchemaError("--rho", e.what());
  }
}

std::string rho_kind(PhiFunction::Kind k) {
  switch (k) {
    case PhiFunction::Kind::RhoP0Pinf: return "rho";
    case PhiFunction::Kind::RhoLogPinf: return "rho_log";
    case PhiFunction::Kind::RajputRosinski: return "rajput_rosinski";
    case PhiFunction::Kind::Custom: return "custom";
  }
  return "custom";
}

class Runner {
 public:
  Runner(std::string sub, const Options& o) : sub_(std::move(sub)), o_(o) {
    if (o_.tol) {
      if (!(*o_.tol > 0.0 && *o_.tol < 1.0)) throw SchemaError("--tol", "must lie in (0, 1)");
      quad_.rel_tol = *o_.tol;
    }
    sampler_.quadrature = quad_;
    sampler_.threads = o_.threads;
    if (o_.eps_cutoff) {
      if (!(*o_.eps_cutoff >= 0.0)) throw SchemaError("--eps-cutoff", "must be nonnegative");
      sampler_.eps_cutoff = *o_.eps_cutoff;
    }
    const auto& allowed = formats_of(sub_);
    format_ = o_.format.empty() ? allowed.front() : o_.format;
    if (std::find(allowed.begin(), allowed.end(), format_) == allowed.end())
      throw SchemaError("--format", "'" + format_ + "' is not available for " + sub_);
  }

  // Writes the result and returns the exit code.
  int operator()(std::ostream& out) {
    std::ostringstream body;
    int code = kOk;
    if (sub_ == "exponent") code = exponent(body);
    else if (sub_ == "moments") code = moments(body);
    else if (sub_ == "domain") code = domain(body);
    else if (sub_ == "norm") code = norm(body);
    else if (sub_ == "sample") code = sample(body);
    else if (sub_ == "verify-cf") code = verify_cf(body);
    else if (sub_ == "sheet") code = sheet(body);
    else if (sub_ == "ou") code = ou(body);
    else if (sub_ == "check-left-inverse") code = check_left_inverse(body);
    if (o_.out.empty()) {
      out << body.str();
    } else {
      std::ofstream file(o_.out, std::ios::binary);
      if (!file) throw SchemaError("--out", "cannot write '" + o_.out + "'");
      file << body.str();
    }
    return code;
  }

 private:
  LevyTriplet noise() const {
    if (o_.noise.empty()) throw SchemaError("--noise", "required by " + sub_);
    return triplet_from_json(parse_document(o_.noise));
  }
  TestFunction function() const {
    if (o_.function.empty()) throw SchemaError("--function", "required by " + sub_);
    return test_function_from_json(parse_document(o_.function));
  }
  std::size_t n(std::size_t fallback) const {
    const std::size_t v = o_.n.value_or(fallback);
    if (v == 0) throw SchemaError("--n", "must be positive");
    return v;
  }
  double theta() const {
    if (!o_.theta) throw SchemaError("--theta", "required by " + sub_);
    if (!(*o_.theta > 0.0)) throw SchemaError("--theta", "must be positive");
    return *o_.theta;
  }
  std::vector<std::vector<double>> grid() const {
    if (o_.grid.empty()) throw SchemaError("--grid", "required by " + sub_);
    std::vector<std::vector<double>> axes;
    for (const auto& axis : split(o_.grid, ',')) axes.push_back(parse_range(axis, "--grid"));
    if (axes.empty()) throw SchemaError("--grid", "expected at least one axis");
    return axes;
  }

  std::string seed_line() const { return "seed=" + std::to_string(o_.seed); }

  void emit_json(std::ostream& body, const Json& doc) const {
    const std::string text = doc.dump(2);
    validate_result(sub_, Json::parse(text));
    body << text << '\n';
  }

  int exponent(std::ostream& body) {
    const LevyTriplet t = noise();
    const auto xi = parse_range(o_.xi_grid, "--xi-grid");
    const RREvaluator ev(t, o_.p, quad_);
    const bool sandwich = is_symmetric(t) && t.sigma2 == 0.0 && generalized_moment(t.nu, o_.p, 2.0, quad_).is_finite();
    Json points = Json::array();
    for (double x : xi) {
      const ComplexValue psi = levy_exponent(t, x, quad_);
      const double rr = ev(x);
      Json pt{{"xi", x},
              {"psi", Json::array({psi.real(), psi.imag()})},
              {"psi_rr", std::isfinite(rr) ? to_json(Extended::finite(rr))
                                           : to_json(Extended::infinite("large-jump p-moment diverges"))},
              {"sandwich", nullptr}};
      if (sandwich) {
        const SandwichBounds b = sandwich_bounds(ev, x);
        pt["sandwich"] = Json{{"lower", b.lower}, {"upper", b.upper}};
      }
      points.push_back(pt);
    }
    if (format_ == "csv") {
      body << "xi,psi_re,psi_im,psi_rr\n";
      for (const auto& pt : points) {
        const Json& rr = pt["psi_rr"];
        body << format_double(pt["xi"]) << ',' << format_double(pt["psi"][0]) << ',' << format_double(pt["psi"][1])
             << ',' << (rr["finite"].get<bool>() ? format_double(rr["value"]) : std::string("inf")) << '\n';
      }
      return kOk;
    }
    emit_json(body, Json{{"subcommand", sub_}, {"noise", to_json(t)}, {"p", o_.p}, {"points", points}});
    return kOk;
  }

  int moments(std::ostream& body) {
    const LevyTriplet t = noise();
    if (!(o_.p >= 0.0) || !(o_.q >= 0.0)) throw SchemaError("--p", "moment exponents must be nonnegative");
    emit_json(body, Json{{"subcommand", sub_},
                         {"noise", to_json(t)},
                         {"p", o_.p},
                         {"q", o_.q},
                         {"moment", to_json(generalized_moment(t.nu, o_.p, o_.q, quad_))},
                         {"finite_mass", has_finite_mass(t.nu)},
                         {"pruitt_index", pruitt_index(t.nu)},
                         {"blumenthal_getoor_index", blumenthal_getoor_index(t.nu)}});
    return kOk;
  }

  int domain(std::ostream& body) {
    const LevyTriplet t = noise();
    const TestFunction f = function();
    if (!(o_.p >= 0.0 && o_.p <= 2.0)) throw SchemaError("--p", "must lie in [0, 2]");
    const MembershipVerdict v = is_member(t, o_.p, f, quad_);
    const auto bounds = universal_bounds(o_.p);
    emit_json(body, Json{{"subcommand", sub_},
                         {"noise", to_json(t)},
                         {"function", to_json(f)},
                         {"p", o_.p},
                         {"descriptor", classify_domain(t, o_.p).name()},
                         {"universal_bounds", Json{{"inner", bounds.first.name()}, {"outer", bounds.second.name()}}},
                         {"verdict", Json{{"status", to_string(v.status)},
                                          {"route", v.route},
                                          {"modular", v.modular_value ? Json(*v.modular_value) : Json(nullptr)},
                                          {"reason", v.reason}}}});
    return kOk;
  }

  int norm(std::ostream& body) {
    const TestFunction f = function();
    std::optional<LevyTriplet> t;
    if (!o_.noise.empty()) t = noise();
    if (!t && o_.rho.empty()) throw SchemaError("--rho", "give --rho or --noise");
    const PhiFunction rho = o_.rho.empty() ? as_phi_function(RREvaluator(*t, o_.p, quad_)) : parse_rho(o_.rho);
    const Extended m = modular(rho, f, quad_);
    Json value = nullptr;
    Json at_value = nullptr;
    unsigned iterations = 0;
    if (m.is_finite()) {
      FNormConfig cfg;
      cfg.quadrature = quad_;
      const FNormResult r = f_norm(rho, f, cfg);
      value = r.value;
      at_value = r.modular_at_value;
      iterations = r.iterations;
    }
    emit_json(body, Json{{"subcommand", sub_},
                         {"noise", t ? to_json(*t) : Json(nullptr)},
                         {"function", to_json(f)},
                         {"rho", Json{{"kind", rho_kind(rho.kind())},
                                      {"label", rho.label()},
                                      {"p0", rho.p0()},
                                      {"pinf", rho.pinf()}}},
                         {"modular", to_json(m)},
                         {"f_norm", value},
                         {"modular_at_norm", at_value},
                         {"iterations", iterations}});
    return kOk;
  }

  int sample(std::ostream& body) {
    const LevyTriplet t = noise();
    const TestFunction f = function();
    const SampleBatch b = sample_pairing(t, f, n(10000), RngStream(o_.seed, 0), sampler_);
    if (format_ == "csv") {
      write_samples_csv(body, b,
                        {"small_jump_variance=" + format_double(b.small_jump_variance),
                         "noise=" + to_json(t).dump(), "function=" + to_json(f).dump()});
      return kOk;
    }
    emit_json(body, Json{{"subcommand", sub_},
                         {"noise", to_json(t)},
                         {"function", to_json(f)},
                         {"n", b.n},
                         {"seed", b.seed},
                         {"stream_id", b.stream_id},
                         {"eps_cutoff", b.eps_cutoff},
                         {"small_jump_variance", b.small_jump_variance},
                         {"values", b.values}});
    return kOk;
  }

  int verify_cf(std::ostream& body) {
    const LevyTriplet t = noise();
    const TestFunction f = function();
    const auto xi = parse_range(o_.xi_grid, "--xi-grid");
    const std::size_t count = n(100000);
    const SampleBatch b = sample_pairing(t, f, count, RngStream(o_.seed, 0), sampler_);
    const EmpiricalCF emp = empirical_cf(b, xi);
    std::vector<ComplexValue> exact;
    for (double x : xi) exact.push_back(analytic_cf(t, f, x, quad_));
    const double gap = sup_gap(emp, exact);
    const double bound = 4.0 / std::sqrt(static_cast<double>(count));
    const bool pass = gap <= bound;
    if (format_ == "csv") {
      body << "# " << seed_line() << "\n# n=" << count << "\n# bound=" << format_double(bound)
           << "\n# sup_gap=" << format_double(gap) << "\n# pass=" << (pass ? "true" : "false") << '\n';
      body << "xi,empirical_re,empirical_im,analytic_re,analytic_im\n";
      for (std::size_t k = 0; k < xi.size(); ++k)
        body << format_double(xi[k]) << ',' << format_double(emp.values[k].real()) << ','
             << format_double(emp.values[k].imag()) << ',' << format_double(exact[k].real()) << ','
             << format_double(exact[k].imag()) << '\n';
    } else {
      Json e = Json::array();
      Json a = Json::array();
      for (std::size_t k = 0; k < xi.size(); ++k) {
        e.push_back(complex_triple(xi[k], emp.values[k]));
        a.push_back(complex_triple(xi[k], exact[k]));
      }
      emit_json(body, Json{{"subcommand", sub_},
                           {"noise", to_json(t)},
                           {"function", to_json(f)},
                           {"n", count},
                           {"seed", o_.seed},
                           {"bound", bound},
                           {"sup_gap", gap},
                           {"pass", pass},
                           {"empirical", e},
                           {"analytic", a}});
    }
    return pass ? kOk : kVerificationFailed;
  }

  int write_paths(std::ostream& body, const LevyTriplet& t, const std::vector<ProcessPath>& paths,
                  std::optional<double> theta) {
    if (format_ == "csv") {
      std::vector<std::string> header{seed_line(), "noise=" + to_json(t).dump()};
      if (theta) header.push_back("theta=" + format_double(*theta));
      write_paths_csv(body, paths, header);
      return kOk;
    }
    Json doc{{"subcommand", sub_}, {"noise", to_json(t)}};
    if (theta) doc["theta"] = *theta;
    doc["grid"] = paths.front().grid;
    doc["seed"] = o_.seed;
    Json values = Json::array();
    for (const auto& p : paths) values.push_back(p.values);
    doc["paths"] = values;
    emit_json(body, doc);
    return kOk;
  }

  int sheet(std::ostream& body) {
    const LevyTriplet t = noise();
    const auto paths = sample_levy_sheets(t, grid(), n(1), RngStream(o_.seed, 0), sampler_);
    return write_paths(body, t, paths, std::nullopt);
  }

  int ou(std::ostream& body) {
    const LevyTriplet t = noise();
    const double th = theta();
    const auto axes = grid();
    if (axes.size() != 1) throw SchemaError("--grid", "the OU grid has one axis");
    const auto paths = sample_ou_paths(t, th, axes.front(), n(1), RngStream(o_.seed, 0), sampler_);
    return write_paths(body, t, paths, th);
  }

  int check_left_inverse(std::ostream& body) {
    const double th = o_.theta.value_or(1.0);
    if (!(th > 0.0)) throw SchemaError("--theta", "must be positive");
    KernelOperator op = ou_operator(th);
    if (!o_.function.empty()) op.kernel = function();
    const auto h = parse_list(o_.h, "--steps");
    for (double v : h)
      if (!(v > 0.0 && v < 0.5)) throw SchemaError("--steps", "steps must lie in (0, 0.5)");
    const TestFunction bump = Bump{1};
    const std::vector<TestFunction> phis{bump, bump.dilated(0.5).shifted({0.7})};
    std::vector<double> residuals;
    for (double v : h) residuals.push_back(verify_left_inverse(op, phis, v));
    // Second order: halving h divides the residual by 4 ± 0.5.
    std::vector<double> ratios;
    bool converges = h.size() >= 2;
    for (std::size_t k = 0; k + 1 < h.size(); ++k) {
      ratios.push_back(residuals[k] / residuals[k + 1]);
      const double expected = (h[k] / h[k + 1]) * (h[k] / h[k + 1]);
      converges = converges && ratios.back() >= 0.875 * expected && ratios.back() <= 1.125 * expected;
    }
    emit_json(body, Json{{"subcommand", sub_},
                         {"theta", th},
                         {"kernel", to_json(op.kernel)},
                         {"h", h},
                         {"residuals", residuals},
                         {"ratios", ratios},
                         {"converges", converges}});
    return converges ? kOk : kVerificationFailed;
  }

  std::string sub_;
  const Options& o_;
  QuadratureConfig quad_;
  SamplerConfig sampler_;
  std::string format_;
};

void report(std::ostream& err, int code, const std::string& type, const std::string& message,
            const std::string& path = {}) {
  Json j{{"error", code == kInvalidConfig ? "invalid_config" : "failure"}, {"type", type}, {"message", message}};
  if (!path.empty()) j["path"] = path;
  j["exit_code"] = code;
  err << j.dump() << '\n';
}

const std::vector<std::pair<std::string, std::string>>& subcommands() {
  static const std::vector<std::pair<std::string, std::string>> subs{
      {"exponent", "Lévy exponent, Rajput-Rosinski exponent and sandwich bounds on a grid"},
      {"moments", "generalized moment m_{p,q}(nu) and growth indices"},
      {"domain", "domain descriptor and membership verdict for a function"},
      {"norm", "modular and F-norm of a function"},
      {"sample", "Monte Carlo draws of the pairing <noise, f>"},
      {"verify-cf", "empirical against analytic characteristic function"},
      {"sheet", "Lévy sheet paths on a rectangular grid"},
      {"ou", "stationary Ornstein-Uhlenbeck paths"},
      {"check-left-inverse", "grid convergence of the OU left inverse"},
  };
  return subs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lévy white noise toolkit", "levywn"};
  app.require_subcommand(1, 1);
  std::optional<std::string> format;
  for (const auto& [name, help] : subcommands()) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--noise", o.noise, "noise JSON (inline or file path)");
    s->add_option("--function", o.function, "function JSON (inline or file path)");
    s->add_option("--p", o.p, "moment / exponent order");
    s->add_option("--q", o.q, "small-jump moment order (moments)");
    s->add_option("--xi-grid", o.xi_grid, "lo:hi:count")->capture_default_str();
    s->add_option("--n", o.n, "number of draws or paths");
    s->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    s->add_option("--eps-cutoff", o.eps_cutoff, "jump cutoff");
    s->add_option("--tol", o.tol, "relative quadrature tolerance");
    s->add_option("--out", o.out, "output file (default: standard output)");
    s->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--threads", o.threads, "worker cap (0: hardware)");
    s->add_option("--rho", o.rho, "p0:pinf or log:pinf (norm)");
    s->add_option("--grid", o.grid, "lo:hi:count per axis, comma separated (sheet, ou)");
    s->add_option("--theta", o.theta, "OU rate (ou, check-left-inverse)");
    s->add_option("--steps", o.h, "grid steps, comma separated (check-left-inverse)")->capture_default_str();
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report(err, kInvalidConfig, "ParseError", e.what());
    return kInvalidConfig;
  }
  std::string sub;
  for (const auto* s : app.get_subcommands()) sub = s->get_name();
  try {
    Runner runner(sub, o);
    return runner(out);
  } catch (const SchemaError& e) {
    report(err, kInvalidConfig, "SchemaError", e.what(), e.path());
  } catch (const PreconditionViolated& e) {
    report(err, kInvalidConfig, "PreconditionViolated", e.what());
  } catch (const InvalidArgument& e) {
    report(err, kInvalidConfig, "InvalidArgument", e.what());
  } catch (const UnsupportedMeasure& e) {
    report(err, kInvalidConfig, "UnsupportedMeasure", e.what());
  } catch (const UnsupportedCombination& e) {
    report(err, kInvalidConfig, "UnsupportedCombination", e.what());
  } catch (const Inconclusive& e) {
    report(err, kVerificationFailed, "Inconclusive", e.what());
    return kVerificationFailed;
  } catch (const QuadratureDivergence& e) {
    report(err, kVerificationFailed, "QuadratureDivergence", e.what());
    return kVerificationFailed;
  } catch (const TruncationError& e) {
    report(err, kVerificationFailed, "TruncationError", e.what());
    return kVerificationFailed;
  } catch (const std::exception& e) {
    report(err, kVerificationFailed, "Error", e.what());
    return kVerificationFailed;
  }
  return kInvalidConfig;
}

}  // namespace levywn::cli
