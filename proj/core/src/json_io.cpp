#include "levywn/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "levywn/errors.hpp"
#include "overloaded.hpp"

namespace levywn {

using detail::Overloaded;

SchemaError::SchemaError(std::string path, const std::string& message)
    : InvalidArgument(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

namespace {

std::string member(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string element(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(path, "expected a finite number");
  return v;
}

std::vector<double> as_numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_number(j[i], element(path, i)));
  return out;
}

std::size_t as_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw SchemaError(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

// Object reader that rejects members it was not asked for.
class Object {
 public:
  Object(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw SchemaError(path_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }
  const Json& at(const std::string& key) {
    seen_.insert(key);
    if (!j_.contains(key)) throw SchemaError(member(path_, key), "missing member");
    return j_.at(key);
  }
  std::string sub(const std::string& key) const { return member(path_, key); }

  double number(const std::string& key) { return as_number(at(key), sub(key)); }
  double number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }
  std::vector<double> numbers(const std::string& key) { return as_numbers(at(key), sub(key)); }
  std::size_t count(const std::string& key) { return as_count(at(key), sub(key)); }
  std::size_t count(const std::string& key, std::size_t fallback) { return has(key) ? count(key) : fallback; }
  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const Json& v = at(key);
    if (!v.is_boolean()) throw SchemaError(sub(key), "expected a boolean");
    return v.get<bool>();
  }
  std::string string(const std::string& key) {
    const Json& v = at(key);
    if (!v.is_string()) throw SchemaError(sub(key), "expected a string");
    return v.get<std::string>();
  }

  void finish() const {
    for (const auto& [key, value] : j_.items())
      if (!seen_.count(key)) throw SchemaError(member(path_, key), "unknown member");
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

// Library validation failures become schema failures at `path`.
template <class F>
auto validated(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw SchemaError(path, e.what());
  }
}

Box box_from_json(const Json& j, const std::string& path) {
  Object o(j, path);
  Box b{o.numbers("lo"), o.numbers("hi")};
  o.finish();
  if (b.lo.size() != b.hi.size() || b.lo.empty()) throw SchemaError(path, "lo and hi need the same nonzero length");
  for (std::size_t i = 0; i < b.lo.size(); ++i)
    if (!(b.lo[i] <= b.hi[i])) throw SchemaError(path, "lo must not exceed hi");
  return b;
}

Json box_to_json(const Box& b) { return Json{{"lo", b.lo}, {"hi", b.hi}}; }

}  // namespace

JumpDistribution jumps_from_json(const Json& j, const std::string& path) {
  Object o(j, path);
  const std::string kind = o.string("kind");
  JumpDistribution d;
  if (kind == "two_point") {
    TwoPoint t;
    t.a = o.number("a", t.a);
    t.p = o.number("p", t.p);
    d = t;
  } else if (kind == "gaussian") {
    GaussianJumps g;
    g.mean = o.number("mean", g.mean);
    g.variance = o.number("variance", g.variance);
    d = g;
  } else if (kind == "uniform") {
    UniformJumps u;
    u.lo = o.number("lo", u.lo);
    u.hi = o.number("hi", u.hi);
    d = u;
  } else if (kind == "discrete") {
    d = DiscreteJumps{o.numbers("values"), o.numbers("probs")};
  } else {
    throw SchemaError(o.sub("kind"), "unknown jump distribution '" + kind + "'");
  }
  o.finish();
  validated(path, [&] { validate(d); return 0; });
  return d;
}

LevyMeasure measure_from_json(const Json& j, const std::string& path) {
  Object o(j, path);
  const std::string kind = o.string("kind");
  LevyMeasure nu;
  if (kind == "zero") {
    nu = ZeroMeasure{};
  } else if (kind == "discrete") {
    const Json& atoms = o.at("atoms");
    if (!atoms.is_array()) throw SchemaError(o.sub("atoms"), "expected an array of [location, mass] pairs");
    FiniteDiscrete fd;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const std::string p = element(o.sub("atoms"), i);
      const auto pair = as_numbers(atoms[i], p);
      if (pair.size() != 2) throw SchemaError(p, "expected [location, mass]");
      fd.atoms.push_back({pair[0], pair[1]});
    }
    nu = fd;
  } else if (kind == "stable") {
    StableTail s;
    s.alpha = o.number("alpha", s.alpha);
    if (o.has("c") && o.has("cf_scale")) throw SchemaError(path, "give c or cf_scale, not both");
    if (o.has("cf_scale")) {
      // ψ(ξ) = −(s|ξ|)^α.
      const double scale = o.number("cf_scale");
      if (!(scale > 0.0)) throw SchemaError(o.sub("cf_scale"), "must be positive");
      if (!(s.alpha > 0.0 && s.alpha < 2.0)) throw SchemaError(o.sub("alpha"), "must lie in (0, 2)");
      s.c = std::pow(scale, s.alpha) / (2.0 * stable_constant(s.alpha));
    } else {
      s.c = o.number("c", s.c);
    }
    nu = s;
  } else if (kind == "laplace") {
    GeneralizedLaplace g;
    g.tau = o.number("tau", g.tau);
    g.sigma2 = o.number("sigma2", g.sigma2);
    nu = g;
  } else if (kind == "compound_poisson") {
    CompoundPoisson cp;
    cp.lambda = o.number("lambda", cp.lambda);
    if (o.has("jumps")) cp.jumps = jumps_from_json(o.at("jumps"), o.sub("jumps"));
    nu = cp;
  } else if (kind == "sum") {
    const Json& terms = o.at("terms");
    if (!terms.is_array() || terms.empty()) throw SchemaError(o.sub("terms"), "expected a nonempty array of measures");
    MeasureSum s;
    for (std::size_t i = 0; i < terms.size(); ++i) s.terms.push_back(measure_from_json(terms[i], element(o.sub("terms"), i)));
    nu = s;
  } else {
    throw SchemaError(o.sub("kind"), "unknown measure '" + kind + "'");
  }
  o.finish();
  validated(path, [&] { validate(nu); return 0; });
  return nu;
}

LevyTriplet triplet_from_json(const Json& j) {
  Object o(j, "");
  LevyTriplet t;
  t.gamma = o.number("gamma", 0.0);
  t.sigma2 = o.number("sigma2", 0.0);
  if (o.has("nu")) t.nu = measure_from_json(o.at("nu"), "nu");
  o.finish();
  validated("", [&] { validate(t); return 0; });
  return t;
}

Json to_json(const JumpDistribution& d) {
  return std::visit(Overloaded{
                        [](const TwoPoint& t) { return Json{{"kind", "two_point"}, {"a", t.a}, {"p", t.p}}; },
                        [](const GaussianJumps& g) {
                          return Json{{"kind", "gaussian"}, {"mean", g.mean}, {"variance", g.variance}};
                        },
                        [](const UniformJumps& u) { return Json{{"kind", "uniform"}, {"lo", u.lo}, {"hi", u.hi}}; },
                        [](const DiscreteJumps& q) {
                          return Json{{"kind", "discrete"}, {"values", q.values}, {"probs", q.probs}};
                        },
                    },
                    d);
}

Json to_json(const LevyMeasure& nu) {
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) { return Json{{"kind", "zero"}}; },
          [](const FiniteDiscrete& fd) {
            Json atoms = Json::array();
            for (const auto& a : fd.atoms) atoms.push_back(Json::array({a.location, a.mass}));
            return Json{{"kind", "discrete"}, {"atoms", atoms}};
          },
          [](const StableTail& s) { return Json{{"kind", "stable"}, {"alpha", s.alpha}, {"c", s.c}}; },
          [](const GeneralizedLaplace& g) { return Json{{"kind", "laplace"}, {"tau", g.tau}, {"sigma2", g.sigma2}}; },
          [](const CompoundPoisson& cp) {
            return Json{{"kind", "compound_poisson"}, {"lambda", cp.lambda}, {"jumps", to_json(cp.jumps)}};
          },
          [](const GenericDensity&) -> Json { throw InvalidArgument("density measures have no document form"); },
          [](const MeasureSum& s) {
            Json terms = Json::array();
            for (const auto& t : s.terms) terms.push_back(to_json(t));
            return Json{{"kind", "sum"}, {"terms", terms}};
          },
      },
      nu.variant());
}

Json to_json(const LevyTriplet& t) { return Json{{"gamma", t.gamma}, {"sigma2", t.sigma2}, {"nu", to_json(t.nu)}}; }

TestFunction test_function_from_json(const Json& j) {
  Object o(j, "");
  const std::string kind = o.string("kind");
  Shape shape = Bump{1};
  if (kind == "indicator") {
    Indicator ind;
    if (o.has("box") == o.has("ball")) throw SchemaError("", "indicator needs exactly one of box or ball");
    if (o.has("box")) {
      ind.set = box_from_json(o.at("box"), "box");
    } else {
      Object b(o.at("ball"), "ball");
      Ball ball{b.numbers("center"), b.number("radius", 1.0)};
      b.finish();
      if (ball.center.empty()) throw SchemaError("ball.center", "expected at least one coordinate");
      ind.set = ball;
    }
    ind.value = o.number("value", 1.0);
    shape = ind;
  } else if (kind == "power_law") {
    PowerLawFamily p;
    p.alpha = o.number("alpha", p.alpha);
    p.beta = o.number("beta", p.beta);
    p.dimension = o.count("dimension", 1);
    shape = p;
  } else if (kind == "ou") {
    shape = OUKernel{o.number("theta", 1.0)};
  } else if (kind == "mollified") {
    shape = MollifiedIndicator{box_from_json(o.at("box"), "box"), o.number("n", 1.0)};
  } else if (kind == "bump") {
    shape = Bump{o.count("dimension", 1)};
  } else if (kind == "grid") {
    GridSampled g;
    g.box = box_from_json(o.at("box"), "box");
    const Json& s = o.at("shape");
    if (!s.is_array()) throw SchemaError("shape", "expected an array of cell counts");
    for (std::size_t i = 0; i < s.size(); ++i) g.shape.push_back(as_count(s[i], element("shape", i)));
    g.values = o.numbers("values");
    g.exact_support = o.boolean("exact_support", true);
    shape = g;
  } else {
    throw SchemaError("kind", "unknown function '" + kind + "'");
  }
  const double amplitude = o.number("amplitude", 1.0);
  const double dilation = o.number("dilation", 1.0);
  const bool shifted = o.has("shift");
  const std::vector<double> shift = shifted ? o.numbers("shift") : std::vector<double>{};
  o.finish();
  return validated("", [&] {
    TestFunction f = TestFunction(shape).dilated(dilation);
    if (shifted) f = f.shifted(shift);
    return f.scaled(amplitude);
  });
}

Json to_json(const TestFunction& f) {
  Json j = std::visit(
      Overloaded{
          [](const Indicator& ind) {
            Json out{{"kind", "indicator"}};
            std::visit(Overloaded{[&](const Box& b) { out["box"] = box_to_json(b); },
                                  [&](const Ball& b) { out["ball"] = Json{{"center", b.center}, {"radius", b.radius}}; }},
                       ind.set);
            out["value"] = ind.value;
            return out;
          },
          [](const PowerLawFamily& p) {
            return Json{{"kind", "power_law"}, {"alpha", p.alpha}, {"beta", p.beta}, {"dimension", p.dimension}};
          },
          [](const OUKernel& k) { return Json{{"kind", "ou"}, {"theta", k.theta}}; },
          [](const MollifiedIndicator& m) { return Json{{"kind", "mollified"}, {"box", box_to_json(m.set)}, {"n", m.n}}; },
          [](const Bump& b) { return Json{{"kind", "bump"}, {"dimension", b.dimension}}; },
          [](const GridSampled& g) {
            return Json{{"kind", "grid"},
                        {"box", box_to_json(g.box)},
                        {"shape", g.shape},
                        {"values", g.values},
                        {"exact_support", g.exact_support}};
          },
      },
      f.shape());
  j["amplitude"] = f.amplitude();
  j["dilation"] = f.dilation();
  j["shift"] = f.shift();
  return j;
}

Json to_json(const Extended& e) {
  if (e.is_finite()) return Json{{"finite", true}, {"value", e.value}};
  return Json{{"finite", false}, {"divergence", e.divergence}};
}

Json complex_triple(double xi, ComplexValue z) { return Json::array({xi, z.real(), z.imag()}); }

Json parse_document(std::string_view text_or_path) {
  std::string text(text_or_path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw SchemaError("", "empty document");
  if (text[first] != '{' && text[first] != '[') {
    std::ifstream in(text);
    if (!in) throw SchemaError("", "cannot open '" + text + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

namespace {

enum class T { Number, Integer, Boolean, String, Object, Array, Extended, Numbers, CFArray, NumberOrNull, Any };

struct Field {
  const char* name;
  T type;
};

void check_type(const Json& v, T type, const std::string& path) {
  auto fail = [&](const char* what) { throw SchemaError(path, std::string("expected ") + what); };
  switch (type) {
    case T::Number:
      if (!v.is_number()) fail("a number");
      break;
    case T::Integer:
      if (!v.is_number_integer()) fail("an integer");
      break;
    case T::Boolean:
      if (!v.is_boolean()) fail("a boolean");
      break;
    case T::String:
      if (!v.is_string()) fail("a string");
      break;
    case T::Object:
      if (!v.is_object()) fail("an object");
      break;
    case T::Array:
      if (!v.is_array()) fail("an array");
      break;
    case T::NumberOrNull:
      if (!v.is_number() && !v.is_null()) fail("a number or null");
      break;
    case T::Numbers:
      if (!v.is_array()) fail("an array of numbers");
      for (std::size_t i = 0; i < v.size(); ++i) check_type(v[i], T::Number, element(path, i));
      break;
    case T::Extended:
      if (!v.is_object() || !v.contains("finite") || !v["finite"].is_boolean()) fail("an extended value");
      if (v["finite"].get<bool>() ? !(v.contains("value") && v["value"].is_number())
                                  : !(v.contains("divergence") && v["divergence"].is_string()))
        fail("an extended value");
      break;
    case T::CFArray:
      if (!v.is_array()) fail("an array of [xi, re, im]");
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_array() || v[i].size() != 3) throw SchemaError(element(path, i), "expected [xi, re, im]");
        check_type(v[i], T::Numbers, element(path, i));
      }
      break;
    case T::Any:
      break;
  }
}

void check_fields(const Json& doc, const std::vector<Field>& fields, const std::string& path) {
  if (!doc.is_object()) throw SchemaError(path, "expected an object");
  for (const Field& f : fields) {
    if (!doc.contains(f.name)) throw SchemaError(member(path, f.name), "missing member");
    check_type(doc[f.name], f.type, member(path, f.name));
  }
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const Field& f : fields) known = known || key == f.name;
    if (!known) throw SchemaError(member(path, key), "unknown member");
  }
}

void check_array_of(const Json& v, const std::vector<Field>& fields, const std::string& path) {
  for (std::size_t i = 0; i < v.size(); ++i) check_fields(v[i], fields, element(path, i));
}

const std::map<std::string, std::vector<Field>, std::less<>>& result_schemas() {
  static const std::map<std::string, std::vector<Field>, std::less<>> schemas{
      {"exponent", {{"subcommand", T::String}, {"noise", T::Object}, {"p", T::Number}, {"points", T::Array}}},
      {"moments",
       {{"subcommand", T::String},
        {"noise", T::Object},
        {"p", T::Number},
        {"q", T::Number},
        {"moment", T::Extended},
        {"finite_mass", T::Boolean},
        {"pruitt_index", T::Number},
        {"blumenthal_getoor_index", T::Number}}},
      {"domain",
       {{"subcommand", T::String},
        {"noise", T::Object},
        {"function", T::Object},
        {"p", T::Number},
        {"descriptor", T::String},
        {"universal_bounds", T::Object},
        {"verdict", T::Object}}},
      {"norm",
       {{"subcommand", T::String},
        {"noise", T::Any},
        {"function", T::Object},
        {"rho", T::Object},
        {"modular", T::Extended},
        {"f_norm", T::NumberOrNull},
        {"modular_at_norm", T::NumberOrNull},
        {"iterations", T::Integer}}},
      {"sample",
       {{"subcommand", T::String},
        {"noise", T::Object},
        {"function", T::Object},
        {"n", T::Integer},
        {"seed", T::Integer},
        {"stream_id", T::Integer},
        {"eps_cutoff", T::Number},
        {"small_jump_variance", T::Number},
        {"values", T::Numbers}}},
      {"verify-cf",
       {{"subcommand", T::String},
        {"noise", T::Object},
        {"function", T::Object},
        {"n", T::Integer},
        {"seed", T::Integer},
        {"bound", T::Number},
        {"sup_gap", T::Number},
        {"pass", T::Boolean},
        {"empirical", T::CFArray},
        {"analytic", T::CFArray}}},
      {"sheet",
       {{"subcommand", T::String},
        {"noise", T::Object},
        {"grid", T::Array},
        {"seed", T::Integer},
        {"paths", T::Array}}},
      {"ou",
       {{"subcommand", T::String},
        {"noise", T::Object},
        {"theta", T::Number},
        {"grid", T::Array},
        {"seed", T::Integer},
        {"paths", T::Array}}},
      {"check-left-inverse",
       {{"subcommand", T::String},
        {"theta", T::Number},
        {"kernel", T::Object},
        {"h", T::Numbers},
        {"residuals", T::Numbers},
        {"ratios", T::Numbers},
        {"converges", T::Boolean}}},
  };
  return schemas;
}

}  // namespace

const std::vector<std::string>& result_subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fields] : result_schemas()) out.push_back(name);
    return out;
  }();
  return names;
}

void validate_result(std::string_view subcommand, const Json& doc) {
  const auto& schemas = result_schemas();
  const auto it = schemas.find(subcommand);
  if (it == schemas.end()) throw SchemaError("", "no result schema for '" + std::string(subcommand) + "'");
  check_fields(doc, it->second, "");
  if (doc["subcommand"] != subcommand) throw SchemaError("subcommand", "does not match the schema");
  // Nested documents must parse back into library objects.
  if (doc.contains("noise") && !doc["noise"].is_null()) triplet_from_json(doc["noise"]);
  if (doc.contains("function")) test_function_from_json(doc["function"]);
  if (doc.contains("kernel")) test_function_from_json(doc["kernel"]);

  if (subcommand == "exponent") {
    check_array_of(doc["points"], {{"xi", T::Number}, {"psi", T::Numbers}, {"psi_rr", T::Extended}, {"sandwich", T::Any}},
                   "points");
    for (std::size_t i = 0; i < doc["points"].size(); ++i) {
      const Json& s = doc["points"][i]["sandwich"];
      if (!s.is_null()) check_fields(s, {{"lower", T::Number}, {"upper", T::Number}}, element("points", i) + ".sandwich");
    }
  } else if (subcommand == "domain") {
    check_fields(doc["verdict"],
                 {{"status", T::String}, {"route", T::String}, {"modular", T::NumberOrNull}, {"reason", T::String}},
                 "verdict");
    const std::string status = doc["verdict"]["status"];
    if (status != "Member" && status != "NotMember" && status != "Inconclusive")
      throw SchemaError("verdict.status", "unknown status '" + status + "'");
    check_fields(doc["universal_bounds"], {{"inner", T::String}, {"outer", T::String}}, "universal_bounds");
  } else if (subcommand == "norm") {
    check_fields(doc["rho"], {{"kind", T::String}, {"label", T::String}, {"p0", T::Number}, {"pinf", T::Number}}, "rho");
  } else if (subcommand == "sample") {
    if (doc["values"].size() != doc["n"].get<std::size_t>()) throw SchemaError("values", "length differs from n");
  } else if (subcommand == "verify-cf") {
    if (doc["empirical"].size() != doc["analytic"].size()) throw SchemaError("analytic", "length differs from empirical");
  } else if (subcommand == "sheet" || subcommand == "ou") {
    std::size_t nodes = 1;
    for (std::size_t i = 0; i < doc["grid"].size(); ++i) {
      check_type(doc["grid"][i], T::Numbers, element("grid", i));
      nodes *= doc["grid"][i].size();
    }
    for (std::size_t i = 0; i < doc["paths"].size(); ++i) {
      check_type(doc["paths"][i], T::Numbers, element("paths", i));
      if (doc["paths"][i].size() != nodes) throw SchemaError(element("paths", i), "length differs from the grid");
    }
  } else if (subcommand == "check-left-inverse") {
    if (doc["residuals"].size() != doc["h"].size()) throw SchemaError("residuals", "length differs from h");
    if (doc["ratios"].size() + 1 != doc["h"].size() && !doc["h"].empty())
      throw SchemaError("ratios", "expected one ratio per consecutive pair of h");
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_samples_csv(std::ostream& os, const SampleBatch& batch, const std::vector<std::string>& header) {
  os << "# seed=" << batch.seed << "\n# stream_id=" << batch.stream_id << "\n# n=" << batch.n
     << "\n# eps_cutoff=" << format_double(batch.eps_cutoff) << "\n";
  for (const auto& line : header) os << "# " << line << "\n";
  os << "value\n";
  for (double v : batch.values) os << format_double(v) << "\n";
}

void write_paths_csv(std::ostream& os, const std::vector<ProcessPath>& paths, const std::vector<std::string>& header) {
  for (const auto& line : header) os << "# " << line << "\n";
  if (paths.empty()) return;
  const auto& grid = paths.front().grid;
  const std::size_t d = grid.size();
  os << "path";
  if (d == 1) {
    os << ",t";
  } else {
    for (std::size_t a = 0; a < d; ++a) os << ",t" << a + 1;
  }
  os << ",value\n";
  std::vector<std::size_t> idx(d);
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& p = paths[k];
    for (std::size_t c = 0; c < p.values.size(); ++c) {
      std::size_t rest = c;
      for (std::size_t a = d; a-- > 0;) {
        idx[a] = rest % grid[a].size();
        rest /= grid[a].size();
      }
      os << k;
      for (std::size_t a = 0; a < d; ++a) os << ',' << format_double(grid[a][idx[a]]);
      os << ',' << format_double(p.values[c]) << '\n';
    }
  }
}

}  // namespace levywn
