#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "levywn/errors.hpp"
#include "levywn/extended.hpp"
#include "levywn/levy_triplet.hpp"
#include "levywn/processes.hpp"
#include "levywn/sampler.hpp"
#include "levywn/test_function.hpp"

namespace levywn {

// Insertion-ordered, so that serialized documents are byte-stable.
using Json = nlohmann::ordered_json;

// Raised for documents that do not match a schema; `path` locates the
// offending member ("nu.jumps.p").
class SchemaError : public InvalidArgument {
 public:
  SchemaError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Noise documents:
//   {"gamma": num, "sigma2": num, "nu": measure}
// with measure one of
//   {"kind": "zero"}
//   {"kind": "discrete", "atoms": [[location, mass], ...]}
//   {"kind": "stable", "alpha": num, "c": num | "cf_scale": num}
//   {"kind": "laplace", "tau": num, "sigma2": num}
//   {"kind": "compound_poisson", "lambda": num, "jumps": jumps}
//   {"kind": "sum", "terms": [measure, ...]}
// and jumps one of
//   {"kind": "two_point", "a": num, "p": num}
//   {"kind": "gaussian", "mean": num, "variance": num}
//   {"kind": "uniform", "lo": num, "hi": num}
//   {"kind": "discrete", "values": [num, ...], "probs": [num, ...]}
// where cf_scale s fixes c through ψ(ξ) = −(s|ξ|)^α. Omitted numeric members
// take the library defaults; unknown members are rejected.
LevyTriplet triplet_from_json(const Json& j);
LevyMeasure measure_from_json(const Json& j, const std::string& path = "nu");
JumpDistribution jumps_from_json(const Json& j, const std::string& path = "jumps");
// Throws InvalidArgument for measures without a document form (densities).
Json to_json(const LevyTriplet& t);
Json to_json(const LevyMeasure& nu);
Json to_json(const JumpDistribution& d);

// Function documents:
//   {"kind": "indicator", "box": {"lo": [..], "hi": [..]} | "ball": {"center": [..], "radius": num}, "value": num}
//   {"kind": "power_law", "alpha": num, "beta": num, "dimension": int}
//   {"kind": "ou", "theta": num}
//   {"kind": "mollified", "box": box, "n": num}
//   {"kind": "bump", "dimension": int}
//   {"kind": "grid", "box": box, "shape": [int, ..], "values": [..], "exact_support": bool}
// each with optional "amplitude", "dilation" and "shift" (f = a·g(b(t − t0))).
TestFunction test_function_from_json(const Json& j);
Json to_json(const TestFunction& f);

// {"finite": true, "value": v} or {"finite": false, "divergence": "..."}.
Json to_json(const Extended& e);
Json complex_triple(double xi, ComplexValue z);

// Parses inline JSON text, or the contents of the named file when the text
// does not start with '{' or '['. Throws SchemaError on malformed input.
Json parse_document(std::string_view text_or_path);

// Checks a result document against the schema of `subcommand`. Throws
// SchemaError on the first mismatch.
void validate_result(std::string_view subcommand, const Json& doc);
const std::vector<std::string>& result_subcommands();

// Shortest round-trip decimal form.
std::string format_double(double v);

// "# key=value" header lines, then "value" and one draw per line.
void write_samples_csv(std::ostream& os, const SampleBatch& batch, const std::vector<std::string>& header);
// "path,t,value" or "path,t1,t2,value" rows, one per grid node.
void write_paths_csv(std::ostream& os, const std::vector<ProcessPath>& paths, const std::vector<std::string>& header);

}  // namespace levywn
