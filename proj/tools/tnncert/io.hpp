#pragma once

#include "tnncert/certify.hpp"
#include "tnncert/colorings.hpp"
#include "tnncert/immanants.hpp"
#include "tnncert/tnngen.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tnncert::cli {

using Json = nlohmann::ordered_json;

/// Raised for bad flags or malformed inputs; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

/// Everything needed to rerun a command; embedded in every output.
struct RunConfig {
  std::vector<std::string> argv;
  std::string command;
  std::uint64_t seed = 7;
  Format format = Format::text;
  std::string output;  // empty: stdout
};

/// A command result in all three renderings. `data` must be a JSON object.
struct Report {
  Json data = Json::object();
  std::vector<std::string> text;
  std::vector<std::vector<std::string>> csv;  // rows as written, header included if any
  int exit_code = 0;
};

void emit(const Report& report, const RunConfig& run);

std::string format_name(Format f);

// Values.
Json to_json(const Rational& q);
Json to_json(const BigInt& z);
Json to_json(const Partition& p);
Json to_json(const Permutation& w);
Json to_json(const Diagram& d);
Json to_json(const TLElement& e);
Json to_json(const RationalMatrix& a);
Json to_json(const TNNFactorization& f);
Json to_json(const PrincipalColoring& c);
Json to_json(const Certificate& c);

// Inputs. All throw UsageError with a message naming the offending text.
Partition read_partition(const std::string& text);
Permutation read_permutation(const std::string& text);
std::vector<int> read_ints(const std::string& text);
Diagram read_diagram(const std::string& json_text);
Diagram diagram_from_json(const Json& j);
/// CSV by default; files ending in .json hold [[...]] or {"matrix": [[...]]}.
RationalMatrix read_matrix(const std::string& path);
TNNFactorization read_factorization(const std::string& path);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace tnncert::cli
