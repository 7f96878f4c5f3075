#include "io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace tnncert::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw UsageError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(what + ": invalid JSON (" + e.what() + ")");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "text";
}

void emit(const Report& report, const RunConfig& run) {
  Json meta = Json::object();
  meta["command"] = run.command;
  meta["argv"] = join(run.argv, " ");
  meta["seed"] = run.seed;
  meta["format"] = format_name(run.format);
  meta["output"] = run.output.empty() ? Json(nullptr) : Json(run.output);

  std::ostringstream out;
  switch (run.format) {
    case Format::json: {
      Json doc = report.data;
      doc["run"] = meta;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "# run: " << meta["argv"].get<std::string>() << " (seed " << run.seed << ")\n";
      for (const auto& row : report.csv) {
        std::vector<std::string> cells;
        for (const auto& cell : row) cells.push_back(csv_field(cell));
        out << join(cells, ",") << '\n';
      }
      break;
    case Format::text:
      out << "# " << meta["argv"].get<std::string>() << " (seed " << run.seed << ")\n";
      for (const auto& line : report.text) out << line << '\n';
      break;
  }

  if (run.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(run.output);
    if (!file) throw UsageError("cannot write " + run.output);
    file << out.str();
  }
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const BigInt& z) { return z.get_str(); }

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const Permutation& w) { return w.one_line(); }

Json to_json(const Diagram& d) {
  Json edges = Json::array();
  for (auto [a, b] : d.edges()) edges.push_back({a, b});
  return {{"n", d.strands()}, {"edges", edges}};
}

Json to_json(const TLElement& e) {
  Json terms = Json::array();
  for (const auto& [d, c] : e.coeffs) terms.push_back({{"diagram", to_json(d)}, {"coeff", to_json(c)}});
  return terms;
}

Json to_json(const RationalMatrix& a) {
  Json rows = Json::array();
  for (int r = 0; r < a.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.size(); ++c) row.push_back(to_json(a(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const TNNFactorization& f) {
  Json factors = Json::array();
  for (const auto& factor : f.factors) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, LowerBidiag>) {
            factors.push_back({{"type", "lower"}, {"index", x.index}, {"value", to_json(x.value)}});
          } else if constexpr (std::is_same_v<T, UpperBidiag>) {
            factors.push_back({{"type", "upper"}, {"index", x.index}, {"value", to_json(x.value)}});
          } else {
            Json values = Json::array();
            for (const auto& v : x.values) values.push_back(to_json(v));
            factors.push_back({{"type", "diag"}, {"values", values}});
          }
        },
        factor);
  }
  return {{"n", f.n}, {"seed", f.seed}, {"factors", factors}};
}

Json to_json(const PrincipalColoring& c) {
  Json colors = Json::object();
  for (int v = 1; v <= 2 * c.base.strands(); ++v) colors[std::to_string(v)] = c.at(v) == Color::white ? "W" : "B";
  return colors;
}

Json to_json(const Certificate& c) {
  Json coeffs = Json::array();
  for (const auto& term : c.coeffs) {
    Json entry = Json::object();
    if (const auto* d = std::get_if<Diagram>(&term.key)) {
      entry["diagram"] = to_json(*d);
    } else {
      entry["partition"] = to_json(std::get<Partition>(term.key));
    }
    entry["coeff"] = to_json(term.coeff);
    coeffs.push_back(entry);
  }
  Json doc = Json::object();
  doc["kind"] = c.kind == CertificateKind::tl_basis ? "tlBasis" : "monomialBasis";
  doc["n"] = c.n;
  doc["k"] = c.k;
  doc["coeffs"] = coeffs;
  doc["identity"] = {{"trials", c.identity.trials},
                     {"seed", c.identity.seed},
                     {"performed", c.identity.performed},
                     {"passed", c.identity.passed}};
  if (!c.identity.note.empty()) doc["identity"]["note"] = c.identity.note;
  doc["nonnegative"] = c.nonnegative();
  if (c.regime) {
    doc["regime"] = {{"asWrittenNonnegative", c.regime->as_written_nonnegative},
                     {"mirroredNonnegative", c.regime->mirrored_nonnegative},
                     {"closedFormMatchesEtoM", c.regime->closed_form_matches_etom}};
  }
  return doc;
}

Partition read_partition(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::exception& e) {
    throw UsageError("bad partition '" + text + "': " + e.what());
  }
}

std::vector<int> read_ints(const std::string& text) {
  std::vector<int> out;
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '[' || ch == ']' || ch == ',') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return out;
}

Permutation read_permutation(const std::string& text) {
  try {
    return Permutation(read_ints(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad permutation '" + text + "': " + e.what());
  }
}

Diagram diagram_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Diagram(n, edges);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("diagram JSON must look like {\"n\":2,\"edges\":[[1,2],[3,4]]}: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid diagram: ") + e.what());
  }
}

Diagram read_diagram(const std::string& json_text) { return diagram_from_json(parse_json_text(json_text, "--diagram")); }

RationalMatrix read_matrix(const std::string& path) {
  if (ends_with(path, ".json")) {
    Json j = parse_json_text(slurp(path), path);
    if (j.is_object() && j.contains("matrix")) j = j["matrix"];
    if (!j.is_array()) throw UsageError(path + ": expected an array of rows");
    std::vector<std::vector<Rational>> rows;
    try {
      for (const auto& row : j) {
        rows.emplace_back();
        for (const auto& x : row) rows.back().push_back(rational_from_json(x));
      }
      return RationalMatrix(rows);
    } catch (const std::invalid_argument& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return parse_matrix_csv(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

TNNFactorization read_factorization(const std::string& path) {
  Json j = parse_json_text(slurp(path), path);
  if (j.contains("factorization")) j = j["factorization"];
  try {
    TNNFactorization f;
    f.n = j.at("n").get<int>();
    f.seed = j.value("seed", std::uint64_t{0});
    for (const auto& x : j.at("factors")) {
      const auto type = x.at("type").get<std::string>();
      if (type == "lower") {
        f.factors.emplace_back(LowerBidiag{x.at("index").get<int>(), rational_from_json(x.at("value"))});
      } else if (type == "upper") {
        f.factors.emplace_back(UpperBidiag{x.at("index").get<int>(), rational_from_json(x.at("value"))});
      } else if (type == "diag") {
        Diag d;
        for (const auto& v : x.at("values")) d.values.push_back(rational_from_json(v));
        f.factors.emplace_back(std::move(d));
      } else {
        throw UsageError(path + ": unknown factor type '" + type + "'");
      }
    }
    return f;
  } catch (const Json::exception& e) {
    throw UsageError(path + ": malformed factorization (" + e.what() + ")");
  }
}

}  // namespace tnncert::cli
