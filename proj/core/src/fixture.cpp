#include "mmi/fixture.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mmi/error.hpp"

#ifndef MMI_DEFAULT_FIXTURE_DIR
#define MMI_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace mmi {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(Errc::SchemaError, path + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, "missing field \"" + key + "\"");
  return *it;
}

Integer as_integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Integer(v.dump());
  if (v.is_string()) {
    const Rational q = parse_rational(v.get<std::string>());
    if (!is_integral(q)) schema(path, "expected an integer");
    return q.get_num();
  }
  schema(path, "expected an integer");
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(Errc::RationalFormatError, path + ": " + e.what());
    }
  }
  schema(path, "expected an integer or a \"p/q\" string");
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) schema(path, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) schema(path, "expected an array");
  return v;
}

template <class F>
auto list_of(const json& v, const std::string& path, F&& item) {
  using T = decltype(item(v, path));
  std::vector<T> out;
  const auto& arr = as_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(item(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

void check_keys(const json& obj, std::initializer_list<std::string_view> keys, const std::string& path) {
  for (const auto& [k, v] : obj.items()) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) schema(path, "unknown field \"" + k + "\"");
  }
}

Expected parse_expected(const json& e, const std::string& path) {
  if (!e.is_object()) schema(path, "expected an object");
  check_keys(e, {"canonical", "fundamental_cycle", "lct", "nest", "lc_facets", "lc_supporters", "verdict", "ratio", "points"}, path);
  Expected out;
  auto sub = [&](const char* k) { return path + "." + k; };
  if (e.contains("canonical")) out.canonical = list_of(e["canonical"], sub("canonical"), as_rational);
  if (e.contains("fundamental_cycle")) out.fundamental_cycle = list_of(e["fundamental_cycle"], sub("fundamental_cycle"), as_integer);
  if (e.contains("lct")) out.lct = list_of(e["lct"], sub("lct"), as_rational);
  if (e.contains("nest")) out.nest = list_of(e["nest"], sub("nest"), as_string);
  if (e.contains("lc_facets")) {
    const auto& v = e["lc_facets"];
    if (!v.is_number_unsigned()) schema(sub("lc_facets"), "expected a nonnegative integer");
    out.lc_facets = v.get<std::size_t>();
  }
  if (e.contains("lc_supporters")) out.lc_supporters = list_of(e["lc_supporters"], sub("lc_supporters"), as_string);
  if (e.contains("verdict")) out.verdict = as_string(e["verdict"], sub("verdict"));
  if (e.contains("ratio")) out.ratio = as_rational(e["ratio"], sub("ratio"));
  if (e.contains("points")) {
    out.points = list_of(e["points"], sub("points"), [](const json& p, const std::string& pp) {
      if (!p.is_object()) schema(pp, "expected an object");
      check_keys(p, {"c", "m", "D"}, pp);
      ExpectedPoint ep;
      ep.c = list_of(field(p, "c", pp), pp + ".c", as_rational);
      if (p.contains("m")) ep.m = as_integer(p["m"], pp + ".m");
      if (p.contains("D")) ep.D = list_of(p["D"], pp + ".D", as_integer);
      return ep;
    });
  }
  return out;
}

}  // namespace

Fixture parse_fixture(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                                      ": " + e.what());
  }
  if (!doc.is_object()) schema("$", "expected an object");
  check_keys(doc, {"name", "description", "matrix", "adjacency", "canonical", "labels", "ideals", "expected"}, "$");

  Fixture f;
  f.name = as_string(field(doc, "name", "$"), "$.name");
  if (doc.contains("description")) f.description = as_string(doc["description"], "$.description");
  const bool has_matrix = doc.contains("matrix");
  const bool has_tree = doc.contains("adjacency") || doc.contains("canonical");
  if (has_matrix == has_tree) schema("$", "exactly one of \"matrix\" or \"adjacency\"+\"canonical\" is required");
  if (has_matrix) {
    f.matrix = list_of(doc["matrix"], "$.matrix", [](const json& row, const std::string& p) {
      return list_of(row, p, as_integer);
    });
  } else {
    f.canonical = list_of(field(doc, "canonical", "$"), "$.canonical", as_rational);
    const std::size_t n = f.canonical->size();
    f.adjacency = list_of(field(doc, "adjacency", "$"), "$.adjacency", [n](const json& e, const std::string& p) {
      const auto& arr = as_array(e, p);
      if (arr.size() != 2) schema(p, "an edge has two endpoints");
      Edge edge;
      for (std::size_t k = 0; k < 2; ++k) {
        const Integer v = as_integer(arr[k], p + "[" + std::to_string(k) + "]");
        if (v < 1 || v > Integer(static_cast<unsigned long>(n))) schema(p, "endpoint out of range 1.." + std::to_string(n));
        (k == 0 ? edge.first : edge.second) = v.get_ui() - 1;
      }
      return edge;
    });
  }
  if (doc.contains("labels")) f.labels = list_of(doc["labels"], "$.labels", as_string);
  f.ideals = list_of(field(doc, "ideals", "$"), "$.ideals", [](const json& v, const std::string& p) {
    return list_of(v, p, as_integer);
  });
  if (f.ideals.empty()) schema("$.ideals", "at least one ideal is required");
  if (doc.contains("expected")) f.expected = parse_expected(doc["expected"], "$.expected");
  return f;
}

namespace {

json rational_json(const Rational& q) {
  if (is_integral(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

template <class T, class F>
json array_json(const std::vector<T>& v, F&& f) {
  json out = json::array();
  for (const auto& x : v) out.push_back(f(x));
  return out;
}

}  // namespace

std::string emit_fixture(const Fixture& f) {
  json doc;
  doc["name"] = f.name;
  if (!f.description.empty()) doc["description"] = f.description;
  if (f.matrix) {
    doc["matrix"] = array_json(*f.matrix, [](const auto& row) { return array_json(row, integer_json); });
  }
  if (f.adjacency) {
    doc["adjacency"] = array_json(*f.adjacency, [](const Edge& e) {
      return json::array({e.first + 1, e.second + 1});
    });
  }
  if (f.canonical) doc["canonical"] = array_json(*f.canonical, rational_json);
  if (!f.labels.empty()) doc["labels"] = f.labels;
  doc["ideals"] = array_json(f.ideals, [](const auto& v) { return array_json(v, integer_json); });

  const Expected& e = f.expected;
  json ex = json::object();
  if (e.canonical) ex["canonical"] = array_json(*e.canonical, rational_json);
  if (e.fundamental_cycle) ex["fundamental_cycle"] = array_json(*e.fundamental_cycle, integer_json);
  if (e.lct) ex["lct"] = array_json(*e.lct, rational_json);
  if (e.nest) ex["nest"] = *e.nest;
  if (e.lc_facets) ex["lc_facets"] = *e.lc_facets;
  if (e.lc_supporters) ex["lc_supporters"] = *e.lc_supporters;
  if (e.verdict) ex["verdict"] = *e.verdict;
  if (e.ratio) ex["ratio"] = rational_json(*e.ratio);
  if (!e.points.empty()) {
    ex["points"] = array_json(e.points, [](const ExpectedPoint& p) {
      json o;
      o["c"] = array_json(p.c, rational_json);
      if (p.m) o["m"] = integer_json(*p.m);
      if (p.D) o["D"] = array_json(*p.D, integer_json);
      return o;
    });
  }
  if (!ex.empty()) doc["expected"] = ex;
  return doc.dump(2) + "\n";
}

std::string fixture_dir() {
  if (const char* env = std::getenv("MMI_FIXTURE_DIR"); env && *env) return env;
  return MMI_DEFAULT_FIXTURE_DIR;
}

Fixture load_fixture(std::string_view name_or_path) {
  namespace fs = std::filesystem;
  fs::path path(name_or_path);
  if (!fs::is_regular_file(path)) path = fs::path(fixture_dir()) / (std::string(name_or_path) + ".json");
  std::ifstream in(path);
  if (!in) throw Error(Errc::Usage, "no fixture file or name \"" + std::string(name_or_path) + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

std::vector<std::string> list_fixtures() {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(fixture_dir(), ec)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const DualGraph> build_fixture_graph(const Fixture& f) {
  IntMatrix m;
  if (f.matrix) {
    m = *f.matrix;
  } else {
    const std::size_t n = f.canonical->size();
    QDivisor k(*f.canonical);
    m = assemble_matrix(n, *f.adjacency, derive_diagonal(n, *f.adjacency, k));
  }
  return std::make_shared<const DualGraph>(build_graph(m, f.labels));
}

IdealTuple build_tuple(const Fixture& f) {
  std::vector<ZDivisor> ideals;
  for (const auto& v : f.ideals) ideals.emplace_back(v);
  return attach_ideals(build_fixture_graph(f), std::move(ideals));
}

}  // namespace mmi
