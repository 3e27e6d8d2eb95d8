#pragma once

// JSON fixtures: an intersection matrix (or a tree with its canonical
// divisor), the ideals as antinef divisors and optional expected values.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmi/dual_graph.hpp"
#include "mmi/numeric.hpp"

namespace mmi {

struct ExpectedPoint {
  std::vector<Rational> c;
  std::optional<Integer> m;
  std::optional<std::vector<Integer>> D;

  friend bool operator==(const ExpectedPoint&, const ExpectedPoint&) = default;
};

struct Expected {
  std::optional<std::vector<Rational>> canonical;
  std::optional<std::vector<Integer>> fundamental_cycle;
  std::optional<std::vector<Rational>> lct;
  std::optional<std::vector<std::string>> nest;
  std::optional<std::size_t> lc_facets;
  std::optional<std::vector<std::string>> lc_supporters;
  std::optional<std::string> verdict;
  std::optional<Rational> ratio;
  std::vector<ExpectedPoint> points;

  friend bool operator==(const Expected&, const Expected&) = default;
};

struct Fixture {
  std::string name;
  std::string description;
  std::optional<std::vector<std::vector<Integer>>> matrix;
  /// 0-based edges; present together with canonical.
  std::optional<std::vector<Edge>> adjacency;
  std::optional<std::vector<Rational>> canonical;
  std::vector<std::string> labels;
  std::vector<std::vector<Integer>> ideals;
  Expected expected;

  friend bool operator==(const Fixture&, const Fixture&) = default;
};

/// Throws ParseError (with line), SchemaError (with field path),
/// RationalFormatError.
Fixture parse_fixture(std::string_view text);

/// Normalized JSON; parse_fixture(emit_fixture(f)) == f.
std::string emit_fixture(const Fixture& f);

/// Directory searched for NAME.json: $MMI_FIXTURE_DIR, else the build-time
/// default.
std::string fixture_dir();

/// A path to a JSON file, or a fixture name. Throws Usage when not found.
Fixture load_fixture(std::string_view name_or_path);

/// Names of all fixtures in fixture_dir(), sorted.
std::vector<std::string> list_fixtures();

std::shared_ptr<const DualGraph> build_fixture_graph(const Fixture& f);
IdealTuple build_tuple(const Fixture& f);

}  // namespace mmi
