#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/nec.hpp"
#include "mcg/polygon.hpp"

namespace mcg {

struct FixturePoint {
  std::string edge;  // token text such as "a1*"
  std::int64_t num = 1;
  std::int64_t den = 2;
};

struct FixtureChord {
  int copy = 0;
  FixturePoint in;
  FixturePoint out;
};

/// A drawn curve c on the cover; the pair under test is (c, y(c)).
struct CurveFixture {
  std::string name;
  std::string construction;
  NecSignature signature;
  Epimorphism theta;
  std::string y;
  PairType expected = PairType::none;
  std::vector<FixtureChord> curve;
};

CurveFixture parse_fixture(std::string_view json_text);
CurveFixture load_fixture(const std::filesystem::path& file);
/// Every *.json in the directory, sorted by file name.
std::vector<CurveFixture> load_fixture_dir(const std::filesystem::path& dir);

GluedSurface fixture_surface(const CurveFixture& f);
CurveDiagram fixture_curve(const CurveFixture& f, const GluedSurface& glued);

struct FixtureResult {
  std::string name;
  PairType expected = PairType::none;
  PairType actual = PairType::none;
  int genus = 0;
  std::optional<std::string> error;
  bool passed() const { return !error && actual == expected; }
};

FixtureResult check_fixture(const CurveFixture& f);
/// Checks run concurrently; results keep the input order.
std::vector<FixtureResult> check_fixtures(const std::vector<CurveFixture>& fixtures);

}  // namespace mcg
