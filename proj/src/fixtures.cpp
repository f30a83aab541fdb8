#include "mcg/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include <json.hpp>

#include "mcg/error.hpp"

namespace mcg {

namespace {

using nlohmann::json;

FixturePoint point_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(Errc::parse_error, "point must be [edge, num, den]");
  return {j[0].get<std::string>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

int edge_index(const GluedSurface& glued, const std::string& text) {
  for (int p = 0; p < glued.edges_per_copy(); ++p)
    if (to_string(SurfaceSymbol{{glued.symbol.tokens[p]}}) == text) return p;
  throw Error(Errc::invalid_parameters, "no edge " + text);
}

EdgePosition position(const FixturePoint& p, const GluedSurface& glued) {
  if (p.den <= 0 || p.num <= 0 || p.num >= p.den)
    throw Error(Errc::invalid_parameters, "position must lie strictly inside the edge");
  return {edge_index(glued, p.edge), p.num, p.den};
}

}  // namespace

CurveFixture parse_fixture(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  try {
    CurveFixture f;
    f.name = j.at("name").get<std::string>();
    f.construction = j.value("construction", "");
    f.signature = parse_signature(j.at("signature").get<std::string>());
    f.theta.order = j.at("order").get<int>();
    for (const auto& [k, v] : j.at("images").items()) f.theta.images[k] = v.get<int>();
    f.y = j.at("y").get<std::string>();
    f.expected = parse_pair_type(j.at("expected").get<std::string>());
    for (const auto& c : j.at("curve"))
      f.curve.push_back({c.at("copy").get<int>(), point_from(c.at("in")), point_from(c.at("out"))});
    return f;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

CurveFixture load_fixture(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::invalid_parameters, "cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

std::vector<CurveFixture> load_fixture_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(Errc::invalid_parameters, "not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CurveFixture> out;
  for (const auto& p : files) out.push_back(load_fixture(p));
  return out;
}

GluedSurface fixture_surface(const CurveFixture& f) {
  return assemble_fundamental_domain(f.signature, f.theta, f.y);
}

CurveDiagram fixture_curve(const CurveFixture& f, const GluedSurface& glued) {
  CurveDiagram c;
  for (const auto& ch : f.curve) {
    if (ch.copy < 0 || ch.copy >= glued.copies) throw Error(Errc::invalid_parameters, "copy out of range");
    c.chords.push_back({ch.copy, position(ch.in, glued), position(ch.out, glued)});
  }
  validate_curve(c, glued);
  return c;
}

FixtureResult check_fixture(const CurveFixture& f) {
  FixtureResult r;
  r.name = f.name;
  r.expected = f.expected;
  try {
    const auto glued = fixture_surface(f);
    r.genus = classify(glued).genus;
    const auto c = fixture_curve(f, glued);
    r.actual = is_standard_pair(c, deck_image(c, glued), glued);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<FixtureResult> check_fixtures(const std::vector<CurveFixture>& fixtures) {
  std::vector<std::future<FixtureResult>> jobs;
  for (const auto& f : fixtures) jobs.push_back(std::async(std::launch::async, [&f] { return check_fixture(f); }));
  std::vector<FixtureResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace mcg
