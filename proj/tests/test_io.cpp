#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace dtest;

namespace {

std::string data_path(const std::string& name) { return std::string(DUNIFORM_TEST_DATA) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Compares against tests/data; DUNIFORM_UPDATE_GOLDEN=1 rewrites the file instead.
void expect_golden(const std::string& name, const std::string& actual) {
  if (std::getenv("DUNIFORM_UPDATE_GOLDEN")) {
    std::ofstream(data_path(name), std::ios::binary) << actual;
    return;
  }
  EXPECT_EQ(read_file(data_path(name)), actual) << name;
}

std::string normalized_svg(const std::string& preset_name) {
  const Problem p = load_preset(preset_name);
  const Label f = hex_exact_label(p);
  const PlaneLayout l = layout_augmented(p.aug, p.cs, f);
  const auto n = normalize_to_unit_disk(p.aug, l, realize_mpoints(l, p.cs, f));
  return render_svg(p.aug, n.layout, p.cs, n.f);
}

ErrorCode parse_error(const json& doc, std::string* message = nullptr) {
  try {
    parse_problem(doc);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "accepted";
  return ErrorCode::NotProper;
}

}  // namespace

TEST(Preset, HexTangentValues) {
  const json doc = preset("hex_tangent");
  for (const auto& [k, v] : doc["alpha"].items()) EXPECT_EQ(v.get<double>(), 1.0) << k;
  for (const auto& [k, v] : doc["eta"].items()) EXPECT_EQ(v.get<double>(), 1.0) << k;
  for (const auto& [k, v] : doc["mu"].items()) EXPECT_EQ(v.get<double>(), -1.0) << k;
  EXPECT_EQ(doc["mu"].size(), 6u);
  EXPECT_EQ(doc["eta"].size(), 12u);
}

TEST(Preset, OrthogonalAndInscribed) {
  const json o = preset("hex_orthogonal");
  for (const auto& [k, v] : o["mu"].items()) EXPECT_EQ(v.get<double>(), 0.0);
  EXPECT_EQ(o["alpha"]["hat"].get<double>(), 1.0);
  const json i = preset("hex_inscribed");
  for (const auto& [k, v] : i["alpha"].items()) EXPECT_EQ(v.get<double>(), k == "hat" ? 1.0 : 0.0);
  for (const auto& [k, v] : i["eta"].items()) EXPECT_EQ(v.get<double>(), 0.5);
  for (const auto& [k, v] : i["mu"].items()) EXPECT_EQ(v.get<double>(), 0.0);
}

TEST(Preset, Deterministic) {
  EXPECT_EQ(preset("ring_lattice", {3, Scenario::Orthogonal}).dump(), preset("ring_lattice", {3, Scenario::Orthogonal}).dump());
  EXPECT_THROW(preset("hex_square"), Error);
  EXPECT_THROW(preset("ring_lattice", {0, std::nullopt}), Error);
}

TEST(Preset, GoldenHexagon) { expect_golden("hex_tangent.json", preset("hex_tangent").dump(2) + "\n"); }

TEST(Parse, GoldenFileIsValid) {
  const Problem p = load_problem(data_path("hex_tangent.json"));
  EXPECT_EQ(p.aug.num_vertices(), 8u);
  EXPECT_EQ(p.cs.eta.size(), 18);
  EXPECT_EQ(*p.scenario, Scenario::Tangent);
  // mu becomes eta on the apex edges.
  for (int v : p.aug.base().boundary_cycle()) EXPECT_EQ(p.cs.eta[p.aug.edge_index(p.aug.apex(), v)], -1.0);
}

TEST(Parse, RoundTrip) {
  for (const char* name : {"hex_tangent", "hex_inscribed", "triangle"}) {
    const json doc = preset(name);
    EXPECT_EQ(serialize_problem(parse_problem(doc), false), doc) << name;
  }
  std::mt19937_64 rng(2);
  const Problem p = load_preset("ring_lattice", {2, std::nullopt});
  const Sample s = random_admissible(rng, p.aug);
  const Problem q{p.aug, s.cs, s.f, std::nullopt};
  const json doc = serialize_problem(q);
  const Problem back = parse_problem(json::parse(doc.dump()));
  EXPECT_EQ(back.cs.alpha, q.cs.alpha);
  EXPECT_EQ(back.cs.eta, q.cs.eta);
  EXPECT_EQ(back.f, q.f);
  EXPECT_EQ(serialize_problem(back), doc);
}

TEST(Parse, Errors) {
  const json good = preset("hex_tangent");
  std::string msg;

  json d = good;
  d["faces"] = json::array();
  EXPECT_EQ(parse_error(d), ErrorCode::Schema);

  d = good;
  d["eta"]["1-4"] = 1.0;
  EXPECT_EQ(parse_error(d, &msg), ErrorCode::Schema);
  EXPECT_NE(msg.find("/eta/1-4"), std::string::npos) << msg;

  d = good;
  d["alpha"].erase("3");
  EXPECT_EQ(parse_error(d, &msg), ErrorCode::Schema);
  EXPECT_NE(msg.find("/alpha/3"), std::string::npos) << msg;

  d = good;
  d["alpha"].erase("hat");
  EXPECT_EQ(parse_error(d), ErrorCode::Schema);

  d = good;
  d["mu"]["0"] = 0.0;
  EXPECT_EQ(parse_error(d, &msg), ErrorCode::Schema);
  EXPECT_NE(msg.find("/mu/0"), std::string::npos) << msg;

  d = good;
  d["mu"].erase("2");
  EXPECT_EQ(parse_error(d), ErrorCode::Schema);

  d = good;
  d["faces"][1][2] = 99;
  EXPECT_EQ(parse_error(d, &msg), ErrorCode::Schema);
  EXPECT_NE(msg.find("/faces/1/2"), std::string::npos) << msg;

  d = good;
  d["eta"]["x"] = 1.0;
  EXPECT_EQ(parse_error(d), ErrorCode::Schema);

  d = good;
  d["colour"] = "red";
  EXPECT_EQ(parse_error(d), ErrorCode::Schema);

  d = good;
  d["alpha"]["1"] = "one";
  EXPECT_EQ(parse_error(d), ErrorCode::Schema);

  d = good;
  d["faces"].push_back({0, 1, 2});
  EXPECT_EQ(parse_error(d), ErrorCode::ImproperTriangulation);
}

TEST(Parse, PartialInitialLabel) {
  json d = preset("hex_tangent");
  d["f_init"] = {{"hat", 1.5}, {"2", 0.25}};
  const Problem p = parse_problem(d);
  EXPECT_EQ(p.f[p.aug.apex()], 1.5);
  EXPECT_EQ(p.f[p.aug.index_of(2)], 0.25);
  EXPECT_EQ(p.f[p.aug.index_of(3)], 0.0);
}

TEST(Svg, GoldenTangent) { expect_golden("hex_tangent.svg", normalized_svg("hex_tangent")); }

TEST(Svg, GoldenInscribed) { expect_golden("hex_inscribed.svg", normalized_svg("hex_inscribed")); }

TEST(Svg, Contents) {
  const std::string svg = normalized_svg("hex_tangent");
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("<circle"), 8u);
  EXPECT_EQ(count("<polygon"), 12u);
  EXPECT_EQ(count("<line"), 18u);
  EXPECT_EQ(count("stroke-dasharray"), 6u);
  EXPECT_EQ(count("stroke=\"#c0392b\""), 1u);
  const std::string dots = normalized_svg("hex_inscribed");
  EXPECT_NE(dots.find("r=\"2.500000000\""), std::string::npos);
}

TEST(Svg, Stable) { EXPECT_EQ(normalized_svg("hex_orthogonal"), normalized_svg("hex_orthogonal")); }

TEST(Svg, EmptyLayout) {
  const Problem p = load_preset("triangle");
  EXPECT_THROW(render_svg(p.aug, PlaneLayout{}, p.cs, p.f), Error);
}

TEST(Json, NumbersRoundTrip) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::exp(u(rng) / 50);
    EXPECT_EQ(json::parse(json(x).dump()).get<double>(), x);
  }
}
