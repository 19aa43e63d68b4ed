#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "vkcurve/canonical.hpp"
#include "vkcurve/document.hpp"
#include "vkcurve/fixtures.hpp"
#include "vkcurve/sdn.hpp"

using namespace vk;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run vkcurve(std::string const& args, std::string const& env = "") {
  std::string cmd = env + std::string(VKCURVE_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "vkcurve_cli_test";
  fs::create_directories(dir);
  return dir;
}

void write(fs::path const& p, std::string const& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_CASE("exit status contract") {
  auto dir = scratch();
  write(dir / "region19.json", emit_diagram_text(region19_fixture()));
  write(dir / "minus.json", emit_diagram_text(sdn_minus_face(11)));
  write(dir / "malformed.json", "{\"n\": 11, \"surface\": \"disk\"");
  write(dir / "unknown.json", "{\"n\": 11, \"surface\": \"disk\", \"faces\": []}");
  auto f = [&](char const* name) { return (dir / name).string(); };

  auto cert = vkcurve("certify " + f("region19.json"));
  CHECK(cert.status == 0);
  auto cj = nlohmann::json::parse(cert.out);
  CHECK(cj["holds"] == true);
  CHECK(cj["epsilon"] == "1/4685120");

  CHECK(vkcurve("validate " + f("malformed.json")).status == 2);
  CHECK(vkcurve("validate " + f("unknown.json")).status == 2);
  CHECK(vkcurve("validate " + f("missing.json")).status == 2);
  CHECK(vkcurve("stats " + f("region19.json") + " --bogus").status == 2);
  CHECK(vkcurve("nonsense").status == 2);
  CHECK(vkcurve("stats " + f("region19.json") + " --n 13").status == 2);
  CHECK(vkcurve("sdn --n 12").status == 2);
  CHECK(vkcurve("fixtures --type nope").status == 2);

  CHECK(vkcurve("certify " + f("minus.json")).status == 1);
  CHECK(vkcurve("curvature " + f("minus.json")).status == 1);
  CHECK(vkcurve("classify " + f("minus.json")).status == 1);
  CHECK(vkcurve("curvature " + f("region19.json")).status == 0);
  CHECK(vkcurve("budgets --n-min 11 --n-max 21").status == 0);
}

TEST_CASE("documents round trip through the CLI") {
  auto dir = scratch();
  auto sdn = vkcurve("sdn --n 11");
  REQUIRE(sdn.status == 0);
  CHECK(isomorphic(parse_diagram_text(sdn.out), build_sdn(11)));

  auto fx = vkcurve("fixtures --type region-25");
  REQUIRE(fx.status == 0);
  CHECK(isomorphic(parse_diagram_text(fx.out), region25_fixture()));
  write(dir / "region25.json", fx.out);

  auto col = vkcurve("color " + (dir / "region25.json").string());
  CHECK(col.status == 0);
  auto cj = nlohmann::ordered_json::parse(col.out);
  int yellow = 0;
  for (auto const& [id, c] : cj["colors"].items()) yellow += c == "yellow";
  CHECK(yellow == 6);
  CHECK(isomorphic(parse_diagram_text(col.out), region25_fixture()));

  auto red = vkcurve("reduce " + (dir / "region25.json").string());
  CHECK(red.status == 0);
  auto rj = nlohmann::ordered_json::parse(red.out);
  CHECK(rj["spherically_reduced"] == false);
  CHECK(rj["witness"]["faces"].size() == 25);
  CHECK(parse_diagram(rj["diagram"]).face_count() == 19);

  auto dot = vkcurve("render " + (dir / "region25.json").string() + " --color");
  CHECK(dot.status == 0);
  CHECK(dot.out.starts_with("digraph K {"));
  CHECK(vkcurve("render " + (dir / "region25.json").string() + " --format svg").out.starts_with("<svg"));

  auto rows = vkcurve("oracle --n 11 --max-degree 7");
  CHECK(rows.status == 0);
  CHECK_FALSE(rows.out.empty());
}

TEST_CASE("identical runs give identical bytes") {
  auto dir = scratch();
  write(dir / "region19.json", emit_diagram_text(region19_fixture()));
  auto path = (dir / "region19.json").string();
  for (std::string cmd : {"curvature " + path, "classify " + path, "color " + path, "reduce " + path,
                          "stats " + path + " --format text", "render " + path + " --format svg",
                          std::string("fixtures --type random --seed 7 --faces 30"), std::string("sdn --n 13")}) {
    CAPTURE(cmd);
    auto a = vkcurve(cmd), b = vkcurve(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
  write(dir / "region25.json", emit_diagram_text(region25_fixture()));
  auto one = vkcurve("reduce " + (dir / "region25.json").string(), "VKCURVE_THREADS=1 ");
  auto four = vkcurve("reduce " + (dir / "region25.json").string(), "VKCURVE_THREADS=4 ");
  CHECK(one.status == 0);
  CHECK(one.out == four.out);
}
