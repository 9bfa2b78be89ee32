#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cupcap/cli/cli.hpp"
#include "cupcap/constructions.hpp"
#include "cupcap/point_io.hpp"

namespace fs = std::filesystem;
using namespace cupcap;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cupcap");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cupcap_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen-x, verify and round trip") {
  TempDir dir;
  Result g = run_cli({"gen-x", "3", "5", "5", dir / "x.pts"});
  CHECK(g.code == 0);
  auto sidecar = nlohmann::json::parse(slurp(dir / "x.pts.cert.json"));
  CHECK(sidecar["claim"] == "x:3,5,5");
  CHECK(sidecar["passes"] == true);
  CHECK(sidecar["bounds"]["required_size"] == "20");
  PointSet read = read_points_file(dir / "x.pts");
  CHECK(read.size() == 20);
  CHECK(read == build_X(3, 5, 5));

  Result v = run_cli({"verify", dir / "x.pts", "--claim", "x:3,5,5", "--report", dir / "cert.json"});
  CHECK(v.code == 0);
  auto cert = nlohmann::json::parse(slurp(dir / "cert.json"));
  CHECK(cert["passes"] == true);
  CHECK(cert["size"] == 20);

  Result bad = run_cli({"verify", dir / "x.pts", "--claim", "x:3,4,5"});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["passes"] == false);

  CHECK(run_cli({"gen-es", "3", "6", dir / "es.pts"}).code == 0);
  CHECK(read_points_file(dir / "es.pts") == build_ES_lower(3, 6));
  CHECK(run_cli({"verify", dir / "es.pts", "--claim", "es:3,6"}).code == 0);
  CHECK(run_cli({"verify", dir / "es.pts", "--claim", "nonsense"}).code == 2);
}

TEST_CASE("analyze reports and parse errors") {
  TempDir dir;
  CHECK(run_cli({"gen-x", "3", "4", "4", dir / "x.pts"}).code == 0);
  Result a = run_cli({"analyze", dir / "x.pts", "--ell", "3", "--m", "4", "--n", "4"});
  REQUIRE(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["n_points"] == 6);
  CHECK(j["longest_cup"] <= 3);
  CHECK(j["longest_cap"] <= 3);
  CHECK(j["structure"].is_null());
  CHECK(j["witnesses"]["convex"].size() == j["max_convex_subset"]);

  std::ofstream(dir / "bad.pts") << "espts v1\n0 0\n1 1\n2 oops\n";
  Result e = run_cli({"analyze", dir / "bad.pts"});
  CHECK(e.code == 2);
  CHECK(e.err.find("line 4") != std::string::npos);

  CHECK(run_cli({"analyze", dir / "x.pts", "--ell", "3"}).code == 2);
  CHECK(run_cli({"analyze", dir / "missing.pts"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
}

TEST_CASE("config files") {
  TempDir dir;
  std::ofstream(dir / "ok.cfg") << "# constants\nc = 50\nepsilon = 0.25\nseed = 9\n";
  Result r = run_cli({"--config", dir / "ok.cfg", "bounds", "3", "4"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["c"] == "50");
  CHECK(j["config"]["epsilon"] == "1/4");

  std::ofstream(dir / "unknown.cfg") << "c = 50\ncolour = blue\n";
  Result u = run_cli({"--config", dir / "unknown.cfg", "bounds", "3", "4"});
  CHECK(u.code == 2);
  CHECK(u.err.find("line 2") != std::string::npos);

  std::ofstream(dir / "range.cfg") << "epsilon = 3\n";
  CHECK(run_cli({"--config", dir / "range.cfg", "bounds", "3", "4"}).code == 2);
}

TEST_CASE("reports and figures are byte-identical across runs") {
  TempDir dir;
  CHECK(run_cli({"gen-x", "4", "5", "5", dir / "x.pts"}).code == 0);
  CHECK(run_cli({"analyze", dir / "x.pts", "--report", dir / "a1.json"}).code == 0);
  CHECK(run_cli({"analyze", dir / "x.pts", "--report", dir / "a2.json"}).code == 0);
  CHECK(slurp(dir / "a1.json") == slurp(dir / "a2.json"));

  CHECK(run_cli({"fat-cap", dir / "x.pts", "4", "--seed", "5", "--report", dir / "f1.json"}).code == 0);
  CHECK(run_cli({"fat-cap", dir / "x.pts", "4", "--seed", "5", "--report", dir / "f2.json"}).code == 0);
  CHECK(slurp(dir / "f1.json") == slurp(dir / "f2.json"));

  for (std::string h : {"none", "cup", "cap", "collinear", "convex"}) {
    CHECK(run_cli({"plot", dir / "x.pts", dir / "p1.svg", "--highlight", h}).code == 0);
    CHECK(run_cli({"plot", dir / "x.pts", dir / "p2.svg", "--highlight", h}).code == 0);
    std::string svg = slurp(dir / "p1.svg");
    CHECK(svg == slurp(dir / "p2.svg"));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
  }
  CHECK(run_cli({"plot", dir / "x.pts", dir / "p.svg", "--highlight", "zigzag"}).code == 2);
  CHECK_FALSE(fs::exists(dir / "p.svg.tmp"));
}
