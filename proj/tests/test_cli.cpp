#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fixtures.hpp"
#include "trop/io.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path work_dir() {
  static fs::path p = [] {
    fs::path q = fs::temp_directory_path() / "tropsurf-cli-tests";
    fs::remove_all(q);
    fs::create_directories(q);
    return q;
  }();
  return p;
}

std::string at(const char* name) { return (work_dir() / name).string(); }

int run(const std::string& args) {
  std::string cmd = std::string(TROPSURF_BIN) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

json load(const std::string& path) { return json::parse(slurp(path)); }

struct Obj {
  int verts = 0;
  std::vector<std::array<int, 3>> faces;
  std::vector<std::pair<int, int>> lines;
  std::vector<std::string> groups;
};

Obj parse_obj(const std::string& text) {
  Obj o;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      double a = 0, b = 0, c = 0;
      REQUIRE((ls >> a >> b >> c));
      ++o.verts;
    } else if (tag == "f") {
      std::array<int, 3> f{};
      REQUIRE((ls >> f[0] >> f[1] >> f[2]));
      o.faces.push_back(f);
    } else if (tag == "l") {
      int a = 0, b = 0;
      REQUIRE((ls >> a >> b));
      o.lines.emplace_back(a, b);
    } else if (tag == "g") {
      std::string name;
      ls >> name;
      o.groups.push_back(name);
    }
  }
  return o;
}

}  // namespace

TEST_CASE("polynomial documents round trip") {
  trop::TropicalPolynomial f = fixtures::honeycomb_curve(3);
  trop::TropicalPolynomial g = trop::poly_from_json(trop::poly_to_json(f));
  CHECK(g.to_string() == f.to_string());

  CHECK_THROWS_AS(trop::poly_from_json("{\"dim\":2,\"degree\":1,\"terms\":[]}"),
                  trop::input_error);
  CHECK_THROWS_AS(
      trop::poly_from_json(
          "{\"dim\":2,\"degree\":3,\"terms\":[{\"e\":[0,0],\"c\":\"0\"}]}"),
      trop::input_error);
  CHECK_THROWS_AS(
      trop::poly_from_json(
          "{\"dim\":3,\"degree\":1,\"terms\":[{\"e\":[1,0],\"c\":\"0\"}]}"),
      trop::input_error);
  CHECK_THROWS_AS(trop::poly_from_json("not json"), trop::input_error);
}

TEST_CASE("subdivide reports cells and the primitivity verdict") {
  spit(at("line.json"), trop::poly_to_json(fixtures::honeycomb_curve(1)));
  CHECK(run("subdivide " + at("line.json") + " --out " + at("line-sub.json")) == 0);
  json sub = load(at("line-sub.json"));
  CHECK(sub["primitive"] == true);
  int top = 0;
  for (const auto& c : sub["cells"])
    if (c["dim"] == 2) ++top;
  CHECK(top == 1);

  spit(at("cubic.json"), trop::poly_to_json(fixtures::honeycomb_curve(3)));
  CHECK(run("subdivide " + at("cubic.json") + " --out " + at("cubic-sub.json")) == 0);
  json cs = load(at("cubic-sub.json"));
  CHECK(cs["primitive"] == true);
  top = 0;
  for (const auto& c : cs["cells"])
    if (c["dim"] == 2) ++top;
  CHECK(top == 9);

  spit(at("degen.json"), "{\"dim\":2,\"degree\":1,\"terms\":[]}");
  CHECK(run("subdivide " + at("degen.json") + " --out " + at("degen-sub.json")) == 2);
}

TEST_CASE("homology command covers both ambients") {
  spit(at("plane.json"), trop::poly_to_json(fixtures::plane().poly()));
  CHECK(run("homology " + at("plane.json") + " --out " + at("plane-h.json")) == 0);
  json ph = load(at("plane-h.json"));
  CHECK(ph["h"][1][1]["rank"] == 1);
  CHECK(ph["betti"] == json::array({1, 1, 1}));
  CHECK(ph["torsion"] == false);

  spit(at("quartic.json"), trop::poly_to_json(fixtures::honeycomb_curve(4)));
  CHECK(run("homology " + at("quartic.json") + " --ambient tp2 --out " +
            at("quartic-h.json")) == 0);
  json qh = load(at("quartic-h.json"));
  CHECK(qh["h"][0][1]["rank"] == 3);
  CHECK(qh["h"][1][0]["rank"] == 3);
  CHECK(qh["h"][0][0]["rank"] == 1);
  CHECK(qh["h"][1][1]["rank"] == 1);

  CHECK(run("synth --degree 3 --out " + at("p3.json")) == 0);
  CHECK(run("homology " + at("p3.json") + " --p 1 --q 1 --out " +
            at("p3-h11.json")) == 0);
  CHECK(load(at("p3-h11.json"))["entry"]["rank"] == 7);

  CHECK(run("homology " + at("plane.json") + " --p 1 --out x.json") == 2);
  CHECK(run("homology " + at("plane.json") + " --ambient tp2 --out x.json") == 2);
}

TEST_CASE("floor plans feed every consumer") {
  CHECK(run("synth --degree 2 --out " + at("p2.json") + " --plan " +
            at("plan2.json")) == 0);
  CHECK(run("surface " + at("plan2.json") + " --out " + at("sv2.json")) == 0);
  json sv = load(at("sv2.json"));
  int total = 0;
  for (const auto& n : sv["counts"]) total += n.get<int>();
  CHECK(total == static_cast<int>(sv["cells"].size()));
  CHECK(sv["dim"] == 2);

  CHECK(run("homology " + at("plan2.json") + " --out " + at("plan2-h.json")) == 0);
  CHECK(load(at("plan2-h.json"))["h"][1][1]["rank"] == 2);

  CHECK(run("floorplan " + at("p2.json") + " --out " + at("fp2.json")) == 0);
  json fp = load(at("fp2.json"));
  CHECK(fp["curves"].size() == 2);
  CHECK(run("homology " + at("fp2.json") + " --out " + at("fp2-h.json")) == 0);
  CHECK(load(at("fp2-h.json"))["h"][1][1]["rank"] == 2);
}

TEST_CASE("intersect reports the basis and the form") {
  CHECK(run("synth --degree 2 --out " + at("q2.json")) == 0);
  CHECK(run("intersect " + at("q2.json") + " --out " + at("q2-form.json")) == 0);
  json doc = load(at("q2-form.json"));
  CHECK(doc["labels"] == json::array({"A1.1", "V"}));
  CHECK(doc["blocks"] == "AV");
  CHECK(doc["matrix"][0][0] == "-2");
  CHECK(doc["matrix"][0][1] == "0");
  CHECK(doc["matrix"][1][1] == "1");
  CHECK(doc["signature"]["pos"] == 1);
  CHECK(doc["signature"]["neg"] == 1);
  CHECK(doc["signature"]["null"] == 0);
  CHECK(doc["assumptions"].size() == 1);
  REQUIRE(doc["cycles"].size() == 2);
  for (const auto& cyc : doc["cycles"]) CHECK(cyc["pieces"].size() > 0);
  for (const auto& piece : doc["cycles"][1]["pieces"])
    CHECK(piece["framing"].size() == 3);
}

TEST_CASE("verify runs the whole suite at low degree") {
  CHECK(run("verify --max-degree 2 --out " + at("v2.json")) == 0);
  json doc = load(at("v2.json"));
  CHECK(doc["pass"] == true);
  CHECK(doc["degrees"].size() == 2);
  for (const auto& row : doc["degrees"])
    for (const auto& c : row["checks"]) CHECK(c["pass"] == true);
  CHECK(run("verify --max-degree 9") == 2);
}

TEST_CASE("export clips the surface to the box") {
  spit(at("plane.json"), trop::poly_to_json(fixtures::plane().poly()));
  CHECK(run("export " + at("plane.json") + " --bbox 10 --out " + at("s1.obj")) == 0);
  Obj plane = parse_obj(slurp(at("s1.obj")));
  // one group per two-dimensional cone of the hyperplane: a pair of rays each
  CHECK(plane.groups.size() == 6);
  CHECK(plane.verts > 0);
  for (const auto& f : plane.faces) {
    for (int ix : f) {
      CHECK(ix >= 1);
      CHECK(ix <= plane.verts);
    }
    CHECK(f[0] != f[1]);
    CHECK(f[1] != f[2]);
    CHECK(f[0] != f[2]);
  }

  CHECK(run("synth --degree 2 --out " + at("e2.json")) == 0);
  CHECK(run("export " + at("e2.json") + " --bbox 10 --out " + at("s2.obj") +
            " --cycles " + at("c2.obj")) == 0);
  Obj surf = parse_obj(slurp(at("s2.obj")));
  CHECK(surf.faces.size() > 0);
  for (const auto& f : surf.faces)
    for (int ix : f) CHECK((ix >= 1 && ix <= surf.verts));
  Obj cyc = parse_obj(slurp(at("c2.obj")));
  CHECK(cyc.groups == std::vector<std::string>{"A1.1", "V"});
  CHECK(cyc.lines.size() > 0);
  for (const auto& l : cyc.lines) {
    CHECK((l.first >= 1 && l.first <= cyc.verts));
    CHECK((l.second >= 1 && l.second <= cyc.verts));
  }

  CHECK(run("export " + at("plane.json") + " --bbox 0 --out " + at("bad.obj")) == 2);
}

TEST_CASE("reports are byte identical across runs") {
  CHECK(run("synth --degree 2 --out " + at("d1.json")) == 0);
  CHECK(run("synth --degree 2 --out " + at("d2.json")) == 0);
  CHECK(slurp(at("d1.json")) == slurp(at("d2.json")));

  CHECK(run("homology " + at("d1.json") + " --out " + at("r1.json")) == 0);
  CHECK(run("homology " + at("d1.json") + " --out " + at("r2.json")) == 0);
  CHECK(slurp(at("r1.json")) == slurp(at("r2.json")));

  CHECK(run("intersect " + at("d1.json") + " --out " + at("f1.json")) == 0);
  CHECK(run("intersect " + at("d1.json") + " --out " + at("f2.json")) == 0);
  CHECK(slurp(at("f1.json")) == slurp(at("f2.json")));

  CHECK(run("export " + at("d1.json") + " --bbox 7/2 --out " + at("o1.obj")) == 0);
  CHECK(run("export " + at("d1.json") + " --bbox 7/2 --out " + at("o2.obj")) == 0);
  CHECK(slurp(at("o1.obj")) == slurp(at("o2.obj")));
}
