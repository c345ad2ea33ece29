#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lenslab/cli.hpp"
#include "support/fuzz.hpp"

using namespace lenslab;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("lenslab-cli-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("dinv") {
  const auto r = run({"dinv", "9", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "# d-invariants of L(9,7)\n0 0\n1 2/9\n2 -4/9\n3 0\n4 -4/9\n5 2/9\n6 0\n7 8/9\n8 8/9\n");
  const auto j = run({"--json", "dinv", "9", "7"});
  CHECK(Json::parse(j.out).get<DInvariantTable>().values == d_table(LensSpace::normalize(9, 7)).values);
}

TEST_CASE("genus-scan 2") {
  const auto r = run({"genus-scan", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pmax 17") != std::string::npos);
  CHECK(r.out.substr(r.out.find('\n') + 1) == "L(9,7), L(11,4)\n");
  const auto j = Json::parse(run({"genus-scan", "2", "--json"}).out);
  CHECK(j.at("pmax") == 17);
  CHECK(j.at("hits").get<std::vector<ScanHit>>().size() == 2);
  CHECK(run({"genus-scan", "2", "--pmax", "0"}).code == 1);
}

TEST_CASE("series") {
  CHECK(run({"series", "tau", "--truncate", "6"}).out == "1 + U + U^3 + U^6\n");
  CHECK(run({"series", "surgery", "5", "0", "--truncate", "4"}).out == "0\n");
  CHECK(run({"series", "surgery", "5"}).code == 1);
  CHECK(run({"series", "tau", "--truncate", "-1"}).code == 1);
  CHECK(run({"series", "bogus"}).code == 64);
  const auto j = Json::parse(run({"--json", "series", "tau", "--truncate", "21"}).out);
  CHECK(j.get<USeries>() == tau_series(21));
}

TEST_CASE("hj and farey") {
  CHECK(run({"hj", "37/10"}).out == "37/10 = [4, 4, 2, 2]\n");
  CHECK(run({"farey", "37/2"}).out == "37/2 = mediant of 19 and 18\n");
  CHECK(run({"hj", "1/2"}).out == "1/2 = [1, 2]\n");
  CHECK(run({"hj", "0"}).code == 1);
  CHECK(run({"hj", "x"}).code == 1);
}

TEST_CASE("alexlens") {
  const auto r = run({"alexlens", "9", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("T^2 - T + 1 - T^-1 + T^-2") != std::string::npos);
  CHECK(r.out.find("sigma(i) = 3 + 4i") != std::string::npos);
  const auto lit = run({"alexlens", "9", "7", "--literal-Lsigma"});
  CHECK(lit.out.find("literal") != std::string::npos);
  const auto j = Json::parse(run({"--json", "alexlens", "5", "1", "--no-pm1-filter"}).out);
  CHECK(j.at("filters").at("pm1_alternating") == false);
}

TEST_CASE("lattice-check") {
  const auto r = run({"lattice-check", "9", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("equal: yes") != std::string::npos);
  CHECK(run({"lattice-check", "9", "3"}).code == 1);
}

TEST_CASE("octet and triangle files") {
  TempDir dir;
  const auto good = dir.write("good.json", R"({"dims": [1, 1, 1], "dos": ["0,0"], "dbar_su": ["0,0"]})");
  const auto bad = dir.write("bad.json", R"({"dims": [1, 0, 0], "doo": ["0,0"]})");
  const auto r = run({"octet", "verify", good});
  CHECK(r.code == 0);
  CHECK(r.out.find("exact: yes") != std::string::npos);
  const auto b = run({"octet", "verify", bad});
  CHECK(b.code == 1);
  CHECK(b.out.find("FAILS") != std::string::npos);
  CHECK(run({"triangle", "verify", good}).code == 0);

  std::mt19937_64 rng(2);
  const auto cone = dir.write("cone.json", Json(fuzz::random_cone_triple(rng, true)).dump());
  const auto c = run({"triangle", "verify", cone});
  CHECK(c.code == 0);
  CHECK(c.out.find("hypotheses: hold") != std::string::npos);
  CHECK(c.out.find("exact: yes") != std::string::npos);
  const auto cj = Json::parse(run({"--json", "triangle", "verify", cone}).out);
  CHECK(cj.at("hypotheses").get<ConeHypotheses>().applicable());

  CHECK(run({"octet", "verify", (dir.path() / "missing.json").string()}).code == 1);
  CHECK(run({"octet", "verify", dir.write("junk.json", "{")}).code == 1);
}

TEST_CASE("lspace") {
  TempDir dir;
  const auto tree = dir.write("tree.json", Json(WeightedTree::star(3, {2, 2, 2})).dump());
  const auto t = run({"lspace", "tree", tree});
  CHECK(t.code == 0);
  CHECK(t.out.find("|H1| = 12") != std::string::npos);
  CHECK(t.out.find("check: ok") != std::string::npos);
  CHECK(t.out.find(kNoTautFoliation) != std::string::npos);

  const auto alt = dir.write("alt.json", R"({"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]})");
  CHECK(run({"lspace", "alt", alt}).code == 0);
  const auto loop = dir.write("loop.json", R"({"vertices": 2, "edges": [[0, 1], [0, 1], [1, 1]]})");
  CHECK(run({"lspace", "alt", loop}).code == 1);

  const auto s = run({"lspace", "slope", "--base", "18", "--target", "37/2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("S^3_{37/2}(K): " + kNoTautFoliation) != std::string::npos);
  CHECK(run({"lspace", "slope", "--base", "18", "--target", "17"}).code == 1);

  const auto w = Json::parse(run({"--json", "lspace", "borromean", "1", "5/2", "5"}).out);
  CHECK(w.at("check").at("ok") == true);
  const auto cert = certificate_from_json(w.at("certificate"));
  CHECK(cert->conclusion.h1 == 25);
  CHECK(check_certificate(*cert).ok);

  CHECK(run({"lspace", "pretzel", "7", "18"}).code == 0);
  CHECK(run({"lspace", "pretzel", "7", "17"}).code == 1);
  CHECK(run({"lspace", "tree", dir.write("bad.json", R"({"weights": [1, 1], "edges": [[0, 1]]})")}).code == 1);
}

TEST_CASE("usage and help") {
  CHECK(run({}).code == 64);
  CHECK(run({"nonsense"}).code == 64);
  CHECK(run({"dinv", "9"}).code == 64);
  CHECK(run({"dinv", "nine", "7"}).code == 64);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("genus-scan") != std::string::npos);
}

TEST_CASE("cache directory") {
  TempDir dir;
  const auto cache = (dir.path() / "cache").string();
  CHECK(run({"--cache-dir", cache, "dinv", "11", "4"}).code == 0);
  CHECK(std::filesystem::exists(DiskCache(cache).file_for(LensSpace::normalize(11, 4))));
  const auto again = run({"--cache-dir", cache, "dinv", "11", "4"});
  CHECK(again.out == run({"dinv", "11", "4"}).out);
}

TEST_CASE("determinism") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"genus-scan", "2"}, {"alexlens", "11", "4"}, {"lspace", "borromean", "2", "3/2", "4"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
