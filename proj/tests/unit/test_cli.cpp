#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "raf/commands.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "raf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = raf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "raf_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir / "pairs");
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exact, mast, bounds, approx") {
  fs::path dir = scratch();
  write(dir / "same.nwk", "# identical\n((a,b),c,(d,e));\n(a,b,(c,(d,e)));\n");
  write(dir / "diff.nwk", "((a,b),(c,d),(e,f));\n((a,c),(b,d),(e,f));\n");

  Result r = run({"exact", (dir / "same.nwk").string()});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["size"] == 1);

  r = run({"exact", (dir / "diff.nwk").string(), "--strategy", "cover-dp"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["size"] == 2);
  CHECK(j["reduction"]["fired"] == true);
  CHECK_FALSE(j.contains("timings_ms"));
  CHECK(run({"exact", (dir / "diff.nwk").string()}).out == run({"exact", (dir / "diff.nwk").string()}).out);

  CHECK(nlohmann::json::parse(run({"mast", (dir / "diff.nwk").string()}).out)["size"] == 4);
  auto b = nlohmann::json::parse(run({"bounds", (dir / "diff.nwk").string()}).out);
  CHECK(b["lower"] == 2);
  CHECK(nlohmann::json::parse(run({"approx", (dir / "diff.nwk").string()}).out)["size"] == 2);
}

TEST_CASE("usage and parse errors exit with 1") {
  fs::path dir = scratch();
  write(dir / "bad.nwk", "((a,b),c,(d,e));\n");
  CHECK(run({}).code == 1);
  CHECK(run({"exact"}).code == 1);
  CHECK(run({"exact", (dir / "bad.nwk").string()}).code == 1);
  CHECK(run({"exact", (dir / "missing.nwk").string()}).code == 1);
}

TEST_CASE("report") {
  fs::path dir = scratch();
  CHECK(run({"report", (dir / "pairs").string()}).out ==
        "pair,n,mraf,mraf_lower,mraf_upper,mast,lower_bound,greedy,maf,error\n");
  write(dir / "pairs" / "b.nwk", "((a,b),(c,d),(e,f));\n((a,c),(b,d),(e,f));\n");
  write(dir / "pairs" / "a.nwk", "((a,b),c,(d,e));\n(a,b,(c,(d,e)));\n");
  write(dir / "pairs" / "c.nwk", "oops\n");
  Result r = run({"report", (dir / "pairs").string(), "--jobs", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, a, b, c;
  std::getline(lines, header);
  std::getline(lines, a);
  std::getline(lines, b);
  std::getline(lines, c);
  CHECK(a == "a.nwk,5,1,1,1,5,1,1,1,");
  CHECK(b.rfind("b.nwk,6,2,2,2,4,2,2,", 0) == 0);
  CHECK(c.rfind("c.nwk,,,,,,,,,", 0) == 0);

  auto j = nlohmann::json::parse(run({"report", (dir / "pairs").string(), "--out", "json"}).out);
  CHECK(j.size() == 3);
  CHECK(j[1]["mraf"]["upper"] == 2);
  CHECK(j[2].contains("error"));
}

TEST_CASE("pims and gadgets") {
  fs::path dir = scratch();
  write(dir / "id.perm", "1 2 3 4 5\n");
  auto j = nlohmann::json::parse(run({"pims", (dir / "id.perm").string()}).out);
  CHECK(j["exact"]["size"] == 1);
  CHECK(j["erdos_szekeres"]["size"] == 1);

  Result g = run({"gadget", "hardness", "--perm", "2 1 3", "--alpha", "1", "--beta", "1"});
  CHECK(g.code == 0);
  write(dir / "gadget.nwk", g.out);
  CHECK(run({"mast", (dir / "gadget.nwk").string()}).code == 0);

  CHECK(run({"gadget", "nochain", "--m", "3"}).code == 0);
  Result o = run({"gadget", "obs2", "--n", "3"});
  CHECK(o.code == 0);
  write(dir / "obs2.nwk", o.out);
  CHECK(nlohmann::json::parse(run({"exact", (dir / "obs2.nwk").string()}).out)["size"] == 2);
}

TEST_CASE("check") {
  fs::path dir = scratch();
  write(dir / "diff.nwk", "((a,b),(c,d),(e,f));\n((a,c),(b,d),(e,f));\n");
  write(dir / "good.json", R"({"components": [["a","d","e","f"],["b","c"]]})");
  write(dir / "bad.json", R"({"components": [["a","b","c"],["c","d","e","f"]]})");
  write(dir / "one.json", R"([["a","b","c","d","e","f"]])");

  auto j = nlohmann::json::parse(run({"check", (dir / "diff.nwk").string(), (dir / "good.json").string()}).out);
  CHECK(j["raf"] == true);
  j = nlohmann::json::parse(run({"check", (dir / "diff.nwk").string(), (dir / "one.json").string()}).out);
  CHECK(j["raf"] == false);
  Result bad = run({"check", (dir / "diff.nwk").string(), (dir / "bad.json").string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("not a partition") != std::string::npos);

  Result g = run({"gadget", "hardness", "--perm", "1 2", "--alpha", "1", "--beta", "1"});
  write(dir / "gadget.nwk", g.out);
  Result ex = run({"exact", (dir / "gadget.nwk").string()});
  write(dir / "gadget.json", ex.out);
  j = nlohmann::json::parse(run({"check", (dir / "gadget.nwk").string(), (dir / "gadget.json").string()}).out);
  CHECK(j["raf"] == true);
  CHECK(j["lemma_violations"].empty());
}

}  // TEST_SUITE
