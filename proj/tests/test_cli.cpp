#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "nilrep/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(NILREP_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nilrep::Json json_of(const Result& r) { return nilrep::Json::parse(r.out); }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("nilrep_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("family writes algebra and representation files") {
  const auto dir = scratch();
  const auto prefix = (dir / "nap22").string();
  REQUIRE(run("family nap --a 2 --p 2 -o " + prefix).code == 0);
  const auto alg = nilrep::read_json_file(prefix + ".algebra.json");
  const auto rep = nilrep::read_json_file(prefix + ".rep.json");
  CHECK(alg["dim"] == 12);
  CHECK(rep["dimV"] == 6);

  const auto nabc = json_of(run("family nabc --a 1 --b 2 --c 1"));
  CHECK(nabc["algebra"]["dim"] == 5);
  CHECK(json_of(run("family abelian --n 4"))["algebra"]["brackets"].empty());
  CHECK(run("family nap --a 0 --p 2").code == 1);
  CHECK(run("family triangle --a 1").code == 1);
}

TEST_CASE("solve") {
  auto a = json_of(run("solve --p 2 --p0 2 --dims 3,1"));
  CHECK(a["r0_min"] == 3);
  CHECK(a["witness"] == nilrep::Json::array({1, 1, 1}));
  CHECK(json_of(run("solve --p 2 --p0 2 --dims 9,4"))["r0_min"] == 6);
  CHECK(json_of(run("solve --p 1 --p0 1 --dims 4"))["r0_min"] == 4);
  auto brute = json_of(run("solve --p 2 --p0 2 --dims 9,4 --brute"));
  CHECK(brute["method"] == "bruteforce");
  CHECK(brute["witness"] == nilrep::Json::array({1, 1, 4}));
  CHECK(run("solve --p 2 --p0 2 --dims 3,x").code == 1);
  CHECK(run("solve --p 2 --p0 2 --dims 3").code == 1);
  CHECK(run("solve --p 2 --p0 2 --dims 1,3").code == 1);
  CHECK(run("solve --p 2 --p0 2").code == 1);
}

TEST_CASE("bound") {
  const auto dir = scratch();
  REQUIRE(run("family heisenberg --m 1 -o " + (dir / "h").string()).code == 0);
  REQUIRE(run("family nap --a 1 --p 3 -o " + (dir / "n13").string()).code == 0);
  CHECK(json_of(run("bound " + (dir / "h.algebra.json").string()))["mu_nil_lower_bound"] == 3);
  CHECK(json_of(run("bound " + (dir / "n13.algebra.json").string()))["mu_nil_lower_bound"] == 4);
  CHECK(json_of(run("bound " + (dir / "n13.rep.json").string()))["mu_nil_lower_bound"] == 4);

  write(dir / "aff.json", R"({"name":"aff","dim":2,"basis":["x","y"],"brackets":[{"i":1,"j":2,"terms":[[2,"1"]]}]})");
  CHECK(run("bound " + (dir / "aff.json").string()).code == 1);
  write(dir / "jacobi.json",
        R"({"dim":3,"brackets":[{"i":1,"j":2,"terms":[[1,"1"]]},{"i":2,"j":3,"terms":[[2,"1"]]}]})");
  CHECK(run("bound " + (dir / "jacobi.json").string()).code == 1);
  CHECK(run("bound " + (dir / "missing.json").string()).code == 1);

  write(dir / "filt.json", R"({"chain":[[[1,0,0],[0,1,0],[0,0,1]],[[0,0,1]],[[0,0,1]]]})");
  const auto filtered = json_of(run("bound " + (dir / "h.algebra.json").string() + " --filtration " +
                                    (dir / "filt.json").string()));
  CHECK(filtered["filtration_dims"] == nilrep::Json::array({3, 1, 1}));
  CHECK(filtered["per_p0"].size() == 2);
}

TEST_CASE("decompose") {
  const auto dir = scratch();
  REQUIRE(run("family heisenberg --m 1 -o " + (dir / "h").string()).code == 0);
  REQUIRE(run("family nabc --a 1 --b 1 --c 2 -o " + (dir / "n112").string()).code == 0);
  const auto h = run("decompose " + (dir / "h.rep.json").string() + " --seed 42");
  CHECK(h.code == 0);
  const auto hj = json_of(h);
  CHECK(hj["partition"] == nilrep::Json::array({2, 1}));
  CHECK(hj["profile"] == nilrep::Json::array({1, 1, 1}));
  CHECK(hj["ok"] == true);
  const auto n = json_of(run("decompose " + (dir / "n112.rep.json").string()));
  CHECK(n["partition"] == nilrep::Json::array({3, 2}));
  CHECK(n["profile"] == nilrep::Json::array({2, 1, 1}));

  write(dir / "scalar.json",
        R"({"algebra":{"name":"a","dim":1,"basis":["x"],"brackets":[]},"dimV":2,"matrices":[[["1","0"],["0","1"]]]})");
  CHECK(run("decompose " + (dir / "scalar.json").string()).code == 1);
}

TEST_CASE("identical invocations give identical output") {
  const auto dir = scratch();
  REQUIRE(run("family nap --a 2 --p 2 -o " + (dir / "d").string()).code == 0);
  const std::string rep = (dir / "d.rep.json").string();
  CHECK(run("decompose " + rep + " --seed 7").out == run("decompose " + rep + " --seed 7").out);
  CHECK(run("bound " + rep).out == run("bound " + rep).out);
}

TEST_CASE("analyze") {
  const auto dir = scratch();
  REQUIRE(run("family nabc --a 2 --b 3 --c 2 -o " + (dir / "n").string()).code == 0);
  const auto j = json_of(run("analyze " + (dir / "n.algebra.json").string()));
  CHECK(j["nilpotent"] == true);
  CHECK(j["center_dim"] == 4);
  CHECK(j["default_filtration_dims"] == nilrep::Json::array({16, 4}));
}

TEST_CASE("verify-paper") {
  const auto quick = run("verify-paper --quick");
  CHECK(quick.code == 0);
  CHECK(quick.out.find("FAIL") == std::string::npos);
  const auto full = run("verify-paper");
  CHECK(full.code == 0);
  const auto faulty = run("verify-paper --quick --inject-fault");
  CHECK(faulty.code == 2);
  CHECK(faulty.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("--help").code == 0);
}
