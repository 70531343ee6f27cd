#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Captured {
  int code = -1;
  std::string out;
};

Captured run(const std::string& args) {
  std::string command = std::string("'") + CLASSLAB_CLI + "' " + args + " 2>/dev/null";
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) c.out.append(buffer, n);
  int status = pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

nlohmann::ordered_json report(const std::string& args) {
  auto c = run("--json " + args);
  REQUIRE(c.code == 0);
  auto doc = nlohmann::ordered_json::parse(c.out);
  CHECK(doc.contains("timing"));
  doc.erase("timing");
  return doc;
}

nlohmann::ordered_json golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name + ".json");
  REQUIRE(in.good());
  return nlohmann::ordered_json::parse(in);
}

}  // namespace

TEST_CASE("reports match the golden files") {
  CHECK(report("group Q8") == golden("group_q8"));
  CHECK(report("class 'hat(cyclic)' S4") == golden("class_hat_cyclic_s4"));
  CHECK(report("audit cyclic --c3") == golden("audit_cyclic_c3"));
  CHECK(report("realize C2 --top C4") == golden("realize_c2_top_c4"));
  CHECK(report("dual-chain 'set(1,C4)' C4 --depth 3") == golden("dual_chain_c4"));
}

TEST_CASE("report contents") {
  auto q8 = report("group Q8");
  CHECK(q8["results"]["radical"]["name"] == "C2");
  CHECK(q8["results"]["simple_quotients"] == nlohmann::ordered_json::array({"C2"}));
  auto a5 = report("group A5");
  CHECK(a5["results"]["predicates"]["simple"] == true);
  CHECK(a5["results"]["radical"]["order"] == 1);
  auto v4 = report("group 'perm4[(1 2);(3 4)]'");
  CHECK(v4["results"]["group"]["order"] == 4);
  CHECK(v4["results"]["predicates"]["abelian"] == true);

  auto s5 = report("class 'dual(solvable)' S5");
  CHECK(s5["results"]["member"] == false);
  CHECK(s5["results"]["witness"]["normal_subgroup"]["name"] == "A5");
  CHECK(s5["results"]["witness"]["quotient"]["name"] == "C2");
  CHECK(report("class trivial C1")["results"]["member"] == true);

  auto solvable = report("audit solvable --all");
  for (const auto& [k, v] : solvable["results"]["flags"].items()) CHECK(v == true);
  auto abelian = report("audit abelian --all");
  CHECK(abelian["results"]["audits"][2]["holds"] == false);
  CHECK(abelian["results"]["audits"][2]["counterexamples"][0]["group"] == "S3");

  auto c1 = report("realize C1");
  CHECK(c1["results"]["gamma"]["order"] == 60);
  for (const auto& check : report("realize C2")["checks"]) CHECK(check["status"] == "pass");
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("group X7").code == 2);
  CHECK(run("class 'dual(' C2").code == 2);
  CHECK(run("realize C5 --top C4").code == 2);
  CHECK(run("realize C2 --alt 5").code == 3);
  CHECK(run("--iso-cap 10 class 'dual(cyclic)' S4").code == 3);
  CHECK(run("dual-chain solvable C2 --depth 9").code == 3);
  CHECK(run("selftest --filter union_duals").code == 0);

  std::string corrupt = std::string(SCRATCH_DIR) + "/corrupt_universe.txt";
  {
    std::ofstream out(corrupt);
    out << "version 1\nspec sym=5 extras=\nC2\t2\t(1 2\n";
  }
  CHECK(run("--universe '" + corrupt + "' selftest").code == 2);
  std::remove(corrupt.c_str());
}

TEST_CASE("universe files round-trip through the CLI") {
  std::string path = std::string(SCRATCH_DIR) + "/universe_s4.txt";
  auto built = report("universe build --sym 4 --no-default-extras --out '" + path + "'");
  CHECK(built["results"]["size"] == 9);
  auto audit = report("--universe '" + path + "' audit cyclic --c3");
  CHECK(audit["results"]["universe"] == "sym=4 extras=");
  CHECK(audit["results"]["audits"][0]["counterexamples"][0]["group"] == "V4");
  std::remove(path.c_str());
}
