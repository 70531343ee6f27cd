// Usage: acceptance <path to the classlab executable>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "json.hpp"

#include "classlab/selftest.hpp"
#include "classlab/universe.hpp"

using namespace classlab;

namespace {

struct Captured {
  int status = -1;
  std::string out;
};

Captured run(const std::string& command) {
  Captured c;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return c;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe.get())) > 0) c.out.append(buffer, n);
  c.status = pclose(pipe.release());
  return c;
}

std::string without_timing(const std::string& text) {
  auto doc = nlohmann::ordered_json::parse(text);
  doc.erase("timing");
  return doc.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <classlab executable>\n";
    return 2;
  }
  const std::string cli = argv[1];
  Catalog universe = build_universe(UniverseSpec::with_default_extras());
  int failures = 0;
  int index = 0;
  for (const auto& check : acceptance_checks()) {
    if (check.name.find("in_process") != std::string::npos) continue;
    ++index;
    CheckResult r = run_check(check, universe);
    bool ok = r.status == "pass";
    failures += !ok;
    std::printf("AC%-2d %s  %-36s %8.2f s (budget %g s, %zu cases)\n", index, ok ? "PASS" : "FAIL",
                check.name.c_str(), r.seconds, check.budget_seconds, r.cases);
    for (const auto& w : r.witnesses) std::printf("        %s\n", w.c_str());
  }

  auto start = std::chrono::steady_clock::now();
  std::string command = "'" + cli + "' --json selftest 2>&1";
  Captured first = run(command);
  Captured second = run(command);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = first.status == 0 && second.status == 0;
  std::string reason;
  try {
    ok = ok && without_timing(first.out) == without_timing(second.out);
    if (!ok) reason = first.status || second.status ? "selftest exited with a failure" : "reports differ";
  } catch (const std::exception& e) {
    ok = false;
    reason = std::string("report is not JSON: ") + e.what();
  }
  failures += !ok;
  std::printf("AC%-2d %s  %-36s %8.2f s\n", index + 1, ok ? "PASS" : "FAIL", "acceptance.ac12_determinism", seconds);
  if (!ok) std::printf("        %s\n", reason.c_str());

  std::printf("%d of %d criteria passed\n", index + 1 - failures, index + 1);
  return failures == 0 ? 0 : 1;
}
