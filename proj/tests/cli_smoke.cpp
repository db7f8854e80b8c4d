// End-to-end exercises of the command-line binary named by REDKIT_BIN.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "redkit/io.hpp"
#include "redkit/oracles.hpp"

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

#define SMOKE_CHECK(cond, label)                                      \
  do {                                                                \
    if (cond) {                                                       \
      std::printf("ok   %s\n", label);                                \
    } else {                                                          \
      ++g_failures;                                                   \
      std::printf("FAIL %s (line %d)\n", label, __LINE__);            \
    }                                                                 \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
  unsetenv("REDKIT_CAP");
  const char* bin_env = std::getenv("REDKIT_BIN");
  if (!bin_env) {
    std::printf("FAIL REDKIT_BIN is not set\n");
    return 1;
  }
  const std::string bin = std::string("\"") + bin_env + "\"";

  char tmpl[] = "/tmp/redkit-smoke-XXXXXX";
  const fs::path dir = mkdtemp(tmpl);
  const fs::path odd_cnf = dir / "odd.cnf";
  write_file(odd_cnf, "p cnf 3 1\n1 2 3 0\n");        // 7 models
  const fs::path even_cnf = dir / "even.cnf";
  write_file(even_cnf, "p cnf 3 0\n");                // 8 models
  const fs::path cover = dir / "cover.setsys";
  write_file(cover, "p setsys 2 3\n0\n1\n0 1\n");
  const fs::path yes_ss = dir / "yes.subsetsum";
  write_file(yes_ss, "3\n5\n7\nt 12\n");
  const fs::path no_ss = dir / "no.subsetsum";
  write_file(no_ss, "2\n4\nt 5\n");

  RunResult r = run(bin + " solve cnf --count " + odd_cnf.string());
  SMOKE_CHECK(r.exit_code == 0 && r.out == "7\n", "solve cnf --count");

  r = run(bin + " solve cnf --parity " + odd_cnf.string());
  SMOKE_CHECK(r.exit_code == 0 && r.out == "1\n", "solve cnf --parity odd exits 0");

  r = run(bin + " solve cnf --parity " + even_cnf.string());
  SMOKE_CHECK(r.exit_code == 1 && r.out == "0\n", "solve cnf --parity even exits 1");

  r = run("echo 'p cnf 2 0' | " + bin + " solve cnf --count -");
  SMOKE_CHECK(r.exit_code == 0 && r.out == "4\n", "solve reads stdin");

  r = run(bin + " solve setcover --count " + cover.string());
  SMOKE_CHECK(r.exit_code == 0 && r.out == "1 1\n2 3\n3 1\n", "solve setcover --count");

  r = run(bin + " solve setcover --min " + cover.string());
  SMOKE_CHECK(r.exit_code == 0 && r.out == "1\n", "solve setcover --min");

  r = run(bin + " solve setcover --decide --t 1 " + cover.string());
  SMOKE_CHECK(r.exit_code == 0 && contains(r.out, "YES"), "solve setcover --decide yes");

  r = run(bin + " solve subsetsum --decide --mode dp " + yes_ss.string());
  SMOKE_CHECK(r.exit_code == 0 && contains(r.out, "YES"), "solve subsetsum dp yes");

  r = run(bin + " solve subsetsum --decide --mode brute " + no_ss.string());
  SMOKE_CHECK(r.exit_code == 1 && contains(r.out, "NO"), "solve subsetsum brute no");

  // Reduction to a file: the report lands on stdout, the instance in the file.
  const fs::path hs_out = dir / "out.setsys";
  r = run(bin + " reduce cnf-to-hittingset --p 3 " + odd_cnf.string() + " " +
          hs_out.string());
  SMOKE_CHECK(r.exit_code == 0 && contains(r.out, "target 4"),
              "reduce cnf-to-hittingset reports the target");
  {
    std::ifstream in(hs_out);
    std::stringstream ss;
    ss << in.rdbuf();
    redkit::SetSystem sys = redkit::parse_set_system(ss.str());
    SMOKE_CHECK(redkit::count_hitting_sets_by_size(sys).get(4) == 7,
                "reduced instance preserves the model count");
  }

  // Reduction to stdout: instance text only (report goes to stderr).
  r = run(bin + " reduce nae-to-cnf " + odd_cnf.string());
  SMOKE_CHECK(r.exit_code == 0 && contains(r.out, "p cnf 3 2"),
              "reduce to stdout emits the instance");

  // Multi-output reduction: directory of instances plus a manifest.
  const fs::path split_dir = dir / "splits";
  const fs::path hs_in = dir / "hs.setsys";
  write_file(hs_in, "p setsys 2 2\n0\n1\n");
  r = run(bin + " reduce hs-to-splitting --p 2 --t 2 " + hs_in.string() + " " +
          split_dir.string());
  SMOKE_CHECK(r.exit_code == 0 && contains(r.out, "manifest"),
              "multi-output reduce reports the manifest");
  SMOKE_CHECK(fs::exists(split_dir / "manifest.json"), "manifest.json exists");
  SMOKE_CHECK(fs::exists(split_dir / "splitting-000.setsys"), "split instance exists");

  // JSON mode parses and carries the same facts.
  r = run(bin + " --format json reduce cnf-to-hittingset --p 3 " + odd_cnf.string());
  SMOKE_CHECK(r.exit_code == 0, "json reduce exits 0");
  {
    bool ok = false;
    try {
      auto doc = nlohmann::json::parse(r.out);
      ok = doc["target"] == 4 && doc.contains("text");
    } catch (...) {
    }
    SMOKE_CHECK(ok, "json reduce output parses");
  }

  r = run(bin + " --format json verify lucas --seeds 64");
  SMOKE_CHECK(r.exit_code == 0, "verify lucas exits 0");
  {
    bool ok = false;
    try {
      auto doc = nlohmann::json::parse(r.out);
      ok = doc["passed"] == true && doc["suites"].size() == 1 &&
           doc["suites"][0]["failures"] == 0;
    } catch (...) {
    }
    SMOKE_CHECK(ok, "verify json document parses");
  }

  r = run(bin + " verify lucas --seeds 64");
  SMOKE_CHECK(r.exit_code == 0 && contains(r.out, "verdict pass"),
              "verify text verdict");

  r = run(bin + " bench setcover-dp --n 10..12");
  SMOKE_CHECK(r.exit_code == 0 && contains(r.out, "slope"), "bench emits a slope");

  // Usage errors exit 2: unknown subcommand, and conflicting solve modes.
  r = run(bin + " frobnicate");
  SMOKE_CHECK(r.exit_code == 2, "unknown subcommand exits 2");
  r = run(bin + " solve cnf --count --parity " + odd_cnf.string());
  SMOKE_CHECK(r.exit_code == 2, "conflicting solve modes exit 2");

  // Capacity refusals exit 3, and REDKIT_CAP drives the default cap.
  r = run("REDKIT_CAP=2 " + bin + " solve cnf --count " + odd_cnf.string());
  SMOKE_CHECK(r.exit_code == 3, "cap from the environment exits 3");
  r = run(bin + " --cap 2 solve cnf --count " + odd_cnf.string());
  SMOKE_CHECK(r.exit_code == 3, "cap from the flag exits 3");
  r = run("REDKIT_CAP=banana " + bin + " solve cnf --count " + odd_cnf.string());
  SMOKE_CHECK(r.exit_code == 2, "malformed REDKIT_CAP exits 2");

  std::error_code ec;
  fs::remove_all(dir, ec);

  if (g_failures) {
    std::printf("cli smoke: %d checks failed\n", g_failures);
    return 1;
  }
  std::printf("cli smoke: all checks passed\n");
  return 0;
}
