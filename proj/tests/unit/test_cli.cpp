#include "forge/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kFx = FIXTURE_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run forge_run(const std::string& args) {
  const auto tmp = std::filesystem::temp_directory_path() / ("forge-cli-" + std::to_string(::getpid()) + ".out");
  const std::string cmd = std::string("\"") + FORGE_BIN + "\" " + args + " > \"" + tmp.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = forge::read_file(tmp.string());
  std::filesystem::remove(tmp);
  return r;
}

std::string fx(const std::string& name) { return "\"" + kFx + "/" + name + "\""; }

}  // namespace

TEST_CASE("cli: validate and recognize") {
  Run v = forge_run("validate " + fx("interchange.json"));
  CHECK(v.code == 0);
  CHECK(v.out.find("\"molecule\": true") != std::string::npos);
  Run r = forge_run("recognize " + fx("two-arrows-common-target.json"));
  CHECK(r.code == 1);
  CHECK(r.out.find("\"molecule\": false") != std::string::npos);
  CHECK(forge_run("recognize " + fx("interchange.json") + " --layerings 1").code == 0);
}

TEST_CASE("cli: input errors exit with 2") {
  CHECK(forge_run("validate " + fx("counterexample-4d.json")).code == 2);
  CHECK(forge_run("frobnicate").code == 2);
  CHECK(forge_run("validate " + fx("does-not-exist.json")).code != 0);
  CHECK(forge_run("boundary " + fx("globe2.json") + " -k 1 --subset nope").code == 2);
}

TEST_CASE("cli: constructions") {
  Run g = forge_run("gray " + fx("globe1.json") + " " + fx("globe1.json"));
  CHECK(g.code == 0);
  CHECK(forge::parse_poset(g.out).size() == 9);
  Run s = forge_run("suspend " + fx("globe2.json"));
  CHECK(s.code == 0);
  CHECK(forge::parse_poset(s.out).size() == 7);
  CHECK(forge_run("paste " + fx("globe2.json") + " " + fx("globe2.json") + " -k 1").code == 0);
  CHECK(forge_run("paste " + fx("globe2.json") + " " + fx("arrow2.json") + " -k 1").code != 0);
  CHECK(forge_run("dual " + fx("globe2.json") + " --dims 1,2").code == 0);
  CHECK(forge_run("cyl " + fx("globe1.json")).code == 0);
  CHECK(forge_run("invertor " + fx("globe1.json") + " --word LR").code == 0);
  CHECK(forge_run("collapse " + fx("globe2.json") + " --all --beta -").code == 0);
  CHECK(forge_run("build \"rewrite(a2,g1)\"").code == 0);
  CHECK(forge_run("export-dot " + fx("globe1.json")).out.find("digraph") != std::string::npos);
}

TEST_CASE("cli: composition structures") {
  Run bad = forge_run("molcat amalgamate " + fx("interchange.json") + " " + fx("family-interchange-cells.json") +
                      " --table " + fx("broken-interchange.json"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("disagree") != std::string::npos);
  Run good = forge_run("molcat amalgamate " + fx("interchange.json") + " " + fx("family-interchange-identity.json") +
                       " --target " + fx("interchange.json"));
  CHECK(good.code == 0);
  CHECK(forge_run("localise " + fx("globe1.json") + " --max-dim 4").code == 0);
  CHECK(forge_run("stricter-check " + fx("broken-interchange.json") + " --dim 2 --size 9").code == 1);
}
