// Integration tests driving the built CLI binary end to end: output formats,
// exit codes, round trips. The binary path comes in via NCDEFORM_CLI_PATH.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "ncdeform/format.hpp"
#include "ncdeform/models.hpp"

namespace fs = std::filesystem;
using namespace ncdeform;

namespace {

int checks = 0, failures = 0;

void expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(NCDEFORM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult res;
  if (!pipe) return res;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, n);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
  fs::path dir = fs::temp_directory_path() / "ncdeform_cli_tests";
  fs::create_directories(dir);

  write_file(dir / "free2.txt",
             "points 1\ngen a : 1 -> 1\ngen b : 1 -> 1\nmaxdeg 4\n");
  write_file(dir / "weyl.txt",
             "points 1\ngen a : 1 -> 1\ngen b : 1 -> 1\nrel a*b - b*a - e_1\nmaxdeg 6\n");
  write_file(dir / "comm2.json", R"({
    "r": 1,
    "t1_basis": [{"name":"a","src":1,"tgt":1},{"name":"b","src":1,"tgt":1}],
    "t2_basis": [{"name":"z","src":1,"tgt":1}],
    "products": [
      {"d":2,"inputs":["a","b"],"output":"z","coeff":"1"},
      {"d":2,"inputs":["b","a"],"output":"z","coeff":"-1"}
    ]
  })");
  write_file(dir / "m112.json", R"({"r":1,"mult":[[1],[1],[2]]})");
  write_file(dir / "badpres.txt", "points 1\ngen a : 1 -> 1\nrel a*q\n");
  write_file(dir / "badainf.json", R"({
    "r": 2,
    "t1_basis": [{"name":"x","src":1,"tgt":2}],
    "t2_basis": [{"name":"z","src":1,"tgt":1}],
    "products": [{"d":2,"inputs":["x","x"],"output":"z","coeff":"1"}]
  })");

  auto counts = run("grassmann 2 4 --counts");
  expect(counts.code == 0, "grassmann counts exit code");
  expect(counts.out == "t1=4 t2=3 rank=3\n", "grassmann counts output, got: " + counts.out);

  auto dims = run("dims --pres " + (dir / "free2.txt").string() + " --max-degree 3");
  expect(dims.code == 0, "dims exit code");
  expect(contains(dims.out, "d=0 dims=[[1]]") && contains(dims.out, "d=1 dims=[[2]]") &&
             contains(dims.out, "d=2 dims=[[4]]") && contains(dims.out, "d=3 dims=[[8]]"),
         "free dims 1,2,4,8, got: " + dims.out);

  auto dims_json = run("dims --pres " + (dir / "free2.txt").string() +
                       " --max-degree 3 --json");
  expect(dims_json.code == 0, "dims --json exit code");
  {
    auto j = nlohmann::json::parse(dims_json.out);
    expect(j["finite"] == false, "dims json finite flag");
    expect(j["total"] == 15, "dims json total 1+2+4+8");
    expect(j["degrees"][2]["dims"][0][0] == 4, "dims json degree 2");
  }

  auto nf = run("nf --pres " + (dir / "weyl.txt").string() + " --poly b*a --max-degree 6");
  expect(nf.code == 0, "nf exit code");
  expect(nf.out == "a*b - e_1\n", "weyl normal form, got: " + nf.out);

  auto gb = run("gb --pres " + (dir / "weyl.txt").string() + " --max-degree 8");
  expect(gb.code == 0, "gb exit code");
  expect(contains(gb.out, "size 1") && contains(gb.out, "b*a - a*b + e_1"),
         "weyl basis listing, got: " + gb.out);

  auto ab = run("abelianize --pres " + (dir / "free2.txt").string());
  expect(ab.code == 0, "abelianize exit code");
  expect(contains(ab.out, "rel -b*a + a*b"), "abelianized relation, got: " + ab.out);
  expect(parse_presentation(ab.out) ==
             abelianize(parse_presentation(read_text(dir / "free2.txt"))),
         "abelianize output round trip");

  auto re2 = run("re 2");
  expect(re2.code == 0, "re exit code");
  expect(parse_presentation(re2.out) == trivial_extension_re(2), "re round trip");

  auto gpres = run("grassmann 2 4 --pres");
  expect(gpres.code == 0, "grassmann --pres exit code");
  expect(parse_presentation(gpres.out) == grassmann_presentation({2, 4}),
         "grassmann presentation round trip");

  auto deform = run("deform --ainf " + (dir / "comm2.json").string());
  expect(deform.code == 0, "deform exit code");
  expect(contains(deform.out, "rel -b*a + a*b"), "deform output, got: " + deform.out);

  auto lift = run("lift --ainf " + (dir / "comm2.json").string() + " --max-degree 5");
  expect(lift.code == 0, "lift exit code");
  expect(contains(lift.out, "two-path agreement: OK (degrees 0..5)"),
         "lift agreement line, got: " + lift.out);

  auto contraction = run("contraction --data " + (dir / "m112.json").string());
  expect(contraction.code == 0, "contraction exit code");
  expect(contains(contraction.out, "dim R = 6; n_1=2 n_2=1"),
         "contraction report, got: " + contraction.out);

  // exit code 1: parse errors with positions
  auto bad = run("dims --pres " + (dir / "badpres.txt").string() + " --max-degree 2");
  expect(bad.code == 1, "parse error exit code");
  expect(contains(bad.out, "3:") && contains(bad.out, "unknown generator"),
         "parse error diagnostics, got: " + bad.out);
  auto nosub = run("frobnicate");
  expect(nosub.code == 1, "unknown subcommand exit code");
  auto nofile = run("dims --pres /nonexistent.txt --max-degree 2");
  expect(nofile.code == 1, "missing file exit code");

  // exit code 2: contract violations
  auto badainf = run("deform --ainf " + (dir / "badainf.json").string());
  expect(badainf.code == 2, "malformed table exit code");
  expect(contains(badainf.out, "non-composable"), "malformed table message");
  auto abfail = run("abelianize --pres " + (dir / "m112.json").string());
  expect(abfail.code == 1, "json is not a presentation: parse error");

  // environment default for the degree bound
  {
    std::string cmd = "NCDEFORM_MAX_DEGREE=4 " + std::string(NCDEFORM_CLI_PATH) +
                      " dims --pres " + (dir / "free2.txt").string() + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "env bound exit code");
    expect(contains(out, "d=4 dims=[[16]]"), "env bound honored, got: " + out);
  }

  std::cout << (failures ? "FAILED" : "ok") << " (" << checks - failures << "/" << checks
            << " checks)\n";
  return failures ? 1 : 0;
}
